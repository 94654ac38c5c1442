#include "gogkit/error.hpp"

namespace gogkit {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NonAssociative: return "NonAssociative";
      case ErrorCode::NoIdentity: return "NoIdentity";
      case ErrorCode::NotPermutationRow: return "NotPermutationRow";
      case ErrorCode::BadGroupSpec: return "BadGroupSpec";
      case ErrorCode::OrderTooLarge: return "OrderTooLarge";
      case ErrorCode::Disconnected: return "Disconnected";
      case ErrorCode::SameVertex: return "SameVertex";
      case ErrorCode::UnknownId: return "UnknownId";
      case ErrorCode::InvalidGraphOfGroups: return "InvalidGraphOfGroups";
      case ErrorCode::MalformedWord: return "MalformedWord";
      case ErrorCode::MixedOwners: return "MixedOwners";
      case ErrorCode::BallTooLarge: return "BallTooLarge";
      case ErrorCode::BadSubgraph: return "BadSubgraph";
      case ErrorCode::RingMismatch: return "RingMismatch";
      case ErrorCode::BadModulus: return "BadModulus";
      case ErrorCode::GluingConditionFailed: return "GluingConditionFailed";
      case ErrorCode::NotFinite: return "NotFinite";
      case ErrorCode::NotFoundWithinRadius: return "NotFoundWithinRadius";
      case ErrorCode::Exhausted: return "Exhausted";
      case ErrorCode::BadGoal: return "BadGoal";
      case ErrorCode::NotCollapsible: return "NotCollapsible";
      case ErrorCode::BadAttachment: return "BadAttachment";
      case ErrorCode::TableInvalid: return "TableInvalid";
      case ErrorCode::WrongShape: return "WrongShape";
      case ErrorCode::PreconditionFailed: return "PreconditionFailed";
      case ErrorCode::BadDocument: return "BadDocument";
    }
    return "Unknown";
  }

}  // namespace gogkit
