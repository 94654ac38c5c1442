#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gogkit {

  enum class ErrorCode {
    // finite_group
    NonAssociative,
    NoIdentity,
    NotPermutationRow,
    BadGroupSpec,
    OrderTooLarge,
    // graph_core
    Disconnected,
    SameVertex,
    UnknownId,
    // gog
    InvalidGraphOfGroups,
    MalformedWord,
    MixedOwners,
    BallTooLarge,
    BadSubgraph,
    // group_ring / derivation
    RingMismatch,
    BadModulus,
    GluingConditionFailed,
    // structure_tree
    NotFinite,
    NotFoundWithinRadius,
    // quotients
    Exhausted,
    BadGoal,
    // surgery
    NotCollapsible,
    BadAttachment,
    TableInvalid,
    WrongShape,
    PreconditionFailed,
    // io
    BadDocument,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure surfaced by the library. The code is stable and is what the
  // CLI maps onto exit statuses; the message names the offending data.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace gogkit
