#include "doctest.h"

#include "gogkit/error.hpp"
#include "gogkit/io.hpp"

using namespace gogkit;

namespace {
  struct FixA {
    GraphOfGroups                      g = load_gog("FIX-A");
    std::map<std::string, std::string> aliases = aliases_from_json(load_json("FIX-A"));
    NormalForm operator()(std::string const& text) const {
      return g.reduce(read_word(g, text, aliases));
    }
    RingElem e(std::string const& text, coeff_t c = 1) const {
      return RingElem::basis((*this)(text), 5, c);
    }
  };
}  // namespace

TEST_CASE("sums cancel mod m") {
  FixA     a;
  RingElem zero(a.g, 5);
  auto     x = a.e("b") + a.e("a");
  CHECK(x + zero == x);
  CHECK((a.e("b", 1) + a.e("b", 4)).is_zero());
  CHECK((a.e("b") + a.e("b^4")) + a.e("b", 4) == a.e("b^4"));
  CHECK(scale(3, a.e("b")) == a.e("b", 3));
  CHECK((-a.e("b")).coefficient(a("b")) == 4);
  CHECK_THROWS_AS(a.e("b") + RingElem::basis(a("b"), 7), Error);
}

TEST_CASE("right and left translation") {
  FixA a;
  auto x = a.e("b") - a.e("1");
  CHECK(act_right(x, a.g.identity()) == x);
  CHECK(act_right(x, a("b^2")) == a.e("b^3") - a.e("b^2"));
  CHECK(act_right(a.e("a^2"), a("b^3")) == a.e("1"));
  CHECK(act_left(a("a"), a.e("b")) == a.e("a * b"));
  // Multiplication is bilinear on basis elements.
  CHECK(a.e("a") * a.e("b") == a.e("a * b"));
  CHECK((a.e("a") + a.e("b")) * a.e("b") == a.e("a * b") + a.e("b^2"));
}
