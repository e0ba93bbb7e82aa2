#include <doctest.h>

#include "beauville/coset_enum.hpp"
#include "beauville/errors.hpp"
#include "beauville/group.hpp"
#include "beauville/presentation.hpp"

using namespace beauville;

namespace {

std::size_t order_of(const char* text) { return enumerate(parse_presentation(text)).n_cosets(); }

void check_consistent(const CosetTable& t, const Presentation& pres) {
  for (std::uint32_t c = 0; c < t.n_cosets(); ++c) {
    for (std::uint32_t g = 0; g < t.rank(); ++g) {
      const Letter l{g, false};
      CHECK(t.image(t.image(c, l), l.inverse()) == c);
    }
    for (const auto& r : pres.relators) CHECK(t.trace(c, r) == c);
  }
}

}  // namespace

TEST_CASE("small cyclic and abelian groups") {
  CHECK(order_of("< x | x^3 >") == 3);
  CHECK(order_of("< x | x^1 >") == 1);
  CHECK(order_of("< x, y | x^2, y^2, (x y)^3 >") == 6);
  CHECK(order_of("< x, y | x^4, y^2, (x y)^2 >") == 8);
  CHECK(order_of("< a, b | a^2, b^3, (a b)^5 >") == 60);
  CHECK(enumerate(gamma_quotient_presentation(3, 1)).n_cosets() == 9);
  CHECK(enumerate(gamma_quotient_presentation(3, 3)).n_cosets() == 243);
}

TEST_CASE("table dump") {
  const auto t = enumerate(parse_presentation("< x | x^3 >"));
  CHECK(t.dump() == "2 3\n3 1\n1 2\n");
}

TEST_CASE("Fairbairn groups") {
  CHECK(order_of("< x, y | x^8, y^8, [x^2, y^2], (x y)^4, (x y^2)^4, (x y^3)^4, (x^2 y)^4, (x^2 y^2)^4, "
                 "(x^2 y^3)^4, (x^3 y)^4, (x^3 y^2)^4, (x^3 y^3)^4 >") == 8192);
  CHECK(order_of("< x, y | (y)^4, (y^2)^4, (y^3)^4, (x)^4, (x y)^4, (x y^2)^4, (x y^3)^4, (x^2)^4, (x^2 y)^4, "
                 "(x^2 y^2)^4, (x^2 y^3)^4, (x^3)^4, (x^3 y)^4, (x^3 y^2)^4, (x^3 y^3)^4 >") == 16384);
}

TEST_CASE("completed tables are consistent") {
  for (const auto& pres : {gamma_quotient_presentation(3, 3), gamma_quotient_presentation(5, 2),
                           parse_presentation("< a, b | a^2, b^3, (a b)^5 >")}) {
    check_consistent(enumerate(pres), pres);
  }
}

TEST_CASE("permutation representation") {
  const auto t = enumerate(parse_presentation("< x | x^2 >"));
  const auto perms = permutation_rep(t);
  REQUIRE(perms.size() == 1);
  CHECK(perms[0].cycles() == "(1 2)");

  const auto pres = gamma_quotient_presentation(3, 3);
  const auto table = enumerate(pres);
  const auto gens = permutation_rep(table);
  for (const auto& r : pres.relators) {
    Perm acc = Perm::identity(table.n_cosets());
    for (Letter l : r.letters()) acc = acc * (l.inverted ? gens[l.gen].inverse() : gens[l.gen]);
    CHECK(acc.is_identity());
  }
  CHECK(cayley_elements(gens).group.order() == table.n_cosets());
}

TEST_CASE("incomplete tables are rejected") {
  // Coset 1 maps to itself under x but coset 0 also claims x -> 1.
  const CosetTable broken(1, 2, {1, 1, 1, 0});
  CHECK_THROWS_AS(permutation_rep(broken), StateError);
  CHECK_THROWS_AS(CosetTable(1, 2, {0, 0}), DomainError);
}

TEST_CASE("determinism") {
  const auto pres = gamma_quotient_presentation(3, 3);
  CHECK(enumerate(pres) == enumerate(pres));
  CHECK(enumerate(pres).dump() == enumerate(pres).dump());
}

TEST_CASE("adding a relator never increases the order") {
  const char* base = "< x, y | x^3, y^3, [x,y,x], [x,y,y]";
  const std::size_t n0 = order_of((std::string(base) + " >").c_str());
  CHECK(n0 == 27);
  for (const char* extra : {"x y x y", "[x,y]", "(x y)^3", "x^2 y"}) {
    const std::size_t n = order_of((std::string(base) + ", " + extra + " >").c_str());
    CHECK(n <= n0);
    CHECK(n0 % n == 0);
  }
}

TEST_CASE("limits") {
  EnumerationLimits small;
  small.max_cosets = 100;
  try {
    enumerate(parse_presentation("< x, y | x^2 >"), small);
    FAIL("expected the limit to be hit");
  } catch (const LimitExceeded& e) {
    CHECK(e.high_water() == 100);
  }
  small.max_cosets = 0;
  CHECK_THROWS_AS(enumerate(parse_presentation("< x | x^2 >"), small), DomainError);
  CHECK(default_limits().max_cosets >= 1);
}
