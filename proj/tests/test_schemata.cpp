#include <set>
#include <string>

#include "doctest.h"
#include "il/formula.hpp"
#include "il/schemata.hpp"
#include "test_util.hpp"

using namespace il;
using testutil::read_fixture;

// Each generated principle must match its hand-written fixture up to
// conjunction grouping (generators build left-associative spines; the
// displays group for readability).
TEST_CASE("slim principles match their fixtures") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const Fptr want = parse(read_fixture("slim" + std::to_string(n) + ".txt"));
    CHECK(equal_mod_and(slim(n), want));
  }
}

TEST_CASE("compressed slim principles match their fixtures") {
  for (int k = 0; k <= 2; ++k) {
    CAPTURE(k);
    const Fptr want =
        parse(read_fixture("slim_tilde" + std::to_string(k) + ".txt"));
    CHECK(equal_mod_and(slim_tilde(k), want));
  }
}

TEST_CASE("broad principles and their diamond prefixes match fixtures") {
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    const Fptr want = parse(read_fixture("broad" + std::to_string(n) + ".txt"));
    CHECK(equal_mod_and(broad(n), want));
  }
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const Fptr want =
        parse(read_fixture("broad_u" + std::to_string(n) + ".txt"));
    CHECK(equal_mod_and(broad_u(n), want));
  }
}

TEST_CASE("fixed principles match their fixtures exactly") {
  for (const FixedName name :
       {FixedName::L1, FixedName::L2, FixedName::L3, FixedName::J1,
        FixedName::J2, FixedName::J3, FixedName::J4, FixedName::J5,
        FixedName::P, FixedName::M, FixedName::W, FixedName::Wstar,
        FixedName::P0, FixedName::Rprin, FixedName::Combined,
        FixedName::PDia}) {
    const std::string tag = fixed_name_str(name);
    CAPTURE(tag);
    const Fptr want = parse(read_fixture("fixed_" + tag + ".txt"));
    // Fixed principles are short; require structural equality, not just
    // equality modulo grouping.
    CHECK(equal(fixed(name), want));
  }
}

TEST_CASE("first members printed") {
  CHECK(print(slim(0)) == "a0 |> b0 -> ~(a0 |> ~c0) |> b0 & []c0");
  CHECK(print(broad_u(1)) == "<>~(d1 |> ~c)");
  CHECK(equal(slim_tilde(0), slim(0)));
  CHECK(print(fixed(FixedName::J5)) == "<>p |> p");
}

TEST_CASE("xyz decomposition") {
  const auto [x0, y0, z0] = slim_xyz(0);
  CHECK(print(x0) == "a0 |> b0");
  CHECK(print(y0) == "~(a0 |> ~c0)");
  CHECK(print(z0) == "b0 & []c0");
  CHECK(equal(slim_xyz_base(), top()));
  // The compressed principle is assembled from the decomposition.
  for (int k = 0; k <= 3; ++k) {
    const auto [xk, yk, zk] = slim_xyz(k);
    CHECK(equal(slim_tilde(k), imp(xk, rhd(yk, zk))));
  }
}

TEST_CASE("renaming carries the compressed family onto the plain family") {
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(equal_mod_and(slim(2 * k),
                        substitute(slim_tilde(k), renaming_map(k))));
  }
  // The map reverses the letter indices: a_i -> a_{k-i} (same for b, c)
  // and e_i -> e_{k+1-i}.
  const auto m = renaming_map(2);
  CHECK(equal(m.at(VarName('a', 0)), var('a', 2)));
  CHECK(equal(m.at(VarName('a', 2)), var('a', 0)));
  CHECK(equal(m.at(VarName('b', 1)), var('b', 1)));
  CHECK(equal(m.at(VarName('e', 1)), var('e', 2)));
  CHECK(equal(m.at(VarName('e', 2)), var('e', 1)));
  CHECK(m.count(VarName('e', 0)) == 0);
}

TEST_CASE("variable inventories") {
  for (int n = 0; n <= 2; ++n) {
    const auto vs = vars(slim(2 * n));
    std::set<VarName> want;
    for (int i = 0; i <= n; ++i) {
      want.insert(VarName('a', i));
      want.insert(VarName('b', i));
      want.insert(VarName('c', i));
    }
    for (int i = 1; i <= n; ++i) want.insert(VarName('e', i));
    CHECK(std::set<VarName>(vs.begin(), vs.end()) == want);
  }
  for (int n = 0; n <= 3; ++n) {
    const auto vs = vars(broad(n));
    std::set<VarName> want = {VarName('a'), VarName('b'), VarName('c')};
    for (int i = 1; i <= n; ++i) want.insert(VarName('d', i));
    CHECK(std::set<VarName>(vs.begin(), vs.end()) == want);
  }
}

TEST_CASE("schema ids round trip") {
  const SchemaId slim2 = SchemaId::parse("slim", "2");
  CHECK(slim2.str() == "slim 2");
  CHECK(equal(generate(slim2), slim(2)));
  CHECK(equal(generate(SchemaId::parse("slim-tilde", "1")), slim_tilde(1)));
  CHECK(equal(generate(SchemaId::parse("broad", "0")), broad(0)));
  CHECK(equal(generate(SchemaId::parse("broad-u", "2")), broad_u(2)));
  CHECK(equal(generate(SchemaId::parse("fixed", "W")), fixed(FixedName::W)));
  CHECK(SchemaId::parse("fixed", "Wstar").str() == "fixed Wstar");

  CHECK_THROWS_AS(SchemaId::parse("slim", "x"), std::invalid_argument);
  CHECK_THROWS_AS(SchemaId::parse("nope", "0"), std::invalid_argument);
  CHECK_THROWS_AS(SchemaId::parse("fixed", "Q9"), std::invalid_argument);
  // Negative indices survive parsing but are rejected by the generator.
  CHECK_THROWS_AS(generate(SchemaId::parse("slim", "-1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(broad_u(0), std::invalid_argument);
}

TEST_CASE("core axiom list") {
  const auto& names = core_axioms();
  REQUIRE(names.size() == 8);
  CHECK(names.front() == FixedName::L1);
  CHECK(names.back() == FixedName::J5);
}
