#include "doctest.h"
#include "mds/cox.hpp"
#include "mds/presentations.hpp"

using namespace mds;

namespace {

const char* kExample = R"([meta]
label=quadric cone
projective=true
[vars]
T1 T2 T3 T4 T5
[grading]
1 1 1 1 1
[relations]
T1*T2 + T3^2 + T4*T5
[irrelevant]
T1,T2,T3,T4,T5
)";

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  auto p = cox::parse(kExample);
  CHECK(p.label == "quadric cone");
  CHECK(p.num_vars() == 5);
  CHECK(p.rank() == 1);
  CHECK(p.relations.size() == 1);
  CHECK(p.irrelevant.size() == 1);
  CHECK(cox::parse(cox::print(p)) == p);
}

TEST_CASE("every corpus presentation survives a round trip and validates") {
  for (const auto& e : presentations::corpus()) {
    CAPTURE(e.id);
    CHECK_NOTHROW(cox::validate(e.presentation));
    CHECK(cox::parse(cox::print(e.presentation)) == e.presentation);
  }
}

TEST_CASE("parse errors carry positions") {
  std::string bad = kExample;
  bad.replace(bad.find("T3^2"), 4, "T9^2");
  try {
    cox::parse(bad);
    FAIL("expected a parse error");
  } catch (const cox::CoxParseError& e) {
    CHECK(e.line() == 9);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(cox::parse("[vars]\nT1 T2\n[grading]\n1 1 1\n"), cox::CoxParseError);
}

TEST_CASE("validation rejects inhomogeneous relations and rank deficiency") {
  std::string inhom = kExample;
  inhom.replace(inhom.find("T3^2"), 4, "T3");
  CHECK_THROWS_AS(cox::parse(inhom), cox::CoxParseError);
  CHECK_THROWS_AS(cox::parse("[vars]\nT1 T2\n[grading]\n1 1\n2 2\n"), cox::CoxParseError);
  // The same checks on a presentation built in memory.
  auto p = cox::parse(kExample);
  p.relations[0] = poly::parse_polynomial("T1*T2 + T3", p.var_names);
  CHECK_THROWS_AS(cox::validate(p), PreconditionError);
  auto q = cox::parse(kExample);
  q.grading = IntMatrix::from_ints({{1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}});
  CHECK_THROWS_AS(cox::validate(q), PreconditionError);
}

TEST_CASE("degrees and codimension") {
  auto p = cox::parse(kExample);
  CHECK(cox::degree_of_monomial(p, poly::Monomial(5, {1, 1, 0, 0, 0})) == iv({2}));
  CHECK(cox::codim_canonical_embedding(p) == 1);
  auto free = presentations::gen_toric_from_grading(IntMatrix::from_ints({{1, 1, 0, 0}, {0, 0, 1, 1}}), "p1xp1");
  CHECK(cox::codim_canonical_embedding(free) == 0);
  CHECK(cox::codim_canonical_embedding(presentations::gen_grassmannian_blowup(1, 3)) == 1);
}

TEST_CASE("rank-two order") {
  auto p = presentations::gen_toric_from_grading(IntMatrix::from_ints({{1, 1, 0, 0}, {0, 0, 1, 1}}), "p1xp1");
  // Eff = cone((1,0),(0,1)); the lexicographically smaller ray (0,1) is the minimum.
  CHECK(cox::rank2_leq(p, iv({0, 1}), iv({1, 0})));
  CHECK_FALSE(cox::rank2_leq(p, iv({1, 0}), iv({0, 1})));
  CHECK(cox::rank2_leq(p, iv({1, 1}), iv({2, 2})));
  CHECK(cox::rank2_leq(p, iv({2, 2}), iv({1, 1})));
}
