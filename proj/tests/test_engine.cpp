#include <random>

#include "doctest.h"
#include "mds/engine.hpp"
#include "mds/presentations.hpp"
#include "oracles.hpp"

using namespace mds;
using engine::IndexSet;
using geom::Cone;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

Cone cone2(std::initializer_list<IntVector> rays) { return Cone::from_generators(2, rays); }

cox::CoxPresentation quadric() {
  return cox::parse("[vars]\nT1 T2 T3 T4 T5\n[grading]\n1 1 1 1 1\n[relations]\nT1*T2 + T3^2 + T4*T5\n");
}

const presentations::CorpusEntry& entry(const std::string& id) {
  static std::map<std::string, presentations::CorpusEntry> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, *presentations::corpus_entry(id)).first;
  return it->second;
}

const engine::Analysis& analysis(const std::string& id) {
  static std::map<std::string, engine::Analysis> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, engine::analyze(entry(id).presentation)).first;
  return it->second;
}

std::size_t index_of(const engine::Analysis& a, const Cone& c) {
  for (std::size_t i = 0; i < a.fan.size(); ++i)
    if (a.fan.chambers[i] == c) return i;
  FAIL("chamber not found: " << geom::to_string(c));
  return 0;
}

const std::vector<std::string> kToric{"ex_nc",      "compactification_y", "fan_lambda", "toric3_not_smooth",
                                      "toric4fold", "smooth3_g1",         "smooth3_g4", "smooth3_g6"};

}  // namespace

TEST_CASE("F-faces of a quadric hypersurface") {
  auto p = quadric();
  CHECK(engine::is_fface(p, {0, 3}));
  CHECK_FALSE(engine::is_fface(p, {0, 2, 3}));
  CHECK(engine::is_fface(p, {}));
  CHECK(engine::is_fface(p, {0, 1, 2, 3, 4}));
  CHECK_FALSE(engine::is_fface(p, {2}));
}

TEST_CASE("property: F-face test agrees with the definition") {
  for (const std::string id : {"fano_no3_a2", "fano_no6", "fano_no12", "grass_1_3"}) {
    const auto& p = entry(id).presentation;
    const std::size_t r = p.num_vars();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
      IndexSet s;
      for (std::size_t i = 0; i < r; ++i)
        if (m >> i & 1u) s.push_back(i);
      CAPTURE(id);
      CAPTURE(m);
      CHECK(engine::is_fface(p, s) == oracle::fface_by_definition(p, s));
    }
  }
  // A sample of small faces of the eleven-variable complete intersection.
  const auto& p = entry("rank2_sharp").presentation;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    IndexSet s;
    for (std::size_t i = 0; i < 11; ++i)
      if (rng() % 3 == 0) s.push_back(i);
    CAPTURE(t);
    CHECK(engine::is_fface(p, s) == oracle::fface_by_definition(p, s));
  }
}

TEST_CASE("polynomial rings: every face is an F-face") {
  const auto& a = analysis("ex_nc");
  CHECK(a.ffaces.size() == 32);
  CHECK(std::find(a.omega.cones.begin(), a.omega.cones.end(), Cone::full(2)) != a.omega.cones.end());
  CHECK(std::find(a.omega.cones.begin(), a.omega.cones.end(), Cone::zero(2)) != a.omega.cones.end());
  for (std::size_t i = 0; i < a.omega.size(); ++i)
    for (const auto& f : a.omega.witnesses[i]) {
      std::vector<IntVector> gens;
      for (auto v : f.indices) gens.push_back(entry("ex_nc").presentation.degree(v));
      CHECK(Cone::from_generators(2, gens) == a.omega.cones[i]);
    }
}

TEST_CASE("full sweep cap") {
  auto p = presentations::gen_grassmannian_blowup(1, 5);  // 16 variables
  CHECK_THROWS_AS(engine::enumerate_ffaces(p), PreconditionError);
}

TEST_CASE("non-complete surface: chambers, bunch and stable base loci") {
  const auto& p = entry("ex_nc").presentation;
  const auto& a = analysis("ex_nc");
  CHECK(a.fan.size() == 5);
  CHECK(engine::git_chamber(a.omega, a.eff, iv({5, 1})) == cone2({iv({1, 0}), iv({2, 1})}));
  CHECK(engine::git_chamber(a.omega, a.eff, iv({2, 1})) == cone2({iv({2, 1})}));
  auto amp = cone2({iv({1, 0}), iv({-1, -1})});
  CHECK(engine::git_chamber(a.omega, a.eff, iv({0, -1})) == amp);
  auto phi = engine::bunch(a.omega, amp);
  std::size_t containing = 0;
  for (auto m : phi.members)
    if (a.omega.cones[m].contains(iv({0, 1}))) {
      ++containing;
      CHECK(a.omega.cones[m] == Cone::full(2));
    }
  CHECK(containing == 1);
  CHECK(engine::same_sbl(a.omega, phi, iv({-1, 0}), iv({1, 1})));
  CHECK_FALSE(engine::same_sbl(a.omega, phi, iv({0, -1}), iv({-1, 0})));
  CHECK(engine::same_sbl(a.omega, phi, iv({-1, 0}), iv({-1, 0})));
  auto l23 = *a.chamber_containing(iv({-1, 0}));
  auto l24 = *a.chamber_containing(iv({1, 1}));
  CHECK(engine::same_sbl_sufficient(amp, a.fan.chambers[l23], a.fan.chambers[l24]));
  CHECK(engine::stable_base_locus(p, a.omega, phi, iv({0, -1})).strata.empty());
  CHECK_THROWS_AS(engine::bunch(a.omega, cone2({iv({2, 1})})), PreconditionError);
}

TEST_CASE("sufficient condition is not necessary and rejects equal chambers") {
  auto lam = cone2({iv({1, 0}), iv({2, 1})});
  auto l1 = cone2({iv({2, 1}), iv({1, 1})});
  auto l2 = cone2({iv({1, 1}), iv({0, 1})});
  CHECK_FALSE(engine::same_sbl_sufficient(lam, l1, l2));
  CHECK_THROWS_AS(engine::same_sbl_sufficient(lam, l1, l1), PreconditionError);
}

TEST_CASE("effective and moving cones") {
  const auto& a = analysis("toric4fold");
  CHECK(a.eff == a.mov);
  auto single = presentations::gen_toric_from_grading(IntMatrix::from_ints({{1}}), "line");
  CHECK(engine::moving_cone(single).is_zero());
  CHECK(analysis("rank2_sharp").mov == cone2({iv({1, 0}), iv({0, 1})}));
}

TEST_CASE("compactification: merged chambers have closure V(T2)") {
  const auto& p = entry("compactification_y").presentation;
  const auto& a = analysis("compactification_y");
  auto i = *a.chamber_containing(iv({3, 2, 5}));
  auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
  auto an = engine::analyze_ample(a, i);
  REQUIRE(an.triples.size() == 1);
  for (auto c : {an.triples[0].first, an.triples[0].second}) {
    auto w = geom::relative_interior_point(a.fan.chambers[c]);
    CHECK(engine::stable_base_locus(p, a.omega, phi, w).human_form == "V(T2)");
  }
}

TEST_CASE("fan Lambda: the two outer chambers share their stable base locus") {
  const auto& p = entry("fan_lambda").presentation;
  const auto& a = analysis("fan_lambda");
  auto ample = presentations::toric_ample_cone(p.grading, {gale_dual(p.grading), {{0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 5}}});
  auto i = index_of(a, ample);
  auto an = engine::analyze_ample(a, i);
  std::size_t inside = 0;
  for (const auto& t : an.triples)
    if (geom::is_subcone(a.fan.chambers[t.first], a.mov) && geom::is_subcone(a.fan.chambers[t.second], a.mov)) {
      ++inside;
      auto phi = engine::bunch(a.omega, ample);
      auto r1 = engine::stable_base_locus(p, a.omega, phi, geom::relative_interior_point(a.fan.chambers[t.first]));
      auto r2 = engine::stable_base_locus(p, a.omega, phi, geom::relative_interior_point(a.fan.chambers[t.second]));
      CHECK(r1.human_form == r2.human_form);
      CHECK(r1.closure_components == r2.closure_components);
    }
  CHECK(inside == 1);
}

TEST_CASE("eleven-variable example: stated orbit cones and bunch") {
  const auto& p = entry("rank2_sharp").presentation;
  const auto& a = analysis("rank2_sharp");
  auto degs = p.degrees();
  auto img = [&](std::size_t lo, std::size_t hi) {
    std::vector<IntVector> g(degs.begin() + lo, degs.begin() + hi + 1);
    return Cone::from_generators(2, g);
  };
  auto has = [&](const Cone& c) { return std::find(a.omega.cones.begin(), a.omega.cones.end(), c) != a.omega.cones.end(); };
  CHECK(has(img(0, 5)));
  CHECK(has(img(2, 6)));
  CHECK(has(img(6, 10)));
  CHECK_FALSE(engine::is_fface(p, {0, 1, 6}));
  auto amp = *a.chamber_containing(iv({3, 1}));
  auto phi = engine::bunch(a.omega, a.fan.chambers[amp]);
  auto member = [&](const Cone& c) {
    for (auto m : phi.members)
      if (a.omega.cones[m] == c) return true;
    return false;
  };
  CHECK(member(img(0, 5)));
  CHECK_FALSE(member(img(6, 10)));
  auto an = engine::analyze_ample(a, amp);
  CHECK(an.partition.size() == 2);
}

TEST_CASE("smooth threefold G3: degenerate and generic parameters") {
  // Frozen from an LP-based support-set computation: at gamma = 1 no
  // movable ample choice merges chambers, at gamma = 2 exactly one does.
  auto make = [](long gamma) {
    return presentations::gen_toric_from_grading(
        IntMatrix::from_ints({{1, 0, gamma, 1, 0, 0}, {-1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 1}}), "g3");
  };
  auto a1 = engine::analyze(make(1));
  CHECK(a1.fan.size() == 7);
  CHECK(engine::find_triples(a1).triples.empty());
  auto a2 = engine::analyze(make(2));
  CHECK(a2.fan.size() == 9);
  auto rep = engine::find_triples(a2);
  REQUIRE(rep.triples.size() == 1);
  CHECK(geom::to_string(a2.fan.chambers[rep.triples[0].ample]) == "cone[(0,1,1),(2,0,1),(2,1,1)]");
  CHECK(geom::to_string(a2.fan.chambers[rep.triples[0].first]) == "cone[(1,-1,0),(1,0,0),(2,0,1)]");
  CHECK(geom::to_string(a2.fan.chambers[rep.triples[0].second]) == "cone[(1,-1,0),(1,0,1),(2,0,1)]");
}

TEST_CASE("property: toric SBL partitions match the support-set oracle") {
  for (const auto& id : kToric) {
    const auto& p = entry(id).presentation;
    const auto& a = analysis(id);
    for (std::size_t i = 0; i < a.fan.size(); ++i) {
      CAPTURE(id);
      CAPTURE(i);
      CHECK(oracle::same_partition(engine::analyze_ample(a, i).partition, oracle::toric_sbl_partition(p, a, i)));
    }
  }
}

TEST_CASE("property: chambers are fixed points and tile Eff") {
  std::mt19937_64 rng(17);
  for (const auto& id : kToric) {
    const auto& a = analysis(id);
    CAPTURE(id);
    for (const auto& c : a.fan.chambers) {
      CHECK(c.is_full_dimensional());
      CHECK(engine::git_chamber(a.omega, a.eff, geom::relative_interior_point(c)) == c);
    }
    for (std::size_t i = 0; i < a.fan.size(); ++i)
      for (std::size_t j = i + 1; j < a.fan.size(); ++j)
        CHECK_FALSE(geom::intersect(a.fan.chambers[i], a.fan.chambers[j]).is_full_dimensional());
    // Random nonnegative combinations of the degrees land in some chamber.
    auto degs = entry(id).presentation.degrees();
    for (int t = 0; t < 30; ++t) {
      IntVector w(a.eff.ambient_dim());
      for (const auto& d : degs) w = w + scale(Int(long(rng() % 5)), d);
      bool found = false;
      for (const auto& c : a.fan.chambers) found = found || c.contains(w);
      CHECK(found);
    }
  }
}

TEST_CASE("property: signature tests agree and chambers refine SBL classes") {
  std::mt19937_64 rng(23);
  for (const auto& id : kToric) {
    const auto& a = analysis(id);
    for (auto i : a.movable_chambers()) {
      auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
      std::vector<IntVector> pts;
      for (const auto& c : a.fan.chambers) {
        // Two different interior points per chamber.
        auto w = geom::relative_interior_point(c);
        IntVector w2 = scale(Int(3), w);
        for (const auto& r : c.rays()) w2 = w2 + scale(Int(long(rng() % 2)), r);
        CHECK(c.contains(w2, geom::Containment::relative_interior));
        CHECK(engine::sbl_signature(a.omega, phi, w) == engine::sbl_signature(a.omega, phi, w2));
        pts.push_back(w);
      }
      for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = x; y < pts.size(); ++y)
          CHECK(engine::same_sbl(a.omega, phi, pts[x], pts[y]) ==
                engine::same_sbl_by_intersections(a.omega, phi, pts[x], pts[y]));
    }
  }
}
