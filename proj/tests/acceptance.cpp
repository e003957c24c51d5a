// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "mds/engine.hpp"
#include "mds/presentations.hpp"
#include "mds/rank2.hpp"
#include "oracles.hpp"

using namespace mds;
using engine::IndexSet;
using geom::Cone;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
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
  throw Failure("chamber not found: " + geom::to_string(c));
}

std::size_t ample_at(const engine::Analysis& a, const IntVector& w) {
  auto i = a.chamber_containing(w);
  require(i.has_value(), "class " + to_string(w) + " is not interior to a chamber");
  return *i;
}

std::vector<IndexSet> nontrivial(const std::vector<IndexSet>& partition) {
  std::vector<IndexSet> out;
  for (auto c : partition)
    if (c.size() > 1) {
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
  return out;
}

bool in_mov(const engine::Analysis& a, std::size_t i) { return geom::is_subcone(a.fan.chambers[i], a.mov); }

// Pairs of distinct chambers inside Mov sharing an SBL class.
std::size_t movable_pairs(const engine::Analysis& a, const std::vector<IndexSet>& partition) {
  std::size_t n = 0;
  for (const auto& c : partition) {
    std::size_t k = 0;
    for (auto i : c) k += in_mov(a, i);
    n += k * (k ? k - 1 : 0) / 2;
  }
  return n;
}

std::string str(std::size_t n) { return std::to_string(n); }

nlohmann::json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  require(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
  return nlohmann::json::parse(out.str());
}

// ---------------------------------------------------------------------------

std::string criterion1() {
  const auto& a = analysis("ex_nc");
  require(a.fan.size() == 5, "chambers " + str(a.fan.size()));
  auto amp = index_of(a, Cone::from_generators(2, {iv({1, 0}), iv({-1, -1})}));
  auto merged = nontrivial(engine::analyze_ample(a, amp).partition);
  // The two chambers on either side of w2 = (0,1).
  IndexSet want{index_of(a, Cone::from_generators(2, {iv({-2, -1}), iv({0, 1})})),
                index_of(a, Cone::from_generators(2, {iv({0, 1}), iv({2, 1})}))};
  std::sort(want.begin(), want.end());
  require(merged == std::vector<IndexSet>{want}, "merged classes differ");
  auto j = cli_json({"find-triples", "ex_nc", "--widen"});
  require(j["git_chambers"] == 5, "cli chamber count");
  return "5 chambers, only the two chambers at (0,1) merge";
}

std::string criterion2() {
  const auto& e = entry("compactification_y");
  const auto& p = e.presentation;
  const auto& a = analysis("compactification_y");
  require(a.fan.size() == 16, "chambers " + str(a.fan.size()));
  auto mov = a.movable_chambers();
  require(mov.size() == 3, "movable " + str(mov.size()));
  auto amp = ample_at(a, iv({3, 2, 5}));
  auto merged = nontrivial(engine::analyze_ample(a, amp).partition);
  require(merged.size() == 1 && merged[0].size() == 2, "expected one merged pair");
  auto phi = engine::bunch(a.omega, a.fan.chambers[amp]);
  auto s1 = engine::sbl_signature(a.omega, phi, geom::relative_interior_point(a.fan.chambers[merged[0][0]]));
  auto s2 = engine::sbl_signature(a.omega, phi, geom::relative_interior_point(a.fan.chambers[merged[0][1]]));
  require(s1 == s2, "signatures differ");
  for (auto c : merged[0]) {
    auto rep = engine::stable_base_locus(p, a.omega, phi, geom::relative_interior_point(a.fan.chambers[c]));
    require(rep.human_form == "V(T2)", "closure " + rep.human_form);
  }
  std::set<std::size_t> others;
  for (const auto& w : oracle::split(*e.expect("distinct_for"), ';')) {
    auto m = ample_at(a, parse_int_vector(w));
    require(m != amp && in_mov(a, m), "M chamber not movable");
    others.insert(m);
    auto part = engine::analyze_ample(a, m).partition;
    require(part.size() == a.fan.size(), "ample " + w + " merges chambers");
  }
  require(others.size() == 2, "M1 and M2 coincide");
  return "16/3 chambers, C1 ~ C2 with closure V(T2), M1 and M2 separate everything";
}

std::string criterion3() {
  const auto& e = entry("fan_lambda");
  const auto& p = e.presentation;
  const auto& a = analysis("fan_lambda");
  require(a.fan.size() == 14, "chambers " + str(a.fan.size()));
  auto mov = a.movable_chambers();
  require(mov.size() == 6, "movable " + str(mov.size()));
  std::vector<IndexSet> cones;
  for (const auto& s : oracle::split(*e.expect("ample_cones"), ';')) {
    IndexSet c;
    for (const auto& x : oracle::split(s, ',')) c.push_back(std::stoul(x));
    cones.push_back(c);
  }
  auto amp_cone = presentations::toric_ample_cone(p.grading, {gale_dual(p.grading), cones});
  auto amp = index_of(a, amp_cone);
  require(in_mov(a, amp), "lambda1 not movable");
  auto part = engine::analyze_ample(a, amp).partition;
  std::vector<IndexSet> inside;
  for (const auto& c : part) {
    IndexSet m;
    for (auto i : c)
      if (in_mov(a, i)) m.push_back(i);
    if (m.size() > 1) inside.push_back(m);
  }
  require(inside.size() == 1 && inside[0].size() == 2, "expected exactly one merged pair in Mov");
  // Closures of the six movable chambers against the stated list.
  auto phi = engine::bunch(a.omega, amp_cone);
  std::multiset<std::set<IndexSet>> mine, stated;
  for (auto i : mov) {
    auto rep = engine::stable_base_locus(p, a.omega, phi, geom::relative_interior_point(a.fan.chambers[i]));
    mine.insert(std::set<IndexSet>(rep.closure_components.begin(), rep.closure_components.end()));
  }
  for (const auto& s : oracle::split(*e.expect("sbl_loci"), '|')) {
    std::set<IndexSet> comps;
    for (const auto& gens : oracle::parse_locus(s, p)) {
      IndexSet c;
      for (const auto& g : gens) c.push_back(g.variables().at(0));
      std::sort(c.begin(), c.end());
      comps.insert(c);
    }
    stated.insert(comps);
  }
  require(mine == stated, "stable base loci differ from the stated list");
  return "14/6 chambers, lambda5 ~ lambda6, five distinct loci match";
}

std::string criterion4() {
  const auto& p = entry("rank2_sharp").presentation;
  const auto& a = analysis("rank2_sharp");
  auto degs = p.degrees();
  auto img = [&](std::size_t lo, std::size_t hi) {
    return Cone::from_generators(2, std::vector<IntVector>(degs.begin() + lo, degs.begin() + hi + 1));
  };
  for (auto c : {img(0, 5), img(2, 6), img(6, 10)})
    require(std::find(a.omega.cones.begin(), a.omega.cones.end(), c) != a.omega.cones.end(),
            "missing orbit cone " + geom::to_string(c));
  require(!engine::is_fface(p, {0, 1, 6}), "{1,2,7} is an F-face");
  auto mov = a.movable_chambers();
  require(mov.size() == 3, "Mov chambers " + str(mov.size()));
  auto amp = ample_at(a, iv({3, 1}));
  auto part = engine::analyze_ample(a, amp).partition;
  require(part.size() == 2, "SBL classes " + str(part.size()));
  auto rep = rank2::check_main2(p, a.fan.chambers[amp]);
  require(std::min(rep.h_plus, rep.h_minus) == 2 && rep.c == 2, "h or c differ");
  require(rep.verdict == rank2::Verdict::inconclusive, "verdict");
  auto j = cli_json({"rank2", "rank2_sharp", "--ample=3,1"});
  require(j["codim"] == 2 && j["main2"] == "inconclusive" && j["sbl_classes"] == 2, "cli report");
  return "orbit cone facts hold, 3 chambers, 2 classes, min(h+,h-) = c = 2";
}

std::string criterion5() {
  for (int g = 1; g <= 7; ++g) {
    auto id = "smooth3_g" + std::to_string(g);
    const auto& a = analysis(id);
    auto rep = engine::find_triples(a);
    require(!rep.triples.empty(), id + ": no triples");
    for (const auto& t : rep.triples)
      require(!in_mov(a, t.first) && !in_mov(a, t.second), id + ": merged chamber inside Mov");
  }
  return "G1..G7 all have triples, every merged chamber lies outside Mov";
}

std::string criterion6() {
  struct Case {
    std::string id;
    std::size_t chambers, movable;
  };
  for (const auto& c : {Case{"toric3_not_smooth", 17, 5}, Case{"toric4fold", 3, 3}}) {
    const auto& a = analysis(c.id);
    require(a.fan.size() == c.chambers, c.id + ": chambers " + str(a.fan.size()));
    auto mov = a.movable_chambers();
    require(mov.size() == c.movable, c.id + ": movable " + str(mov.size()));
    if (c.id == "toric4fold") require(a.eff == a.mov, "Eff != Mov");
    for (auto i : mov) {
      auto n = movable_pairs(a, engine::analyze_ample(a, i).partition);
      require(n == 1, c.id + ": ample " + str(i) + " has " + str(n) + " merged pairs in Mov");
    }
  }
  return "17/5 and 3/3 chambers, one merged pair inside Mov per ample choice";
}

std::string criterion7() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> entry_d(-5, 5), cols_d(3, 8);
  std::size_t accepted = 0, tried = 0, ample_choices = 0;
  while (accepted < 50) {
    require(++tried < 100000, "too few admissible gradings");
    std::size_t n = cols_d(rng);
    std::vector<std::vector<long>> rows(2, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry_d(rng);
    bool zero_col = false;
    for (std::size_t j = 0; j < n; ++j) zero_col = zero_col || (rows[0][j] == 0 && rows[1][j] == 0);
    if (zero_col) continue;
    auto q = IntMatrix::from_ints(rows);
    if (rank(q) != 2) continue;
    cox::CoxPresentation p;
    try {
      p = presentations::gen_toric_from_grading(q, "random");
    } catch (const PreconditionError&) {
      continue;
    }
    auto eff = engine::effective_cone(p);
    if (!eff.is_pointed() || !eff.is_full_dimensional()) continue;
    if (!engine::moving_cone(p).is_full_dimensional()) continue;
    auto a = engine::analyze(p);
    auto mov = a.movable_chambers();
    if (mov.empty()) continue;
    ++accepted;
    for (auto i : mov) {
      ++ample_choices;
      auto part = engine::analyze_ample(a, i).partition;
      require(part.size() == a.fan.size(), "grading " + to_string(q) + " merges chambers for ample " + str(i));
    }
  }
  return "50 gradings, " + str(ample_choices) + " ample choices, every SBL class is one chamber";
}

std::string criterion8() {
  struct Case {
    std::string id;
    IntVector ample;
    std::vector<std::size_t> blocks;  // cells per class, walking away from the ample chamber
  };
  const std::vector<Case> cases{{"fano_no6", iv({6, 1}), {1, 1, 1, 1, 1}}, {"fano_no8", iv({1, 2}), {1, 1}},
                                {"fano_no3_a1", iv({1, 2}), {1, 1}},       {"fano_no3_a2", iv({1, 3}), {1, 2}},
                                {"fano_no3_a3", iv({1, 4}), {1, 2, 1}},    {"fano_no12", iv({1, 5}), {1, 1, 2, 1}}};
  for (const auto& c : cases) {
    const auto& e = entry(c.id);
    const auto& p = e.presentation;
    const auto& a = analysis(c.id);
    auto amp = ample_at(a, c.ample);
    auto part = engine::analyze_ample(a, amp).partition;
    // The stated partitions are unions of the cells cut out by consecutive
    // generator degrees; every class is also a single Mori chamber.
    require(part.size() == a.fan.size(), c.id + ": a class spans several GIT chambers");
    rank2::Rank2Order ord(p);
    std::vector<IntVector> rays;
    for (const auto& d : p.degrees()) rays.push_back(make_primitive(d));
    std::sort(rays.begin(), rays.end(), [&](const auto& x, const auto& y) { return !ord.leq(y, x); });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    std::vector<std::size_t> class_of(a.fan.size());
    for (std::size_t k = 0; k < part.size(); ++k)
      for (auto i : part[k]) class_of[i] = k;
    std::vector<std::size_t> cells;
    for (std::size_t k = 0; k + 1 < rays.size(); ++k) cells.push_back(class_of[ample_at(a, rays[k] + rays[k + 1])]);
    if (cells.back() == class_of[amp]) std::reverse(cells.begin(), cells.end());
    require(cells.front() == class_of[amp], c.id + ": ample chamber is not at an end of Eff");
    std::vector<std::size_t> blocks;
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0 && cells[k] == cells[k - 1]) {
        ++blocks.back();
        continue;
      }
      require(seen.insert(cells[k]).second, c.id + ": SBL class is not an interval");
      blocks.push_back(1);
    }
    require(blocks == c.blocks, c.id + ": partition shape differs");
    // Loci of the non-ample classes against the stated V(...) sets.
    std::vector<IndexSet> loci;
    for (const auto& cls : part)
      if (std::find(cls.begin(), cls.end(), amp) == cls.end())
        loci.push_back(rank2::stable_base_locus_rank2(p, a.fan.chambers[amp], a.fan.chambers[cls.front()]));
    auto stated = oracle::split(*e.expect("sbl_loci"), '|');
    require(stated.size() == loci.size(), c.id + ": number of loci");
    std::vector<bool> used(loci.size(), false);
    for (const auto& s : stated) {
      auto gens = oracle::parse_locus(s, p).at(0);
      bool found = false;
      for (std::size_t k = 0; k < loci.size() && !found; ++k) {
        auto mine = oracle::coordinates(p, loci[k]);
        if (!used[k] && oracle::contained_mod_irrelevant(p, gens, mine) &&
            oracle::contained_mod_irrelevant(p, mine, gens))
          used[k] = found = true;
      }
      require(found, c.id + ": no class has locus " + s);
    }
  }
  return "partitions of No. 3 (a=1,2,3), 6, 8, 12 and their loci match";
}

std::string criterion9() {
  for (std::size_t n : {3u, 4u}) {
    const std::size_t r = 1;
    auto id = "grass_1_" + std::to_string(n);
    const auto& p = entry(id).presentation;
    const auto& a = analysis(id);
    std::set<IntVector> walls;
    for (const auto& c : a.fan.chambers)
      for (const auto& ray : c.rays()) walls.insert(ray);
    std::set<IntVector> want{iv({0, 1})};
    for (long k = 0; k <= long(r) + 1; ++k) want.insert(iv({1, -k}));
    require(walls == want, id + ": walls differ");
    auto nef = ample_at(a, iv({2, -1}));
    require(a.fan.chambers[nef] == Cone::from_generators(2, {iv({1, 0}), iv({1, -1})}), id + ": Nef differs");
    require(rank2::check_crit1(p, a, nef), id + ": crit1 false");
    if (n == 2 * r + 1)
      require(a.mov == Cone::from_generators(2, {iv({1, 0}), iv({1, -long(r)})}), id + ": Mov differs");
  }
  return "G(1,3) and G(1,4): walls E, H, H-E, H-2E, Nef = <H, H-E>, crit1 true, Mov = <H, H-E> for G(1,3)";
}

std::string criterion10() {
  std::mt19937_64 rng(99);
  std::size_t checks = 0;
  for (const auto& e : presentations::corpus()) {
    const auto& p = e.presentation;
    const auto& a = analysis(e.id);
    const auto where = e.id + ": ";
    // Tiling and fixed points.
    for (std::size_t i = 0; i < a.fan.size(); ++i) {
      const auto& c = a.fan.chambers[i];
      require(c.is_full_dimensional(), where + "chamber not full-dimensional");
      require(geom::is_subcone(c, a.eff), where + "chamber leaves Eff");
      require(engine::git_chamber(a.omega, a.eff, geom::relative_interior_point(c)) == c, where + "fixed point");
      for (std::size_t j = i + 1; j < a.fan.size(); ++j)
        require(!geom::intersect(c, a.fan.chambers[j]).is_full_dimensional(), where + "chambers overlap");
    }
    auto degs = p.degrees();
    for (int t = 0; t < 20; ++t) {
      IntVector w(p.rank());
      for (const auto& d : degs) w = w + scale(Int(long(rng() % 4)), d);
      bool found = false;
      for (const auto& c : a.fan.chambers) found = found || c.contains(w);
      require(found, where + "class " + to_string(w) + " not covered");
    }
    auto amples = a.movable_chambers();
    const bool rank2_ok = p.rank() == 2 && a.eff.is_pointed();
    for (auto i : amples) {
      auto phi = engine::bunch(a.omega, a.fan.chambers[i]);
      auto an = engine::analyze_ample(a, i);
      // Refinement: the signature is constant on each chamber.
      std::vector<IntVector> pts;
      for (const auto& c : a.fan.chambers) {
        auto w = geom::relative_interior_point(c);
        IntVector w2 = scale(Int(2), w);
        for (const auto& ray : c.rays()) w2 = w2 + scale(Int(long(rng() % 2)), ray);
        require(engine::sbl_signature(a.omega, phi, w) == engine::sbl_signature(a.omega, phi, w2),
                where + "signature varies inside a chamber");
        pts.push_back(w);
      }
      for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = x + 1; y < pts.size(); ++y) {
          ++checks;
          require(engine::same_sbl(a.omega, phi, pts[x], pts[y]) ==
                      engine::same_sbl_by_intersections(a.omega, phi, pts[x], pts[y]),
                  where + "signature and intersection tests disagree");
        }
      if (rank2_ok) {
        require(oracle::same_partition(rank2::sbl_partition_rank2(p, a, i), an.partition),
                where + "rank-two route disagrees");
        bool positive = rank2::check_crit1(p, a, i) ||
                        rank2::check_main2(p, a.fan.chambers[i]).verdict == rank2::Verdict::applies;
        if (positive) require(an.triples.empty(), where + "criterion positive but chambers merge");
      }
    }
  }
  return "whole corpus, " + str(checks) + " pairwise comparisons, no disagreement";
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    int number;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{{1, 1, criterion1},    {2, 30, criterion2},  {3, 30, criterion3},
                                        {4, 600, criterion4},  {5, 420, criterion5}, {6, 60, criterion6},
                                        {7, 120, criterion7},  {8, 120, criterion8}, {9, 960, criterion9},
                                        {10, 1800, criterion10}};
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail += " (over the time limit)";
    }
    failed += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
