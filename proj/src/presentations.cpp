#include "mds/presentations.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace mds::presentations {

using poly::Monomial;
using poly::Polynomial;
using poly::Term;

std::size_t hamming(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) throw PreconditionError("hamming: index tuples of different size");
  std::size_t common = 0;
  for (auto x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++common;
  return a.size() - common;
}

std::string pluecker_name(const IndexSet& subset) {
  std::string s = "T";
  for (auto i : subset) s += std::to_string(i);
  return s;
}

std::vector<IndexSet> subsets(std::size_t n, std::size_t size) {
  std::vector<IndexSet> out;
  if (size > n + 1) return out;
  IndexSet cur(size);
  for (std::size_t i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = size;
    while (i > 0 && cur[i - 1] == n + 1 - size + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Sorts a tuple of distinct indices; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(IndexSet& t) {
  int s = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
      if (t[j] == t[j + 1]) return 0;
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        s = -s;
      }
    }
  for (std::size_t j = 0; j + 1 < t.size(); ++j)
    if (t[j] == t[j + 1]) return 0;
  return s;
}

Monomial monomial_of(std::size_t nvars, const std::vector<std::pair<std::size_t, unsigned>>& powers) {
  Monomial m(nvars);
  for (auto [v, e] : powers) m.set(v, m[v] + e);
  return m;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

// Minimal primes of the monomial ideal generated by prod_{i not in sigma} T_i.
std::vector<IndexSet> irrelevant_from_cones(std::size_t r, const std::vector<IndexSet>& cones) {
  std::vector<std::uint32_t> comps;
  for (const auto& s : cones) {
    std::uint32_t m = (1u << r) - 1;
    for (auto i : s) m &= ~(1u << i);
    comps.push_back(m);
  }
  std::vector<std::uint32_t> hitting;
  for (std::uint32_t s = 1; s < (1u << r); ++s) {
    bool ok = std::all_of(comps.begin(), comps.end(), [&](std::uint32_t c) { return (c & s) != 0; });
    if (ok) hitting.push_back(s);
  }
  std::vector<IndexSet> out;
  for (auto s : hitting) {
    bool minimal = std::none_of(hitting.begin(), hitting.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; });
    if (!minimal) continue;
    IndexSet set;
    for (std::size_t i = 0; i < r; ++i)
      if (s >> i & 1u) set.push_back(i);
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// For a rank-2 grading: the two components <T_i : w_i <= ample>, <T_i : w_i >= ample>.
std::vector<IndexSet> rank2_irrelevant(const cox::CoxPresentation& p, const IntVector& lo, const IntVector& hi) {
  IndexSet below, above;
  auto degs = p.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (cox::rank2_leq(p, degs[i], lo)) below.push_back(i);
    if (cox::rank2_leq(p, hi, degs[i])) above.push_back(i);
  }
  return {below, above};
}

cox::CoxPresentation polynomial_ring(const IntMatrix& q, std::vector<std::string> names, const std::string& label) {
  cox::CoxPresentation p;
  p.label = label;
  p.var_names = std::move(names);
  p.grading = q;
  return p;
}

}  // namespace

std::vector<Polynomial> pluecker_relations(std::size_t r, std::size_t n, std::size_t offset, std::size_t total_vars) {
  if (r >= n) throw PreconditionError("pluecker_relations: need r < n");
  auto lambda = subsets(n, r + 1);
  if (total_vars == 0) total_vars = offset + lambda.size();
  auto index_of = [&](const IndexSet& s) {
    return offset + static_cast<std::size_t>(std::lower_bound(lambda.begin(), lambda.end(), s) - lambda.begin());
  };
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  std::vector<std::string> dummy_names(total_vars);
  for (std::size_t i = 0; i < total_vars; ++i) dummy_names[i] = "x" + std::to_string(i);
  auto is = r == 0 ? std::vector<IndexSet>{IndexSet{}} : subsets(n, r);
  for (const auto& I : is)
    for (const auto& J : subsets(n, r + 2)) {
      std::vector<Term> terms;
      for (std::size_t t = 0; t < J.size(); ++t) {
        IndexSet a = I;
        a.push_back(J[t]);
        IndexSet b;
        for (std::size_t u = 0; u < J.size(); ++u)
          if (u != t) b.push_back(J[u]);
        int sa = sort_with_sign(a);
        if (sa == 0) continue;
        int sign = (t % 2 ? -1 : 1) * sa;
        terms.push_back({monomial_of(total_vars, {{index_of(a), 1}, {index_of(b), 1}}), Rat(sign)});
      }
      Polynomial f = Polynomial::from_terms(total_vars, std::move(terms));
      if (f.is_zero()) continue;
      if (f.terms().front().coeff < 0) f = -f;
      if (seen.insert(poly::to_string(f, dummy_names)).second) out.push_back(f);
    }
  return out;
}

cox::CoxPresentation gen_grassmannian_blowup(std::size_t r, std::size_t n) {
  if (r >= n) throw PreconditionError("gen_grassmannian_blowup: need r < n");
  auto lambda = subsets(n, r + 1);
  if (lambda.size() + 1 > poly::kMaxVariables) throw PreconditionError("gen_grassmannian_blowup: too many variables");
  IndexSet base(r + 1);
  for (std::size_t i = 0; i <= r; ++i) base[i] = i;
  std::vector<std::string> names{"S"};
  IntMatrix q(2, lambda.size() + 1);
  q(1, 0) = 1;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    names.push_back(pluecker_name(lambda[j]));
    q(0, j + 1) = 1;
    q(1, j + 1) = -static_cast<long>(hamming(lambda[j], base));
  }
  auto p = polynomial_ring(q, names, "G(" + std::to_string(r) + "," + std::to_string(n) + ") blown up at a point");
  p.relations = pluecker_relations(r, n, 1, lambda.size() + 1);
  // Nef cone <H, H-E>.
  p.irrelevant = rank2_irrelevant(p, IntVector{1, 0}, IntVector{1, -1});
  return p;
}

cox::CoxPresentation gen_toric_from_rays(const IntMatrix& p, const std::string& label) {
  IntMatrix q = gale_dual(p);
  return polynomial_ring(q, numbered("T", p.cols()), label);
}

cox::CoxPresentation gen_toric_from_grading(const IntMatrix& q, const std::string& label) {
  return polynomial_ring(q, numbered("T", q.cols()), label);
}

// Degree-(2,2) monomials of the rank-2 sharpness example (0-based variables).
static std::vector<Monomial> sharp_monomials() {
  std::vector<Monomial> out;
  for (std::size_t i : {0, 1})
    for (std::size_t j = 7; j <= 10; ++j) out.push_back(monomial_of(11, {{i, 2}, {j, 2}}));
  for (std::size_t i = 2; i <= 5; ++i)
    for (std::size_t j = 7; j <= 10; ++j) out.push_back(monomial_of(11, {{i, 1}, {j, 1}}));
  out.push_back(monomial_of(11, {{0, 1}, {6, 1}}));
  out.push_back(monomial_of(11, {{1, 1}, {6, 1}}));
  return out;
}

cox::CoxPresentation gen_rank2_sharp(long seed) {
  IntMatrix q = IntMatrix::from_ints({{1, 1, 2, 2, 2, 2, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 2, 1, 1, 1, 1}});
  auto p = polynomial_ring(q, numbered("T", 11), "rank two sharpness example");
  p.seed = seed;
  std::mt19937_64 gen(static_cast<std::uint64_t>(seed));
  auto mons = sharp_monomials();
  for (int k = 0; k < 2; ++k) {
    std::vector<Term> terms;
    for (const auto& m : mons) {
      long v = static_cast<long>(gen() % 18);
      terms.push_back({m, Rat(v < 9 ? v - 9 : v - 8)});
    }
    p.relations.push_back(Polynomial::from_terms(11, std::move(terms)));
  }
  p.irrelevant = {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9, 10}};
  return p;
}

bool rank2_sharp_facts_hold(const cox::CoxPresentation& p) {
  const std::vector<IndexSet> faces{{0, 1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {6, 7, 8, 9, 10}};
  for (const auto& f : faces)
    if (!engine::is_fface(p, f)) return false;
  return !engine::is_fface(p, {0, 1, 6});
}

long rank2_sharp_seed(long seed) {
  for (long s = seed;; ++s)
    if (rank2_sharp_facts_hold(gen_rank2_sharp(s))) return s;
}

cox::CoxPresentation gen_fhn16_no3(long a) {
  if (a < 1) throw PreconditionError("fhn16 no3: need a >= 1");
  IntMatrix q = IntMatrix::from_ints({{0, 0, 1, 1, 1, 1}, {1, 1, 0, 2 - a, a, 1}});
  auto p = polynomial_ring(q, numbered("T", 6), "complexity one family 3, a=" + std::to_string(a));
  p.relations.push_back(poly::parse_polynomial("T1*T2*T3^2 + T4*T5 + T6^2", p.var_names));
  // Ample chamber cone(w1, w5).
  p.irrelevant = rank2_irrelevant(p, IntVector{0, 1}, IntVector{1, a});
  return p;
}

cox::CoxPresentation gen_fhn16_no6(long a, long b, long c, std::size_t m) {
  if (!(a >= 0 && b >= 0 && c >= 0 && a < b && a + b == 2 * c + 1 && m >= 1))
    throw PreconditionError("fhn16 no6: need 0 <= a < b, a + b = 2c + 1, m >= 1");
  std::vector<std::vector<long>> rows{{0, 2 * c + 1, a, b, c, 1}, {1, 1, 1, 1, 1, 0}};
  auto names = numbered("T", 6);
  for (std::size_t i = 0; i < m; ++i) {
    rows[0].push_back(1);
    rows[1].push_back(0);
    names.push_back("S" + std::to_string(i + 1));
  }
  auto p = polynomial_ring(IntMatrix::from_ints(rows), names, "complexity one family 6");
  p.relations.push_back(poly::parse_polynomial("T1*T2 + T3*T4 + T5^2*T6", p.var_names));
  p.irrelevant = rank2_irrelevant(p, IntVector{2 * c + 1, 1}, IntVector{1, 0});
  return p;
}

cox::CoxPresentation gen_fhn16_no8(const std::vector<long>& a, std::size_t m) {
  if (m < 2 || a.size() != m || a.front() != 0 || !std::is_sorted(a.begin(), a.end()) || a.back() <= 0)
    throw PreconditionError("fhn16 no8: need m >= 2, a = (0, a_2, ..., a_m) nondecreasing with a_m > 0");
  std::vector<std::vector<long>> rows{{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
  auto names = numbered("T", 6);
  for (std::size_t i = 0; i < m; ++i) {
    rows[0].push_back(1);
    rows[1].push_back(a[i]);
    names.push_back("S" + std::to_string(i + 1));
  }
  auto p = polynomial_ring(IntMatrix::from_ints(rows), names, "complexity one family 8");
  p.relations.push_back(poly::parse_polynomial("T1*T2 + T3*T4 + T5*T6", p.var_names));
  p.irrelevant = rank2_irrelevant(p, IntVector{0, 1}, IntVector{1, a.back()});
  return p;
}

cox::CoxPresentation gen_fhn16_no12(long a, long b, long c, std::size_t m) {
  if (!(0 <= a && a <= c && c <= b && a + b == 2 * c && m >= 2))
    throw PreconditionError("fhn16 no12: need 0 <= a <= c <= b, a + b = 2c, m >= 2");
  std::vector<std::vector<long>> rows{{1, 1, 1, 1, 1}, {0, 2 * c, a, b, c}};
  auto names = numbered("T", 5);
  for (std::size_t i = 0; i < m; ++i) {
    rows[0].push_back(0);
    rows[1].push_back(1);
    names.push_back("S" + std::to_string(i + 1));
  }
  auto p = polynomial_ring(IntMatrix::from_ints(rows), names, "complexity one family 12");
  p.relations.push_back(poly::parse_polynomial("T1*T2 + T3*T4 + T5^2", p.var_names));
  p.irrelevant = rank2_irrelevant(p, IntVector{0, 1}, IntVector{1, 2 * c});
  return p;
}

namespace {

IntMatrix rank3_grading(int index) {
  auto g = [](long a, long b, long c, long d, long e, long f, long h, long i, long j) {
    return IntMatrix::from_ints({{a, b, c, 1, 0, 0}, {d, e, f, 0, 1, 0}, {h, i, j, 0, 0, 1}});
  };
  switch (index) {
    case 1: return g(1, 0, 0, /*alpha*/ 1, 1, 0, /*beta*/ 1, 0, 1);
    case 2: return g(1, 0, 0, -1, 1, 0, -1, -1, 1);
    // gamma = 1 puts C on the plane through A and B and no pair merges there.
    case 3: return g(1, 0, /*gamma*/ 2, -1, 1, 0, 0, 1, 1);
    case 4: return g(1, 1, -1, -1, 1, 0, 0, 1, 1);
    case 5: return g(1, -1, 1, -1, 1, 0, 0, 1, 1);
    case 6: return g(1, -3, -1, -1, 1, 0, 0, 1, 1);
    case 7: return g(1, -1, 0, 1, 1, 0, 1, 0, 1);
    default: throw PreconditionError("rank-3 smooth family index must be 1..7");
  }
}

// Maximal cones of the two hexahedral fan types (1-based labels as vertex triples).
const std::vector<std::vector<std::size_t>> kTypeOne{{1, 2, 3}, {2, 4, 3}, {1, 6, 2}, {1, 3, 5},
                                                     {4, 2, 6}, {1, 5, 6}, {3, 4, 5}, {4, 6, 5}};
const std::vector<std::vector<std::size_t>> kTypeTwo{{1, 2, 3}, {1, 3, 5}, {1, 6, 2}, {2, 4, 3},
                                                     {1, 5, 6}, {4, 2, 6}, {6, 5, 3}, {3, 4, 6}};

}  // namespace

ToricFan rank3_smooth_fan(int index) {
  IntMatrix q = rank3_grading(index);
  ToricFan fan;
  fan.rays = gale_dual(q);
  for (const auto& t : index <= 2 ? kTypeOne : kTypeTwo) {
    IndexSet s;
    for (auto i : t) s.push_back(i - 1);
    std::sort(s.begin(), s.end());
    fan.maximal_cones.push_back(s);
  }
  return fan;
}

cox::CoxPresentation gen_rank3_smooth(int index) {
  auto p = gen_toric_from_grading(rank3_grading(index), "smooth toric threefold, type G" + std::to_string(index));
  p.irrelevant = irrelevant_from_cones(6, rank3_smooth_fan(index).maximal_cones);
  return p;
}

bool smoothness_check(const ToricFan& fan) {
  auto cols = fan.rays.columns();
  for (const auto& s : fan.maximal_cones) {
    if (s.size() != fan.rays.rows()) throw DimensionMismatch("smoothness_check: cone size differs from dimension");
    std::vector<IntVector> m;
    for (auto i : s) m.push_back(cols.at(i));
    Int d = determinant(m);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

geom::Cone toric_ample_cone(const IntMatrix& grading, const ToricFan& fan) {
  auto degs = grading.columns();
  geom::Cone c = geom::Cone::full(grading.rows());
  for (const auto& s : fan.maximal_cones) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (!std::binary_search(s.begin(), s.end(), i)) gens.push_back(degs[i]);
    c = geom::intersect(c, geom::cone_from_rays(gens, grading.rows()));
  }
  return c;
}

std::optional<std::string> CorpusEntry::expect(const std::string& key) const {
  for (const auto& e : expectations)
    if (e.key == key) return e.value;
  return std::nullopt;
}

namespace {

constexpr long kRank2SharpSeed = 7;

// The non-complete threefold: six rays around a hexagonal strip.
const std::vector<IndexSet> kFanLambdaOne{{0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 5}};

CorpusEntry entry(std::string id, cox::CoxPresentation p, std::vector<Expectation> ex) {
  CorpusEntry e;
  e.id = std::move(id);
  e.presentation = std::move(p);
  e.expectations = std::move(ex);
  return e;
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  const std::string R = "reported", C = "computed";

  {
    auto p = gen_toric_from_grading(IntMatrix::from_ints({{1, 0, -2, 2, -1}, {0, 1, -1, 1, -1}}), "non-complete toric surface");
    p.irrelevant = {{0, 3}, {0, 4}, {2, 4}};
    p.projective = false;
    out.push_back(entry("ex_nc", p,
                        {{"git_chambers", "5", R},
                         {"ample_class", "0,-1", R},
                         {"ample_chamber", "cone[(-1,-1),(1,0)]", R},
                         {"sbl_classes", "4", C},
                         {"merged", "cone[(-2,-1),(0,1)] ~ cone[(0,1),(2,1)]", R}}));
  }
  {
    auto p = gen_toric_from_grading(
        IntMatrix::from_ints({{0, 2, 2, 0, 1, 1}, {0, 3, 1, 1, 0, 1}, {1, 0, 2, 0, 2, 1}}), "compactification");
    p.irrelevant = {{0, 3}, {0, 4}, {1, 2, 5}, {1, 3, 5}, {2, 4}};
    out.push_back(entry("compactification_y", p,
                        {{"git_chambers", "16", R},
                         {"movable_chambers", "3", R},
                         {"ample_class", "3,2,5", R},
                         {"merged", "cone[(1,1,1),(2,3,0),(4,3,4)] ~ cone[(1,1,1),(2,3,0),(2,3,2)]", R},
                         {"merged_locus", "V(T2)", R},
                         {"distinct_for", "6,8,9;13,8,16", R}}));
  }
  {
    auto p = gen_toric_from_grading(
        IntMatrix::from_ints({{1, -2, 1, 0, 0, 0}, {1, -1, 0, -1, 1, 0}, {2, -2, 0, -1, 0, 1}}), "non-complete threefold");
    p.irrelevant = irrelevant_from_cones(6, kFanLambdaOne);
    p.projective = false;
    out.push_back(entry("fan_lambda", p,
                        {{"git_chambers", "14", R},
                         {"movable_chambers", "6", R},
                         {"ample_cones", "0,3,4;0,4,5;0,1,5;1,2,5", R},
                         {"sbl_loci", "empty|V(T1,T6)|V(T1,T5) u V(T1,T6)|V(T1,T6) u V(T2,T6)|"
                                      "V(T1,T5) u V(T1,T6) u V(T2,T6)|V(T1,T5) u V(T1,T6) u V(T2,T6)", R}}));
  }
  {
    auto p = gen_rank2_sharp(rank2_sharp_seed(kRank2SharpSeed));
    CorpusEntry e = entry("rank2_sharp", p,
                          {{"git_chambers", "3", R},
                           {"movable_chambers", "3", R},
                           {"ample_class", "3,1", R},
                           {"sbl_classes", "2", R},
                           {"merged", "cone[(0,1),(1,2)] ~ cone[(1,2),(2,1)]", R},
                           {"h_plus", "2", R},
                           {"h_minus", "9", C},
                           {"codim", "2", R},
                           {"main2", "inconclusive", R},
                           {"crit1", "false", R}});
    out.push_back(e);
  }
  {
    auto p = gen_toric_from_grading(
        IntMatrix::from_ints({{2, 0, 1, 3, 1, 3}, {3, 2, 2, 1, 1, 2}, {3, 1, 1, 3, 3, 0}}), "toric threefold, not smooth");
    out.push_back(entry("toric3_not_smooth", p,
                        {{"git_chambers", "17", R},
                         {"movable_chambers", "5", R},
                         {"merged_pairs_per_movable_ample", "1", R},
                         {"merged_inside_mov", "true", R}}));
  }
  {
    auto p = gen_toric_from_grading(
        IntMatrix::from_ints({{1, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 1}}), "toric fourfold");
    out.push_back(entry("toric4fold", p,
                        {{"git_chambers", "3", R},
                         {"movable_chambers", "3", R},
                         {"eff_equals_mov", "true", R},
                         {"merged_pairs_per_movable_ample", "1", R},
                         {"merged_inside_mov", "true", R}}));
  }
  for (int g = 1; g <= 7; ++g) {
    out.push_back(entry("smooth3_g" + std::to_string(g), gen_rank3_smooth(g),
                        {{"smooth", "true", C}, {"triples_nonempty", "true", R}, {"merged_outside_mov", "true", R}}));
  }
  out.push_back(entry("fano_no3_a1", gen_fhn16_no3(1),
                      {{"git_chambers", "2", R}, {"sbl_classes", "2", R}, {"sbl_loci", "V(T3)", R}}));
  out.push_back(entry("fano_no3_a2", gen_fhn16_no3(2),
                      {{"sbl_classes", "2", R}, {"sbl_loci", "V(T3,T4,T6)", R}}));
  out.push_back(entry("fano_no3_a3", gen_fhn16_no3(3),
                      {{"sbl_classes", "3", R}, {"sbl_loci", "V(T3,T4,T6)|V(T4)", R}}));
  out.push_back(entry("fano_no6", gen_fhn16_no6(1, 4, 2, 1),
                      {{"git_chambers", "5", R},
                       {"sbl_classes", "5", R},
                       {"sbl_loci", "V(T1,T3,T4,T5)|V(T1,T3,T5)|V(T1,T3,T5^2*T6)|V(T1,T3*T4+T5^2*T6)", R}}));
  out.push_back(entry("fano_no8", gen_fhn16_no8({0, 1}, 2),
                      {{"git_chambers", "2", R}, {"sbl_classes", "2", R}, {"sbl_loci", "V(S1)", R}}));
  out.push_back(entry("fano_no12", gen_fhn16_no12(1, 3, 2, 2),
                      {{"sbl_classes", "4", R},
                       {"sbl_loci", "V(T1,T3,T4,T5)|V(T1,T3,T5)|V(T1,T3*T4+T5^2)", R}}));
  out.push_back(entry("grass_1_3", gen_grassmannian_blowup(1, 3),
                      {{"crit1", "true", R},
                       {"walls", "(0,1),(1,-2),(1,-1),(1,0)", R},
                       {"eff", "cone[(0,1),(1,-2)]", R},
                       {"nef", "cone[(1,-1),(1,0)]", R},
                       {"mov", "cone[(1,-1),(1,0)]", R},
                       {"codim", "1", R}}));
  out.push_back(entry("grass_1_4", gen_grassmannian_blowup(1, 4),
                      {{"crit1", "true", R},
                       {"walls", "(0,1),(1,-2),(1,-1),(1,0)", R},
                       {"eff", "cone[(0,1),(1,-2)]", R},
                       {"nef", "cone[(1,-1),(1,0)]", R},
                       {"mov", "cone[(1,-2),(1,0)]", R}}));
  return out;
}

std::optional<CorpusEntry> corpus_entry(const std::string& id) {
  for (auto& e : corpus())
    if (e.id == id) return e;
  return std::nullopt;
}

std::string print_expectations(const CorpusEntry& e) {
  std::ostringstream out;
  out << "# expectations for " << e.id << "\n";
  for (const auto& x : e.expectations) out << x.key << " | " << x.value << " | " << x.source << "\n";
  return out.str();
}

std::vector<Expectation> parse_expectations(const std::string& text) {
  std::vector<Expectation> out;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto p1 = line.find(" | ");
    auto p2 = line.rfind(" | ");
    if (p1 == std::string::npos || p1 == p2) throw PreconditionError("malformed expectation line: " + line);
    out.push_back({trim(line.substr(0, p1)), trim(line.substr(p1 + 3, p2 - p1 - 3)), trim(line.substr(p2 + 3))});
  }
  return out;
}

void write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : corpus()) {
    std::ofstream(dir + "/" + e.id + ".cox") << cox::print(e.presentation);
    std::ofstream(dir + "/" + e.id + ".expect") << print_expectations(e);
  }
}

}  // namespace mds::presentations
