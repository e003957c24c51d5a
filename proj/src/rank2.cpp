#include "mds/rank2.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mds::rank2 {

using geom::Cone;
using poly::Polynomial;

Rank2Order::Rank2Order(const cox::CoxPresentation& p) {
  if (p.rank() != 2) throw PreconditionError("rank-2 machinery requires a rank-2 grading");
  auto eff = engine::effective_cone(p);
  if (!eff.is_pointed()) throw PreconditionError("rank-2 machinery requires a pointed effective cone");
  if (eff.rays().size() == 2) {
    const auto& a = eff.rays()[0];
    const auto& b = eff.rays()[1];
    orientation_ = sgn(a[0] * b[1] - a[1] * b[0]);
  }
}

bool Rank2Order::leq(const IntVector& a, const IntVector& b) const {
  return orientation_ * sgn(a[0] * b[1] - a[1] * b[0]) >= 0;
}

std::pair<IntVector, IntVector> Rank2Order::bounds(const Cone& chamber) const {
  if (chamber.rays().size() != 2 || !chamber.is_pointed())
    throw PreconditionError("rank-2 chamber must be a two-dimensional pointed cone");
  const auto& a = chamber.rays()[0];
  const auto& b = chamber.rays()[1];
  if (leq(a, b)) return {a, b};
  return {b, a};
}

bool Rank2Order::below(const IntVector& w, const Cone& chamber) const { return leq(w, bounds(chamber).first); }

bool Rank2Order::above(const IntVector& w, const Cone& chamber) const { return leq(bounds(chamber).second, w); }

bool Rank2Order::chamber_leq(const Cone& a, const Cone& b) const { return leq(bounds(a).second, bounds(b).first); }

NonSemistableLocus non_semistable_locus_rank2(const cox::CoxPresentation& p, const Cone& lambda) {
  Rank2Order ord(p);
  NonSemistableLocus out;
  auto degs = p.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (ord.below(degs[i], lambda)) out.below.push_back(i);
    if (ord.above(degs[i], lambda)) out.above.push_back(i);
  }
  return out;
}

IndexSet stable_base_locus_rank2(const cox::CoxPresentation& p, const Cone& ample, const Cone& lambda) {
  if (lambda == ample) return {};
  Rank2Order ord(p);
  auto degs = p.degrees();
  IndexSet out;
  if (ord.chamber_leq(lambda, ample)) {
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (ord.below(degs[i], lambda)) out.push_back(i);
  } else if (ord.chamber_leq(ample, lambda)) {
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (ord.above(degs[i], lambda)) out.push_back(i);
  } else {
    throw PreconditionError("stable_base_locus_rank2: chambers overlap");
  }
  return out;
}

Rank2Report check_main2(const cox::CoxPresentation& p, const Cone& ample, const poly::GroebnerOptions& opts) {
  auto nss = non_semistable_locus_rank2(p, ample);
  Rank2Report rep;
  rep.h_minus = nss.below.size();
  rep.h_plus = nss.above.size();
  rep.c = cox::codim_canonical_embedding(p, opts);
  rep.ample_chamber = ample;
  rep.verdict = std::min(rep.h_plus, rep.h_minus) > rep.c ? Verdict::applies : Verdict::inconclusive;
  return rep;
}

namespace {

// Radical membership of prod_{i in support} T_i in I + <T_a : a in zeroed>.
class MonomialRadicalOracle {
 public:
  MonomialRadicalOracle(const cox::CoxPresentation& p, const poly::GroebnerOptions& opts) : p_(p), opts_(opts) {}

  bool member(const IndexSet& zeroed, const IndexSet& support) {
    for (auto v : support)
      if (std::binary_search(zeroed.begin(), zeroed.end(), v)) return true;
    auto key = std::make_pair(zeroed, support);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const std::size_t r = p_.num_vars();
    poly::Ideal j = poly::substitute_zero(p_.ideal(), zeroed);
    poly::Monomial m(r);
    for (auto v : support) m.set(v, 1);
    Polynomial f = Polynomial::from_terms(r, {{m, Rat(1)}});
    bool res = poly::radical_membership(f, j, opts_);
    cache_.emplace(key, res);
    return res;
  }

 private:
  const cox::CoxPresentation& p_;
  poly::GroebnerOptions opts_;
  std::map<std::pair<IndexSet, IndexSet>, bool> cache_;
};

bool contained_with(MonomialRadicalOracle& oracle, const IndexSet& a, const IndexSet& b,
                    const std::vector<IndexSet>& removed) {
  if (b.empty()) return true;
  for (const auto& c : removed)
    if (c.empty()) return true;
  // Every product g * h_1 * ... * h_m must vanish on V(I + T_a).
  std::vector<std::size_t> choice(removed.size(), 0);
  for (auto g : b) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::set<std::size_t> s{g};
      for (std::size_t j = 0; j < removed.size(); ++j) s.insert(removed[j][choice[j]]);
      if (!oracle.member(a, IndexSet(s.begin(), s.end()))) return false;
      std::size_t j = 0;
      while (j < removed.size() && ++choice[j] == removed[j].size()) choice[j++] = 0;
      if (j == removed.size()) break;
    }
  }
  return true;
}

std::vector<std::size_t> chambers_in_order(const engine::Analysis& a, const Rank2Order& ord) {
  std::vector<std::size_t> idx(a.fan.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    auto bx = ord.bounds(a.fan.chambers[x]).first;
    auto by = ord.bounds(a.fan.chambers[y]).first;
    return ord.leq(bx, by) && !ord.leq(by, bx);
  });
  return idx;
}

}  // namespace

bool locus_contained(const cox::CoxPresentation& p, const IndexSet& a, const IndexSet& b,
                     const std::vector<IndexSet>& removed, const poly::GroebnerOptions& opts) {
  MonomialRadicalOracle oracle(p, opts);
  return contained_with(oracle, a, b, removed);
}

bool check_crit1(const cox::CoxPresentation& p, const engine::Analysis& a, std::size_t ample) {
  Rank2Order ord(p);
  auto phi = engine::bunch(a.omega, a.fan.chambers.at(ample));
  auto classes = engine::sbl_decomposition(a.fan, a.omega, phi);
  std::vector<std::size_t> class_of(a.fan.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c]) class_of[i] = c;
  std::set<IntVector> walls(a.eff.rays().begin(), a.eff.rays().end());
  auto order = chambers_in_order(a, ord);
  for (std::size_t k = 0; k + 1 < order.size(); ++k)
    if (class_of[order[k]] != class_of[order[k + 1]]) walls.insert(ord.bounds(a.fan.chambers[order[k]]).second);
  for (const auto& w : p.degrees())
    if (!walls.count(make_primitive(w))) return false;
  return true;
}

MainConditionsReport check_main_conditions(const cox::CoxPresentation& p, const engine::Analysis& a,
                                           std::size_t ample, const poly::GroebnerOptions& opts) {
  Rank2Order ord(p);
  const Cone& amp = a.fan.chambers.at(ample);
  auto nss = non_semistable_locus_rank2(p, amp);
  auto degs = p.degrees();
  MonomialRadicalOracle oracle(p, opts);
  MainConditionsReport rep;
  auto order = chambers_in_order(a, ord);
  std::vector<std::size_t> lower, upper;
  for (auto i : order) {
    if (i == ample) continue;
    (ord.chamber_leq(a.fan.chambers[i], amp) ? lower : upper).push_back(i);
  }
  auto index_set = [&](std::size_t chamber, bool below_side) {
    IndexSet s;
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (below_side ? ord.below(degs[i], a.fan.chambers[chamber]) : ord.above(degs[i], a.fan.chambers[chamber]))
        s.push_back(i);
    return s;
  };
  auto judge = [&](std::size_t inner, std::size_t outer, bool below_side) {
    // inner lies closer to the ample chamber: its locus must be strictly smaller.
    IndexSet ai = index_set(inner, below_side);
    IndexSet ao = index_set(outer, below_side);
    const IndexSet& c = below_side ? nss.above : nss.below;
    bool forward = contained_with(oracle, ai, ao, {c});
    bool reverse = contained_with(oracle, ao, ai, {c});
    return forward && !reverse;
  };
  for (std::size_t x = 0; x < lower.size(); ++x)
    for (std::size_t y = x + 1; y < lower.size(); ++y) {
      bool h = judge(lower[y], lower[x], true);
      rep.pairs.push_back({lower[x], lower[y], h});
      rep.all_hold &= h;
    }
  for (std::size_t x = 0; x < upper.size(); ++x)
    for (std::size_t y = x + 1; y < upper.size(); ++y) {
      bool h = judge(upper[x], upper[y], false);
      rep.pairs.push_back({upper[x], upper[y], h});
      rep.all_hold &= h;
    }
  return rep;
}

std::vector<IndexSet> sbl_partition_rank2(const cox::CoxPresentation& p, const engine::Analysis& a, std::size_t ample,
                                          const poly::GroebnerOptions& opts) {
  const Cone& amp = a.fan.chambers.at(ample);
  auto nss = non_semistable_locus_rank2(p, amp);
  MonomialRadicalOracle oracle(p, opts);
  std::vector<IndexSet> sets(a.fan.size());
  for (std::size_t i = 0; i < a.fan.size(); ++i)
    sets[i] = i == ample ? nss.below : stable_base_locus_rank2(p, amp, a.fan.chambers[i]);
  const std::vector<IndexSet> removed{nss.below, nss.above};
  std::vector<IndexSet> classes;
  for (std::size_t i = 0; i < a.fan.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      std::size_t j = cls.front();
      if (contained_with(oracle, sets[i], sets[j], removed) && contained_with(oracle, sets[j], sets[i], removed)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

}  // namespace mds::rank2
