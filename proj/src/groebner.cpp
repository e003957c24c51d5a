#include "mds/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace mds::poly {

GroebnerOptions default_groebner_options() {
  GroebnerOptions opts;
  if (const char* env = std::getenv("MDS_PAIR_BUDGET")) {
    try {
      opts.pair_budget = std::stoul(env);
    } catch (const std::exception&) {
      // Malformed values fall back to the default budget.
    }
  }
  return opts;
}

namespace {

using TermVec = std::vector<Term>;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i)
    if (m[i]) mask |= (1u << i);
  return mask;
}

TermVec sorted_terms(const Polynomial& p, const TermOrder& ord) {
  TermVec t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return t;
}

// a[a_from..] - c * m * b[b_from..]
TermVec sub_mul(const TermVec& a, std::size_t a_from, const Rat& c, const Monomial& m, const TermVec& b,
                std::size_t b_from, const TermOrder& ord) {
  TermVec out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].monomial * m;
      have_bm = true;
    }
    if (j == b.size() || (i < a.size() && ord.greater(a[i].monomial, bm))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || ord.greater(bm, a[i].monomial)) {
      out.push_back({bm, -c * b[j].coeff});
      ++j;
      have_bm = false;
    } else {
      Rat v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({a[i].monomial, v});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

void make_monic(TermVec& f) {
  if (f.empty() || f[0].coeff == 1) return;
  Rat inv = 1 / f[0].coeff;
  for (auto& t : f) t.coeff *= inv;
}

unsigned max_degree(const TermVec& f) {
  unsigned d = 0;
  for (const auto& t : f) d = std::max(d, t.monomial.degree());
  return d;
}

class Engine {
 public:
  Engine(const TermOrder& ord, const GroebnerOptions& opts, bool stop_at_unit)
      : ord_(ord), opts_(opts), stop_at_unit_(stop_at_unit) {}

  // Returns false if the unit ideal was detected early.
  bool run(const std::vector<Polynomial>& gens) {
    std::vector<std::pair<unsigned, TermVec>> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      TermVec t = sorted_terms(g, ord_);
      input.push_back({max_degree(t), std::move(t)});
    }
    std::stable_sort(input.begin(), input.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, f] : input) {
      unsigned sugar = s;
      TermVec r = reduce(std::move(f), sugar, /*exclude=*/npos);
      if (r.empty()) continue;
      make_monic(r);
      if (!insert(std::move(r), sugar)) return false;
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& p = pairs_[k];
        const auto& b = pairs_[best];
        if (p.sugar < b.sugar || (p.sugar == b.sugar && ord_.greater(b.lcm, p.lcm))) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > opts_.pair_budget)
        throw BudgetExceeded("Groebner pair budget of " + std::to_string(opts_.pair_budget) + " exhausted");
      unsigned sugar = p.sugar;
      TermVec s = spoly(p);
      TermVec r = reduce(std::move(s), sugar, npos);
      if (r.empty()) continue;
      make_monic(r);
      if (!insert(std::move(r), sugar)) return false;
    }
    return true;
  }

  GroebnerBasis finish(std::size_t nvars) {
    GroebnerBasis gb;
    gb.order = ord_;
    gb.pairs_processed = processed_;
    if (unit_) {
      gb.elements.push_back(Polynomial::constant(nvars, Rat(1)));
      gb.leading.push_back(Monomial(nvars));
      return gb;
    }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::vector<TermVec> reduced;
    for (auto k : idx) {
      TermVec f = polys_[k];
      TermVec head{f[0]};
      TermVec tail(f.begin() + 1, f.end());
      unsigned sugar = 0;
      TermVec rt = reduce(std::move(tail), sugar, k);
      head.insert(head.end(), rt.begin(), rt.end());
      reduced.push_back(std::move(head));
    }
    // Normal forms modulo a Groebner basis are unique, so reducing each tail
    // against the unreduced minimal basis already gives the reduced basis.
    std::sort(reduced.begin(), reduced.end(),
              [&](const TermVec& a, const TermVec& b) { return ord_.greater(a[0].monomial, b[0].monomial); });
    for (auto& f : reduced) {
      std::vector<Term> terms = f;
      gb.leading.push_back(f[0].monomial);
      gb.elements.push_back(Polynomial::from_terms(nvars, std::move(terms)));
    }
    return gb;
  }

  bool unit() const { return unit_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  const Monomial& lm(std::size_t k) const { return polys_[k][0].monomial; }

  TermVec reduce(TermVec f, unsigned& sugar, std::size_t exclude) const {
    TermVec res;
    std::size_t i = 0;
    while (i < f.size()) {
      const Monomial& m = f[i].monomial;
      std::uint32_t mm = support_mask(m);
      std::size_t div = npos;
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (!active_[k] || k == exclude) continue;
        if ((masks_[k] & ~mm) != 0) continue;
        if (!lm(k).divides(m)) continue;
        if (div == npos || polys_[k].size() < polys_[div].size()) div = k;
      }
      if (div == npos) {
        res.push_back(f[i]);
        ++i;
        continue;
      }
      Monomial q = lm(div).quotient_of(m);
      sugar = std::max(sugar, q.degree() + sugars_[div]);
      Rat c = f[i].coeff;
      f = sub_mul(f, i + 1, c, q, polys_[div], 1, ord_);
      i = 0;
    }
    return res;
  }

  TermVec spoly(const Pair& p) const {
    const TermVec& a = polys_[p.i];
    const TermVec& b = polys_[p.j];
    Monomial ma = lm(p.i).quotient_of(p.lcm);
    Monomial mb = lm(p.j).quotient_of(p.lcm);
    TermVec at;
    at.reserve(a.size());
    for (std::size_t k = 1; k < a.size(); ++k) at.push_back({a[k].monomial * ma, a[k].coeff});
    return sub_mul(at, 0, Rat(1), mb, b, 1, ord_);
  }

  bool insert(TermVec h, unsigned sugar) {
    if (h[0].monomial.is_one()) {
      unit_ = true;
      if (stop_at_unit_) return false;
    }
    std::size_t hk = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    masks_.push_back(support_mask(lm(hk)));
    active_.push_back(false);
    update(hk);
    if (unit_) {
      pairs_.clear();
      return false;
    }
    return true;
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    return std::max(sugars_[i] + l.degree() - lm(i).degree(), sugars_[j] + l.degree() - lm(j).degree());
  }

  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) c.push_back(k);
    std::vector<Monomial> lc;
    for (auto k : c) lc.push_back(lh.lcm(lm(k)));

    std::vector<std::size_t> d;  // positions into c
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = lh.coprime(lm(c[a]));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (lc[b].divides(lc[a])) keep = false;
        for (std::size_t b : d)
          if (keep && lc[b].divides(lc[a])) keep = false;
      }
      if (keep) d.push_back(a);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lm(p.i).lcm(lh) == p.lcm) && !(lm(p.j).lcm(lh) == p.lcm)) continue;
      kept.push_back(p);
    }
    for (auto a : d) {
      if (lh.coprime(lm(c[a]))) continue;
      kept.push_back({c[a], h, lc[a], pair_sugar(c[a], h, lc[a])});
    }
    pairs_ = std::move(kept);
    for (auto k : c)
      if (lh.divides(lm(k))) active_[k] = false;
    active_[h] = true;
  }

  const TermOrder& ord_;
  GroebnerOptions opts_;
  bool stop_at_unit_;
  bool unit_ = false;
  std::size_t processed_ = 0;
  std::vector<TermVec> polys_;
  std::vector<unsigned> sugars_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars), gens_(std::move(generators)) {
  if (nvars > kMaxVariables) throw PreconditionError("ideal: too many variables");
  for (const auto& g : gens_)
    if (g.num_vars() != nvars) throw DimensionMismatch("ideal: generator in a different ring");
}

const GroebnerBasis& Ideal::groebner(const TermOrder& order, const GroebnerOptions& opts) const {
  if (order.num_vars() != nvars_) throw DimensionMismatch("groebner: term order in a different ring");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->by_order.find(order.permutation());
    if (it != cache_->by_order.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(*this, order, opts));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->by_order.emplace(order.permutation(), gb);
  return *it->second;
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& opts, bool stop_at_unit) {
  if (order.num_vars() != ideal.num_vars()) throw DimensionMismatch("buchberger: term order in a different ring");
  Engine e(order, opts, stop_at_unit);
  e.run(ideal.generators());
  return e.finish(ideal.num_vars());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  const std::size_t n = f.num_vars();
  std::vector<TermVec> basis;
  for (const auto& g : gb.elements) basis.push_back(sorted_terms(g, gb.order));
  TermVec cur = sorted_terms(f, gb.order);
  TermVec res;
  std::size_t i = 0;
  while (i < cur.size()) {
    std::size_t div = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k][0].monomial.divides(cur[i].monomial)) {
        div = k;
        break;
      }
    if (div == basis.size()) {
      res.push_back(cur[i++]);
      continue;
    }
    Monomial q = basis[div][0].monomial.quotient_of(cur[i].monomial);
    Rat c = cur[i].coeff / basis[div][0].coeff;
    cur = sub_mul(cur, i + 1, c, q, basis[div], 1, gb.order);
    i = 0;
  }
  return Polynomial::from_terms(n, std::move(res));
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& opts) {
  return normal_form(f, ideal.groebner(TermOrder(ideal.num_vars()), opts)).is_zero();
}

bool contains_one(const Ideal& ideal, const GroebnerOptions& opts) {
  for (const auto& g : ideal.generators())
    if (!g.is_zero() && g.is_constant()) return true;
  return buchberger(ideal, TermOrder(ideal.num_vars()), opts, /*stop_at_unit=*/true).is_unit();
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& opts) {
  if (f.num_vars() != ideal.num_vars()) throw DimensionMismatch("radical_membership: different rings");
  if (f.is_zero()) return true;
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(n + 1, map));
  Polynomial y = Polynomial::variable(n + 1, n);
  gens.push_back(y * f.remap(n + 1, map) - Polynomial::constant(n + 1, Rat(1)));
  return contains_one(Ideal(n + 1, std::move(gens)), opts);
}

namespace {

void max_independent(const std::vector<std::uint32_t>& lead_masks, std::size_t n, std::size_t v, std::uint32_t chosen,
                     std::size_t size, std::size_t& best) {
  if (size + (n - v) <= best) return;
  if (v == n) {
    best = size;
    return;
  }
  std::uint32_t with = chosen | (1u << v);
  bool ok = true;
  for (auto m : lead_masks)
    if ((m & ~with) == 0) {
      ok = false;
      break;
    }
  if (ok) max_independent(lead_masks, n, v + 1, with, size + 1, best);
  max_independent(lead_masks, n, v + 1, chosen, size, best);
}

}  // namespace

std::size_t krull_dimension(const Ideal& ideal, const GroebnerOptions& opts) {
  const auto& gb = ideal.groebner(TermOrder(ideal.num_vars()), opts);
  if (gb.is_unit()) throw PreconditionError("krull_dimension: unit ideal");
  std::vector<std::uint32_t> masks;
  for (const auto& m : gb.leading) masks.push_back(support_mask(m));
  std::size_t best = 0;
  max_independent(masks, ideal.num_vars(), 0, 0, 0, best);
  return best;
}

Ideal substitute_zero(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= ideal.num_vars()) throw DimensionMismatch("substitute_zero: variable index out of range");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial h = g.substitute_zero(vars);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return Ideal(ideal.num_vars(), std::move(gens));
}

}  // namespace mds::poly
