#pragma once

// Independent reference computations used by the tests. None of them goes
// through the orbit-cone or bunch machinery of the engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mds/engine.hpp"

namespace oracle {

using mds::Int;
using mds::IntVector;
using mds::engine::IndexSet;

inline std::vector<IndexSet> subsets_up_to(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) s.push_back(i);
    if (s.size() <= k) out.push_back(s);
  }
  return out;
}

// w in cone(cols) by Caratheodory: some linearly independent subset carries
// w with nonnegative Cramer coefficients.
inline bool in_cone(const IntVector& w, const std::vector<IntVector>& cols) {
  if (mds::is_zero(w)) return true;
  const std::size_t k = w.size();
  for (const auto& s : subsets_up_to(cols.size(), k)) {
    std::vector<IntVector> basis;
    for (auto i : s) basis.push_back(cols[i]);
    if (mds::rank(basis) != s.size()) continue;
    auto with_w = basis;
    with_w.push_back(w);
    if (mds::rank(with_w) != s.size()) continue;
    // Pick rows with a nonzero minor.
    for (const auto& rows : subsets_up_to(k, s.size())) {
      if (rows.size() != s.size()) continue;
      auto minor = [&](const std::vector<IntVector>& cs) {
        std::vector<IntVector> m;
        for (const auto& c : cs) {
          IntVector r;
          for (auto i : rows) r.push_back(c[i]);
          m.push_back(r);
        }
        return mds::determinant(m);
      };
      Int d = minor(basis);
      if (d == 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto replaced = basis;
        replaced[j] = w;
        if (sgn(minor(replaced)) * sgn(d) < 0) ok = false;
      }
      if (ok) return true;
      break;
    }
  }
  return false;
}

// Stable base locus partition for a polynomial (toric) Cox ring: a point with
// support Z lies in X^ iff the ample class lies in cone(Q_Z), and it lies in
// B(w) iff w does not lie in cone(Q_Z). Chambers are compared by the set of
// relevant supports whose cone contains an interior point.
inline std::vector<IndexSet> toric_sbl_partition(const mds::cox::CoxPresentation& p, const mds::engine::Analysis& a,
                                                 std::size_t ample) {
  const std::size_t r = p.num_vars();
  auto degs = p.degrees();
  auto wa = mds::geom::relative_interior_point(a.fan.chambers[ample]);
  std::vector<std::vector<IntVector>> relevant;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < r; ++i)
      if (m >> i & 1u) cols.push_back(degs[i]);
    if (in_cone(wa, cols)) relevant.push_back(cols);
  }
  std::map<std::vector<bool>, IndexSet> groups;
  std::vector<std::vector<bool>> order;
  for (std::size_t c = 0; c < a.fan.size(); ++c) {
    auto w = mds::geom::relative_interior_point(a.fan.chambers[c]);
    std::vector<bool> sig;
    for (const auto& cols : relevant) sig.push_back(in_cone(w, cols));
    if (!groups.count(sig)) order.push_back(sig);
    groups[sig].push_back(c);
  }
  std::vector<IndexSet> out;
  for (const auto& s : order) out.push_back(groups[s]);
  return out;
}

// The definition of an F-face, straight from the ideal: no component
// splitting, no dehomogenization, no witness search.
inline bool fface_by_definition(const mds::cox::CoxPresentation& p, const IndexSet& face) {
  const std::size_t r = p.num_vars();
  IndexSet complement;
  for (std::size_t i = 0; i < r; ++i)
    if (!std::binary_search(face.begin(), face.end(), i)) complement.push_back(i);
  std::vector<mds::poly::Polynomial> gens;
  std::vector<std::size_t> map(r);
  for (std::size_t i = 0; i < r; ++i) map[i] = i;
  for (const auto& f : p.relations) gens.push_back(f.substitute_zero(complement).remap(r + 1, map));
  mds::poly::Monomial prod(r + 1);
  for (auto i : face) prod.set(i, 1);
  prod.set(r, 1);
  gens.push_back(mds::poly::Polynomial::from_terms(
      r + 1, {{prod, mds::Rat(1)}, {mds::poly::Monomial(r + 1), mds::Rat(-1)}}));
  return !mds::poly::contains_one(mds::poly::Ideal(r + 1, gens));
}

inline bool same_partition(std::vector<IndexSet> a, std::vector<IndexSet> b) {
  for (auto& c : a) std::sort(c.begin(), c.end());
  for (auto& c : b) std::sort(c.begin(), c.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// "V(T1,T3*T4+T5^2*T6) u V(T2)" -> list of generator lists.
inline std::vector<std::vector<mds::poly::Polynomial>> parse_locus(const std::string& text, const mds::cox::CoxPresentation& p) {
  std::vector<std::vector<mds::poly::Polynomial>> out;
  std::size_t pos = 0;
  while ((pos = text.find("V(", pos)) != std::string::npos) {
    auto end = text.find(')', pos);
    std::vector<mds::poly::Polynomial> gens;
    for (const auto& g : split(text.substr(pos + 2, end - pos - 2), ','))
      gens.push_back(mds::poly::parse_polynomial(g, p.var_names));
    out.push_back(gens);
    pos = end;
  }
  return out;
}

// V(I + <a>) minus V(irr) inside V(I + <b>), with arbitrary polynomial
// generators: every g in b times one variable from each irrelevant component
// lies in the radical of I + <a>.
inline bool contained_mod_irrelevant(const mds::cox::CoxPresentation& p, const std::vector<mds::poly::Polynomial>& a,
                                     const std::vector<mds::poly::Polynomial>& b) {
  const std::size_t r = p.num_vars();
  auto gens = p.relations;
  gens.insert(gens.end(), a.begin(), a.end());
  mds::poly::Ideal j(r, gens);
  const auto& comps = p.irrelevant;
  std::vector<std::size_t> choice(comps.size(), 0);
  for (const auto& g : b) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      mds::poly::Monomial m(r);
      for (std::size_t k = 0; k < comps.size(); ++k) m.set(comps[k][choice[k]], 1);
      if (!mds::poly::radical_membership(g.times(m), j)) return false;
      std::size_t k = 0;
      while (k < comps.size() && ++choice[k] == comps[k].size()) choice[k++] = 0;
      if (k == comps.size()) break;
    }
  }
  return true;
}

inline std::vector<mds::poly::Polynomial> coordinates(const mds::cox::CoxPresentation& p, const IndexSet& s) {
  std::vector<mds::poly::Polynomial> out;
  for (auto i : s) {
    mds::poly::Monomial m(p.num_vars());
    m.set(i, 1);
    out.push_back(mds::poly::Polynomial::from_terms(p.num_vars(), {{m, mds::Rat(1)}}));
  }
  return out;
}

}  // namespace oracle
