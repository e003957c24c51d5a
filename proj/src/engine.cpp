#include "mds/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include "mds/arrangement.hpp"

namespace mds::engine {

using geom::Cone;
using poly::Monomial;
using poly::Polynomial;

geom::Cone FFace::face_cone(std::size_t r) const {
  std::vector<IntVector> gens;
  for (auto i : indices) {
    IntVector e(r);
    e.at(i) = 1;
    gens.push_back(std::move(e));
  }
  return Cone::from_generators(r, gens);
}

namespace {

std::string poly_key(const Polynomial& f) {
  std::string k;
  for (const auto& t : f.terms()) {
    k += t.coeff.get_str();
    k += ':';
    for (std::size_t i = 0; i < t.monomial.num_vars(); ++i) {
      k += std::to_string(t.monomial[i]);
      k += ',';
    }
    k += ';';
  }
  return k;
}

// Groups generators into classes connected through shared variables.
std::vector<std::vector<Polynomial>> split_components(const std::vector<Polynomial>& gens, std::size_t nvars) {
  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> owner(nvars, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (auto v : gens[g].variables()) {
      if (owner[v] == gens.size()) owner[v] = g;
      else parent[find(g)] = find(owner[v]);
    }
  std::map<std::size_t, std::vector<Polynomial>> groups;
  for (std::size_t g = 0; g < gens.size(); ++g) groups[find(g)].push_back(gens[g]);
  std::vector<std::vector<Polynomial>> out;
  for (auto& [root, list] : groups) out.push_back(std::move(list));
  return out;
}

// Whether the generators (already localized) have a common zero with all
// occurring variables nonzero.
// Exact positive certificate: if the system is linear in some variables L,
// give the others random nonzero values and solve for L over Q. A solution
// with no zero coordinate is a torus point. Failure proves nothing.
bool linear_witness(const std::vector<Polynomial>& gens, const std::vector<bool>& occurs) {
  const std::size_t n = occurs.size();
  std::vector<std::size_t> lin;
  std::vector<bool> in_lin(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!occurs[v]) continue;
    in_lin[v] = true;
    bool ok = true;
    for (const auto& g : gens)
      for (const auto& t : g.terms()) {
        unsigned long d = 0;
        for (std::size_t u = 0; u < n; ++u)
          if (in_lin[u]) d += t.monomial[u];
        if (d > 1) ok = false;
      }
    if (ok) lin.push_back(v);
    else in_lin[v] = false;
  }
  if (lin.empty()) return false;
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v)
    if (occurs[v] && !in_lin[v]) others.push_back(v);
  std::mt19937_64 rng(20240601);
  auto draw = [&] {
    long x = static_cast<long>(rng() % 29) + 1;
    return Rat(rng() % 2 ? x : -x);
  };
  const std::size_t m = lin.size();
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < others.size(); ++i) vals.push_back(draw());
    // Rows [a_1 .. a_m | b] with a.x = b.
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
      Polynomial h = others.empty() ? g : g.substitute(others, vals);
      std::vector<Rat> row(m + 1, Rat(0));
      for (const auto& t : h.terms()) {
        bool constant = true;
        for (std::size_t j = 0; j < m; ++j)
          if (t.monomial[lin[j]] == 1) {
            row[j] += t.coeff;
            constant = false;
          }
        if (constant) row[m] -= t.coeff;
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m && pr < rows.size(); ++c) {
      std::size_t sel = pr;
      while (sel < rows.size() && rows[sel][c] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[pr], rows[sel]);
      Rat inv = 1 / rows[pr][c];
      for (auto& x : rows[pr]) x *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pr || rows[i][c] == 0) continue;
        Rat f = rows[i][c];
        for (std::size_t j = 0; j <= m; ++j) rows[i][j] -= f * rows[pr][j];
      }
      pivots.push_back(c);
      ++pr;
    }
    bool consistent = true;
    for (std::size_t i = pr; i < rows.size(); ++i)
      if (rows[i][m] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rat> x(m, Rat(0));
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < m; ++c)
      if (!is_pivot[c]) x[c] = draw();
    bool nonzero = true;
    for (std::size_t i = 0; i < pr; ++i) {
      Rat v = rows[i][m];
      for (std::size_t c = 0; c < m; ++c)
        if (!is_pivot[c]) v -= rows[i][c] * x[c];
      x[pivots[i]] = v;
      if (v == 0) nonzero = false;
    }
    if (nonzero) return true;
  }
  return false;
}

// The relations are homogeneous, so on the torus the quasitorus action lets
// us set variables with linearly independent degrees to 1.
bool torus_point_exists(std::vector<Polynomial> gens, std::size_t nvars, const std::vector<IntVector>& degs,
                        const poly::GroebnerOptions& opts, std::map<std::string, bool>* cache) {
  std::string key;
  if (cache) {
    std::vector<std::string> keys;
    for (const auto& g : gens) keys.push_back(poly_key(g));
    std::sort(keys.begin(), keys.end());
    for (auto& k : keys) key += k + '|';
    if (auto it = cache->find(key); it != cache->end()) return it->second;
  }
  std::vector<bool> occurs(nvars, false);
  for (const auto& g : gens)
    for (auto v : g.variables()) occurs[v] = true;
  std::vector<std::size_t> fixed;
  std::vector<IntVector> basis;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!occurs[v]) continue;
    basis.push_back(degs[v]);
    if (rank(basis) == basis.size()) fixed.push_back(v);
    else basis.pop_back();
  }
  if (!fixed.empty()) {
    std::vector<Polynomial> reduced;
    for (const auto& g : gens) {
      Polynomial h = g.substitute(fixed, std::vector<Rat>(fixed.size(), Rat(1)));
      if (h.is_zero()) continue;
      if (h.is_constant()) {
        if (cache) (*cache)[key] = false;
        return false;
      }
      reduced.push_back(std::move(h));
    }
    gens = std::move(reduced);
    std::fill(occurs.begin(), occurs.end(), false);
    for (const auto& g : gens)
      for (auto v : g.variables()) occurs[v] = true;
  }
  if (linear_witness(gens, occurs)) {
    if (cache) (*cache)[key] = true;
    return true;
  }
  std::vector<std::size_t> map(nvars, nvars + 1);
  std::size_t m = 0;
  for (std::size_t v = 0; v < nvars; ++v)
    if (occurs[v]) map[v] = m++;
  std::vector<Polynomial> local;
  for (const auto& g : gens) local.push_back(g.remap(m + 1, map));
  Monomial prod(m + 1);
  for (std::size_t v = 0; v < m; ++v) prod.set(v, 1);
  prod.set(m, 1);
  Polynomial aux = Polynomial::from_terms(m + 1, {{prod, Rat(1)}, {Monomial(m + 1), Rat(-1)}});
  local.push_back(aux);
  bool exists = !poly::contains_one(poly::Ideal(m + 1, std::move(local)), opts);
  if (cache) (*cache)[key] = exists;
  return exists;
}

bool is_fface_cached(const cox::CoxPresentation& p, const IndexSet& indices, const poly::GroebnerOptions& opts,
                     std::map<std::string, bool>* cache) {
  const std::size_t r = p.num_vars();
  std::vector<bool> in_face(r, false);
  for (auto i : indices) {
    if (i >= r) throw DimensionMismatch("is_fface: index out of range");
    in_face[i] = true;
  }
  IndexSet complement;
  for (std::size_t i = 0; i < r; ++i)
    if (!in_face[i]) complement.push_back(i);
  const auto degs = p.degrees();
  std::vector<Polynomial> gens;
  for (const auto& f : p.relations) {
    Polynomial h = f.substitute_zero(complement);
    if (h.is_zero()) continue;
    // Face variables are units on the torus of the face, so monomial factors
    // can be dropped.
    h = h.divided_by(h.monomial_content());
    if (h.is_constant()) return false;
    gens.push_back(h.monic());
  }
  for (auto& comp : split_components(gens, r))
    if (!torus_point_exists(comp, r, degs, opts, cache)) return false;
  return true;
}

IndexSet mask_to_set(std::uint64_t mask, std::size_t r) {
  IndexSet s;
  for (std::size_t i = 0; i < r; ++i)
    if (mask >> i & 1u) s.push_back(i);
  return s;
}

bool lex_less(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool is_fface(const cox::CoxPresentation& p, const IndexSet& indices, const poly::GroebnerOptions& opts) {
  return is_fface_cached(p, indices, opts, nullptr);
}

std::vector<FFace> enumerate_ffaces(const cox::CoxPresentation& p, const FFaceOptions& opts,
                                    const std::optional<std::vector<IndexSet>>& candidates) {
  const std::size_t r = p.num_vars();
  std::map<std::string, bool> cache;
  std::vector<FFace> out;
  if (candidates) {
    for (auto c : *candidates) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (is_fface_cached(p, c, opts.groebner, &cache)) out.push_back({c});
    }
  } else {
    if (r > opts.max_sweep_vars || r >= 63)
      throw PreconditionError("enumerate_ffaces: full sweep over " + std::to_string(r) + " variables exceeds the cap of " +
                              std::to_string(opts.max_sweep_vars));
    // Variables absent from every relation do not affect the test.
    std::uint64_t relevant = 0;
    for (const auto& f : p.relations)
      for (auto v : f.variables()) relevant |= (std::uint64_t{1} << v);
    std::map<std::uint64_t, bool> by_relevant;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
      std::uint64_t key = mask & relevant;
      auto it = by_relevant.find(key);
      if (it == by_relevant.end())
        it = by_relevant.emplace(key, is_fface_cached(p, mask_to_set(key, r), opts.groebner, &cache)).first;
      if (it->second) out.push_back({mask_to_set(mask, r)});
    }
  }
  std::sort(out.begin(), out.end(), [](const FFace& a, const FFace& b) { return lex_less(a.indices, b.indices); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitConeSet orbit_cones(const cox::CoxPresentation& p, const std::vector<FFace>& ffaces) {
  const std::size_t k = p.rank();
  auto degs = p.degrees();
  std::map<std::vector<IntVector>, Cone> by_generators;
  std::map<Cone, std::vector<FFace>> by_cone;
  for (const auto& f : ffaces) {
    std::vector<IntVector> gens;
    for (auto i : f.indices) gens.push_back(degs.at(i));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto it = by_generators.find(gens);
    if (it == by_generators.end()) it = by_generators.emplace(gens, geom::cone_from_rays(gens, k)).first;
    by_cone[it->second].push_back(f);
  }
  OrbitConeSet out;
  out.rank = k;
  for (auto& [c, w] : by_cone) {
    out.cones.push_back(c);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

Cone effective_cone(const cox::CoxPresentation& p) { return geom::cone_from_rays(p.degrees(), p.rank()); }

Cone moving_cone(const cox::CoxPresentation& p) {
  auto degs = p.degrees();
  Cone mov = Cone::full(p.rank());
  for (std::size_t i = 0; i < degs.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < degs.size(); ++j)
      if (j != i) others.push_back(degs[j]);
    mov = geom::intersect(mov, geom::cone_from_rays(others, p.rank()));
  }
  return mov;
}

Cone git_chamber(const OrbitConeSet& omega, const Cone& eff, const IntVector& w) {
  if (w.size() != eff.ambient_dim()) throw DimensionMismatch("git_chamber: class of wrong length");
  if (!eff.contains(w)) throw PreconditionError("git_chamber: class " + mds::to_string(w) + " is not effective");
  Cone lambda = eff;
  for (const auto& c : omega.cones)
    if (c.contains(w)) lambda = geom::intersect(lambda, c);
  return lambda;
}

GitFan git_fan(const OrbitConeSet& omega, const Cone& eff) {
  const std::size_t k = eff.ambient_dim();
  if (!eff.is_full_dimensional()) throw PreconditionError("git_fan: effective cone is not full-dimensional");
  std::set<IntVector> hyperplanes;
  for (const auto& c : omega.cones) {
    if (c.dim() == k) {
      for (const auto& n : c.facet_normals()) hyperplanes.insert(sign_normalize(n));
    } else if (c.dim() + 1 == k) {
      hyperplanes.insert(sign_normalize(c.equations().front()));
    }
  }
  geom::Arrangement arr{eff, {hyperplanes.begin(), hyperplanes.end()}};
  auto cells = geom::arrangement_cells(arr);
  std::map<IndexSet, Cone> by_signature;
  for (const auto& cell : cells) {
    IndexSet sig;
    for (std::size_t i = 0; i < omega.cones.size(); ++i)
      if (geom::is_subcone(cell, omega.cones[i])) sig.push_back(i);
    if (by_signature.count(sig)) continue;
    Cone lambda = eff;
    for (auto i : sig) lambda = geom::intersect(lambda, omega.cones[i]);
    by_signature.emplace(sig, lambda);
  }
  std::vector<std::pair<Cone, IndexSet>> sorted;
  for (auto& [sig, c] : by_signature) sorted.push_back({c, sig});
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  GitFan fan;
  for (auto& [c, sig] : sorted) {
    fan.chambers.push_back(c);
    fan.signatures.push_back(sig);
  }
  return fan;
}

Bunch bunch(const OrbitConeSet& omega, const Cone& lambda) {
  if (!lambda.is_full_dimensional()) throw PreconditionError("bunch: chamber is not full-dimensional");
  IntVector w = geom::relative_interior_point(lambda);
  Bunch b;
  for (std::size_t i = 0; i < omega.cones.size(); ++i)
    if (geom::is_subcone(lambda, omega.cones[i]) && omega.cones[i].contains(w, geom::Containment::relative_interior))
      b.members.push_back(i);
  return b;
}

SblSignature sbl_signature(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w) {
  SblSignature s;
  for (auto i : phi.members)
    if (omega.cones.at(i).contains(w)) s.members.push_back(i);
  return s;
}

bool same_sbl(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w1, const IntVector& w2) {
  return sbl_signature(omega, phi, w1) == sbl_signature(omega, phi, w2);
}

bool same_sbl_by_intersections(const OrbitConeSet& omega, const Bunch& phi, const IntVector& w1, const IntVector& w2) {
  auto meet = [&](const IntVector& w) {
    Cone c = Cone::full(omega.rank);
    for (auto i : sbl_signature(omega, phi, w).members) c = geom::intersect(c, omega.cones[i]);
    return c;
  };
  return meet(w1) == meet(w2);
}

bool same_sbl_sufficient(const Cone& lambda, const Cone& l1, const Cone& l2) {
  if (l1 == l2) throw PreconditionError("same_sbl_sufficient: the two chambers must differ");
  // A subcone K of l meets l's interior iff a relative interior point of K does.
  auto reaches = [](const Cone& a, const Cone& b, const Cone& target) {
    std::vector<IntVector> gens = a.rays();
    gens.insert(gens.end(), b.rays().begin(), b.rays().end());
    std::vector<IntVector> lin = a.lineality();
    lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
    Cone k = geom::intersect(Cone::from_generators(a.ambient_dim(), gens, lin), target);
    return target.contains(geom::relative_interior_point(k), geom::Containment::relative_interior);
  };
  return reaches(lambda, l1, l2) && reaches(lambda, l2, l1);
}

StableBaseLocusReport stable_base_locus(const cox::CoxPresentation& p, const OrbitConeSet& omega, const Bunch& phi,
                                        const IntVector& w) {
  StableBaseLocusReport rep;
  std::set<IndexSet> complements;
  for (auto i : phi.members) {
    if (omega.cones[i].contains(w)) continue;
    for (const auto& f : omega.witnesses[i]) {
      rep.strata.push_back(f);
      IndexSet comp;
      std::size_t pos = 0;
      for (std::size_t v = 0; v < p.num_vars(); ++v) {
        if (pos < f.indices.size() && f.indices[pos] == v) {
          ++pos;
          continue;
        }
        comp.push_back(v);
      }
      complements.insert(comp);
    }
  }
  std::sort(rep.strata.begin(), rep.strata.end(),
            [](const FFace& a, const FFace& b) { return lex_less(a.indices, b.indices); });
  for (const auto& c : complements) {
    bool minimal = true;
    for (const auto& d : complements)
      if (d != c && std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    if (minimal) rep.closure_components.push_back(c);
  }
  if (rep.closure_components.empty()) {
    rep.human_form = "empty";
  } else {
    for (std::size_t i = 0; i < rep.closure_components.size(); ++i) {
      if (i) rep.human_form += " u ";
      rep.human_form += "V(";
      for (std::size_t j = 0; j < rep.closure_components[i].size(); ++j)
        rep.human_form += (j ? "," : "") + p.var_names[rep.closure_components[i][j]];
      rep.human_form += ")";
    }
  }
  return rep;
}

std::vector<IndexSet> sbl_decomposition(const GitFan& fan, const OrbitConeSet& omega, const Bunch& phi) {
  std::map<IndexSet, std::size_t> class_of;
  std::vector<IndexSet> classes;
  for (std::size_t i = 0; i < fan.chambers.size(); ++i) {
    auto sig = sbl_signature(omega, phi, geom::relative_interior_point(fan.chambers[i])).members;
    auto it = class_of.find(sig);
    if (it == class_of.end()) {
      class_of.emplace(sig, classes.size());
      classes.push_back({i});
    } else {
      classes[it->second].push_back(i);
    }
  }
  return classes;
}

std::optional<std::size_t> Analysis::chamber_containing(const IntVector& w) const {
  for (std::size_t i = 0; i < fan.chambers.size(); ++i)
    if (fan.chambers[i].contains(w, geom::Containment::relative_interior)) return i;
  return std::nullopt;
}

std::vector<std::size_t> Analysis::movable_chambers() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fan.chambers.size(); ++i)
    if (geom::is_subcone(fan.chambers[i], mov)) out.push_back(i);
  return out;
}

Analysis analyze(const cox::CoxPresentation& p, const FFaceOptions& opts,
                 const std::optional<std::vector<IndexSet>>& candidates) {
  Analysis a;
  a.ffaces = enumerate_ffaces(p, opts, candidates);
  a.omega = orbit_cones(p, a.ffaces);
  a.eff = effective_cone(p);
  a.mov = moving_cone(p);
  a.fan = git_fan(a.omega, a.eff);
  return a;
}

AmpleAnalysis analyze_ample(const Analysis& a, std::size_t ample) {
  AmpleAnalysis out;
  out.ample = ample;
  Bunch phi = bunch(a.omega, a.fan.chambers.at(ample));
  out.partition = sbl_decomposition(a.fan, a.omega, phi);
  for (const auto& cls : out.partition)
    for (std::size_t x = 0; x < cls.size(); ++x)
      for (std::size_t y = x + 1; y < cls.size(); ++y) out.triples.push_back({ample, cls[x], cls[y]});
  return out;
}

ComparisonReport find_triples(const Analysis& a, bool widen) {
  ComparisonReport rep;
  rep.git_chamber_count = a.fan.size();
  std::vector<std::size_t> candidates;
  if (widen) {
    candidates.resize(a.fan.size());
    std::iota(candidates.begin(), candidates.end(), 0);
  } else {
    candidates = a.movable_chambers();
  }
  for (auto i : candidates) {
    rep.per_ample.push_back(analyze_ample(a, i));
    for (const auto& t : rep.per_ample.back().triples) rep.triples.push_back(t);
  }
  return rep;
}

std::string to_string(const IndexSet& s, const cox::CoxPresentation& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + p.var_names.at(s[i]);
  return out + "}";
}

}  // namespace mds::engine
