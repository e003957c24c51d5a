#include "mds/cone.hpp"

#include <algorithm>
#include <set>

#include "mds/matrix.hpp"

namespace mds::geom {

namespace {

void check_dims(std::size_t ambient, const std::vector<IntVector>& vs, const char* what) {
  for (const auto& v : vs)
    if (v.size() != ambient) throw DimensionMismatch(std::string(what) + ": vector of wrong length");
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

struct RayRecord {
  IntVector v;
  std::vector<bool> zero;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

RayDescription double_description(std::size_t ambient, const std::vector<IntVector>& inequalities) {
  check_dims(ambient, inequalities, "double_description");
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < ambient; ++i) {
    IntVector e(ambient);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<RayRecord> rays;
  std::size_t processed = 0;

  for (const auto& a : inequalities) {
    if (is_zero(a)) continue;
    std::size_t j = lin.size();
    for (std::size_t t = 0; t < lin.size(); ++t)
      if (dot(a, lin[t]) != 0) {
        j = t;
        break;
      }
    if (j < lin.size()) {
      IntVector l = lin[j];
      Int al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(j));
      for (auto& v : lin) v = make_primitive(scale(al, v) - scale(dot(a, v), l));
      for (auto& r : rays) {
        r.v = make_primitive(scale(al, r.v) - scale(dot(a, r.v), l));
        r.zero.push_back(true);
      }
      RayRecord nr{std::move(l), std::vector<bool>(processed, true)};
      nr.zero.push_back(false);
      rays.push_back(std::move(nr));
      ++processed;
      continue;
    }

    std::vector<Int> s(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(a, rays[i].v);
    std::vector<RayRecord> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      RayRecord r = rays[i];
      r.zero.push_back(s[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (s[n] >= 0) continue;
        std::vector<bool> common(rays[p].zero.size());
        for (std::size_t t = 0; t < common.size(); ++t) common[t] = rays[p].zero[t] && rays[n].zero[t];
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q == p || q == n) continue;
          if (subset_of(common, rays[q].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        RayRecord r;
        r.v = make_primitive(scale(s[p], rays[n].v) - scale(s[n], rays[p].v));
        r.zero = std::move(common);
        r.zero.push_back(true);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  RayDescription out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

namespace {

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
  std::vector<IntVector> out;
  for (const auto& r : rays) {
    IntVector p = project_out(r, lineality);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  sort_unique(out);
  return out;
}

std::vector<IntVector> with_both_signs(const std::vector<IntVector>& inequalities, const std::vector<IntVector>& equations) {
  std::vector<IntVector> all = inequalities;
  for (const auto& e : equations) {
    all.push_back(e);
    all.push_back(-e);
  }
  return all;
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient, const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
  check_dims(ambient, rays, "cone generators");
  check_dims(ambient, lineality, "cone lineality");
  // Facets are the extreme rays of the dual cone.
  auto dual = double_description(ambient, with_both_signs(rays, lineality));
  Cone c;
  c.ambient_ = ambient;
  c.equations_ = canonical_span_basis(dual.lineality, ambient);
  c.facets_ = canonical_rays(dual.rays, c.equations_);
  auto primal = double_description(ambient, with_both_signs(c.facets_, c.equations_));
  c.lineality_ = canonical_span_basis(primal.lineality, ambient);
  c.rays_ = canonical_rays(primal.rays, c.lineality_);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
  check_dims(ambient, inequalities, "cone inequalities");
  check_dims(ambient, equations, "cone equations");
  auto primal = double_description(ambient, with_both_signs(inequalities, equations));
  Cone c;
  c.ambient_ = ambient;
  c.lineality_ = canonical_span_basis(primal.lineality, ambient);
  c.rays_ = canonical_rays(primal.rays, c.lineality_);
  auto dual = double_description(ambient, with_both_signs(c.rays_, c.lineality_));
  c.equations_ = canonical_span_basis(dual.lineality, ambient);
  c.facets_ = canonical_rays(dual.rays, c.equations_);
  return c;
}

Cone Cone::zero(std::size_t ambient) { return from_generators(ambient, {}); }

Cone Cone::full(std::size_t ambient) { return from_inequalities(ambient, {}); }

std::vector<IntVector> Cone::halfspaces() const { return with_both_signs(facets_, equations_); }

bool Cone::contains(const IntVector& x, Containment mode) const {
  if (x.size() != ambient_) throw DimensionMismatch("contains: point of wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_) {
    Int v = dot(f, x);
    if (v < 0) return false;
    if (mode == Containment::relative_interior && v == 0) return false;
  }
  return true;
}

bool Cone::operator==(const Cone& other) const {
  return ambient_ == other.ambient_ && lineality_ == other.lineality_ && rays_ == other.rays_;
}

std::strong_ordering Cone::operator<=>(const Cone& other) const {
  if (auto c = ambient_ <=> other.ambient_; c != 0) return c;
  auto cmp_lists = [](const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (lex_less(a[i], b[i])) return std::strong_ordering::less;
      if (lex_less(b[i], a[i])) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
  };
  if (auto c = cmp_lists(lineality_, other.lineality_); c != 0) return c;
  return cmp_lists(rays_, other.rays_);
}

Cone cone_from_rays(const std::vector<IntVector>& rays, std::size_t ambient) {
  return Cone::from_generators(ambient, rays);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  auto ineq = a.facet_normals();
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
  auto eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), ineq, eq);
}

bool contains(const Cone& c, const IntVector& x, Containment mode) { return c.contains(x, mode); }

bool is_subcone(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("is_subcone: ambient dimensions differ");
  for (const auto& r : a.rays())
    if (!b.contains(r)) return false;
  for (const auto& l : a.lineality())
    if (!b.contains(l) || !b.contains(-l)) return false;
  return true;
}

IntVector relative_interior_point(const Cone& c) {
  if (c.is_zero()) throw PreconditionError("relative_interior_point: zero cone");
  IntVector s(c.ambient_dim());
  for (const auto& r : c.rays()) s = s + r;
  for (const auto& l : c.lineality()) s = s + l;
  return make_primitive(std::move(s));
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& n : c.facet_normals()) {
    std::vector<IntVector> gens;
    for (const auto& r : c.rays())
      if (dot(n, r) == 0) gens.push_back(r);
    out.push_back(Cone::from_generators(c.ambient_dim(), gens, c.lineality()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> all_faces(const Cone& c) {
  std::set<Cone> seen{c};
  std::vector<Cone> frontier{c};
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& f : frontier)
      for (auto& g : facets(f))
        if (seen.insert(g).second) next.push_back(g);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(const Cone& c) {
  std::string s = "cone[";
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    if (i) s += ',';
    s += mds::to_string(c.rays()[i]);
  }
  s += ']';
  if (!c.lineality().empty()) {
    s += "+lin[";
    for (std::size_t i = 0; i < c.lineality().size(); ++i) {
      if (i) s += ',';
      s += mds::to_string(c.lineality()[i]);
    }
    s += ']';
  }
  return s;
}

}  // namespace mds::geom
