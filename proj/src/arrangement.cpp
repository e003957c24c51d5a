#include "mds/arrangement.hpp"

#include <algorithm>

namespace mds::geom {

bool cuts_interior(const Cone& c, const IntVector& h) {
  for (const auto& l : c.lineality())
    if (dot(h, l) != 0) return true;
  bool pos = false, neg = false;
  for (const auto& r : c.rays()) {
    int s = sgn(dot(h, r));
    pos |= s > 0;
    neg |= s < 0;
  }
  return pos && neg;
}

std::vector<Cone> arrangement_cells(const Arrangement& a) {
  const std::size_t n = a.support.ambient_dim();
  if (a.support.is_zero() || !a.support.is_full_dimensional())
    throw PreconditionError("arrangement_cells: support cone is not full-dimensional");
  for (const auto& h : a.hyperplanes)
    if (h.size() != n) throw DimensionMismatch("arrangement_cells: hyperplane of wrong length");
  std::vector<Cone> cells{a.support};
  for (const auto& h : a.hyperplanes) {
    if (is_zero(h)) continue;
    std::vector<Cone> next;
    for (auto& c : cells) {
      if (!cuts_interior(c, h)) {
        next.push_back(std::move(c));
        continue;
      }
      auto ineq = c.facet_normals();
      ineq.push_back(h);
      next.push_back(Cone::from_inequalities(n, ineq));
      ineq.back() = -h;
      next.push_back(Cone::from_inequalities(n, ineq));
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace mds::geom
