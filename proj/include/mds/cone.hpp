#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mds/arith.hpp"

namespace mds::geom {

enum class Containment { closed, relative_interior };

// Rational polyhedral cone in Q^n kept in both descriptions.
//
// rays: extreme rays modulo the lineality space, projected onto its
//   orthogonal complement, primitive, sorted.
// lineality: canonical basis of the lineality space.
// facet_normals: inner normals of the facets, projected into the linear
//   span, primitive, sorted.
// equations: canonical basis of the orthogonal complement of the span.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t ambient, const std::vector<IntVector>& rays,
                              const std::vector<IntVector>& lineality = {});
  static Cone from_inequalities(std::size_t ambient, const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations = {});
  static Cone zero(std::size_t ambient);
  static Cone full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return ambient_ - equations_.size(); }

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  // Facet normals followed by each equation in both signs; the cone is the
  // set where all of them are nonnegative.
  std::vector<IntVector> halfspaces() const;

  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const IntVector& x, Containment mode = Containment::closed) const;

  bool operator==(const Cone& other) const;
  std::strong_ordering operator<=>(const Cone& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

// Extreme rays and lineality basis of {x : a.x >= 0 for all a}, computed by
// the double description method. Rays are not canonicalized.
struct RayDescription {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
RayDescription double_description(std::size_t ambient, const std::vector<IntVector>& inequalities);

Cone cone_from_rays(const std::vector<IntVector>& rays, std::size_t ambient);
Cone intersect(const Cone& a, const Cone& b);
bool contains(const Cone& c, const IntVector& x, Containment mode = Containment::closed);
bool is_subcone(const Cone& a, const Cone& b);
IntVector relative_interior_point(const Cone& c);
std::vector<Cone> facets(const Cone& c);
std::vector<Cone> all_faces(const Cone& c);

// "cone[(1,0),(2,1)]", with "+lin[...]" appended when the lineality space is nontrivial.
std::string to_string(const Cone& c);

}  // namespace mds::geom
