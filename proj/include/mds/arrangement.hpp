#pragma once

#include <vector>

#include "mds/cone.hpp"

namespace mds::geom {

// Central hyperplane arrangement restricted to a full-dimensional support cone.
struct Arrangement {
  Cone support;
  std::vector<IntVector> hyperplanes;  // normal vectors
};

// Full-dimensional cells of the arrangement inside the support, obtained by
// recursive splitting; sorted canonically.
std::vector<Cone> arrangement_cells(const Arrangement& a);

// True when the hyperplane with normal h meets the interior of the
// full-dimensional cone c.
bool cuts_interior(const Cone& c, const IntVector& h);

}  // namespace mds::geom
