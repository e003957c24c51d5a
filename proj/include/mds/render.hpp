#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mds/engine.hpp"

namespace mds::render {

// Self-contained 800x800 SVG of the GIT fan. Rank 2 draws sectors of the
// unit circle; rank 3 draws the section of Eff by the plane u.x = 1, where u
// is the sum of the facet normals of Eff. The ample chamber is black,
// chambers sharing an SBL class with another chamber are gray, walls are
// dashed and generator degrees are labeled. Throws PreconditionError for
// rank > 3 or a non-pointed rank-3 effective cone.
std::string render_section(const cox::CoxPresentation& p, const engine::Analysis& a,
                           std::optional<std::size_t> ample = std::nullopt);

}  // namespace mds::render
