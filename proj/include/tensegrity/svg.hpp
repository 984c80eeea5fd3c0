#pragma once

#include "tensegrity/stress.hpp"

#include <string>

namespace tensegrity {

/// Planar drawing: struts (w > 0) solid red, cables (w < 0) dashed blue,
/// zero-tension edges gray, vertices labeled v1..vn. The viewBox is the
/// bounding box grown by 10% on every side. Throws std::invalid_argument
/// ("render supports d=2 only") for other dimensions.
std::string render_svg(const Framework& f, const Stress& w);

}  // namespace tensegrity
