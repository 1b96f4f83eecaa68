#pragma once

#include <string>

#include "tpk/tpd.hpp"

namespace tpk {

enum class RenderFormat { Ascii, Svg };

/// Three tangle panels side by side, boundary points numbered along the
/// top and caps at the bottom. Colored strands show their color digit in
/// ascii and one of three stroke colors in svg.
std::string render(const TpdDocument& doc, RenderFormat format);
std::string render_ascii(const TpdDocument& doc);
std::string render_svg(const TpdDocument& doc);

} // namespace tpk
