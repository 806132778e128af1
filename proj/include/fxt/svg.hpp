#pragma once

#include <span>
#include <string>

namespace fxt {

// Single-series line plot on a fixed 800x400 canvas (SVG 1.1). Purely for
// eyeballing CSV series; nothing downstream depends on it.
void write_svg_plot(const std::string& path, std::span<const double> values,
                    const std::string& title);

}  // namespace fxt
