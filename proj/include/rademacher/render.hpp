#pragma once

#include <string>

#include "rademacher/word_paths.hpp"

namespace rademacher {

// Layout of an edge-path drawing. Lengths in data units are rationals so the
// emitted coordinates are exact before the final decimal rounding.
struct RenderOptions {
    Rational x_min = -1;
    Rational x_max = 1;
    Rational height_cap = 1;  // vertical edges to infinity stop at this height
    Rational stroke_width = 2;
    Rational font_size = 14;
    bool label_vertices = true;
    int width_px = 800;
    int height_px = 600;

    // Fits the x-range and canvas around the finite vertices of w.
    static RenderOptions fit(const EdgeWord& w);
    // Throws usage_error for an empty x-range or non-positive dimensions.
    void validate() const;
};

// Fixed-point decimal with `places` digits, ties rounded to even.
std::string format_fixed(const Rational& x, int places = 12);

// SVG 1.1 document of the based edge path of w: semicircles for finite
// edges, clipped vertical segments for edges at infinity, vertex labels.
// Byte-identical for identical input.
std::string render_svg(const EdgeWord& w, const RenderOptions& options);

}  // namespace rademacher
