#include "rademacher/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rademacher/error.hpp"

namespace rademacher {

namespace {

Rational ceil_of(const Rational& x) { return Rational(-floor_of(-x)); }

Rational vertex_value(const Farey& f) { return make_rational(f.num(), f.den()); }

}  // namespace

RenderOptions RenderOptions::fit(const EdgeWord& w) {
    RenderOptions o;
    std::vector<Farey> pts = endpoints(w);
    Rational lo = 0, hi = 0;
    for (const Farey& f : pts) {
        if (f.is_infinity()) continue;
        Rational v = vertex_value(f);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    Rational span = hi - lo;
    if (span == 0) span = 1;
    o.x_min = lo - span / 8;
    o.x_max = hi + span / 8;
    o.height_cap = (o.x_max - o.x_min) * Rational(3, 5);
    Rational scale = Rational(o.width_px) / (o.x_max - o.x_min);
    Rational bands = 4 * o.font_size;  // labels below the axis and above the cap
    o.height_px = static_cast<int>(ceil_of(o.height_cap * scale + bands).get_num().get_si());
    return o;
}

void RenderOptions::validate() const {
    if (x_min >= x_max)
        fail(ErrorCode::usage_error, "render: x_min (" + to_string(x_min) + ") must be below x_max (" +
                                         to_string(x_max) + ")");
    if (height_cap <= 0 || stroke_width <= 0 || font_size <= 0 || width_px <= 0 || height_px <= 0)
        fail(ErrorCode::usage_error, "render: all dimensions must be positive");
}

std::string format_fixed(const Rational& x, int places) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Rational scaled = x * Rational(scale);
    Integer q = floor_of(scaled);
    Rational frac = scaled - Rational(q);
    int cmp_half = cmp(frac, Rational(1, 2));
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    bool negative = q < 0;
    std::string digits = Integer(abs(q)).get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
    return out;
}

std::string render_svg(const EdgeWord& w, const RenderOptions& o) {
    o.validate();
    const std::vector<Farey> pts = endpoints(w);
    const Rational scale = Rational(o.width_px) / (o.x_max - o.x_min);
    const Rational baseline = Rational(o.height_px) - 2 * o.font_size;
    const Rational top = baseline - o.height_cap * scale;
    auto px = [&](const Rational& x) { return format_fixed((x - o.x_min) * scale); };
    auto fx = [](const Rational& v) { return format_fixed(v); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width_px << "\" height=\""
        << o.height_px << "\" viewBox=\"0 0 " << o.width_px << ' ' << o.height_px << "\">\n"
        << "<title>based edge path " << w << "</title>\n"
        << "<line class=\"axis\" x1=\"" << fx(0) << "\" y1=\"" << fx(baseline) << "\" x2=\""
        << fx(Rational(o.width_px)) << "\" y2=\"" << fx(baseline) << "\" stroke=\"#999999\" stroke-width=\""
        << fx(o.stroke_width / 2) << "\"/>\n";

    const Rational* infinity_x = nullptr;
    Rational first_vertical_x;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Farey& u = pts[i];
        const Farey& v = pts[i + 1];
        svg << "<path class=\"edge\" id=\"e" << i << "\" d=\"";
        if (u.is_infinity() || v.is_infinity()) {
            Rational x = vertex_value(u.is_infinity() ? v : u);
            if (!infinity_x) {
                first_vertical_x = x;
                infinity_x = &first_vertical_x;
            }
            const Rational& y_from = u.is_infinity() ? top : baseline;
            const Rational& y_to = u.is_infinity() ? baseline : top;
            svg << "M " << px(x) << ' ' << fx(y_from) << " L " << px(x) << ' ' << fx(y_to);
        } else {
            Rational xu = vertex_value(u), xv = vertex_value(v);
            Rational radius = abs(xv - xu) * scale / 2;
            // Sweep flag 1 runs clockwise on screen: the upper arc when moving right.
            int sweep = xu < xv ? 1 : 0;
            svg << "M " << px(xu) << ' ' << fx(baseline) << " A " << fx(radius) << ' ' << fx(radius) << " 0 0 "
                << sweep << ' ' << px(xv) << ' ' << fx(baseline);
        }
        svg << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fx(o.stroke_width) << "\"/>\n";
    }

    if (o.label_vertices) {
        std::vector<Farey> seen;
        for (const Farey& f : pts) {
            if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
            seen.push_back(f);
            Rational x, y;
            if (f.is_infinity()) {
                x = infinity_x ? *infinity_x : Rational(0);
                y = top - o.font_size / 2;
            } else {
                x = vertex_value(f);
                y = baseline + o.font_size * Rational(3, 2);
            }
            svg << "<text x=\"" << px(x) << "\" y=\"" << fx(y) << "\" font-size=\"" << fx(o.font_size)
                << "\" font-family=\"serif\" text-anchor=\"middle\">" << f.to_string() << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rademacher
