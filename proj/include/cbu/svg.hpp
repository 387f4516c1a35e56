#ifndef CBU_SVG_HPP
#define CBU_SVG_HPP

// Deterministic SVG output for 2-dimensional representations: axis 1 is
// horizontal, rationals are rendered exactly by scaling every coordinate with
// the common denominator, so identical inputs produce identical bytes.

#include <sstream>
#include <string>

#include "cbu/geometry.hpp"

namespace cbu {

inline std::string svg_representation(const BoxRepresentation& r) {
    if (r.d != 2)
        throw std::invalid_argument("svg_representation: only 2-dimensional representations");
    // common denominator of all coordinates (doubled so midpoints stay integral)
    BigInt scale = 2;
    for (auto& b : r.boxes)
        for (auto& iv : b.iv)
            for (auto& c : {iv.lo, iv.hi}) scale = lcm(scale, denominator(c));
    auto px = [&](const Rational& x) { return BigInt(numerator(x) * (scale / denominator(x))); };

    BigInt xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (auto& b : r.boxes) {
        BigInt xl = px(b.iv[0].lo), xr = px(b.iv[0].hi);
        BigInt yl = px(b.iv[1].lo), yh = px(b.iv[1].hi);
        if (first) {
            xmin = xl; xmax = xr; ymin = yl; ymax = yh;
            first = false;
        } else {
            xmin = std::min(xmin, xl); xmax = std::max(xmax, xr);
            ymin = std::min(ymin, yl); ymax = std::max(ymax, yh);
        }
    }
    BigInt pad = std::max<BigInt>(1, (xmax - xmin + ymax - ymin) / 40);
    static const char* fills[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                  "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
    std::ostringstream s;
    BigInt w = xmax - xmin + 2 * pad, h = ymax - ymin + 2 * pad;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
    // y axis flipped so larger coordinates are drawn higher
    auto X = [&](const BigInt& x) { return x - xmin + pad; };
    auto Y = [&](const BigInt& ytop) { return ymax - ytop + pad; };
    BigInt stroke = std::max<BigInt>(1, pad / 8);
    for (int v = 0; v < r.n(); ++v) {
        auto& b = r.boxes[v];
        BigInt xl = px(b.iv[0].lo), xr = px(b.iv[0].hi);
        BigInt yl = px(b.iv[1].lo), yh = px(b.iv[1].hi);
        s << "  <rect x=\"" << X(xl) << "\" y=\"" << Y(yh) << "\" width=\"" << (xr - xl)
          << "\" height=\"" << (yh - yl) << "\" fill=\"" << fills[v % 10]
          << "\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
        s << "  <text x=\"" << X((xl + xr) / 2) << "\" y=\"" << Y((yl + yh) / 2)
          << "\" font-size=\"" << std::max<BigInt>(1, pad) << "\" text-anchor=\"middle\">" << v
          << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace cbu

#endif  // CBU_SVG_HPP
