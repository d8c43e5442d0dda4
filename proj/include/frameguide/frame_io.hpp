#pragma once

// Raw frame fixtures as Netpbm pixmaps: binary P6 or plain-text P3, maxval
// 255, row-major RGB. Comments ('#' to end of line) are allowed in the header
// as Netpbm permits.

#include <cctype>
#include <istream>
#include <ostream>
#include <string>

#include "frameguide/error.hpp"
#include "frameguide/luminance.hpp"

namespace frameguide {

namespace detail {

inline int read_ppm_int(std::istream& in) {
    int c = in.peek();
    while (c != EOF) {
        if (std::isspace(c)) {
            in.get();
        } else if (c == '#') {
            std::string skip;
            std::getline(in, skip);
        } else {
            break;
        }
        c = in.peek();
    }
    int v = -1;
    if (!(in >> v)) throw InvalidFrame("truncated pixmap header or data");
    return v;
}

}  // namespace detail

inline LumaFrame read_ppm(std::istream& in) {
    char magic[2] = {0, 0};
    if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '3' && magic[1] != '6')) {
        throw InvalidFrame("not a P3/P6 pixmap");
    }
    const bool binary = magic[1] == '6';
    LumaFrame f;
    f.width = detail::read_ppm_int(in);
    f.height = detail::read_ppm_int(in);
    const int maxval = detail::read_ppm_int(in);
    if (f.width <= 0 || f.height <= 0) throw InvalidFrame("pixmap has no pixels");
    if (maxval != 255) throw InvalidFrame("only maxval 255 pixmaps are supported");
    const auto count = static_cast<std::size_t>(f.width) * static_cast<std::size_t>(f.height);
    f.pixels.resize(count);
    if (binary) {
        in.get();  // single whitespace after maxval
        for (auto& p : f.pixels) {
            char rgb[3];
            if (!in.read(rgb, 3)) throw InvalidFrame("truncated pixmap data");
            p = {static_cast<std::uint8_t>(rgb[0]), static_cast<std::uint8_t>(rgb[1]),
                 static_cast<std::uint8_t>(rgb[2])};
        }
    } else {
        for (auto& p : f.pixels) {
            int ch[3];
            for (int& c : ch) {
                c = detail::read_ppm_int(in);
                if (c < 0 || c > 255) throw InvalidFrame("channel value out of range");
            }
            p = {static_cast<std::uint8_t>(ch[0]), static_cast<std::uint8_t>(ch[1]),
                 static_cast<std::uint8_t>(ch[2])};
        }
    }
    return f;
}

inline void write_ppm(std::ostream& out, const LumaFrame& f) {
    out << "P6\n" << f.width << ' ' << f.height << "\n255\n";
    for (const auto& p : f.pixels) {
        const char rgb[3] = {static_cast<char>(p.r), static_cast<char>(p.g), static_cast<char>(p.b)};
        out.write(rgb, 3);
    }
}

}  // namespace frameguide
