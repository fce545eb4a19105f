#ifndef SKETCHMATCH_TESTS_SUPPORT_HPP
#define SKETCHMATCH_TESTS_SUPPORT_HPP

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "sketchmatch/bench.hpp"
#include "sketchmatch/raster.hpp"

namespace smtest {

using namespace sketchmatch;

/// Builds an image from ASCII art rows: '#' or '1' are black.
inline BinaryImage from_rows(std::initializer_list<std::string_view> rows) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.begin()->size());
    BinaryImage img(w, h);
    int y = 0;
    for (std::string_view row : rows) {
        for (int x = 0; x < w; ++x) {
            if (row[x] == '#' || row[x] == '1') img.set(x, y, Pixel::Black);
        }
        ++y;
    }
    return img;
}

/// Seeded random image; density itself is drawn from the stream.
inline BinaryImage random_image(SplitMix64& rng, int w, int h) {
    const double density = 0.15 + 0.6 * rng.next_unit();
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (rng.next_unit() < density) img.set(x, y, Pixel::Black);
        }
    }
    return img;
}

/// Guarantees at least one black pixel (for centroid-dependent paths).
inline BinaryImage with_foreground(BinaryImage img) {
    if (img.count_black() == 0) img.set(img.width() / 2, img.height() / 2, Pixel::Black);
    return img;
}

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(SKETCHMATCH_FIXTURE_DIR);
}

} // namespace smtest

#endif
