#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsbs {

enum class errc {
    invalid_argument = 1,
    io = 2,
    format = 3,
    numeric = 4,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

template <typename T>
struct grid {
    int width = 0;
    int height = 0;
    std::vector<T> v;

    grid() = default;
    grid(int w, int h, T fill = T{}) : width(w), height(h), v(static_cast<std::size_t>(w) * h, fill) {}

    T& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return v.size(); }
    bool same_shape(const grid& o) const { return width == o.width && height == o.height; }
};

using real_grid = grid<double>;
using label_grid = grid<int>;
using mask_grid = grid<std::uint8_t>;

// Reflectance cube, band-major: band b occupies values[b*W*H .. (b+1)*W*H),
// row-major within the band.
struct hyper_cube {
    int width = 0;
    int height = 0;
    int n_bands = 0;
    std::vector<double> values;

    std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }

    std::span<const double> band(int b) const {
        return {values.data() + static_cast<std::size_t>(b) * pixels(), pixels()};
    }
    std::span<double> band(int b) {
        return {values.data() + static_cast<std::size_t>(b) * pixels(), pixels()};
    }

    real_grid band_grid(int b) const {
        real_grid g(width, height);
        auto s = band(b);
        g.v.assign(s.begin(), s.end());
        return g;
    }

    void validate() const {
        if (width < 1 || height < 1 || n_bands < 1)
            fail(errc::invalid_argument, "cube dimensions must be >= 1");
        if (values.size() != pixels() * static_cast<std::size_t>(n_bands))
            fail(errc::invalid_argument, "cube value buffer does not match dimensions");
        for (double x : values)
            if (!std::isfinite(x)) fail(errc::numeric, "cube contains a non-finite value");
    }
};

// Per-pixel class labels; 0 = unlabeled background, classes 1..n_classes.
struct ground_truth {
    label_grid labels;
    int n_classes = 0;

    void validate() const {
        if (labels.width < 1 || labels.height < 1)
            fail(errc::invalid_argument, "ground truth dimensions must be >= 1");
        std::vector<bool> seen(static_cast<std::size_t>(n_classes) + 1, false);
        for (int l : labels.v) {
            if (l < 0 || l > n_classes)
                fail(errc::invalid_argument, "label out of range 0.." + std::to_string(n_classes));
            seen[static_cast<std::size_t>(l)] = true;
        }
        for (int c = 1; c <= n_classes; ++c)
            if (!seen[static_cast<std::size_t>(c)])
                fail(errc::invalid_argument, "class " + std::to_string(c) + " has no labeled pixels");
    }

    std::size_t count_label(int c) const {
        std::size_t n = 0;
        for (int l : labels.v) n += (l == c);
        return n;
    }
};

// Train/test partition of the labeled pixels. Unlabeled pixels belong to
// neither side.
struct split_mask {
    mask_grid train;
    mask_grid test;
    std::vector<std::string> warnings;
};

}  // namespace hsbs
