#pragma once

#include "hsbs/types.hpp"

namespace hsbs::mi {

// Histogram (plug-in) entropy and mutual information, log base 2.

struct joint_histogram {
    int n_a = 0;
    int n_b = 0;
    std::vector<std::int64_t> counts;  // n_a x n_b, row-major
    std::int64_t total = 0;

    std::vector<std::int64_t> row_sums() const;
    std::vector<std::int64_t> col_sums() const;
};

enum class mask_mode {
    all_pixels,
    labeled_only,
};

// counts[x][y] = #{p : a[p]=x, b[p]=y, mask[p]}; bins sized by max value + 1.
joint_histogram make_joint(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<std::uint8_t>* mask = nullptr);

// -sum p log2 p over cells with p > 0.
double entropy_bits(const std::vector<std::int64_t>& counts, std::int64_t total);
double joint_entropy_bits(const joint_histogram& h);

// I(A,B) = H(A) + H(B) - H(A,B); tiny float negatives (>= -1e-12) clamp to 0.
double mutual_information(const joint_histogram& h);
double mutual_information(const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<std::uint8_t>* mask = nullptr);

// MI between the ground-truth map and a band quantized to `levels` gray
// levels, in bits. labeled_only restricts to pixels with label > 0.
double band_mi(const ground_truth& gt, const real_grid& band, int levels, mask_mode mode);

}  // namespace hsbs::mi
