#pragma once

#include "hsbs/types.hpp"

namespace hsbs::glcm {

// Gray-level co-occurrence matrices and the four texture features computed
// from them: contrast, correlation, energy, homogeneity.
//
// Direction convention (y grows downward, d = pixel distance):
//   0°   -> offset (+d,  0)
//   45°  -> offset (+d, -d)
//   90°  -> offset ( 0, -d)
//   135° -> offset (-d, -d)

enum direction : unsigned {
    dir_0 = 1u,
    dir_45 = 2u,
    dir_90 = 4u,
    dir_135 = 8u,
    dir_all = dir_0 | dir_45 | dir_90 | dir_135,
};

struct config {
    int levels = 16;
    int distance = 1;
    unsigned directions = dir_all;
    bool symmetric = false;
    bool per_direction = false;  // false: average features over directions

    void validate() const;
};

struct quantized_band {
    int width = 0;
    int height = 0;
    int levels = 0;
    std::vector<int> q;
};

struct cooccurrence {
    int levels = 0;
    std::vector<std::int64_t> counts;  // levels x levels, row-major (i, j)
    std::vector<double> probs;         // counts / total; empty matrix when total == 0
    std::int64_t total = 0;
};

// Min-max scaling to `levels` gray levels with round-half-up; a constant
// band maps to level 0 everywhere.
quantized_band quantize_band(const real_grid& band, int levels);

// Identity quantization of a label grid: level = label, levels = n_classes+1.
quantized_band quantize_labels(const label_grid& labels, int n_classes);

// (dx, dy) for one direction bit at the given distance.
std::pair<int, int> direction_offset(unsigned dir_bit, int distance);

// Pair counts at the given offset; pairs whose neighbor falls outside the
// grid are skipped. Symmetric mode also counts each pair reversed.
cooccurrence compute(const quantized_band& qb, int dx, int dy, bool symmetric);

double contrast(const cooccurrence& g);
double correlation(const cooccurrence& g);  // NaN when a marginal has zero spread
double energy(const cooccurrence& g);
double homogeneity(const cooccurrence& g);

struct feature_row {
    int band = 0;           // -1 marks the ground-truth map row
    int direction_deg = -1; // -1 when averaged over directions
    double contrast = 0.0;
    double correlation = 0.0;
    double energy = 0.0;
    double homogeneity = 0.0;
};

struct feature_table {
    bool per_direction = false;
    std::vector<feature_row> rows;
};

// Per-band texture features: quantize, one GLCM per configured direction,
// then aggregate per cfg. In averaged mode a direction with no valid pairs is
// skipped, and NaN correlations are excluded unless every direction is NaN.
feature_table texture_features(const hyper_cube& cube, const config& cfg);

// Feature rows for the ground-truth map itself (identity quantization with
// levels = n_classes + 1); rows carry band = -1.
feature_table ground_truth_features(const ground_truth& gt, const config& cfg);

double feature_value(const feature_row& row, int feature_index);  // 0..3 as in feature_row order

}  // namespace hsbs::glcm
