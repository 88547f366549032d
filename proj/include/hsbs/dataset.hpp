#pragma once

#include <cstdint>
#include <string>

#include "hsbs/types.hpp"

namespace hsbs::dataset {

// Cube container: a JSON sidecar header next to a raw band-sequential (BSQ)
// little-endian binary.
//
//   <name>.hdr.json:
//     {"width":int, "height":int, "bands":int, "dtype":"f32"|"u16",
//      "interleave":"bsq", "byte_order":"little", "raw":"<relative path>"}
//
// Integer samples are converted to real without scaling.
hyper_cube load_cube(const std::string& header_path);

// Writes <stem>.hdr.json + <stem>.raw next to each other. dtype "u16"
// requires every value to be an integer in [0, 65535].
void save_cube(const hyper_cube& cube, const std::string& header_path,
               const std::string& dtype = "f32");

// Label grid from PGM (P2/P5) or CSV of non-negative integers; the format is
// sniffed from the content. No class-contiguity check.
label_grid load_label_grid(const std::string& path);

// As load_label_grid, plus K = max label and the ground-truth invariants
// (every class 1..K non-empty).
ground_truth load_ground_truth(const std::string& path);

void save_ground_truth_pgm(const ground_truth& gt, const std::string& path);

struct synth_spec {
    int width = 32;
    int height = 32;
    int n_classes = 2;
    int n_informative = 1;
    int n_noise = 1;
    bool texture_mode = false;  // false: class-separated band means; true:
                                // equal means, class-coded periodic patterns
    double noise_sigma = 0.1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct synth_result {
    hyper_cube cube;
    ground_truth gt;
    std::vector<int> informative_bands;  // ascending band indices
};

// Deterministic labeled cube: rectangular class regions; informative bands
// carry class signal (spectral or textural per texture_mode), noise bands are
// i.i.d. noise independent of the labels.
synth_result synth_dataset(const synth_spec& spec);

// Stratified split: per class, round(fraction * n) half-up pixels go to
// train, clamped so both sides stay non-empty when the class has >= 2 pixels.
// A single-pixel class goes entirely to train with a recorded warning.
split_mask split_train_test(const ground_truth& gt, double fraction, std::uint64_t seed);

}  // namespace hsbs::dataset
