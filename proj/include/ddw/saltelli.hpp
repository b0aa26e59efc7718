#pragma once

#include "ddw/design_space.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ddw {

using UnitRow = std::array<double, kNumDesignVars>;

inline constexpr int kDefaultSkip = 16;
inline constexpr int kHoldoutCount = 16;
inline constexpr std::uint64_t kDefaultHoldoutSeed = 2025;

/// Saltelli construction pieces: base Sobol matrix and the A/B/AB blocks.
struct SaltelliPlan {
    int base_count = 0;  // P
    int dims = kNumDesignVars;
    int skip = kDefaultSkip;
    std::vector<std::vector<double>> base;  // (P + skip) x 2*dims
    std::vector<UnitRow> a, b;
    std::array<std::vector<UnitRow>, kNumDesignVars> ab;
};

/// A generated sample set at one dataset level (or the holdout).
struct SampleSet {
    int level = 0;  // 1..6 for Saltelli levels, 0 for the LHS holdout
    std::vector<UnitRow> unit_samples;
    std::vector<DesignVector> scaled_samples;
    std::vector<std::string> call_signs;
    std::vector<std::string> warnings;

    std::size_t size() const { return unit_samples.size(); }
};

SaltelliPlan make_saltelli_plan(int base_count, int skip = kDefaultSkip);

/// Full Saltelli sample: rows stacked [A; AB1; ...; AB6; B], scaled to the
/// design space. Non-power-of-two P is allowed with a warning.
SampleSet saltelli_sample(int base_count, const DesignSpace& space, int skip = kDefaultSkip);

/// Saltelli level (Table-style): level L uses P = 2^(L-1).
SampleSet saltelli_level(int level, const DesignSpace& space, int skip = kDefaultSkip);

/// Per-column affine map onto the design-space bounds. Components must lie
/// in [0, 1).
DesignVector scale_to_bounds(const UnitRow& unit_row, const DesignSpace& space);

/// Seeded Latin hypercube holdout: one sample per stratum in each column,
/// uniform jitter inside the stratum.
SampleSet lhs_holdout(int count, const DesignSpace& space, std::uint64_t seed);

/// Deterministic 10-character alphanumeric identifier from the scaled
/// design vector.
std::string call_sign(const DesignVector& dv);

struct NnDistance {
    double h = 0.0;
    bool has_duplicates = false;
};

/// Mean unit-hypercube Euclidean distance from each row to its nearest
/// other row. Duplicate rows contribute zero and raise the flag.
NnDistance avg_nn_distance(const std::vector<UnitRow>& unit_samples);

/// CSV export: call_sign, the six design variables, level; optionally the
/// unit-cube coordinates alongside.
void write_samples_csv(const SampleSet& set, const std::string& path,
                       bool include_unit = false);

}  // namespace ddw
