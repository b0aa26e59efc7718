#include "ddw/saltelli.hpp"

#include "ddw/sobol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>

namespace ddw {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void append_scaled(SampleSet& set, const DesignSpace& space) {
    set.scaled_samples.clear();
    set.call_signs.clear();
    for (const auto& u : set.unit_samples) {
        DesignVector dv = scale_to_bounds(u, space);
        set.call_signs.push_back(call_sign(dv));
        set.scaled_samples.push_back(dv);
    }
}

}  // namespace

SaltelliPlan make_saltelli_plan(int base_count, int skip) {
    if (base_count < 1) throw std::invalid_argument("saltelli: base count must be >= 1");
    if (skip < 0) throw std::invalid_argument("saltelli: negative skip");

    SaltelliPlan plan;
    plan.base_count = base_count;
    plan.skip = skip;
    plan.base = sobol_points(static_cast<std::size_t>(base_count + skip), 2 * kNumDesignVars);

    plan.a.resize(base_count);
    plan.b.resize(base_count);
    for (int i = 0; i < base_count; ++i) {
        const auto& row = plan.base[static_cast<std::size_t>(i + skip)];
        for (int j = 0; j < kNumDesignVars; ++j) {
            plan.a[i][j] = row[j];
            plan.b[i][j] = row[kNumDesignVars + j];
        }
    }
    for (int k = 0; k < kNumDesignVars; ++k) {
        plan.ab[k] = plan.a;
        for (int i = 0; i < base_count; ++i) plan.ab[k][i][k] = plan.b[i][k];
    }
    return plan;
}

SampleSet saltelli_sample(int base_count, const DesignSpace& space, int skip) {
    const SaltelliPlan plan = make_saltelli_plan(base_count, skip);

    SampleSet set;
    if (!is_power_of_two(base_count))
        set.warnings.push_back("base count is not a power of two; Sobol balance degraded");

    set.unit_samples.insert(set.unit_samples.end(), plan.a.begin(), plan.a.end());
    for (int k = 0; k < kNumDesignVars; ++k)
        set.unit_samples.insert(set.unit_samples.end(), plan.ab[k].begin(), plan.ab[k].end());
    set.unit_samples.insert(set.unit_samples.end(), plan.b.begin(), plan.b.end());

    append_scaled(set, space);
    return set;
}

SampleSet saltelli_level(int level, const DesignSpace& space, int skip) {
    if (level < 1 || level > 30) throw std::invalid_argument("saltelli: level out of range");
    SampleSet set = saltelli_sample(1 << (level - 1), space, skip);
    set.level = level;
    return set;
}

DesignVector scale_to_bounds(const UnitRow& unit_row, const DesignSpace& space) {
    std::array<double, kNumDesignVars> x{};
    for (int j = 0; j < kNumDesignVars; ++j) {
        const double u = unit_row[j];
        if (u < 0.0 || u >= 1.0)
            throw std::invalid_argument("scale_to_bounds: component outside [0, 1)");
        const auto& b = space.bound(j);
        x[j] = b.lower + u * (b.upper - b.lower);
    }
    return DesignVector::from_array(x);
}

SampleSet lhs_holdout(int count, const DesignSpace& space, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("lhs_holdout: count must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);

    SampleSet set;
    set.level = 0;
    set.unit_samples.assign(count, UnitRow{});
    for (int j = 0; j < kNumDesignVars; ++j) {
        std::vector<int> perm(count);
        for (int i = 0; i < count; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < count; ++i)
            set.unit_samples[i][j] = (perm[i] + jitter(rng)) / count;
    }
    append_scaled(set, space);
    return set;
}

std::string call_sign(const DesignVector& dv) {
    // FNV-1a over the full-precision decimal rendering, then base-36
    char buf[64];
    std::uint64_t h = 1469598103934665603ull;
    for (double v : dv.as_array()) {
        const int len = std::snprintf(buf, sizeof buf, "%.17g,", v);
        for (int i = 0; i < len; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    static const char alphabet[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::string sign(10, '0');
    for (int i = 9; i >= 0; --i) {
        sign[i] = alphabet[h % 36];
        h /= 36;
    }
    return sign;
}

NnDistance avg_nn_distance(const std::vector<UnitRow>& unit_samples) {
    const auto n = unit_samples.size();
    if (n < 2) throw std::invalid_argument("avg_nn_distance: need at least 2 samples");

    NnDistance result;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double d2 = 0.0;
            for (int k = 0; k < kNumDesignVars; ++k) {
                const double d = unit_samples[i][k] - unit_samples[j][k];
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        if (best == 0.0) result.has_duplicates = true;
        total += std::sqrt(best);
    }
    result.h = total / static_cast<double>(n);
    return result;
}

void write_samples_csv(const SampleSet& set, const std::string& path, bool include_unit) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open sample CSV for writing: " + path);
    const DesignSpace names;  // variable names only
    out << "call_sign";
    for (int j = 0; j < kNumDesignVars; ++j) out << ',' << names.bound(j).name;
    if (include_unit)
        for (int j = 0; j < kNumDesignVars; ++j) out << ",u_" << names.bound(j).name;
    out << ",level\n";
    char buf[64];
    for (std::size_t i = 0; i < set.size(); ++i) {
        out << set.call_signs[i];
        for (double v : set.scaled_samples[i].as_array()) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ',' << buf;
        }
        if (include_unit)
            for (double v : set.unit_samples[i]) {
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out << ',' << buf;
            }
        out << ',' << set.level << '\n';
    }
}

}  // namespace ddw
