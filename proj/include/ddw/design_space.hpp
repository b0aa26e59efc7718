#pragma once

#include <array>
#include <string>

namespace ddw {

inline constexpr int kNumDesignVars = 6;

/// The six double-delta wing design variables.
struct DesignVector {
    double droop_deg = 0.0;      // leading-edge camber deflection, LE-down positive
    double sweep_in_deg = 65.0;  // inboard leading-edge sweep
    double sweep_out_deg = 45.0; // outboard leading-edge sweep
    double sweep_te_deg = 10.0;  // outboard trailing-edge sweep
    double break_fraction = 0.4; // break station as fraction of semi-span
    double span = 1200.0;        // full span, inches

    std::array<double, kNumDesignVars> as_array() const {
        return {droop_deg, sweep_in_deg, sweep_out_deg, sweep_te_deg, break_fraction, span};
    }
    static DesignVector from_array(const std::array<double, kNumDesignVars>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }

    bool operator==(const DesignVector&) const = default;
};

struct VariableBounds {
    std::string name;
    double lower;
    double upper;
};

/// Per-variable bounds. Defaults are the production design space.
class DesignSpace {
public:
    DesignSpace();  // default bounds
    explicit DesignSpace(std::array<VariableBounds, kNumDesignVars> bounds);

    const VariableBounds& bound(int j) const { return bounds_[j]; }
    const std::array<VariableBounds, kNumDesignVars>& bounds() const { return bounds_; }

    bool contains(const DesignVector& dv) const;
    /// Throws std::invalid_argument naming the offending variable.
    void validate(const DesignVector& dv) const;

    DesignVector nominal() const;

private:
    std::array<VariableBounds, kNumDesignVars> bounds_;
};

}  // namespace ddw
