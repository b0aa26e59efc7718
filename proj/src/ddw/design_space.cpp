#include "ddw/design_space.hpp"

#include <stdexcept>

namespace ddw {

DesignSpace::DesignSpace()
    : bounds_{{{"droop_deg", -8.0, 7.0},
               {"sweep_in_deg", 47.0, 67.0},
               {"sweep_out_deg", 35.0, 60.0},
               {"sweep_te_deg", 0.0, 25.0},
               {"break_fraction", 0.32, 0.47},
               {"span", 1100.0, 1300.0}}} {}

DesignSpace::DesignSpace(std::array<VariableBounds, kNumDesignVars> bounds)
    : bounds_(std::move(bounds)) {
    for (const auto& b : bounds_)
        if (!(b.lower < b.upper))
            throw std::invalid_argument("DesignSpace: lower >= upper for " + b.name);
}

bool DesignSpace::contains(const DesignVector& dv) const {
    const auto x = dv.as_array();
    for (int j = 0; j < kNumDesignVars; ++j)
        if (x[j] < bounds_[j].lower || x[j] > bounds_[j].upper) return false;
    return true;
}

void DesignSpace::validate(const DesignVector& dv) const {
    const auto x = dv.as_array();
    for (int j = 0; j < kNumDesignVars; ++j)
        if (x[j] < bounds_[j].lower || x[j] > bounds_[j].upper)
            throw std::invalid_argument("design variable out of bounds: " + bounds_[j].name);
    if (!(dv.break_fraction > 0.0 && dv.break_fraction < 1.0))
        throw std::invalid_argument("design variable out of bounds: break_fraction");
    if (!(dv.span > 0.0))
        throw std::invalid_argument("design variable out of bounds: span");
}

DesignVector DesignSpace::nominal() const { return DesignVector{}; }

}  // namespace ddw
