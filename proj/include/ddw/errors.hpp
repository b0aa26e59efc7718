#pragma once

#include <stdexcept>
#include <string>

namespace ddw {

/// Invalid configuration (bad bounds, unresolvable reference, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A design vector whose planform closure yields negative chords.
class infeasible_design_error : public std::runtime_error {
public:
    infeasible_design_error(const std::string& what, std::string call_sign = {})
        : std::runtime_error(what), call_sign(std::move(call_sign)) {}
    std::string call_sign;
};

/// Linear-system or morph solver failure.
class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& what, std::string call_sign = {})
        : std::runtime_error(what), call_sign(std::move(call_sign)) {}
    std::string call_sign;
};

}  // namespace ddw
