#pragma once

#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dna {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Numeric tolerances shared by every module.
///
/// `eps_point` and `eps_area` are relative: they are multiplied by the
/// coordinate span of the inputs they are applied to. `eps_collinear` is an
/// absolute angle in radians.
struct Tolerances {
    double eps_point = 1e-9;
    double eps_collinear = 1e-12;
    double eps_area = 1e-14;
    double hemisphere_margin = 1e-6;
};

namespace detail {

inline Tolerances load_tolerances() {
    Tolerances tol;
    // Testing hook only: DNA_EPS replaces eps_point.
    if (const char* env = std::getenv("DNA_EPS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && v < 1e-2) {
            tol.eps_point = v;
        }
    }
    return tol;
}

} // namespace detail

inline const Tolerances& tolerances() {
    static const Tolerances tol = detail::load_tolerances();
    return tol;
}

/// Input is geometrically degenerate (coincident points, zero length, collinear hull...).
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a structural requirement (ordering, convexity, schema).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dna
