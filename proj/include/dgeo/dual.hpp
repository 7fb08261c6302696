#pragma once

#include <cmath>

namespace dgeo {

// First-order dual number: value + one directional derivative. Metric
// component families are written as templates over the scalar type, so a
// single pass with Dual inputs yields the exact directional derivative of
// every component (forward-mode differentiation).
struct Dual {
    double v = 0.0; // value
    double d = 0.0; // derivative along the seeded direction

    Dual() = default;
    Dual(double value) : v(value) {}
    Dual(double value, double deriv) : v(value), d(deriv) {}
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) {
    const double inv = 1.0 / b.v;
    return {a.v * inv, (a.d - a.v * b.d * inv) * inv};
}

inline Dual& operator+=(Dual& a, Dual b) { return a = a + b; }
inline Dual& operator-=(Dual& a, Dual b) { return a = a - b; }
inline Dual& operator*=(Dual& a, Dual b) { return a = a * b; }
inline Dual& operator/=(Dual& a, Dual b) { return a = a / b; }

inline Dual exp(Dual a) {
    const double e = std::exp(a.v);
    return {e, a.d * e};
}
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }
inline Dual sqrt(Dual a) {
    const double s = std::sqrt(a.v);
    return {s, 0.5 * a.d / s};
}
inline Dual sin(Dual a) { return {std::sin(a.v), a.d * std::cos(a.v)}; }
inline Dual cos(Dual a) { return {std::cos(a.v), -a.d * std::sin(a.v)}; }

inline Dual pow(Dual a, int k) {
    if (k == 0) return {1.0, 0.0};
    const double p = std::pow(a.v, k - 1);
    return {p * a.v, k * p * a.d};
}

// Plain doubles pass through the same templated code paths.
inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.v; }

} // namespace dgeo
