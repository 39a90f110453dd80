#pragma once

// Shared numerics for the terms 1/(r^z - 1). Internal to the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "admzeta/errors.hpp"

namespace admzeta::detail {

using Complex = std::complex<double>;

// e^w - 1 without cancellation for small |w|.
inline Complex expm1(Complex w) {
    const double a = w.real();
    const double b = w.imag();
    const double half_sin = std::sin(b / 2);
    return {std::expm1(a) * std::cos(b) - 2 * half_sin * half_sin, std::exp(a) * std::sin(b)};
}

// 1/(e^w - 1), evaluated from whichever side keeps exp() bounded.
inline Complex inverse_expm1(Complex w) {
    if (w.real() > 0) {
        return std::exp(-w) / -expm1(-w);
    }
    return 1.0 / expm1(w);
}

struct LatticeHit {
    std::int64_t index;
    double distance;
};

// Nearest point of {2*pi*i*k/log r} to z.
inline LatticeHit nearest_lattice_pole(Complex z, double log_r) {
    const double period = 2 * std::numbers::pi / log_r;
    const double k = std::nearbyint(z.imag() / period);
    return {static_cast<std::int64_t>(k), std::hypot(z.real(), z.imag() - k * period)};
}

inline void gate_pole(Complex z, std::uint64_t r, double log_r, double gate) {
    const auto hit = nearest_lattice_pole(z, log_r);
    if (hit.distance < gate) {
        std::ostringstream msg;
        msg << "pole of term r=" << r << " at lattice index k=" << hit.index << " (distance "
            << hit.distance << ")";
        throw PoleError(msg.str(), r, hit.index);
    }
}

inline int alternating_sign(std::uint64_t r) { return (r % 2 == 1) ? 1 : -1; }

}  // namespace admzeta::detail
