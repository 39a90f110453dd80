#pragma once

#include <complex>

namespace admzeta {

using Complex = std::complex<double>;

// Independent zeta evaluator for Re(z) > 0, z != 1.
//
// zeta(z) = eta(z) / (1 - 2^(1-z)) where eta(z) = sum_{k>=1} (-1)^(k-1) k^-z is summed with
// the Cohen-Rodriguez Villegas-Zagier acceleration (their Algorithm 1). With n terms the
// truncation error is bounded by
//     3 (1 + 2|t|) e^(pi |t| / 2) / ((3 + sqrt 8)^n |Gamma(z)|),   t = Im z,
// and since |Gamma(z)| decays like e^(-pi |t| / 2) the default order is chosen so that
// (3 + sqrt 8)^-n e^(pi |t|) (1 + 2|t|) stays below 1e-17. The accelerated weights sum to
// at most 1, so rounding adds only O(n eps) to eta.
//
// Throws PoleError at z = 1, DomainError for Re(z) <= 0 or |Im z| beyond kReferenceMaxImag,
// SingularPrefactorError at the other zeros of 1 - 2^(1-z).
Complex reference_zeta(Complex z);

// Same with an explicit acceleration order (number of accelerated terms).
Complex reference_zeta(Complex z, int order);

// Accelerated alternating series alone.
Complex reference_eta(Complex z, int order);

int reference_default_order(Complex z);

inline constexpr double kReferenceMaxImag = 200.0;
inline constexpr int kReferenceMaxOrder = 380;

// Deviation of the evaluator from closed forms: zeta(2) = pi^2/6, zeta(4) = pi^4/90,
// zeta(6) = pi^6/945. reference_zeta refuses to run if any exceeds 1e-12.
double reference_self_check_error();

}  // namespace admzeta
