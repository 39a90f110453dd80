#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include "admzeta/admissible.hpp"
#include "admzeta/bernoulli.hpp"

namespace admzeta {

using Complex = std::complex<double>;

// Evaluations closer than this to a term pole raise PoleError.
inline constexpr double kPoleGate = 1e-6;
// |1 - 2^(1-z)| below this raises SingularPrefactorError.
inline constexpr double kPrefactorGate = 1e-6;

enum class RepresentationKind {
    Direct,           // 1 + sum 1/(r^z - 1)
    Coth,             // (2 - l)/2 + 1/2 sum coth(z log r / 2)
    Alternating,      // (1 + sum (-1)^(r-1)/(r^z - 1)) / (1 - 2^(1-z))
    AlternatingCoth,  // (c + 1/2 sum (-1)^(r-1) coth(z log r / 2)) / (1 - 2^(1-z))
    BernoulliSeries,  // 1 + sum_{m=-1}^{M} z^m B_{m+1} P_m / (m+1)!
};

std::string_view to_string(RepresentationKind kind);
std::optional<RepresentationKind> parse_representation(std::string_view name);

struct EvalResult {
    Complex value;
    std::uint64_t truncation;
    std::size_t term_count;
    // Upper bound on |zeta(z) - value|; present only when Re(z) > 1.
    std::optional<double> tail_bound;
};

// Throws InputError for non-finite components.
void require_finite(Complex z);

EvalResult zeta_direct_partial(Complex z, const AdmissibleSet& set);
EvalResult zeta_direct_partial(Complex z, std::uint64_t n);

EvalResult zeta_coth_partial(Complex z, const AdmissibleSet& set);
EvalResult zeta_coth_partial(Complex z, std::uint64_t n);

// Requires Re(z) > 0 and 1 - 2^(1-z) away from zero.
EvalResult zeta_alt_partial(Complex z, const AdmissibleSet& set);
EvalResult zeta_alt_partial(Complex z, std::uint64_t n);

EvalResult zeta_alt_coth_partial(Complex z, const AdmissibleSet& set);
EvalResult zeta_alt_coth_partial(Complex z, std::uint64_t n);

// Additive constant of the alternating coth form: 1 - (#odd - #even)/2 over the set.
// It reduces to 1 for an even term count and 1/2 for an odd one while 3 <= n <= 16,
// and departs from that parity rule elsewhere (n = 2, and n >= 17 at times).
double alternating_coth_constant(const AdmissibleSet& set);
// The parity-of-l rule: 1 if l is even, 1/2 if l is odd.
double parity_branch_constant(std::size_t term_count);

// Truncated Laurent form. Requires |z| log(r_max) < 2 pi and order + 1 <= table max.
EvalResult zeta_bernoulli_partial(Complex z, const AdmissibleSet& set, unsigned order,
                                  const BernoulliTable& table = default_bernoulli_table());
EvalResult zeta_bernoulli_partial(Complex z, std::uint64_t n, unsigned order);

// Radius of the disk in which the Bernoulli form converges for the given set.
double bernoulli_convergence_radius(const AdmissibleSet& set);

// Generic dispatch; `order` is used only by BernoulliSeries.
EvalResult evaluate(RepresentationKind kind, Complex z, const AdmissibleSet& set,
                    unsigned order = 40);

// n^(1 - sigma) / (sigma - 1) >= sum_{m > n} m^-sigma. Throws DomainError for sigma <= 1.
double remainder_bound(std::uint64_t n, double sigma);

// Exact closed form (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!).
double euler_even_zeta(unsigned m);

enum class SpecialKind { AnyM, EvenTwoM, OddTwoMPlusOne };

std::optional<SpecialKind> parse_special_kind(std::string_view name);

struct SpecialValue {
    unsigned argument;  // m, 2m or 2m+1
    EvalResult eval;
    std::optional<double> euler_value;  // even arguments only
    std::optional<double> deviation;    // |eval.value - euler_value|
};

SpecialValue special_value(SpecialKind kind, unsigned m, std::uint64_t n);

// Which numerator is differentiated: 1 + sum 1/(r^z - 1), or 1 + sum (-1)^(r-1)/(r^z - 1).
enum class DerivativeKind { Direct, AlternatingNumerator };

Complex derivative_partial(DerivativeKind kind, Complex z, const AdmissibleSet& set);
Complex derivative_partial(DerivativeKind kind, Complex z, std::uint64_t n);

// min over admissible r <= n and k in Z of |z - 2 pi i k / log r|.
double pole_distance(Complex z, const AdmissibleSet& set);
double pole_distance(Complex z, std::uint64_t n);

}  // namespace admzeta
