#include "admzeta/representations.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "admzeta/errors.hpp"
#include "term_kernel.hpp"

namespace admzeta {

namespace {

constexpr double kLog2 = std::numbers::ln2;

std::optional<double> tail_for(Complex z, std::uint64_t n) {
    if (z.real() > 1) return remainder_bound(n, z.real());
    return std::nullopt;
}

// 1 - 2^(1-z); throws when it is too close to zero to divide by.
Complex eta_prefactor(Complex z) {
    if (!(z.real() > 0)) {
        std::ostringstream msg;
        msg << "alternating form requires Re(z) > 0, got Re(z) = " << z.real();
        throw DomainError(msg.str());
    }
    const Complex q = -detail::expm1((1.0 - z) * kLog2);
    if (std::abs(q) < kPrefactorGate) {
        const double k = std::nearbyint(z.imag() * kLog2 / (2 * std::numbers::pi));
        std::ostringstream msg;
        msg << "1 - 2^(1-z) vanishes near z = 1 + 2 pi i k/log 2 with k = " << k;
        throw SingularPrefactorError(msg.str());
    }
    return q;
}

// sum_r sign(r)/(r^z - 1) and, optionally, its z-derivative.
struct TermSums {
    Complex value{0.0, 0.0};
    Complex derivative{0.0, 0.0};
};

TermSums term_sums(Complex z, const AdmissibleSet& set, bool alternating, bool want_derivative) {
    TermSums sums;
    for (const std::uint64_t r : set.members) {
        const double log_r = std::log(static_cast<double>(r));
        detail::gate_pole(z, r, log_r, kPoleGate);
        const Complex t = detail::inverse_expm1(z * log_r);
        const double s = alternating ? detail::alternating_sign(r) : 1.0;
        sums.value += s * t;
        if (want_derivative) sums.derivative -= s * log_r * t * (1.0 + t);
    }
    return sums;
}

Complex coth_sum(Complex z, const AdmissibleSet& set, bool alternating) {
    Complex acc{0.0, 0.0};
    for (const std::uint64_t r : set.members) {
        const double log_r = std::log(static_cast<double>(r));
        detail::gate_pole(z, r, log_r, kPoleGate);
        const Complex coth = 1.0 / std::tanh(0.5 * z * log_r);
        acc += (alternating ? detail::alternating_sign(r) : 1.0) * coth;
    }
    return acc;
}

void require_nonempty(const AdmissibleSet& set) {
    if (set.limit < 2 || set.members.empty()) throw InputError("truncation n must be >= 2");
}

}  // namespace

std::string_view to_string(RepresentationKind kind) {
    switch (kind) {
        case RepresentationKind::Direct: return "direct";
        case RepresentationKind::Coth: return "coth";
        case RepresentationKind::Alternating: return "alt";
        case RepresentationKind::AlternatingCoth: return "alt-coth";
        case RepresentationKind::BernoulliSeries: return "bernoulli";
    }
    return "unknown";
}

std::optional<RepresentationKind> parse_representation(std::string_view name) {
    for (auto kind : {RepresentationKind::Direct, RepresentationKind::Coth,
                      RepresentationKind::Alternating, RepresentationKind::AlternatingCoth,
                      RepresentationKind::BernoulliSeries}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

void require_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError("complex argument must have finite components");
    }
}

EvalResult zeta_direct_partial(Complex z, const AdmissibleSet& set) {
    require_finite(z);
    require_nonempty(set);
    const auto sums = term_sums(z, set, false, false);
    return {1.0 + sums.value, set.limit, set.term_count(), tail_for(z, set.limit)};
}

EvalResult zeta_direct_partial(Complex z, std::uint64_t n) {
    return zeta_direct_partial(z, admissible_up_to(n));
}

EvalResult zeta_coth_partial(Complex z, const AdmissibleSet& set) {
    require_finite(z);
    require_nonempty(set);
    const double l = static_cast<double>(set.term_count());
    const Complex value = (2.0 - l) / 2.0 + 0.5 * coth_sum(z, set, false);
    return {value, set.limit, set.term_count(), tail_for(z, set.limit)};
}

EvalResult zeta_coth_partial(Complex z, std::uint64_t n) {
    return zeta_coth_partial(z, admissible_up_to(n));
}

EvalResult zeta_alt_partial(Complex z, const AdmissibleSet& set) {
    require_finite(z);
    require_nonempty(set);
    const Complex q = eta_prefactor(z);
    const auto sums = term_sums(z, set, true, false);
    auto tail = tail_for(z, set.limit);
    if (tail) *tail /= std::abs(q);
    return {(1.0 + sums.value) / q, set.limit, set.term_count(), tail};
}

EvalResult zeta_alt_partial(Complex z, std::uint64_t n) {
    return zeta_alt_partial(z, admissible_up_to(n));
}

double alternating_coth_constant(const AdmissibleSet& set) {
    long long signed_count = 0;
    for (const std::uint64_t r : set.members) signed_count += detail::alternating_sign(r);
    return 1.0 - 0.5 * static_cast<double>(signed_count);
}

double parity_branch_constant(std::size_t term_count) {
    return term_count % 2 == 0 ? 1.0 : 0.5;
}

EvalResult zeta_alt_coth_partial(Complex z, const AdmissibleSet& set) {
    require_finite(z);
    require_nonempty(set);
    const Complex q = eta_prefactor(z);
    const Complex numerator = alternating_coth_constant(set) + 0.5 * coth_sum(z, set, true);
    auto tail = tail_for(z, set.limit);
    if (tail) *tail /= std::abs(q);
    return {numerator / q, set.limit, set.term_count(), tail};
}

EvalResult zeta_alt_coth_partial(Complex z, std::uint64_t n) {
    return zeta_alt_coth_partial(z, admissible_up_to(n));
}

double bernoulli_convergence_radius(const AdmissibleSet& set) {
    require_nonempty(set);
    return 2 * std::numbers::pi / std::log(static_cast<double>(set.largest()));
}

EvalResult zeta_bernoulli_partial(Complex z, const AdmissibleSet& set, unsigned order,
                                  const BernoulliTable& table) {
    require_finite(z);
    require_nonempty(set);
    if (order + 1 > table.max_index()) {
        throw InputError("Bernoulli order " + std::to_string(order) + " needs B_" +
                         std::to_string(order + 1) + " beyond table maximum " +
                         std::to_string(table.max_index()));
    }
    const double radius = bernoulli_convergence_radius(set);
    if (!(std::abs(z) < radius)) {
        std::ostringstream msg;
        msg << "Bernoulli series diverges: |z| = " << std::abs(z)
            << " is not below 2 pi/log(r_max) = " << radius << " (r_max = " << set.largest()
            << ")";
        throw DomainError(msg.str());
    }
    // Inside the disk the only lattice point is the shared pole at the origin.
    detail::gate_pole(z, set.members.front(), std::log(2.0), kPoleGate);

    std::vector<double> logs;
    logs.reserve(set.term_count());
    double inverse_log_sum = 0;
    for (const std::uint64_t r : set.members) {
        logs.push_back(std::log(static_cast<double>(r)));
        inverse_log_sum += 1.0 / logs.back();
    }

    // value = 1 + P_{-1}/z + sum_{m=0}^{order} B_{m+1}/(m+1)! * P_m * z^m
    Complex value = 1.0 + inverse_log_sum / z;
    std::vector<double> powers(logs.size(), 1.0);
    Complex z_pow{1.0, 0.0};
    for (unsigned m = 0; m <= order; ++m) {
        if (m > 0) {
            for (std::size_t i = 0; i < logs.size(); ++i) powers[i] *= logs[i];
            z_pow *= z;
        }
        const double coefficient = table.scaled(m + 1);
        if (coefficient == 0.0) continue;
        double power_sum = 0;
        for (const double p : powers) power_sum += p;
        value += coefficient * power_sum * z_pow;
    }
    return {value, set.limit, set.term_count(), tail_for(z, set.limit)};
}

EvalResult zeta_bernoulli_partial(Complex z, std::uint64_t n, unsigned order) {
    return zeta_bernoulli_partial(z, admissible_up_to(n), order);
}

EvalResult evaluate(RepresentationKind kind, Complex z, const AdmissibleSet& set, unsigned order) {
    switch (kind) {
        case RepresentationKind::Direct: return zeta_direct_partial(z, set);
        case RepresentationKind::Coth: return zeta_coth_partial(z, set);
        case RepresentationKind::Alternating: return zeta_alt_partial(z, set);
        case RepresentationKind::AlternatingCoth: return zeta_alt_coth_partial(z, set);
        case RepresentationKind::BernoulliSeries: return zeta_bernoulli_partial(z, set, order);
    }
    throw InputError("unknown representation kind");
}

double remainder_bound(std::uint64_t n, double sigma) {
    if (!(sigma > 1)) {
        std::ostringstream msg;
        msg << "remainder bound requires sigma > 1, got " << sigma;
        throw DomainError(msg.str());
    }
    if (n < 1) throw InputError("remainder bound requires n >= 1");
    return std::pow(static_cast<double>(n), 1 - sigma) / (sigma - 1);
}

double euler_even_zeta(unsigned m) {
    if (m < 1) throw InputError("euler_even_zeta requires m >= 1");
    const auto& table = default_bernoulli_table();
    if (2 * static_cast<std::size_t>(m) > table.max_index()) {
        throw InputError("euler_even_zeta: B_" + std::to_string(2 * m) +
                         " exceeds Bernoulli table maximum " + std::to_string(table.max_index()));
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    const double two_pi_pow = std::pow(2 * std::numbers::pi, 2.0 * m);
    return sign * table.scaled(2 * m) * two_pi_pow / 2;
}

std::optional<SpecialKind> parse_special_kind(std::string_view name) {
    if (name == "any") return SpecialKind::AnyM;
    if (name == "even") return SpecialKind::EvenTwoM;
    if (name == "odd") return SpecialKind::OddTwoMPlusOne;
    return std::nullopt;
}

SpecialValue special_value(SpecialKind kind, unsigned m, std::uint64_t n) {
    unsigned argument = m;
    if (kind == SpecialKind::EvenTwoM) argument = 2 * m;
    if (kind == SpecialKind::OddTwoMPlusOne) argument = 2 * m + 1;
    if (argument < 2) {
        throw InputError("special value argument must be >= 2, got " + std::to_string(argument));
    }

    SpecialValue out{argument, zeta_direct_partial(Complex(argument, 0.0), n), std::nullopt,
                     std::nullopt};
    if (argument % 2 == 0) {
        out.euler_value = euler_even_zeta(argument / 2);
        out.deviation = std::abs(out.eval.value - *out.euler_value);
    }
    return out;
}

Complex derivative_partial(DerivativeKind kind, Complex z, const AdmissibleSet& set) {
    require_finite(z);
    require_nonempty(set);
    return term_sums(z, set, kind == DerivativeKind::AlternatingNumerator, true).derivative;
}

Complex derivative_partial(DerivativeKind kind, Complex z, std::uint64_t n) {
    return derivative_partial(kind, z, admissible_up_to(n));
}

double pole_distance(Complex z, const AdmissibleSet& set) {
    require_finite(z);
    double best = std::numeric_limits<double>::infinity();
    for (const std::uint64_t r : set.members) {
        best = std::min(best, detail::nearest_lattice_pole(z, std::log(static_cast<double>(r))).distance);
    }
    return best;
}

double pole_distance(Complex z, std::uint64_t n) { return pole_distance(z, admissible_up_to(n)); }

}  // namespace admzeta
