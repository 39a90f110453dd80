#include "admzeta/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "admzeta/errors.hpp"
#include "term_kernel.hpp"

namespace admzeta {

namespace {

constexpr double kSelfCheckTolerance = 1e-12;

void check_domain(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError("reference_zeta: non-finite argument");
    }
    if (!(z.real() > 0)) {
        std::ostringstream msg;
        msg << "reference_zeta requires Re(z) > 0, got " << z.real();
        throw DomainError(msg.str());
    }
    if (std::abs(z.imag()) > kReferenceMaxImag) {
        std::ostringstream msg;
        msg << "reference_zeta supports |Im z| <= " << kReferenceMaxImag << ", got " << z.imag();
        throw DomainError(msg.str());
    }
}

Complex zeta_from_eta(Complex z, int order) {
    check_domain(z);
    const Complex q = -detail::expm1((1.0 - z) * std::numbers::ln2);
    if (std::abs(z - 1.0) < 1e-12) throw PoleError("zeta has a pole at z = 1", 0, 0);
    if (std::abs(q) < 1e-12) {
        throw SingularPrefactorError("reference_zeta: 1 - 2^(1-z) vanishes at this z");
    }
    return reference_eta(z, order) / q;
}

bool self_checked() {
    static const bool ok = [] {
        const double err = reference_self_check_error();
        if (!(err <= kSelfCheckTolerance)) {
            std::ostringstream msg;
            msg << "reference_zeta failed its self-check against closed forms (error " << err
                << ")";
            throw std::logic_error(msg.str());
        }
        return true;
    }();
    return ok;
}

}  // namespace

Complex reference_eta(Complex z, int order) {
    if (order < 1 || order > kReferenceMaxOrder) {
        throw InputError("reference_eta: order must lie in [1, " +
                         std::to_string(kReferenceMaxOrder) + "]");
    }
    const double n = order;
    double d = std::pow(3 + std::sqrt(8.0), n);
    d = (d + 1 / d) / 2;
    double b = -1;
    double c = -d;
    Complex sum{0.0, 0.0};
    for (int k = 0; k < order; ++k) {
        c = b - c;
        sum += c * std::exp(-z * std::log(k + 1.0));
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return sum / d;
}

int reference_default_order(Complex z) {
    const double t = std::abs(z.imag());
    const double needed =
        (17 * std::numbers::ln10 + std::numbers::pi * t + std::log(3 * (1 + 2 * t))) /
        std::log(3 + std::sqrt(8.0));
    return std::clamp(static_cast<int>(std::ceil(needed)) + 2, 24, kReferenceMaxOrder);
}

Complex reference_zeta(Complex z, int order) {
    self_checked();
    return zeta_from_eta(z, order);
}

Complex reference_zeta(Complex z) {
    check_domain(z);
    return reference_zeta(z, reference_default_order(z));
}

double reference_self_check_error() {
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi;
    const double expected[] = {pi2 / 6, pi2 * pi2 / 90, pi2 * pi2 * pi2 / 945};
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
        const Complex z(2.0 * (i + 1), 0.0);
        const Complex got = zeta_from_eta(z, reference_default_order(z));
        worst = std::max(worst, std::abs(got - expected[i]));
    }
    return worst;
}

}  // namespace admzeta
