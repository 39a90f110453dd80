#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "admzeta/errors.hpp"
#include "admzeta/reference.hpp"
#include "admzeta/representations.hpp"
#include "oracles.hpp"

using namespace admzeta;

namespace {

constexpr double pi = std::numbers::pi;

Complex random_point(std::mt19937_64& rng, double radius, double min_re) {
    std::uniform_real_distribution<double> u(-radius, radius);
    while (true) {
        const Complex z(u(rng), u(rng));
        if (std::abs(z) <= radius && z.real() > min_re) return z;
    }
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("direct partial sum at z = 2, n = 6") {
    const auto exact = oracle::exact_partial(oracle::admissible_sieve(6), 2, false);
    REQUIRE(exact == oracle::Rational(oracle::BigInt(107), oracle::BigInt(70)));

    const auto r = zeta_direct_partial({2, 0}, 6);
    CHECK(r.value.real() == doctest::Approx(107.0 / 70).epsilon(1e-15));
    CHECK(r.value.imag() == 0.0);
    CHECK(r.term_count == 4);
    CHECK(r.truncation == 6);
    REQUIRE(r.tail_bound);
    CHECK(*r.tail_bound == doctest::Approx(1.0 / 6));

    const Complex regrouped = oracle::regrouped_dirichlet({2, 3, 5, 6}, {2, 0}, 1e-18);
    CHECK(std::abs(r.value - regrouped) < 1e-14);
}

TEST_CASE("direct partial sum converges to zeta(2)") {
    const auto r = zeta_direct_partial({2, 0}, 10000);
    CHECK(std::abs(r.value.real() - pi * pi / 6) < 2e-4);
}

TEST_CASE("coth form") {
    // (2 - 1)/2 + coth(log 2)/2 = 1/2 + 5/6
    CHECK(zeta_coth_partial({2, 0}, 2).value.real() == doctest::Approx(4.0 / 3).epsilon(1e-15));
    CHECK(std::abs(zeta_coth_partial({2, 0}, 6).value - 107.0 / 70) < 1e-12);

    const Complex z(3, 4);
    const auto set = admissible_up_to(50);
    CHECK(oracle::relative_gap(zeta_coth_partial(z, set).value, zeta_direct_partial(z, set).value) <
          1e-12);
}

TEST_CASE("alternating partial sum") {
    const auto exact = oracle::exact_partial(oracle::admissible_sieve(6), 2, true) * 2;
    REQUIRE(exact == oracle::Rational(oracle::BigInt(169), oracle::BigInt(105)));
    CHECK(zeta_alt_partial({2, 0}, 6).value.real() == doctest::Approx(169.0 / 105).epsilon(1e-15));

    CHECK(std::abs(zeta_alt_partial({2, 0}, 20000).value - pi * pi / 6) < 1e-5);

    const Complex z(0.75, 0);
    CHECK(std::abs(zeta_alt_partial(z, 100000).value - reference_zeta(z)) < 0.05);
}

TEST_CASE("alternating coth form") {
    CHECK(std::abs(zeta_alt_coth_partial({2, 0}, 6).value - 169.0 / 105) < 1e-12);
    CHECK(oracle::relative_gap(zeta_alt_coth_partial({2, 0}, 5).value,
                               zeta_alt_partial({2, 0}, 5).value) < 1e-12);
    const Complex z(1.5, 2);
    CHECK(oracle::relative_gap(zeta_alt_coth_partial(z, 40).value, zeta_alt_partial(z, 40).value) <
          1e-12);
}

TEST_CASE("alternating coth constant versus the parity-of-l rule") {
    for (std::uint64_t n = 3; n <= 16; ++n) {
        const auto set = admissible_up_to(n);
        CAPTURE(n);
        CHECK(alternating_coth_constant(set) == parity_branch_constant(set.term_count()));
    }
    CHECK(alternating_coth_constant(admissible_up_to(6)) == 1.0);
    CHECK(alternating_coth_constant(admissible_up_to(5)) == 0.5);
    // l = 1 but 1 - (-1)/2 = 3/2.
    CHECK(alternating_coth_constant(admissible_up_to(2)) == 1.5);
    // Odd bases outnumber even ones by two: l = 12 yet the constant is 0.
    CHECK(alternating_coth_constant(admissible_up_to(17)) == 0.0);
    CHECK(parity_branch_constant(12) == 1.0);
}

TEST_CASE("Bernoulli series") {
    const Complex z(0.5, 0);
    const auto set = admissible_up_to(6);
    const Complex direct = zeta_direct_partial(z, set).value;
    CHECK(std::abs(zeta_bernoulli_partial(z, set, 40).value - direct) < 1e-10);

    // M = 0: 1 + P_{-1}/z + B_1 l
    double inverse_logs = 0;
    for (auto r : set.members) inverse_logs += 1 / std::log(double(r));
    const double expected = 1 + 2 * inverse_logs - 2;
    CHECK(zeta_bernoulli_partial(z, set, 0).value.real() == doctest::Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(zeta_bernoulli_partial({2, 0}, 600, 10), DomainError);
    CHECK(bernoulli_convergence_radius(admissible_up_to(600)) ==
          doctest::Approx(2 * pi / std::log(600.0)));
    CHECK_THROWS_AS(zeta_bernoulli_partial(z, set, 200), InputError);
    CHECK_THROWS_AS(zeta_bernoulli_partial({0, 0}, set, 10), PoleError);
}

TEST_CASE("Bernoulli series error shrinks with order inside the disk") {
    for (Complex z : {Complex(0.5, 0), Complex(0.3, 0.4), Complex(-1, 1.5)}) {
        const auto set = admissible_up_to(6);
        const Complex direct = zeta_direct_partial(z, set).value;
        double previous = std::numeric_limits<double>::infinity();
        for (unsigned order : {1u, 3u, 5u, 9u, 15u, 21u, 41u, 61u}) {
            const double err = std::abs(zeta_bernoulli_partial(z, set, order).value - direct);
            CAPTURE(z);
            CAPTURE(order);
            CHECK(err <= std::max(previous, 1e-14));
            previous = err;
        }
        CHECK(previous < 1e-11);
    }
}

TEST_CASE("remainder bound") {
    CHECK(remainder_bound(10, 2) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(remainder_bound(100, 3) == doctest::Approx(5e-5).epsilon(1e-15));
    CHECK_THROWS_AS(remainder_bound(10, 1), DomainError);
    CHECK_THROWS_AS(remainder_bound(10, 0.5), DomainError);
    CHECK_THROWS_AS(remainder_bound(0, 2), InputError);

    constexpr std::uint64_t upto = 10'000'000;
    for (double sigma : {1.5, 2.0, 3.0}) {
        // Running sum from the top; snapshots at n = 1000, 100, 10.
        double acc = 0;
        for (std::uint64_t m = upto; m > 10; --m) {
            acc += std::pow(double(m), -sigma);
            if (m - 1 == 1000 || m - 1 == 100 || m - 1 == 10) {
                CAPTURE(sigma);
                CAPTURE(m - 1);
                CHECK(remainder_bound(m - 1, sigma) >= acc);
            }
        }
    }
}

TEST_CASE("tail bound covers the distance to zeta") {
    for (double sigma : {1.5, 2.0, 3.0}) {
        for (std::uint64_t n : {10u, 100u, 1000u}) {
            const auto r = zeta_direct_partial({sigma, 0}, n);
            REQUIRE(r.tail_bound);
            CAPTURE(sigma);
            CAPTURE(n);
            CHECK(std::abs(reference_zeta({sigma, 0}) - r.value) <= *r.tail_bound);
        }
    }
    CHECK_FALSE(zeta_direct_partial({0.5, 0}, 10).tail_bound);
    CHECK_FALSE(zeta_direct_partial({1, 3}, 10).tail_bound);
    CHECK(zeta_alt_partial({2, 0}, 10).tail_bound);
}

TEST_CASE("Euler closed forms") {
    CHECK(euler_even_zeta(1) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
    CHECK(euler_even_zeta(2) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
    CHECK(euler_even_zeta(3) == doctest::Approx(std::pow(pi, 6) / 945).epsilon(1e-15));
    for (unsigned m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(std::abs(euler_even_zeta(m) - reference_zeta({2.0 * m, 0}).real()) < 1e-9);
    }
    CHECK(euler_even_zeta(100) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(euler_even_zeta(0), InputError);
    CHECK_THROWS_AS(euler_even_zeta(101), InputError);
}

TEST_CASE("special values") {
    const auto even = special_value(SpecialKind::EvenTwoM, 1, 10000);
    CHECK(even.argument == 2);
    REQUIRE(even.deviation);
    CHECK(*even.deviation < 2e-4);

    const auto odd = special_value(SpecialKind::OddTwoMPlusOne, 1, 10000);
    CHECK(odd.argument == 3);
    CHECK_FALSE(odd.euler_value);
    CHECK(std::abs(odd.eval.value.real() - 1.2020569031595942) < 2e-4);

    const auto any = special_value(SpecialKind::AnyM, 2, 6);
    CHECK(any.eval.value.real() == doctest::Approx(107.0 / 70).epsilon(1e-15));

    CHECK_THROWS_AS(special_value(SpecialKind::AnyM, 1, 10), InputError);
    CHECK_THROWS_AS(special_value(SpecialKind::EvenTwoM, 0, 10), InputError);
    CHECK_NOTHROW(special_value(SpecialKind::OddTwoMPlusOne, 1, 2));
}

TEST_CASE("derivative of the partial sums") {
    const double log2 = std::log(2.0);
    const double log3 = std::log(3.0);
    CHECK(derivative_partial(DerivativeKind::Direct, {2, 0}, 2).real() ==
          doctest::Approx(-log2 * 4 / 9).epsilon(1e-14));
    CHECK(derivative_partial(DerivativeKind::AlternatingNumerator, {2, 0}, 3).real() ==
          doctest::Approx(log2 * 4 / 9 - log3 * 9 / 64).epsilon(1e-14));

    std::mt19937_64 rng(7);
    for (auto kind : {DerivativeKind::Direct, DerivativeKind::AlternatingNumerator}) {
        const auto set = admissible_up_to(30);
        const bool alt = kind == DerivativeKind::AlternatingNumerator;
        std::function<Complex(Complex)> numerator = [&](Complex z) {
            Complex acc = 1.0;
            for (auto r : set.members) {
                const double s = (alt && r % 2 == 0) ? -1.0 : 1.0;
                acc += s / (std::pow(static_cast<double>(r), z) - 1.0);
            }
            return acc;
        };
        for (int i = 0; i < 40; ++i) {
            const Complex z = random_point(rng, 6, 0.2);
            if (pole_distance(z, set) < 0.1 || std::abs(z - 1.0) < 0.1) continue;
            const Complex fd = oracle::central_difference(numerator, z, 1e-6);
            const Complex exact = derivative_partial(kind, z, set);
            CAPTURE(z);
            CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("pole distance") {
    CHECK(pole_distance({0, 0}, 10) == 0.0);
    CHECK(pole_distance({0, 2 * pi / std::log(2.0)}, 7) < 1e-15);
    CHECK(pole_distance({1, 0}, 2) == doctest::Approx(1.0));

    std::mt19937_64 rng(11);
    const auto set = admissible_up_to(40);
    for (int i = 0; i < 100; ++i) {
        const Complex z = random_point(rng, 10, -10);
        CHECK(pole_distance(z, set) == doctest::Approx(oracle::lattice_scan(set.members, z, 40)));
    }
}

TEST_CASE("pole and domain errors") {
    const double pole3 = 2 * pi / std::log(3.0);
    try {
        zeta_direct_partial({0, pole3}, 5);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.base() == 3);
        CHECK(e.lattice_index() == 1);
    }
    CHECK_THROWS_AS(zeta_direct_partial({0, 0}, 5), PoleError);
    CHECK_THROWS_AS(zeta_coth_partial({1e-8, 0}, 5), PoleError);
    CHECK_NOTHROW(zeta_direct_partial({1e-5, 0}, 5));

    CHECK_THROWS_AS(zeta_alt_partial({1, 0}, 5), SingularPrefactorError);
    CHECK_THROWS_AS(zeta_alt_coth_partial({1, 2 * pi / std::log(2.0)}, 5), SingularPrefactorError);
    CHECK_THROWS_AS(zeta_alt_partial({-0.5, 1}, 5), DomainError);
    CHECK_THROWS_AS(zeta_alt_partial({0, 1}, 5), DomainError);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(zeta_direct_partial({nan, 0}, 5), InputError);
    CHECK_THROWS_AS(zeta_direct_partial({2, INFINITY}, 5), InputError);
    CHECK_THROWS_AS(zeta_direct_partial({2, 0}, 1), InputError);
}

TEST_CASE("large arguments stay finite") {
    CHECK(zeta_direct_partial({800, 0}, 10).value == Complex(1.0, 0.0));
    CHECK(zeta_direct_partial({-800, 3}, 10).value.real() == doctest::Approx(1.0 - 6));
    CHECK(std::isfinite(zeta_coth_partial({800, 1}, 10).value.real()));
}

TEST_CASE("representation identities on random points") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t n : {5u, 50u, 200u}) {
        const auto set = admissible_up_to(n);
        int checked = 0;
        while (checked < 100) {
            const Complex z = random_point(rng, 10, -10);
            if (pole_distance(z, set) <= 0.1) continue;
            CHECK(oracle::relative_gap(zeta_coth_partial(z, set).value,
                                       zeta_direct_partial(z, set).value) <= 1e-11);
            if (z.real() > 0 && std::abs(1.0 - std::pow(2.0, 1.0 - z)) > 0.1) {
                CHECK(oracle::relative_gap(zeta_alt_coth_partial(z, set).value,
                                           zeta_alt_partial(z, set).value) <= 1e-11);
            }
            ++checked;
        }
    }
}

TEST_CASE("regrouping oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> re(2, 5);
    std::uniform_real_distribution<double> im(-20, 20);
    for (std::uint64_t n : {2u, 7u, 16u, 33u, 50u}) {
        const auto set = admissible_up_to(n);
        for (int i = 0; i < 10; ++i) {
            const Complex z(re(rng), im(rng));
            CAPTURE(z);
            CAPTURE(n);
            CHECK(std::abs(zeta_direct_partial(z, set).value -
                           oracle::regrouped_dirichlet(set.members, z, 1e-16)) < 1e-13);
        }
    }
}

TEST_CASE("conjugate symmetry of every evaluator") {
    const auto set = admissible_up_to(12);
    for (Complex z : {Complex(0.7, 2.3), Complex(2.5, -7.1), Complex(1.2, 0.4)}) {
        for (auto kind : {RepresentationKind::Direct, RepresentationKind::Coth,
                          RepresentationKind::Alternating, RepresentationKind::AlternatingCoth}) {
            const Complex a = evaluate(kind, std::conj(z), set).value;
            const Complex b = std::conj(evaluate(kind, z, set).value);
            CHECK(std::abs(a - b) <= 1e-14 * (1 + std::abs(b)));
        }
    }
    const Complex z(0.4, 0.6);
    CHECK(std::abs(zeta_bernoulli_partial(std::conj(z), set, 30).value -
                   std::conj(zeta_bernoulli_partial(z, set, 30).value)) < 1e-13);
}

TEST_CASE("names round-trip") {
    for (auto kind : {RepresentationKind::Direct, RepresentationKind::Coth,
                      RepresentationKind::Alternating, RepresentationKind::AlternatingCoth,
                      RepresentationKind::BernoulliSeries}) {
        CHECK(parse_representation(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_representation("euler"));
}

TEST_CASE("concurrent evaluation matches sequential") {
    const auto set = admissible_up_to(5000);
    const Complex z(1.3, 9.7);
    const Complex expected = zeta_coth_partial(z, set).value;
    std::vector<Complex> got(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < got.size(); ++i) {
            pool.emplace_back([&, i] { got[i] = zeta_coth_partial(z, set).value; });
        }
    }
    for (const auto& v : got) CHECK(v == expected);
}

}  // TEST_SUITE
