#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace admzeta {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxBernoulliIndex = 200;

/// Exact Bernoulli numbers B_0..B_M with the B_1 = -1/2 convention, i.e. the
/// coefficients of x/(e^x - 1) = sum B_m x^m / m!.
class BernoulliTable {
public:
    /// Throws InputError when max_index exceeds kMaxBernoulliIndex.
    explicit BernoulliTable(std::size_t max_index);

    std::size_t max_index() const noexcept { return values_.size() - 1; }
    const Rational& operator[](std::size_t m) const { return values_.at(m); }
    double as_double(std::size_t m) const;

    /// B_m / m! as a double (exact rational before rounding).
    double scaled(std::size_t m) const;

private:
    std::vector<Rational> values_;
};

// Shared immutable table with max_index == kMaxBernoulliIndex.
const BernoulliTable& default_bernoulli_table();

BernoulliTable bernoulli_table(std::size_t max_index);

BigInt factorial(unsigned n);

}  // namespace admzeta
