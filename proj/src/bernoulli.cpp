#include "admzeta/bernoulli.hpp"

#include <string>

#include "admzeta/errors.hpp"

namespace admzeta {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BernoulliTable::BernoulliTable(std::size_t max_index) {
    if (max_index > kMaxBernoulliIndex) {
        throw InputError("bernoulli_table: index " + std::to_string(max_index) +
                         " exceeds maximum " + std::to_string(kMaxBernoulliIndex));
    }
    values_.reserve(max_index + 1);
    values_.emplace_back(1);

    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    // Pascal row m+1 is carried along to avoid recomputing binomials.
    std::vector<BigInt> row{1, 1};  // C(1, .)
    for (std::size_t m = 1; m <= max_index; ++m) {
        std::vector<BigInt> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);

        Rational acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (values_[j] != 0) acc += Rational(row[j]) * values_[j];
        }
        values_.push_back(-acc / Rational(BigInt(m + 1)));
    }
}

double BernoulliTable::as_double(std::size_t m) const {
    return values_.at(m).convert_to<double>();
}

double BernoulliTable::scaled(std::size_t m) const {
    const Rational q = values_.at(m) / Rational(factorial(static_cast<unsigned>(m)));
    return q.convert_to<double>();
}

const BernoulliTable& default_bernoulli_table() {
    static const BernoulliTable table(kMaxBernoulliIndex);
    return table;
}

BernoulliTable bernoulli_table(std::size_t max_index) { return BernoulliTable(max_index); }

}  // namespace admzeta
