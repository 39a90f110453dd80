#include "admzeta/admissible.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "admzeta/errors.hpp"

namespace admzeta {

std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned k) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(result, b, &result)) return std::nullopt;
    }
    return result;
}

std::uint64_t integer_root(std::uint64_t m, unsigned k) {
    if (k == 0) throw InputError("integer_root: k must be >= 1");
    if (k == 1 || m < 2) return m;
    if (k >= 64) return 1;

    // Floating estimate, then exact correction in both directions.
    auto x = static_cast<std::uint64_t>(std::pow(static_cast<double>(m), 1.0 / k));
    auto fits = [&](std::uint64_t b) {
        const auto p = checked_pow(b, k);
        return p && *p <= m;
    };
    while (x > 1 && !fits(x)) --x;
    while (fits(x + 1)) ++x;
    return x;
}

PowerDecomposition decompose_power(std::uint64_t m) {
    if (m < 2) throw InputError("decompose_power: m must be >= 2, got " + std::to_string(m));

    // The largest exponent that works gives the smallest base, which cannot itself be a
    // power (otherwise a still larger exponent would exist).
    const unsigned max_k = static_cast<unsigned>(std::bit_width(m) - 1);
    for (unsigned k = max_k; k >= 2; --k) {
        const std::uint64_t b = integer_root(m, k);
        if (b >= 2 && checked_pow(b, k) == m) return {m, b, k};
    }
    return {m, m, 1};
}

AdmissibleSet AdmissibleSet::truncated(std::uint64_t n) const {
    if (n < 2 || n > limit) {
        throw InputError("AdmissibleSet::truncated: n must lie in [2, " + std::to_string(limit) + "]");
    }
    AdmissibleSet out;
    out.limit = n;
    const auto end = std::upper_bound(members.begin(), members.end(), n);
    out.members.assign(members.begin(), end);
    return out;
}

AdmissibleSet admissible_up_to(std::uint64_t n) {
    if (n < 2) throw InputError("admissible_up_to: n must be >= 2, got " + std::to_string(n));
    if (n > kMaxAdmissibleLimit) {
        throw InputError("admissible_up_to: n exceeds supported limit " +
                         std::to_string(kMaxAdmissibleLimit));
    }

    // Perfect powers <= n number O(sqrt n); collect them and sweep.
    std::vector<std::uint64_t> powers;
    for (std::uint64_t b = 2; b * b <= n; ++b) {
        for (std::uint64_t p = b * b; p <= n; p *= b) {
            powers.push_back(p);
            if (p > n / b) break;
        }
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    AdmissibleSet set;
    set.limit = n;
    set.members.reserve(n - 1 - powers.size());
    auto next_power = powers.begin();
    for (std::uint64_t r = 2; r <= n; ++r) {
        if (next_power != powers.end() && *next_power == r) {
            ++next_power;
            continue;
        }
        set.members.push_back(r);
    }
    return set;
}

}  // namespace admzeta
