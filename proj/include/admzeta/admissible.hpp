#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace admzeta {

// m = base^exponent with base not a perfect power and exponent maximal.
struct PowerDecomposition {
    std::uint64_t value;
    std::uint64_t base;
    unsigned exponent;

    bool admissible() const noexcept { return exponent == 1; }
    friend bool operator==(const PowerDecomposition&, const PowerDecomposition&) = default;
};

// Ascending list of the integers 2 <= r <= limit that are not perfect powers.
struct AdmissibleSet {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> members;

    std::size_t term_count() const noexcept { return members.size(); }
    std::uint64_t largest() const { return members.back(); }
    // Same set restricted to r <= n (n <= limit).
    AdmissibleSet truncated(std::uint64_t n) const;
};

// Largest admissible_up_to limit accepted; members are materialized.
inline constexpr std::uint64_t kMaxAdmissibleLimit = 100'000'000;

// floor(m^(1/k)) computed exactly, k >= 1.
std::uint64_t integer_root(std::uint64_t m, unsigned k);

// b^k if it fits in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned k);

// Throws InputError for m < 2.
PowerDecomposition decompose_power(std::uint64_t m);

inline bool is_admissible(std::uint64_t m) { return decompose_power(m).exponent == 1; }

// Throws InputError for n < 2 or n > kMaxAdmissibleLimit.
AdmissibleSet admissible_up_to(std::uint64_t n);

}  // namespace admzeta
