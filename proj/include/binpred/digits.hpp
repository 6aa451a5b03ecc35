#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace binpred {

using u64 = std::uint64_t;
using Digit = std::uint32_t;

namespace detail {
__extension__ typedef unsigned __int128 u128;
}  // namespace detail

// Every value handled by the library is strictly below this bound.
inline constexpr u64 kValueBound = u64{1} << 63;
inline constexpr u64 kMaxPrime = u64{1} << 20;

bool is_prime(u64 candidate);

/// A validated prime base in [2, 2^20]. Construction throws NotPrime.
class Prime {
 public:
  explicit Prime(u64 value);

  u64 value() const noexcept { return value_; }
  operator u64() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  u64 value_;
};

/// Base-p expansion, most-significant digit first. Zero has no digits.
struct DigitExpansion {
  Prime base;
  std::vector<Digit> digits;
  u64 value;

  bool is_zero() const noexcept { return digits.empty(); }
  // Index of the least significant digit (m in n_0 p^m + ... + n_m).
  // Undefined for zero.
  std::size_t top_index() const noexcept { return digits.size() - 1; }

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

DigitExpansion expand(u64 n, Prime p);

/// Positional evaluation. Leading zeros are accepted.
u64 compose(std::span<const Digit> digits, Prime p);

/// s_p(n), the sum of base-p digits.
u64 digit_sum(u64 n, Prime p);

/// Number of base-p digits of n; 0 for n = 0.
std::size_t digit_count(u64 n, Prime p);

/// The number whose m+1 base-p digits are (p-1) repeated t times, then p-2,
/// then (p-1) repeated m-t times.
u64 build_inner_exception(Prime p, std::size_t t, std::size_t m);

/// p^e, throwing Overflow when the result reaches kValueBound.
u64 checked_pow(u64 p, std::size_t e);

}  // namespace binpred
