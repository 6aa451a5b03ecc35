#include "binpred/digits.hpp"

#include <algorithm>
#include <string>

#include "binpred/error.hpp"

namespace binpred {

namespace {

void require_in_range(u64 n) {
  if (n >= kValueBound) {
    throw Error(ErrorCode::ValueOutOfRange, std::to_string(n) + " is not below 2^63");
  }
}

// a * b + c with the result required to stay below kValueBound.
u64 checked_mul_add(u64 a, u64 b, u64 c) {
  const detail::u128 wide = static_cast<detail::u128>(a) * b + c;
  if (wide >= kValueBound) {
    throw Error(ErrorCode::Overflow, "value does not fit below 2^63");
  }
  return static_cast<u64>(wide);
}

}  // namespace

bool is_prime(u64 candidate) {
  if (candidate < 2) return false;
  if (candidate % 2 == 0) return candidate == 2;
  for (u64 d = 3; d * d <= candidate; d += 2) {
    if (candidate % d == 0) return false;
  }
  return true;
}

Prime::Prime(u64 value) : value_(value) {
  if (value > kMaxPrime || !is_prime(value)) {
    throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not a prime in [2, 2^20]");
  }
}

DigitExpansion expand(u64 n, Prime p) {
  require_in_range(n);
  DigitExpansion out{p, {}, n};
  for (u64 rest = n; rest != 0; rest /= p) {
    out.digits.push_back(static_cast<Digit>(rest % p));
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

u64 compose(std::span<const Digit> digits, Prime p) {
  u64 value = 0;
  for (const Digit d : digits) {
    if (d >= p) {
      throw Error(ErrorCode::DigitOutOfRange,
                  "digit " + std::to_string(d) + " out of range for base " + std::to_string(p.value()));
    }
    value = checked_mul_add(value, p, d);
  }
  return value;
}

u64 digit_sum(u64 n, Prime p) {
  require_in_range(n);
  u64 sum = 0;
  for (; n != 0; n /= p) sum += n % p;
  return sum;
}

std::size_t digit_count(u64 n, Prime p) {
  std::size_t count = 0;
  for (; n != 0; n /= p) ++count;
  return count;
}

u64 build_inner_exception(Prime p, std::size_t t, std::size_t m) {
  if (t > m) {
    throw Error(ErrorCode::InvalidIndices,
                "exception index " + std::to_string(t) + " exceeds top index " + std::to_string(m));
  }
  if (m >= 64) throw Error(ErrorCode::Overflow, "too many digits");
  std::vector<Digit> digits(m + 1, static_cast<Digit>(p - 1));
  digits[t] = static_cast<Digit>(p - 2);
  return compose(digits, p);
}

u64 checked_pow(u64 p, std::size_t e) {
  u64 out = 1;
  for (std::size_t i = 0; i < e; ++i) out = checked_mul_add(out, p, 0);
  return out;
}

}  // namespace binpred
