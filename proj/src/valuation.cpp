#include "binpred/valuation.hpp"

#include <stdexcept>
#include <string>

#include "binpred/error.hpp"

namespace binpred {

namespace {

void require_in_range(u64 n) {
  if (n >= kValueBound) {
    throw Error(ErrorCode::ValueOutOfRange, std::to_string(n) + " is not below 2^63");
  }
}

void require_x_le_n(u64 n, u64 x) {
  if (x > n) {
    throw Error(ErrorCode::XExceedsN, std::to_string(x) + " > " + std::to_string(n));
  }
}

u64 exact_div(u64 numerator, u64 denominator, const char* where) {
  if (numerator % denominator != 0) {
    throw std::logic_error(std::string("inexact division by p-1 in ") + where);
  }
  return numerator / denominator;
}

// C(n, k) mod p for 0 <= k <= n < p, so every factor is invertible.
u64 small_binomial_mod(u64 n, u64 k, u64 p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u64 num = 1;
  u64 den = 1;
  for (u64 i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den^(p-2) by square-and-multiply.
  u64 inv = 1;
  u64 base = den;
  for (u64 e = p - 2; e != 0; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return num * inv % p;
}

}  // namespace

u64 factorial_valuation_digit_sum(u64 n, Prime p) {
  return exact_div(n - digit_sum(n, p), p - 1, "factorial valuation");
}

u64 factorial_valuation_floor_sum(u64 n, Prime p) {
  require_in_range(n);
  u64 total = 0;
  for (u64 q = n / p; q != 0; q /= p) total += q;
  return total;
}

u64 legendre_valuation(u64 n, Prime p) {
  const u64 by_digits = factorial_valuation_digit_sum(n, p);
  const u64 by_floors = factorial_valuation_floor_sum(n, p);
  if (by_digits != by_floors) {
    throw std::logic_error("Legendre forms disagree for n = " + std::to_string(n));
  }
  return by_digits;
}

u64 binomial_valuation(u64 n, u64 x, Prime p) {
  require_in_range(n);
  require_x_le_n(n, x);
  const u64 spread = digit_sum(x, p) + digit_sum(n - x, p) - digit_sum(n, p);
  return exact_div(spread, p - 1, "binomial valuation");
}

ValuationResult evaluate_binomial(u64 n, u64 x, Prime p) {
  return {n, x, p, binomial_valuation(n, x, p)};
}

u64 kummer_carries(u64 a, u64 b, Prime p) {
  if (a >= kValueBound || b >= kValueBound - a) {
    throw Error(ErrorCode::Overflow, "a + b is not below 2^63");
  }
  u64 carries = 0;
  u64 carry = 0;
  while (a != 0 || b != 0 || carry != 0) {
    carry = (a % p + b % p + carry) >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

u64 kummer_borrows(u64 n, u64 x, Prime p) {
  require_in_range(n);
  require_x_le_n(n, x);
  u64 borrows = 0;
  u64 borrow = 0;
  while (x != 0 || borrow != 0) {
    borrow = (n % p < x % p + borrow) ? 1 : 0;
    borrows += borrow;
    n /= p;
    x /= p;
  }
  return borrows;
}

u64 lucas_residue(u64 n, u64 t, Prime p) {
  require_in_range(n);
  if (t > n) {
    throw Error(ErrorCode::TExceedsN, std::to_string(t) + " > " + std::to_string(n));
  }
  u64 residue = 1 % p;
  for (; t != 0 && residue != 0; n /= p, t /= p) {
    residue = residue * small_binomial_mod(n % p, t % p, p) % p;
  }
  return residue;
}

u64 central_binomial_valuation(u64 n, bool shifted) {
  const Prime two{2};
  if (n > (kValueBound - 2) / 2) {
    throw Error(ErrorCode::Overflow, "2n+1 is not below 2^63");
  }
  const u64 closed = shifted ? digit_sum(n + 1, two) - 1 : digit_sum(n, two);
  const u64 top = shifted ? 2 * n + 1 : 2 * n;
  if (closed != binomial_valuation(top, n, two)) {
    throw std::logic_error("central binomial closed form disagrees for n = " + std::to_string(n));
  }
  return closed;
}

TriangleWitness triangle_inequality_witness(u64 x, u64 y, Prime p) {
  if (x >= kValueBound || y >= kValueBound - x) {
    throw Error(ErrorCode::Overflow, "x + y is not below 2^63");
  }
  TriangleWitness w{};
  w.lhs = digit_sum(x + y, p);
  w.rhs = digit_sum(x, p) + digit_sum(y, p);
  w.equality = w.lhs == w.rhs;
  w.binom_coprime_to_p = binomial_valuation(x + y, x, p) == 0;
  if (w.lhs > w.rhs || w.equality != w.binom_coprime_to_p) {
    throw std::logic_error("triangle inequality violated for (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
  }
  return w;
}

}  // namespace binpred
