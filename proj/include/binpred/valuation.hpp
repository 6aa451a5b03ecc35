#pragma once

#include "binpred/digits.hpp"

namespace binpred {

// p-adic valuations of factorials and binomial coefficients. Nothing here ever
// materializes a binomial coefficient; all routes work on base-p digits.

/// a_p(n!) as (n - s_p(n)) / (p - 1).
u64 factorial_valuation_digit_sum(u64 n, Prime p);

/// a_p(n!) as the floor sum n/p + n/p^2 + ...
u64 factorial_valuation_floor_sum(u64 n, Prime p);

/// a_p(n!). Computes both forms above and throws std::logic_error if they
/// disagree.
u64 legendre_valuation(u64 n, Prime p);

/// a_p(C(n, x)) = (s_p(x) + s_p(n - x) - s_p(n)) / (p - 1).
u64 binomial_valuation(u64 n, u64 x, Prime p);

struct ValuationResult {
  u64 n;
  u64 x;
  Prime p;
  u64 valuation;
};

ValuationResult evaluate_binomial(u64 n, u64 x, Prime p);

/// Carries produced when adding a and b in base p.
u64 kummer_carries(u64 a, u64 b, Prime p);

/// Borrows produced when subtracting x from n in base p.
u64 kummer_borrows(u64 n, u64 x, Prime p);

/// C(n, t) mod p, digit by digit.
u64 lucas_residue(u64 n, u64 t, Prime p);

/// a_2(C(2n, n)) = s_2(n), or a_2(C(2n+1, n)) = s_2(n+1) - 1 when shifted.
/// The closed form is cross-checked against binomial_valuation.
u64 central_binomial_valuation(u64 n, bool shifted);

struct TriangleWitness {
  u64 lhs;                  // s_p(x + y)
  u64 rhs;                  // s_p(x) + s_p(y)
  bool equality;            // lhs == rhs
  bool binom_coprime_to_p;  // p does not divide C(x + y, x)
};

/// s_p(x + y) <= s_p(x) + s_p(y), with equality iff p does not divide
/// C(x + y, x). Throws std::logic_error if the two flags ever disagree.
TriangleWitness triangle_inequality_witness(u64 x, u64 y, Prime p);

}  // namespace binpred
