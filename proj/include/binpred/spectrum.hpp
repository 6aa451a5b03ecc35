#pragma once

#include <string_view>
#include <vector>

#include "binpred/digits.hpp"
#include "binpred/zumkeller.hpp"

namespace binpred {

inline constexpr u64 kDefaultBruteGuard = u64{1} << 24;

/// Row spectrum: counts()[k] is the number of x in [0..n] with p^k exactly
/// dividing C(n, x).
///
/// Always held in canonical form with trailing zero counts removed, so two
/// spectra compare equal regardless of padding. The constructor enforces the
/// partition property (counts sum to n + 1) and throws std::logic_error on
/// violation, so every spectrum that exists has been checked.
class ValuationSpectrum {
 public:
  ValuationSpectrum(Prime p, u64 n, std::vector<u64> counts);

  Prime prime() const noexcept { return prime_; }
  u64 n() const noexcept { return n_; }
  const std::vector<u64>& counts() const noexcept { return counts_; }
  // Zero beyond the stored range.
  u64 count(std::size_t k) const noexcept { return k < counts_.size() ? counts_[k] : 0; }

  friend bool operator==(const ValuationSpectrum&, const ValuationSpectrum&) = default;

 private:
  Prime prime_;
  u64 n_;
  std::vector<u64> counts_;
};

enum class SpectrumMethod { Brute, Dp, Auto };

std::string_view to_string(SpectrumMethod m);

/// Counts borrows of n - x for every x in [0..n]. Throws GuardExceeded when
/// n > guard. With jobs > 1 the range is split into chunks counted
/// concurrently; the result does not depend on jobs.
ValuationSpectrum spectrum_bruteforce(u64 n, Prime p, u64 guard = kDefaultBruteGuard,
                                      unsigned jobs = 1);

/// Digit dynamic program over x of the same length as n, least significant
/// digit first, tracking (pending borrow, borrows so far). Strings with a
/// final borrow-out are exactly those with x > n and are dropped.
ValuationSpectrum spectrum_digit_dp(u64 n, Prime p);

/// Auto picks brute force up to the guard and the digit DP above it.
ValuationSpectrum compute_spectrum(u64 n, Prime p, SpectrumMethod method,
                                   u64 guard = kDefaultBruteGuard);

/// Number of x with p not dividing C(n, x): product of (n_i + 1).
u64 lambda0_lucas(u64 n, Prime p);

/// Same count for p = 2: 2^s_2(n).
u64 lambda0_glaisher(u64 n);

/// Spectrum of a Zumkeller number straight from its digit pattern:
///   AllMax(m)              -> [p^(m+1)]
///   LeadingException(a, m) -> [(a+1) p^m]
///   InnerException(t, m)   -> [(p-1) p^m, (p-1) p^(m-1), ..., (p-1) p^(m-t)]
/// InnerException with t = 0 is accepted and yields [(p-1) p^m].
ValuationSpectrum zumkeller_spectrum_closed_form(const ZumkellerClass& c, Prime p);

}  // namespace binpred
