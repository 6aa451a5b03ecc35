#pragma once

#include <chrono>
#include <string_view>
#include <vector>

#include "binpred/digits.hpp"
#include "binpred/spectrum.hpp"
#include "binpred/zumkeller.hpp"

namespace binpred {

/// Spectrum a binomial predictor must have: with n + 1 = a_0 p^v + ... + a_v,
/// counts[k] = a_k p^(v-k). The exponent v comes from n + 1, never from n.
ValuationSpectrum expected_spectrum(u64 n, Prime p);

struct PredictorReport {
  u64 n;
  Prime p;
  DigitExpansion successor_digits;  // n + 1 in base p
  ValuationSpectrum expected;
  ValuationSpectrum actual;
  bool verdict;
};

PredictorReport check_predictor(u64 n, Prime p, SpectrumMethod method = SpectrumMethod::Auto,
                                u64 guard = kDefaultBruteGuard);

enum class Disagreement { PredictorNotZumkeller, ZumkellerNotPredictor };

std::string_view to_string(Disagreement d);

struct Counterexample {
  u64 n;
  Disagreement direction;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationRow {
  u64 n;
  bool is_zumkeller;
  bool is_predictor;
  bool agree() const noexcept { return is_zumkeller == is_predictor; }
};

struct VerificationRecord {
  Prime p;
  u64 lo;
  u64 hi;
  u64 checked_count;
  std::vector<Counterexample> counterexamples;  // sorted by n
  std::vector<VerificationRow> rows;            // only with keep_rows
  std::chrono::nanoseconds elapsed;
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool keep_rows = false;
  u64 block_size = 4096;
};

/// Compares the predictor verdict (digit DP spectra) with Zumkeller
/// classification for every n in [lo, hi]. The range is cut into fixed
/// blocks that may run on several threads; the record is identical for any
/// job count apart from elapsed.
VerificationRecord verify_theorem(Prime p, u64 lo, u64 hi, const VerifyOptions& options = {});

/// All n <= limit with s_p(n) = s_q(n).
std::vector<u64> digit_sum_search(Prime p, Prime q, u64 limit, u64 guard = kDefaultBruteGuard);

}  // namespace binpred
