#include "binpred/predictor.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "binpred/error.hpp"

namespace binpred {

ValuationSpectrum expected_spectrum(u64 n, Prime p) {
  if (n >= kValueBound - 1) throw Error(ErrorCode::Overflow, "n + 1 is not below 2^63");
  const DigitExpansion successor = expand(n + 1, p);
  const std::size_t nu = successor.top_index();
  std::vector<u64> counts;
  counts.reserve(nu + 1);
  for (std::size_t k = 0; k <= nu; ++k) {
    counts.push_back(successor.digits[k] * checked_pow(p, nu - k));
  }
  return ValuationSpectrum(p, n, std::move(counts));
}

PredictorReport check_predictor(u64 n, Prime p, SpectrumMethod method, u64 guard) {
  ValuationSpectrum expected = expected_spectrum(n, p);
  ValuationSpectrum actual = compute_spectrum(n, p, method, guard);
  const bool verdict = expected == actual;
  return PredictorReport{n, p, expand(n + 1, p), std::move(expected), std::move(actual), verdict};
}

std::string_view to_string(Disagreement d) {
  switch (d) {
    case Disagreement::PredictorNotZumkeller: return "predictor-not-zumkeller";
    case Disagreement::ZumkellerNotPredictor: return "zumkeller-not-predictor";
  }
  return "unknown";
}

namespace {

struct BlockResult {
  std::vector<Counterexample> counterexamples;
  std::vector<VerificationRow> rows;
};

void verify_block(Prime p, u64 lo, u64 hi, bool keep_rows, BlockResult& out) {
  for (u64 n = lo;; ++n) {
    const bool zum = is_zumkeller(classify_zumkeller(n, p));
    const bool pred = check_predictor(n, p, SpectrumMethod::Dp).verdict;
    if (zum != pred) {
      out.counterexamples.push_back(
          {n, pred ? Disagreement::PredictorNotZumkeller : Disagreement::ZumkellerNotPredictor});
    }
    if (keep_rows) out.rows.push_back({n, zum, pred});
    if (n == hi) break;
  }
}

}  // namespace

VerificationRecord verify_theorem(Prime p, u64 lo, u64 hi, const VerifyOptions& options) {
  if (lo > hi) {
    throw Error(ErrorCode::InvalidRange, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (hi >= kValueBound - 1) {
    throw Error(ErrorCode::ValueOutOfRange, "range end must leave n + 1 below 2^63");
  }
  const auto start = std::chrono::steady_clock::now();

  const u64 block = std::max<u64>(1, options.block_size);
  const u64 blocks = (hi - lo) / block + 1;
  std::vector<BlockResult> results(blocks);
  auto run_block = [&](u64 b) {
    const u64 from = lo + b * block;
    const u64 to = std::min(hi, from + (block - 1));
    verify_block(p, from, to, options.keep_rows, results[b]);
  };

  const unsigned jobs = static_cast<unsigned>(std::min<u64>(std::max(1u, options.jobs), blocks));
  if (jobs == 1) {
    for (u64 b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<u64> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (u64 b = next++; b < blocks; b = next++) run_block(b);
      });
    }
  }

  VerificationRecord record{p, lo, hi, hi - lo + 1, {}, {}, {}};
  for (BlockResult& r : results) {
    record.counterexamples.insert(record.counterexamples.end(), r.counterexamples.begin(),
                                  r.counterexamples.end());
    record.rows.insert(record.rows.end(), r.rows.begin(), r.rows.end());
  }
  record.elapsed = std::chrono::steady_clock::now() - start;
  return record;
}

std::vector<u64> digit_sum_search(Prime p, Prime q, u64 limit, u64 guard) {
  if (p == q) throw Error(ErrorCode::SamePrime, "p and q must differ");
  if (limit > guard) {
    throw Error(ErrorCode::GuardExceeded,
                std::to_string(limit) + " exceeds brute-force guard " + std::to_string(guard));
  }
  std::vector<u64> out;
  for (u64 n = 0; n <= limit; ++n) {
    if (digit_sum(n, p) == digit_sum(n, q)) out.push_back(n);
  }
  return out;
}

}  // namespace binpred
