#include "binpred/spectrum.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <thread>

#include "binpred/error.hpp"
#include "binpred/valuation.hpp"

namespace binpred {

ValuationSpectrum::ValuationSpectrum(Prime p, u64 n, std::vector<u64> counts)
    : prime_(p), n_(n), counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  detail::u128 total = 0;
  for (const u64 c : counts_) total += c;
  if (total != static_cast<detail::u128>(n) + 1) {
    throw std::logic_error("spectrum of " + std::to_string(n) + " does not sum to n + 1");
  }
  if (counts_.front() == 0) {
    throw std::logic_error("spectrum of " + std::to_string(n) + " has no valuation-0 entry");
  }
  if (counts_.size() - 1 > digit_count(n, p)) {
    throw std::logic_error("spectrum of " + std::to_string(n) + " exceeds its digit count");
  }
}

std::string_view to_string(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::Brute: return "brute";
    case SpectrumMethod::Dp: return "dp";
    case SpectrumMethod::Auto: return "auto";
  }
  return "unknown";
}

namespace {

// Borrow counts never exceed 63 digits.
using Histogram = std::array<u64, 65>;

void count_range(u64 n, Prime p, u64 lo, u64 hi, Histogram& hist) {
  for (u64 x = lo; x <= hi; ++x) ++hist[kummer_borrows(n, x, p)];
}

}  // namespace

ValuationSpectrum spectrum_bruteforce(u64 n, Prime p, u64 guard, unsigned jobs) {
  if (n > guard) {
    throw Error(ErrorCode::GuardExceeded,
                std::to_string(n) + " exceeds brute-force guard " + std::to_string(guard));
  }
  jobs = std::max(1u, jobs);
  const u64 chunks = std::min<u64>(jobs, n + 1);
  std::vector<Histogram> partial(chunks, Histogram{});

  const u64 step = (n + 1) / chunks;
  auto bounds = [&](u64 i) {
    const u64 lo = i * step;
    const u64 hi = (i + 1 == chunks) ? n : lo + step - 1;
    return std::pair{lo, hi};
  };

  if (chunks == 1) {
    count_range(n, p, 0, n, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (u64 i = 0; i < chunks; ++i) {
      workers.emplace_back([&, i] {
        const auto [lo, hi] = bounds(i);
        count_range(n, p, lo, hi, partial[i]);
      });
    }
  }

  std::vector<u64> counts(65, 0);
  for (const Histogram& h : partial) {
    for (std::size_t k = 0; k < h.size(); ++k) counts[k] += h[k];
  }
  return ValuationSpectrum(p, n, std::move(counts));
}

ValuationSpectrum spectrum_digit_dp(u64 n, Prime p) {
  const DigitExpansion e = expand(n, p);
  const std::size_t len = e.digits.size();
  if (len == 0) return ValuationSpectrum(p, 0, {1});

  // ways[b][k]: number of length-i suffixes of x with pending borrow b and
  // k borrows so far. Before the last digit the totals are p^i <= n, and the
  // last step keeps only borrow-free completions (<= n + 1 in total), so u64
  // never overflows.
  std::array<std::vector<u64>, 2> ways{std::vector<u64>(len + 1, 0), std::vector<u64>(len + 1, 0)};
  ways[0][0] = 1;

  for (std::size_t i = 0; i < len; ++i) {
    const u64 digit = e.digits[len - 1 - i];
    const bool last = i + 1 == len;
    std::array<std::vector<u64>, 2> next{std::vector<u64>(len + 1, 0), std::vector<u64>(len + 1, 0)};
    for (u64 borrow = 0; borrow < 2; ++borrow) {
      // x_i in [0, digit - borrow] leaves no borrow; the rest of [0, p) borrow.
      const u64 keep = digit >= borrow ? digit - borrow + 1 : 0;
      const u64 take = p - keep;
      for (std::size_t k = 0; k <= i; ++k) {
        const u64 w = ways[borrow][k];
        if (w == 0) continue;
        next[0][k] += w * keep;
        if (!last) next[1][k + 1] += w * take;
      }
    }
    ways = std::move(next);
  }
  return ValuationSpectrum(p, n, std::move(ways[0]));
}

ValuationSpectrum compute_spectrum(u64 n, Prime p, SpectrumMethod method, u64 guard) {
  switch (method) {
    case SpectrumMethod::Brute: return spectrum_bruteforce(n, p, guard);
    case SpectrumMethod::Dp: return spectrum_digit_dp(n, p);
    case SpectrumMethod::Auto: break;
  }
  return n <= guard ? spectrum_bruteforce(n, p, guard) : spectrum_digit_dp(n, p);
}

u64 lambda0_lucas(u64 n, Prime p) {
  const DigitExpansion e = expand(n, p);
  u64 product = 1;
  for (const Digit d : e.digits) {
    if (product > (kValueBound - 1) / (d + 1)) {
      throw Error(ErrorCode::Overflow, "Lucas count does not fit below 2^63");
    }
    product *= d + 1;
  }
  return product;
}

u64 lambda0_glaisher(u64 n) {
  const u64 ones = digit_sum(n, Prime{2});
  if (ones > 62) throw Error(ErrorCode::Overflow, "2^s_2(n) does not fit below 2^63");
  return u64{1} << ones;
}

ValuationSpectrum zumkeller_spectrum_closed_form(const ZumkellerClass& c, Prime p) {
  using namespace zumkeller;
  const u64 n = compose_zumkeller(c, p);  // throws NotZumkellerInput
  std::vector<u64> counts = std::visit(
      [&](const auto& v) -> std::vector<u64> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AllMax>) {
          return {checked_pow(p, v.m + 1)};
        } else if constexpr (std::is_same_v<T, LeadingException>) {
          return {(v.leading + 1) * checked_pow(p, v.m)};
        } else if constexpr (std::is_same_v<T, InnerException>) {
          std::vector<u64> out;
          for (std::size_t k = 0; k <= v.t; ++k) out.push_back((p - 1) * checked_pow(p, v.m - k));
          return out;
        } else {
          return {1};  // Zero
        }
      },
      c);
  return ValuationSpectrum(p, n, std::move(counts));
}

}  // namespace binpred
