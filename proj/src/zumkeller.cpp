#include "binpred/zumkeller.hpp"

#include <algorithm>
#include <string>

#include "binpred/error.hpp"

namespace binpred {

using namespace zumkeller;

ZumkellerClass classify_zumkeller(u64 n, Prime p) {
  const DigitExpansion e = expand(n, p);
  if (e.is_zero()) return Zero{};

  const Digit max = static_cast<Digit>(p - 1);
  const std::size_t m = e.top_index();

  std::size_t off_count = 0;
  std::size_t off_index = 0;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (e.digits[i] != max) {
      ++off_count;
      off_index = i;
    }
  }

  if (off_count == 0) return AllMax{m};
  if (off_count > 1) return NotZumkeller{};

  const Digit off = e.digits[off_index];
  if (off_index == 0) {
    // Leading digit is never 0, so off is in [1, p-2] here.
    return LeadingException{off, m};
  }
  if (off == p - 2) return InnerException{off_index, m};
  return NotZumkeller{};
}

u64 compose_zumkeller(const ZumkellerClass& c, Prime p) {
  const Digit max = static_cast<Digit>(p - 1);
  auto all_max = [&](std::size_t m) {
    if (m >= 64) throw Error(ErrorCode::Overflow, "too many digits");
    return std::vector<Digit>(m + 1, max);
  };
  return std::visit(
      [&](const auto& v) -> u64 {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotZumkeller>) {
          throw Error(ErrorCode::NotZumkellerInput, "classification is NotZumkeller");
        } else if constexpr (std::is_same_v<T, Zero>) {
          return 0;
        } else if constexpr (std::is_same_v<T, AllMax>) {
          return compose(all_max(v.m), p);
        } else if constexpr (std::is_same_v<T, LeadingException>) {
          auto digits = all_max(v.m);
          digits.front() = v.leading;
          return compose(digits, p);
        } else {
          return build_inner_exception(p, v.t, v.m);
        }
      },
      c);
}

std::vector<u64> enumerate_zumkeller(Prime p, u64 limit) {
  using wide = detail::u128;
  const u64 max = p - 1;
  std::vector<u64> out{0};

  // Values of each length L lie in [p^(L-1), p^L), so stop at the first
  // length whose smallest value exceeds the limit.
  wide low = 1;
  for (std::size_t len = 1; low <= limit; ++len, low *= p) {
    const wide all = low * p - 1;  // (p-1)(p-1)...(p-1)
    auto keep = [&](wide v) {
      if (v <= limit) out.push_back(static_cast<u64>(v));
    };
    keep(all);
    // Leading digit lowered to 1..p-2; the value is (lead+1)p^(L-1) - 1.
    for (u64 lead = 1; lead < max; ++lead) {
      const wide v = (lead + 1) * low - 1;
      if (v > limit) break;
      keep(v);
    }
    // One inner digit lowered by one; position t counted from the front.
    wide place = low;
    for (std::size_t t = 1; t < len; ++t) {
      place /= p;
      keep(all - place);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const ZumkellerClass& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotZumkeller>) {
          return "not-zumkeller";
        } else if constexpr (std::is_same_v<T, Zero>) {
          return "zero";
        } else if constexpr (std::is_same_v<T, AllMax>) {
          return "all-max(m=" + std::to_string(v.m) + ")";
        } else if constexpr (std::is_same_v<T, LeadingException>) {
          return "leading-exception(n0=" + std::to_string(v.leading) + ",m=" + std::to_string(v.m) + ")";
        } else {
          return "inner-exception(t=" + std::to_string(v.t) + ",m=" + std::to_string(v.m) + ")";
        }
      },
      c);
}

}  // namespace binpred
