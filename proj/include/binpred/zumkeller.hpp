#pragma once

#include <string>
#include <variant>
#include <vector>

#include "binpred/digits.hpp"

namespace binpred {

// Base-p Zumkeller numbers: zero, or numbers whose digits are all p-1 except
// at most one. An exceptional leading digit may be anything in [1, p-2]; an
// exceptional digit anywhere else must be exactly p-2.
//
// m is always the index of the last digit (digit count minus one).

namespace zumkeller {

struct NotZumkeller {
  friend bool operator==(const NotZumkeller&, const NotZumkeller&) = default;
};
struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct AllMax {
  std::size_t m;
  friend bool operator==(const AllMax&, const AllMax&) = default;
};
struct LeadingException {
  Digit leading;
  std::size_t m;
  friend bool operator==(const LeadingException&, const LeadingException&) = default;
};
// Digit p-2 at index t (1 <= t <= m when produced by classify).
struct InnerException {
  std::size_t t;
  std::size_t m;
  friend bool operator==(const InnerException&, const InnerException&) = default;
};

}  // namespace zumkeller

using ZumkellerClass = std::variant<zumkeller::NotZumkeller, zumkeller::Zero, zumkeller::AllMax,
                                    zumkeller::LeadingException, zumkeller::InnerException>;

inline bool is_zumkeller(const ZumkellerClass& c) {
  return !std::holds_alternative<zumkeller::NotZumkeller>(c);
}

/// A leading p-2 followed by p-1 digits matches both the leading and the
/// t = 0 inner pattern; it is reported as LeadingException.
ZumkellerClass classify_zumkeller(u64 n, Prime p);

/// Rebuilds the number a classification describes. Throws NotZumkellerInput
/// for NotZumkeller.
u64 compose_zumkeller(const ZumkellerClass& c, Prime p);

/// All Zumkeller numbers <= limit in ascending order, generated from digit
/// patterns rather than by testing every integer.
std::vector<u64> enumerate_zumkeller(Prime p, u64 limit);

std::string describe(const ZumkellerClass& c);

}  // namespace binpred
