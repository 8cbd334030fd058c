#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "binperm/field.hpp"

namespace binperm {

/// The binomial x^i + a x over a field, with 2 <= i <= q - 2 and a != 0.
class Binomial {
 public:
  /// Throws std::invalid_argument if i or a is out of range.
  Binomial(const Field& field, std::uint32_t i, Element a);

  const Field& field() const { return *field_; }
  std::uint32_t exponent() const { return i_; }
  Element coefficient() const { return a_; }

  /// f(c) = c^i + a c.
  Element evaluate(Element c) const;

 private:
  const Field* field_;
  std::uint32_t i_;
  Element a_;
};

/// Reusable bit set sized to a field; kernels clear and refill it per test.
class OccupancyMask {
 public:
  explicit OccupancyMask(std::size_t bits = 0) { resize(bits); }

  void resize(std::size_t bits) { words_.assign((bits + 63) / 64, 0); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  /// Sets bit v and reports whether it was already set.
  bool test_and_set(std::uint32_t v) {
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool seen = (w & bit) != 0;
    w |= bit;
    return seen;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Evaluates f on every element and aborts at the first repeated value.
bool is_pp_direct(const Binomial& b);
bool is_pp_direct(const Binomial& b, OccupancyMask& scratch);

/// True iff 0 is the only root of f, i.e. a^d != 1 with d = (q-1)/gcd(i-1, q-1).
bool root_count_check(const Binomial& b);

/// Coefficient of x^(q-1) in (x^i + a x)^t mod (x^q - x), as the power sum
/// of f(c)^t over all c. Throws std::invalid_argument unless 1 <= t <= q - 2.
Element hermite_power_sum(const Binomial& b, std::uint32_t t);

/// Hermite's criterion: one root, and a vanishing x^(q-1) coefficient for every
/// t in [1, q-2] (even t included). O(q^2); meant for q <= 2^10.
bool is_pp_hermite(const Binomial& b);

}  // namespace binperm
