#pragma once

#include <cstdint>
#include <vector>

#include "binperm/field.hpp"

namespace binperm {

/// binom(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of the bits of n.
/// Throws std::invalid_argument if k > n.
int lucas_binom_mod2(std::uint64_t n, std::uint64_t k);

/// Positions k in [0, t] whose term x^(t + (i-1)k) of (x^i + a x)^t lands on
/// x^(q-1) after reduction, i.e. t + (i-1)k = 0 mod (q-1).
struct CongruentIndexSet {
  std::uint64_t t = 0;
  std::uint64_t i = 0;
  std::uint64_t modulus = 0;               // q - 1 of the ambient field
  std::vector<std::uint64_t> members;      // all solutions, ascending
  std::vector<std::uint64_t> surviving;    // members with binom(t, k) odd
};

/// Solutions are stepped through their single residue class modulo
/// modulus / gcd(i-1, modulus), so t may be far larger than the class count.
/// Throws std::invalid_argument unless 1 <= t <= modulus - 1 and modulus >= 2.
CongruentIndexSet congruent_set(std::uint64_t t, std::uint64_t i, std::uint64_t modulus);

/// Coefficient of x^(q-1) in (x^i + a x)^t mod (x^q - x), symbolically:
/// the sum of a^(t-k) over the surviving k.
Element binomial_power_coeff(const Field& field, std::uint64_t i, Element a, std::uint64_t t);

}  // namespace binperm
