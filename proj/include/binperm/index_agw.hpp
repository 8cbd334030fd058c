#pragma once

#include <cstdint>
#include <vector>

#include "binperm/field.hpp"
#include "binperm/perm_test.hpp"

namespace binperm {

/// x^i + a x = x((x^s)^e + a) with s = gcd(i-1, q-1), index d = (q-1)/s, e = (i-1)/s.
struct IndexForm {
  std::uint32_t i = 0;
  std::uint32_t s = 0;
  std::uint32_t d = 0;
  std::uint32_t e = 0;

  friend bool operator==(const IndexForm&, const IndexForm&) = default;
};

/// Throws std::invalid_argument unless 2 <= i <= q - 2.
IndexForm compute_index(const Field& field, std::uint32_t i);

/// The induced map u -> u (u^e + a)^s on mu_d. image[k] is the image of
/// domain[k]; a zero image means u^e + a vanished somewhere on mu_d.
struct ReducedMap {
  std::vector<Element> domain;
  std::vector<Element> image;

  /// True iff the images are pairwise distinct elements of mu_d.
  bool is_bijection_of(const Field& field, std::uint32_t d) const;
};

/// Evaluated with Field::pow, independently of the log-index kernel below.
ReducedMap agw_reduced_map(const Field& field, const IndexForm& form, Element a);

/// Multiplicative AGW criterion (r = 1): x^i + a x permutes GF(q) iff the
/// reduced map permutes mu_d. Falls through to is_pp_direct when s = 1.
bool is_pp_via_agw(const Field& field, std::uint32_t i, Element a);

/// Kernel form with caller-owned scratch of at least d bits (q bits if s = 1).
bool is_pp_via_agw(const Field& field, const IndexForm& form, Element a, OccupancyMask& scratch);

/// Over GF(q^2), q = 2^n with n odd >= 3, and a in mu_(q+1) \ mu_((q+1)/3):
/// checks u (u^6 + a)^(q-1) = a^-1 u^-5 for every u in mu_(q+1).
/// Throws std::domain_error when the field or a does not meet that precondition.
bool eq36_identity_check(const Field& field, Element a);

}  // namespace binperm
