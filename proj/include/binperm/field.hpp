#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace binperm {

/// An element of GF(2^n) in polynomial basis: bit k is the coefficient of x^k.
struct Element {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

  /// Field addition is XOR in characteristic 2.
  friend constexpr Element operator+(Element x, Element y) { return Element{x.bits ^ y.bits}; }
};

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 16;

/// Carry-less product of a and b reduced modulo `poly`, a polynomial of degree n.
std::uint32_t carryless_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n);

/// True iff `poly` (bit-encoded, degree n) is irreducible over GF(2), by trial division.
bool is_irreducible(std::uint32_t poly, int n);

/// Binary field GF(2^n), 1 <= n <= 16.
///
/// The model is pinned so that integer encodings of elements are reproducible:
/// the reduction polynomial is the smallest irreducible of degree n with
/// nonzero constant term, and the generator is the smallest integer whose
/// multiplicative order is q - 1. Discrete log tables are built eagerly.
///
/// A Field is immutable after construction and may be shared across threads.
class Field {
 public:
  /// Throws std::invalid_argument if n is outside [1, 16].
  explicit Field(int n);

  int degree() const { return n_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t group_order() const { return q_ - 1; }
  std::uint32_t reduction_poly() const { return poly_; }
  Element generator() const { return generator_; }

  bool contains(Element x) const { return x.bits < q_; }

  Element mul(Element x, Element y) const;
  Element inv(Element x) const;

  /// x^k with k taken modulo q - 1 for nonzero x. pow(0, 0) = 1, pow(0, k > 0) = 0.
  /// Throws std::domain_error for a zero base with negative exponent.
  Element pow(Element x, std::int64_t k) const;

  /// Discrete log base the generator, in [0, q - 2]. Precondition: x != 0.
  std::uint32_t log(Element x) const { return log_[x.bits]; }
  /// generator^k.
  Element exp(std::uint64_t k) const { return Element{exp_[k % (q_ - 1)]}; }

  /// Multiplicative order of a nonzero element. Throws std::domain_error on zero.
  std::uint32_t order(Element x) const;

  /// True iff x^d = 1. Throws std::invalid_argument unless d | q - 1, std::domain_error on x = 0.
  bool in_mu(Element x, std::uint32_t d) const;

  /// The d-th roots of unity g^(k (q-1)/d), k = 0..d-1, in increasing log order.
  std::vector<Element> enumerate_mu(std::uint32_t d) const;

  /// Norm onto the subfield of size 2^m: x^((2^n - 1)/(2^m - 1)). Zero maps to zero.
  /// Throws std::invalid_argument unless m | n.
  Element norm_to_subfield(Element x, int m) const;

  // Raw tables for the hot kernels. exp_table() has 2(q - 1) entries so that a
  // sum of two logs indexes it without reduction; log_table()[0] is unused.
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> exp_table() const { return exp_; }

 private:
  void require_divides_group_order(std::uint64_t d) const;

  int n_;
  std::uint32_t q_;
  std::uint32_t poly_;
  Element generator_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Prime divisors of v in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace binperm
