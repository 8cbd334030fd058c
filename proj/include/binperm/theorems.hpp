#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "binperm/field.hpp"

namespace binperm {

/// The five binomial families x^i + a x over GF(q^m), q = 2^base_n.
enum class Family {
  F1_Q2,  // x^(6q-5) over GF(q^2)
  F2_Q3,  // x^((q^2+q)/2) over GF(q^3)
  H2_Q3,  // x^(q^2+q-1) over GF(q^3)
  F3_Q4,  // x^((q^3-q^2+q-1)/2 + 1) over GF(q^4), halving mod q^4 - 1
  F4_Q4,  // x^(2q^3+2q^2+2q+3) over GF(q^4)
};

std::string_view family_tag(Family family);
/// Accepts "f1", "f2", "h2", "f3", "f4".
std::optional<Family> parse_family(std::string_view tag);

/// a in mu_outer and a not in mu_inner.
struct MuWindow {
  std::uint32_t outer = 0;
  std::uint32_t inner = 0;
};
/// No coefficient gives a permutation.
struct NoneValid {};
/// {gamma^e : e in exponents} for a primitive gamma the source leaves unpinned.
struct GammaPowers {
  std::vector<std::uint32_t> exponents;
};
/// Coefficients for which x (x^2 + a)^N permutes GF(q)^*, N the norm exponent.
struct NormReducedSet {};

using Predicate = std::variant<MuWindow, NoneValid, GammaPowers, NormReducedSet>;

struct TheoremCase {
  Family family;
  int m = 0;
  int base_n = 0;
  std::uint32_t exponent = 0;
  Predicate predicate;

  int total_degree() const { return m * base_n; }
  std::uint32_t base_q() const { return 1u << base_n; }
};

// Constructors throw std::invalid_argument when base_n is outside the family's
// hypotheses or the extension would exceed GF(2^16).
TheoremCase f1_case(int base_n);
TheoremCase f2_case(int base_n);
TheoremCase h2_case(int base_n);
TheoremCase f3_case(int base_n);
TheoremCase f4_case(int base_n);
TheoremCase make_case(Family family, int base_n);

/// Base degrees accepted by each family's constructor.
std::vector<int> supported_base_degrees(Family family);

/// (q^2+q-1)(q^2+q)/2 = 1 mod (q^3 - 1): h2's exponent inverts f2's.
bool inverse_exponent_identity(int base_n);

/// Coefficients a of GF(q^4) for which x -> x * N(x^2 + a) permutes GF(q)^*,
/// where N is the norm onto GF(q). Requires 4 base_n <= 16.
std::vector<Element> f4_norm_valid_set(int base_n);

/// True iff some nonzero a of GF(q^4) makes the norm-reduced map a bijection.
bool f4_nonexistence_scan(int base_n);

/// True iff u -> u^2 (u + a)^((q-1)(q^2+1)) permutes mu_(q+1) inside the
/// given GF(q^4). Throws std::invalid_argument unless 4 | degree.
bool h3_permutes_mu_check(const Field& field, Element a);

/// Primitive elements gamma with {gamma^e : e in exponents} equal to `target`.
std::vector<Element> matching_generators(const Field& field,
                                         const std::vector<std::uint32_t>& exponents,
                                         const std::vector<Element>& target);

enum class ValidationTester { Auto, Direct, Agw };

struct ValidationReport {
  TheoremCase theorem;
  std::vector<Element> predicted;
  std::vector<Element> brute;
  std::vector<Element> discrepancies;      // symmetric difference
  std::vector<Element> matching_gammas;    // GammaPowers predicates only
  std::string brute_tester;
  double predicted_seconds = 0;
  double brute_seconds = 0;

  bool verified() const { return discrepancies.empty(); }
};

/// Compares the predicted valid set to an exhaustive scan over all nonzero a.
/// Auto uses the direct tester up to GF(2^12) and the AGW kernel beyond.
/// Throws std::invalid_argument when Direct is requested above GF(2^12).
ValidationReport validate(const TheoremCase& theorem,
                          ValidationTester tester = ValidationTester::Auto);

/// Tags of the families whose exponent over GF(2^n) equals i.
std::vector<std::string> theorem_tags_for(int n, std::uint32_t i);

}  // namespace binperm
