#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binperm/field.hpp"

namespace binperm {

/// How each (i, a) pair is decided.
///   Auto       root-count filter, then AGW when d^2 <= q, else direct
///   Direct     root-count filter, then direct evaluation with early abort
///   Agw        root-count filter, then the AGW reduced map
///   Hermite    Hermite's criterion (n <= 10)
///   CrossCheck all three testers, any disagreement throws (n <= 10)
enum class Tester { Auto, Direct, Agw, Hermite, CrossCheck };

std::string_view tester_name(Tester tester);
std::optional<Tester> parse_tester(std::string_view name);

struct ExponentRange {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

struct SearchConfig {
  int n = 0;
  Tester tester = Tester::Auto;
  bool skip_linearized = false;
  std::optional<ExponentRange> i_range;
  /// Test one coefficient per orbit of {a -> a^2, a -> a c^(i-1)} and expand.
  bool a_reduction = false;
  /// 0 means: BINPERM_WORKERS if set, else the OpenMP default.
  int workers = 0;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// Thrown by the cross-check tester when two testers disagree.
class TesterDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full valid-a lists are kept up to this degree; larger rows keep a summary.
inline constexpr int kFullListMaxDegree = 8;

struct PBRecord {
  int n = 0;
  std::uint32_t i = 0;
  std::uint32_t index_d = 0;
  bool linearized = false;
  std::uint64_t valid_count = 0;
  std::vector<Element> valid_a;  // sorted; empty when elided
  bool elided = false;
  Element a_min;
  Element a_max;
  Element a_sample;
  std::vector<std::string> theorem_tags;

  friend bool operator==(const PBRecord&, const PBRecord&) = default;
};

/// Builds a row from a nonempty sorted valid set, eliding the list above kFullListMaxDegree.
PBRecord make_record(int n, std::uint32_t i, std::uint32_t index_d, std::vector<Element> valid);

bool is_power_of_two(std::uint32_t v);

/// x^(2^j) + a x permutes GF(2^n) iff a is not a (2^gcd(j, n) - 1)-th power.
class LinearizedCriterion {
 public:
  /// Throws std::invalid_argument unless 1 <= j < n.
  LinearizedCriterion(const Field& field, int j);

  bool operator()(Element a) const;
  std::uint32_t power() const { return power_; }

 private:
  const Field* field_;
  std::uint32_t power_;  // 2^gcd(j, n) - 1
};

LinearizedCriterion classify_linearized(const Field& field, int j);

/// Sorted valid coefficients of x^i + a x using the optimized strategy.
std::vector<Element> valid_coefficients(const Field& field, std::uint32_t i, Tester tester,
                                        bool a_reduction);

/// OpenMP over exponents; rows sorted by i and identical for any worker count.
std::vector<PBRecord> search_field(const SearchConfig& config);

/// Single-threaded reference: every pair through the plain tester, no
/// filtering and no orbit reduction. Kept for cross-checking search_field.
std::vector<PBRecord> search_field_serial(const SearchConfig& config);

/// Worker count search_field will use for this config.
int resolve_workers(const SearchConfig& config);

}  // namespace binperm
