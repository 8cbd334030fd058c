#include "binperm/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "binperm/index_agw.hpp"
#include "binperm/perm_test.hpp"

namespace binperm {

namespace {

using Clock = std::chrono::steady_clock;

// Exponents printed for x^(6q-5) + a x over GF(2^6), as powers of some primitive gamma.
const std::vector<std::uint32_t> kF1Q8Exponents = {3,  6,  7,  12, 14, 24, 27, 28,
                                                   33, 35, 45, 48, 49, 54, 56};

[[noreturn]] void bad_base(std::string_view family, int base_n, std::string_view why) {
  throw std::invalid_argument(std::string(family) + " needs " + std::string(why) + ", got base_n = " +
                              std::to_string(base_n));
}

// Halving modulo an odd group order: add the order first when x is odd.
std::uint64_t half_mod(std::uint64_t x, std::uint64_t order) {
  x %= order;
  return (x % 2 == 0 ? x : x + order) / 2;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Element> mu_window_set(const Field& field, const MuWindow& w) {
  std::vector<Element> out;
  for (std::uint32_t v = 1; v < field.size(); ++v) {
    const Element a{v};
    if (field.in_mu(a, w.outer) && !field.in_mu(a, w.inner)) out.push_back(a);
  }
  return out;
}

std::vector<Element> gamma_power_set(const Field& field, Element gamma,
                                     const std::vector<std::uint32_t>& exponents) {
  std::vector<Element> out;
  for (auto e : exponents) out.push_back(field.pow(gamma, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string_view family_tag(Family family) {
  switch (family) {
    case Family::F1_Q2: return "f1";
    case Family::F2_Q3: return "f2";
    case Family::H2_Q3: return "h2";
    case Family::F3_Q4: return "f3";
    case Family::F4_Q4: return "f4";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view tag) {
  for (Family f : {Family::F1_Q2, Family::F2_Q3, Family::H2_Q3, Family::F3_Q4, Family::F4_Q4})
    if (family_tag(f) == tag) return f;
  return std::nullopt;
}

TheoremCase f1_case(int base_n) {
  if (base_n < 3 || base_n % 2 == 0 || 2 * base_n > kMaxDegree)
    bad_base("f1", base_n, "odd base_n >= 3 with 2 base_n <= 16");
  const std::uint32_t q = 1u << base_n;
  Predicate p = base_n == 3 ? Predicate{GammaPowers{kF1Q8Exponents}}
                            : Predicate{MuWindow{q + 1, (q + 1) / 3}};
  return TheoremCase{Family::F1_Q2, 2, base_n, 6 * q - 5, std::move(p)};
}

TheoremCase f2_case(int base_n) {
  if (base_n < 2 || base_n % 2 != 0 || 3 * base_n > kMaxDegree)
    bad_base("f2", base_n, "even base_n >= 2 with 3 base_n <= 16");
  const std::uint32_t q = 1u << base_n;
  const std::uint32_t w = q * q + q + 1;
  return TheoremCase{Family::F2_Q3, 3, base_n, (q * q + q) / 2, MuWindow{w, w / 3}};
}

TheoremCase h2_case(int base_n) {
  if (base_n < 2 || base_n % 2 != 0 || 3 * base_n > kMaxDegree)
    bad_base("h2", base_n, "even base_n >= 2 with 3 base_n <= 16");
  const std::uint32_t q = 1u << base_n;
  const std::uint32_t w = q * q + q + 1;
  return TheoremCase{Family::H2_Q3, 3, base_n, q * q + q - 1, MuWindow{w, w / 3}};
}

TheoremCase f3_case(int base_n) {
  if (base_n < 2 || 4 * base_n > kMaxDegree) bad_base("f3", base_n, "2 <= base_n <= 4");
  const std::uint64_t q = 1u << base_n;
  const std::uint64_t order = q * q * q * q - 1;
  const std::uint64_t numerator = (q - 1) * (q * q + 1);
  const auto exponent = static_cast<std::uint32_t>((half_mod(numerator, order) + 1) % order);
  return TheoremCase{Family::F3_Q4, 4, base_n, exponent,
                     MuWindow{static_cast<std::uint32_t>(q * q - 1), static_cast<std::uint32_t>(q + 1)}};
}

TheoremCase f4_case(int base_n) {
  if (base_n != 2 && base_n != 4) bad_base("f4", base_n, "base_n in {2, 4}");
  const std::uint64_t q = 1u << base_n;
  const std::uint64_t order = q * q * q * q - 1;
  const auto exponent = static_cast<std::uint32_t>((2 * q * q * q + 2 * q * q + 2 * q + 3) % order);
  Predicate p = base_n == 2 ? Predicate{NormReducedSet{}} : Predicate{NoneValid{}};
  return TheoremCase{Family::F4_Q4, 4, base_n, exponent, std::move(p)};
}

TheoremCase make_case(Family family, int base_n) {
  switch (family) {
    case Family::F1_Q2: return f1_case(base_n);
    case Family::F2_Q3: return f2_case(base_n);
    case Family::H2_Q3: return h2_case(base_n);
    case Family::F3_Q4: return f3_case(base_n);
    case Family::F4_Q4: return f4_case(base_n);
  }
  throw std::invalid_argument("unknown family");
}

bool inverse_exponent_identity(int base_n) {
  const std::uint64_t q = 1u << base_n;
  const std::uint64_t order = q * q * q - 1;
  return (q * q + q - 1) % order * (((q * q + q) / 2) % order) % order == 1;
}

std::vector<Element> f4_norm_valid_set(int base_n) {
  if (base_n < 1 || 4 * base_n > kMaxDegree)
    throw std::invalid_argument("norm scan needs 4 base_n <= 16");
  const Field field(4 * base_n);
  const std::uint32_t q = 1u << base_n;
  const auto subgroup = field.enumerate_mu(q - 1);  // GF(q)^*

  std::vector<char> ok(field.size(), 0);
#pragma omp parallel
  {
    OccupancyMask seen(field.size());
#pragma omp for schedule(static)
    for (std::int64_t v = 1; v < static_cast<std::int64_t>(field.size()); ++v) {
      const Element a{static_cast<std::uint32_t>(v)};
      seen.clear();
      bool bijective = true;
      for (Element x : subgroup) {
        const Element w = field.mul(x, x) + a;
        if (w.bits == 0 || seen.test_and_set(field.mul(x, field.norm_to_subfield(w, base_n)).bits)) {
          bijective = false;
          break;
        }
      }
      ok[v] = bijective;
    }
  }
  std::vector<Element> out;
  for (std::uint32_t v = 1; v < field.size(); ++v)
    if (ok[v]) out.push_back(Element{v});
  return out;
}

bool f4_nonexistence_scan(int base_n) { return !f4_norm_valid_set(base_n).empty(); }

bool h3_permutes_mu_check(const Field& field, Element a) {
  if (field.degree() % 4 != 0) throw std::invalid_argument("h3 lives over GF(q^4)");
  if (a.bits == 0) throw std::invalid_argument("coefficient must be nonzero");
  const std::uint32_t q = 1u << (field.degree() / 4);
  const std::int64_t s = static_cast<std::int64_t>(q - 1) * (static_cast<std::int64_t>(q) * q + 1);
  OccupancyMask seen(field.size());
  for (Element u : field.enumerate_mu(q + 1)) {
    const Element v = field.mul(field.mul(u, u), field.pow(u + a, s));
    if (v.bits == 0 || !field.in_mu(v, q + 1) || seen.test_and_set(v.bits)) return false;
  }
  return true;
}

std::vector<Element> matching_generators(const Field& field,
                                         const std::vector<std::uint32_t>& exponents,
                                         const std::vector<Element>& target) {
  std::vector<Element> sorted_target = target;
  std::sort(sorted_target.begin(), sorted_target.end());
  std::vector<Element> out;
  for (std::uint32_t v = 1; v < field.size(); ++v) {
    const Element gamma{v};
    if (field.order(gamma) != field.group_order()) continue;
    if (gamma_power_set(field, gamma, exponents) == sorted_target) out.push_back(gamma);
  }
  return out;
}

ValidationReport validate(const TheoremCase& theorem, ValidationTester tester) {
  const int n = theorem.total_degree();
  if (tester == ValidationTester::Direct && n > 12)
    throw std::invalid_argument("direct tester is limited to GF(2^12); use the AGW tester");
  const bool use_direct =
      tester == ValidationTester::Direct || (tester == ValidationTester::Auto && n <= 12);

  const Field field(n);
  ValidationReport report{theorem, {}, {}, {}, {}, use_direct ? "direct" : "agw", 0, 0};

  auto start = Clock::now();
  const IndexForm form = compute_index(field, theorem.exponent);
  std::vector<char> ok(field.size(), 0);
#pragma omp parallel
  {
    OccupancyMask scratch(field.size());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 1; v < static_cast<std::int64_t>(field.size()); ++v) {
      const Element a{static_cast<std::uint32_t>(v)};
      ok[v] = use_direct ? is_pp_direct(Binomial(field, theorem.exponent, a), scratch)
                         : is_pp_via_agw(field, form, a, scratch);
    }
  }
  for (std::uint32_t v = 1; v < field.size(); ++v)
    if (ok[v]) report.brute.push_back(Element{v});
  report.brute_seconds = seconds_since(start);

  start = Clock::now();
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, MuWindow>) {
          report.predicted = mu_window_set(field, p);
        } else if constexpr (std::is_same_v<P, NormReducedSet>) {
          report.predicted = f4_norm_valid_set(theorem.base_n);
        } else if constexpr (std::is_same_v<P, GammaPowers>) {
          report.matching_gammas = matching_generators(field, p.exponents, report.brute);
          const Element gamma =
              report.matching_gammas.empty() ? field.generator() : report.matching_gammas.front();
          report.predicted = gamma_power_set(field, gamma, p.exponents);
        }
      },
      theorem.predicate);
  report.predicted_seconds = seconds_since(start);

  std::set_symmetric_difference(report.predicted.begin(), report.predicted.end(),
                                report.brute.begin(), report.brute.end(),
                                std::back_inserter(report.discrepancies));
  return report;
}

std::vector<int> supported_base_degrees(Family family) {
  switch (family) {
    case Family::F1_Q2: return {3, 5, 7};
    case Family::F2_Q3:
    case Family::H2_Q3: return {2, 4};
    case Family::F3_Q4: return {2, 3, 4};
    case Family::F4_Q4: return {2, 4};
  }
  return {};
}

std::vector<std::string> theorem_tags_for(int n, std::uint32_t i) {
  std::vector<std::string> tags;
  for (Family family : {Family::F1_Q2, Family::F2_Q3, Family::H2_Q3, Family::F3_Q4, Family::F4_Q4}) {
    for (int base_n : supported_base_degrees(family)) {
      const TheoremCase c = make_case(family, base_n);
      if (c.total_degree() == n && c.exponent == i) tags.emplace_back(family_tag(family));
    }
  }
  return tags;
}

}  // namespace binperm
