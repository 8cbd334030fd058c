#include "binperm/search.hpp"

#include <omp.h>

#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "binperm/index_agw.hpp"
#include "binperm/perm_test.hpp"
#include "binperm/theorems.hpp"

namespace binperm {

std::string_view tester_name(Tester tester) {
  switch (tester) {
    case Tester::Auto: return "auto";
    case Tester::Direct: return "direct";
    case Tester::Agw: return "agw";
    case Tester::Hermite: return "hermite";
    case Tester::CrossCheck: return "cross-check";
  }
  return "?";
}

std::optional<Tester> parse_tester(std::string_view name) {
  for (Tester t : {Tester::Auto, Tester::Direct, Tester::Agw, Tester::Hermite, Tester::CrossCheck})
    if (tester_name(t) == name) return t;
  return std::nullopt;
}

void SearchConfig::validate() const {
  if (n < kMinDegree || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 16], got " + std::to_string(n));
  if ((tester == Tester::Hermite || tester == Tester::CrossCheck) && n > 10)
    throw std::invalid_argument(std::string(tester_name(tester)) +
                                " tester is O(q^2) per pair and refused for n > 10");
  if (i_range) {
    const std::uint32_t q = 1u << n;
    if (q < 4 || i_range->lo < 2 || i_range->hi > q - 2 || i_range->lo > i_range->hi)
      throw std::invalid_argument("exponent range must lie within [2, q-2] with lo <= hi");
  }
  if (workers < 0) throw std::invalid_argument("worker count must be positive");
}

bool is_power_of_two(std::uint32_t v) { return std::has_single_bit(v); }

PBRecord make_record(int n, std::uint32_t i, std::uint32_t index_d, std::vector<Element> valid) {
  PBRecord r;
  r.n = n;
  r.i = i;
  r.index_d = index_d;
  r.linearized = is_power_of_two(i);
  r.valid_count = valid.size();
  r.a_min = valid.front();
  r.a_max = valid.back();
  r.a_sample = valid[valid.size() / 2];
  r.theorem_tags = theorem_tags_for(n, i);
  r.elided = n > kFullListMaxDegree;
  if (!r.elided) r.valid_a = std::move(valid);
  return r;
}

LinearizedCriterion::LinearizedCriterion(const Field& field, int j) : field_(&field) {
  if (j < 1 || j >= field.degree())
    throw std::invalid_argument("linearized exponent 2^j needs 1 <= j < n, got j = " +
                                std::to_string(j));
  power_ = (1u << std::gcd(j, field.degree())) - 1;
}

bool LinearizedCriterion::operator()(Element a) const {
  return field_->pow(a, field_->group_order() / power_).bits != 1;
}

LinearizedCriterion classify_linearized(const Field& field, int j) { return {field, j}; }

namespace {

struct Scratch {
  explicit Scratch(const Field& field) : mask(field.size()) {}
  OccupancyMask mask;
};

bool decide(const Field& field, const IndexForm& form, Element a, Tester tester, Scratch& scratch) {
  const bool root_ok = field.log(a) % form.s != 0;
  switch (tester) {
    case Tester::Auto:
      if (!root_ok) return false;
      if (static_cast<std::uint64_t>(form.d) * form.d <= field.size())
        return is_pp_via_agw(field, form, a, scratch.mask);
      return is_pp_direct(Binomial(field, form.i, a), scratch.mask);
    case Tester::Direct:
      return root_ok && is_pp_direct(Binomial(field, form.i, a), scratch.mask);
    case Tester::Agw:
      return root_ok && is_pp_via_agw(field, form, a, scratch.mask);
    case Tester::Hermite:
      return is_pp_hermite(Binomial(field, form.i, a));
    case Tester::CrossCheck: {
      const Binomial b(field, form.i, a);
      const bool direct = is_pp_direct(b, scratch.mask);
      const bool agw = is_pp_via_agw(field, form, a, scratch.mask);
      const bool hermite = is_pp_hermite(b);
      if (direct != agw || direct != hermite)
        throw TesterDisagreement("testers disagree on x^" + std::to_string(form.i) +
                                 " + a x with a = " + std::to_string(a.bits) + " over GF(2^" +
                                 std::to_string(field.degree()) + ")");
      return direct;
    }
  }
  return false;
}

std::vector<Element> valid_coefficients(const Field& field, const IndexForm& form, Tester tester,
                                        bool a_reduction, Scratch& scratch) {
  std::vector<Element> out;
  if (!a_reduction) {
    for (std::uint32_t v = 1; v < field.size(); ++v)
      if (decide(field, form, Element{v}, tester, scratch)) out.push_back(Element{v});
    return out;
  }

  // Validity depends only on log(a) mod s (scaling by (i-1)-th powers) and is
  // preserved by squaring, which doubles the residue.
  const std::uint32_t s = form.s;
  std::vector<char> seen(s, 0);
  std::vector<char> valid_residue(s, 0);
  for (std::uint32_t r = 0; r < s; ++r) {
    if (seen[r]) continue;
    const bool ok = decide(field, form, field.exp(r), tester, scratch);
    std::uint32_t x = r;
    do {
      seen[x] = 1;
      valid_residue[x] = ok;
      x = static_cast<std::uint32_t>((2ull * x) % s);
    } while (x != r);
  }
  for (std::uint32_t v = 1; v < field.size(); ++v)
    if (valid_residue[field.log(Element{v}) % s]) out.push_back(Element{v});
  return out;
}

}  // namespace

std::vector<Element> valid_coefficients(const Field& field, std::uint32_t i, Tester tester,
                                        bool a_reduction) {
  Scratch scratch(field);
  return valid_coefficients(field, compute_index(field, i), tester, a_reduction, scratch);
}

int resolve_workers(const SearchConfig& config) {
  if (config.workers > 0) return config.workers;
  if (const char* env = std::getenv("BINPERM_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return omp_get_max_threads();
}

std::vector<PBRecord> search_field(const SearchConfig& config) {
  config.validate();
  const Field field(config.n);
  if (field.size() < 4) return {};
  const std::uint32_t lo = config.i_range ? config.i_range->lo : 2;
  const std::uint32_t hi = config.i_range ? config.i_range->hi : field.size() - 2;

  std::vector<std::optional<PBRecord>> slots(hi - lo + 1);
  std::exception_ptr failure;
#pragma omp parallel num_threads(resolve_workers(config))
  {
    Scratch scratch(field);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = lo; i <= static_cast<std::int64_t>(hi); ++i) {
      const auto exponent = static_cast<std::uint32_t>(i);
      if (config.skip_linearized && is_power_of_two(exponent)) continue;
      try {
        const IndexForm form = compute_index(field, exponent);
        auto valid = valid_coefficients(field, form, config.tester, config.a_reduction, scratch);
        if (!valid.empty())
          slots[exponent - lo] = make_record(config.n, exponent, form.d, std::move(valid));
      } catch (...) {
#pragma omp critical(binperm_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PBRecord> rows;
  for (auto& slot : slots)
    if (slot) rows.push_back(std::move(*slot));
  return rows;
}

}  // namespace binperm
