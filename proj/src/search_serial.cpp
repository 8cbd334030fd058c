#include <numeric>

#include "binperm/index_agw.hpp"
#include "binperm/perm_test.hpp"
#include "binperm/search.hpp"

namespace binperm {

std::vector<PBRecord> search_field_serial(const SearchConfig& config) {
  config.validate();
  const Field field(config.n);
  std::vector<PBRecord> rows;
  if (field.size() < 4) return rows;
  const std::uint32_t lo = config.i_range ? config.i_range->lo : 2;
  const std::uint32_t hi = config.i_range ? config.i_range->hi : field.size() - 2;

  for (std::uint32_t i = lo; i <= hi; ++i) {
    if (config.skip_linearized && is_power_of_two(i)) continue;
    std::vector<Element> valid;
    for (std::uint32_t v = 1; v < field.size(); ++v) {
      const Binomial b(field, i, Element{v});
      bool ok = false;
      switch (config.tester) {
        case Tester::Auto:
        case Tester::Direct: ok = is_pp_direct(b); break;
        case Tester::Agw: ok = is_pp_via_agw(field, i, b.coefficient()); break;
        case Tester::Hermite: ok = is_pp_hermite(b); break;
        case Tester::CrossCheck: {
          ok = is_pp_direct(b);
          if (ok != is_pp_via_agw(field, i, b.coefficient()) || ok != is_pp_hermite(b))
            throw TesterDisagreement("testers disagree on x^" + std::to_string(i) +
                                     " + a x with a = " + std::to_string(v));
          break;
        }
      }
      if (ok) valid.push_back(b.coefficient());
    }
    if (!valid.empty())
      rows.push_back(make_record(config.n, i, compute_index(field, i).d, std::move(valid)));
  }
  return rows;
}

}  // namespace binperm
