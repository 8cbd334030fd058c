#include "binperm/index_agw.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace binperm {

IndexForm compute_index(const Field& field, std::uint32_t i) {
  if (field.size() < 4 || i < 2 || i > field.size() - 2)
    throw std::invalid_argument("exponent " + std::to_string(i) + " outside [2, q-2] for q = " +
                                std::to_string(field.size()));
  const std::uint32_t s = std::gcd(i - 1, field.group_order());
  return IndexForm{i, s, field.group_order() / s, (i - 1) / s};
}

bool ReducedMap::is_bijection_of(const Field& field, std::uint32_t d) const {
  OccupancyMask seen(field.size());
  for (Element v : image) {
    if (v.bits == 0 || !field.in_mu(v, d) || seen.test_and_set(v.bits)) return false;
  }
  return image.size() == d;
}

ReducedMap agw_reduced_map(const Field& field, const IndexForm& form, Element a) {
  ReducedMap map;
  map.domain = field.enumerate_mu(form.d);
  map.image.reserve(map.domain.size());
  for (Element u : map.domain) {
    const Element inner = field.pow(u, form.e) + a;
    map.image.push_back(field.mul(u, field.pow(inner, form.s)));
  }
  return map;
}

bool is_pp_via_agw(const Field& field, std::uint32_t i, Element a) {
  const IndexForm form = compute_index(field, i);
  OccupancyMask scratch(form.s == 1 ? field.size() : form.d);
  return is_pp_via_agw(field, form, a, scratch);
}

bool is_pp_via_agw(const Field& field, const IndexForm& form, Element a, OccupancyMask& scratch) {
  if (form.s == 1) return is_pp_direct(Binomial(field, form.i, a), scratch);

  const auto exp = field.exp_table();
  const auto log = field.log_table();
  const std::uint32_t order = field.group_order();
  // u = g^(s k): u^e = g^(s e k), and u (u^e + a)^s = g^(s (k + log(u^e + a))),
  // so the image of index k is index (k + log(u^e + a)) mod d.
  const std::uint32_t step = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(form.s) * form.e) % order);
  scratch.clear();
  std::uint32_t log_ue = 0;
  for (std::uint32_t k = 0; k < form.d; ++k) {
    const std::uint32_t w = exp[log_ue] ^ a.bits;
    if (w == 0) return false;
    if (scratch.test_and_set((k + log[w]) % form.d)) return false;
    log_ue += step;
    if (log_ue >= order) log_ue -= order;
  }
  return true;
}

bool eq36_identity_check(const Field& field, Element a) {
  const int n2 = field.degree();
  if (n2 % 2 != 0 || (n2 / 2) % 2 == 0 || n2 / 2 < 3)
    throw std::domain_error("identity needs GF(q^2) with q = 2^n, n odd and >= 3");
  const std::uint32_t q = 1u << (n2 / 2);
  if (a.bits == 0 || !field.in_mu(a, q + 1) || field.in_mu(a, (q + 1) / 3))
    throw std::domain_error("identity needs a in mu_(q+1) and not in mu_((q+1)/3)");

  const Element a_inv = field.inv(a);
  for (Element u : field.enumerate_mu(q + 1)) {
    const Element lhs = field.mul(u, field.pow(field.pow(u, 6) + a, q - 1));
    const Element rhs = field.mul(a_inv, field.pow(u, -5));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace binperm
