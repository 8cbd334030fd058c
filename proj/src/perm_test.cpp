#include "binperm/perm_test.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace binperm {

Binomial::Binomial(const Field& field, std::uint32_t i, Element a) : field_(&field), i_(i), a_(a) {
  if (field.size() < 4 || i < 2 || i > field.size() - 2)
    throw std::invalid_argument("exponent " + std::to_string(i) + " outside [2, q-2] for q = " +
                                std::to_string(field.size()));
  if (a.bits == 0 || !field.contains(a))
    throw std::invalid_argument("coefficient must be a nonzero field element");
}

Element Binomial::evaluate(Element c) const {
  return field_->pow(c, i_) + field_->mul(a_, c);
}

bool is_pp_direct(const Binomial& b) {
  OccupancyMask scratch(b.field().size());
  return is_pp_direct(b, scratch);
}

bool is_pp_direct(const Binomial& b, OccupancyMask& scratch) {
  const Field& f = b.field();
  const auto exp = f.exp_table();
  const std::uint32_t order = f.group_order();
  const std::uint32_t log_a = f.log(b.coefficient());
  const std::uint32_t i = b.exponent() % order;

  scratch.clear();
  scratch.test_and_set(0);  // f(0) = 0
  // c = g^k: c^i = g^(k i), a c = g^(log a + k).
  std::uint32_t log_pow = 0;
  for (std::uint32_t k = 0; k < order; ++k) {
    if (scratch.test_and_set(exp[log_pow] ^ exp[log_a + k])) return false;
    log_pow += i;
    if (log_pow >= order) log_pow -= order;
  }
  return true;
}

bool root_count_check(const Binomial& b) {
  const Field& f = b.field();
  const std::uint32_t s = std::gcd(b.exponent() - 1, f.group_order());
  return f.log(b.coefficient()) % s != 0;
}

Element hermite_power_sum(const Binomial& b, std::uint32_t t) {
  const Field& f = b.field();
  if (t < 1 || t > f.size() - 2)
    throw std::invalid_argument("Hermite exponent t = " + std::to_string(t) + " outside [1, q-2]");
  Element sum{};
  for (std::uint32_t c = 0; c < f.size(); ++c) sum = sum + f.pow(b.evaluate(Element{c}), t);
  return sum;
}

bool is_pp_hermite(const Binomial& b) {
  if (!root_count_check(b)) return false;

  const Field& f = b.field();
  const std::uint32_t order = f.group_order();
  const auto exp = f.exp_table();

  // Logs of the nonzero values f(c); zero values contribute nothing for t >= 1.
  std::vector<std::uint32_t> logs;
  logs.reserve(f.size());
  for (std::uint32_t c = 1; c < f.size(); ++c) {
    const Element v = b.evaluate(Element{c});
    if (v.bits != 0) logs.push_back(f.log(v));
  }

  std::vector<std::uint32_t> acc(logs.size(), 0);
  for (std::uint32_t t = 1; t <= f.size() - 2; ++t) {
    std::uint32_t sum = 0;
    for (std::size_t j = 0; j < logs.size(); ++j) {
      acc[j] += logs[j];
      if (acc[j] >= order) acc[j] -= order;
      sum ^= exp[acc[j]];
    }
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace binperm
