#include "binperm/field.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace binperm {

std::uint32_t carryless_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n) {
  const std::uint32_t top = 1u << n;
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly;
  }
  return r;
}

namespace {

int poly_degree(std::uint32_t p) { return std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); a != 0 && da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

std::uint32_t slow_pow(std::uint32_t x, std::uint64_t k, std::uint32_t poly, int n) {
  std::uint32_t r = 1;
  while (k != 0) {
    if (k & 1u) r = carryless_mul_mod(r, x, poly, n);
    x = carryless_mul_mod(x, x, poly, n);
    k >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t poly, int n) {
  if (poly_degree(poly) != n) return false;
  for (std::uint32_t d = 2; poly_degree(d) <= n / 2; ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

Field::Field(int n) : n_(n) {
  if (n < kMinDegree || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 16], got " + std::to_string(n));
  q_ = 1u << n;
  const std::uint32_t order = q_ - 1;

  // Odd candidates only: x itself is the one irreducible with zero constant term.
  poly_ = 0;
  for (std::uint32_t p = q_ | 1u; p < 2 * q_; p += 2) {
    if (is_irreducible(p, n)) {
      poly_ = p;
      break;
    }
  }

  const auto primes = prime_factors(order);
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool primitive = slow_pow(g, order, poly_, n) == 1;
    for (auto p : primes) primitive = primitive && slow_pow(g, order / p, poly_, n) != 1;
    if (primitive) {
      generator_ = Element{g};
      break;
    }
  }

  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  std::uint32_t v = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = v;
    exp_[k + order] = v;
    log_[v] = k;
    v = carryless_mul_mod(v, generator_.bits, poly_, n);
  }
}

Element Field::mul(Element x, Element y) const {
  if (x.bits == 0 || y.bits == 0) return Element{};
  return Element{exp_[log_[x.bits] + log_[y.bits]]};
}

Element Field::inv(Element x) const {
  if (x.bits == 0) throw std::domain_error("zero has no multiplicative inverse");
  const std::uint32_t l = log_[x.bits];
  return Element{exp_[l == 0 ? 0 : group_order() - l]};
}

Element Field::pow(Element x, std::int64_t k) const {
  if (x.bits == 0) {
    if (k < 0) throw std::domain_error("zero raised to a negative power");
    return Element{k == 0 ? 1u : 0u};
  }
  const auto m = static_cast<std::int64_t>(group_order());
  auto e = static_cast<std::uint64_t>(((k % m) + m) % m);
  Element r{1};
  while (e != 0) {
    if (e & 1u) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::order(Element x) const {
  if (x.bits == 0) throw std::domain_error("order of zero is undefined");
  return group_order() / std::gcd(log(x), group_order());
}

void Field::require_divides_group_order(std::uint64_t d) const {
  if (d == 0 || group_order() % d != 0)
    throw std::invalid_argument(std::to_string(d) + " does not divide q - 1 = " +
                                std::to_string(group_order()));
}

bool Field::in_mu(Element x, std::uint32_t d) const {
  require_divides_group_order(d);
  if (x.bits == 0) throw std::domain_error("zero is not a root of unity");
  return log(x) % (group_order() / d) == 0;
}

std::vector<Element> Field::enumerate_mu(std::uint32_t d) const {
  require_divides_group_order(d);
  const std::uint32_t step = group_order() / d;
  std::vector<Element> out;
  out.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) out.push_back(Element{exp_[k * step]});
  return out;
}

Element Field::norm_to_subfield(Element x, int m) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(m) + " does not divide " +
                                std::to_string(n_));
  if (x.bits == 0) return x;
  return pow(x, group_order() / ((1u << m) - 1));
}

}  // namespace binperm
