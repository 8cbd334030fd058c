#include "binperm/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace binperm {

namespace {

using u128 = unsigned __int128;

// Inverse of x modulo m, gcd(x, m) = 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(x % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

}  // namespace

int lucas_binom_mod2(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    throw std::invalid_argument("binomial lower index " + std::to_string(k) + " exceeds " +
                                std::to_string(n));
  return (k & ~n) == 0 ? 1 : 0;
}

CongruentIndexSet congruent_set(std::uint64_t t, std::uint64_t i, std::uint64_t modulus) {
  if (modulus < 2 || t < 1 || t > modulus - 1)
    throw std::invalid_argument("Hermite exponent t = " + std::to_string(t) +
                                " outside [1, modulus - 1]");
  CongruentIndexSet out{t, i, modulus, {}, {}};

  // (i-1) k = -t (mod M): solvable iff g | t, then k = k0 (mod M/g).
  const std::uint64_t c = (i + modulus - 1) % modulus;  // i - 1 reduced
  const std::uint64_t g = std::gcd(c, modulus);
  const std::uint64_t rhs = (modulus - t % modulus) % modulus;
  if (rhs % g != 0) return out;
  const std::uint64_t step = modulus / g;
  std::uint64_t k0 = 0;
  if (step > 1) {
    k0 = static_cast<std::uint64_t>(static_cast<u128>(rhs / g) * inverse_mod(c / g, step) % step);
  }
  for (std::uint64_t k = k0; k <= t; k += step) {
    out.members.push_back(k);
    if (lucas_binom_mod2(t, k) == 1) out.surviving.push_back(k);
  }
  return out;
}

Element binomial_power_coeff(const Field& field, std::uint64_t i, Element a, std::uint64_t t) {
  const CongruentIndexSet set = congruent_set(t, i, field.group_order());
  Element sum{};
  for (std::uint64_t k : set.surviving)
    sum = sum + field.pow(a, static_cast<std::int64_t>(t - k));
  return sum;
}

}  // namespace binperm
