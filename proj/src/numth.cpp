#include "powergraph/numth.hpp"

#include <sstream>
#include <stdexcept>

namespace powergraph {

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& pp : pairs)
    for (unsigned i = 0; i < pp.exponent; ++i)
      v *= pp.prime;
  return v;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(pairs.size());
  for (const auto& pp : pairs)
    out.push_back(pp.prime);
  return out;
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
  for (const auto& pp : pairs)
    if (pp.prime == p)
      return pp.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  if (pairs.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i)
      os << '*';
    os << pairs[i].prime;
    if (pairs[i].exponent > 1)
      os << '^' << pairs[i].exponent;
  }
  return os.str();
}

Factorization factorize(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("factorize: argument must be positive");
  if (n > kMaxFactorizable)
    throw std::invalid_argument("factorize: argument exceeds 2^31");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.pairs.push_back({p, e});
  }
  if (n > 1)
    f.pairs.push_back({n, 1});
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n == 0)
    return false;
  return factorize(n).pairs.size() <= 1;
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1)
    return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1)
      r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n) {
  if (n == 1)
    return 1;
  if (gcd(k % n, n) != 1)
    return 0;
  std::uint64_t x = k % n;
  std::uint64_t ord = 1;
  while (x != 1) {
    x = x * (k % n) % n;
    ++ord;
  }
  return ord;
}

ElementOrderForm classify_order(std::uint64_t n) {
  using namespace order_form;
  Factorization f = factorize(n);
  const auto& pp = f.pairs;
  switch (pp.size()) {
  case 0:
    return PrimePowerForm{1, 0};
  case 1:
    return PrimePowerForm{pp[0].prime, pp[0].exponent};
  case 2:
    if (pp[1].exponent == 1)
      return PrimePowerTimesPrime{pp[0].prime, pp[0].exponent, pp[1].prime};
    if (pp[0].exponent == 1)
      return PrimePowerTimesPrime{pp[1].prime, pp[1].exponent, pp[0].prime};
    break;
  case 3:
    if (pp[0].exponent == 1 && pp[1].exponent == 1 && pp[2].exponent == 1)
      return ThreeDistinctPrimes{pp[0].prime, pp[1].prime, pp[2].prime};
    break;
  default:
    break;
  }
  return Nonconforming{std::move(f)};
}

std::string to_string(const ElementOrderForm& f) {
  using namespace order_form;
  std::ostringstream os;
  if (auto* a = std::get_if<PrimePowerForm>(&f))
    os << "p^m(p=" << a->p << ",m=" << a->m << ")";
  else if (auto* b = std::get_if<PrimePowerTimesPrime>(&f))
    os << "p^m*q(p=" << b->p << ",m=" << b->m << ",q=" << b->q << ")";
  else if (auto* c = std::get_if<ThreeDistinctPrimes>(&f))
    os << "pqr(" << c->p << "," << c->q << "," << c->r << ")";
  else
    os << "nonconforming(" << std::get<Nonconforming>(f).factors.to_string() << ")";
  return os.str();
}

} // namespace powergraph
