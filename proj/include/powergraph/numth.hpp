// Small-integer number theory: factorization, prime-power tests and the
// classification of element orders into the shapes p^m, p^m*q, p*q*r.

#ifndef POWERGRAPH_NUMTH_HPP_
#define POWERGRAPH_NUMTH_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace powergraph {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty for 1.
struct Factorization {
  std::vector<PrimePower> pairs;

  std::uint64_t value() const;
  std::vector<std::uint64_t> primes() const;
  unsigned exponent_of(std::uint64_t p) const;
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Largest admissible argument to factorize().
inline constexpr std::uint64_t kMaxFactorizable = std::uint64_t{1} << 31;

/// Throws std::invalid_argument for n == 0 or n > 2^31.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True for 1 and for p^k, k >= 1.
bool is_prime_power(std::uint64_t n);

/// The p-part of n: largest power of p dividing n.
std::uint64_t prime_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of k modulo n (0 when gcd(k, n) != 1).
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

namespace order_form {

// p^m. The order 1 is PrimePowerForm{1, 0}.
struct PrimePowerForm {
  std::uint64_t p;
  unsigned m;
  friend bool operator==(const PrimePowerForm&, const PrimePowerForm&) = default;
};
// p^m * q with q != p occurring to the first power. When both exponents are
// 1, p is the smaller prime.
struct PrimePowerTimesPrime {
  std::uint64_t p;
  unsigned m;
  std::uint64_t q;
  friend bool operator==(const PrimePowerTimesPrime&, const PrimePowerTimesPrime&) = default;
};
// p*q*r with p < q < r.
struct ThreeDistinctPrimes {
  std::uint64_t p, q, r;
  friend bool operator==(const ThreeDistinctPrimes&, const ThreeDistinctPrimes&) = default;
};
struct Nonconforming {
  Factorization factors;
  friend bool operator==(const Nonconforming&, const Nonconforming&) = default;
};

} // namespace order_form

using ElementOrderForm =
    std::variant<order_form::PrimePowerForm, order_form::PrimePowerTimesPrime,
                 order_form::ThreeDistinctPrimes, order_form::Nonconforming>;

ElementOrderForm classify_order(std::uint64_t n);

inline bool is_nonconforming(const ElementOrderForm& f) {
  return std::holds_alternative<order_form::Nonconforming>(f);
}

std::string to_string(const ElementOrderForm& f);

} // namespace powergraph

#endif // POWERGRAPH_NUMTH_HPP_
