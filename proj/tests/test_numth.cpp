#include "powergraph/numth.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace powergraph;
using namespace powergraph::order_form;

namespace {

// Divisor-based oracle: n conforms iff it is p^m, p^m*q or p*q*r.
bool conforms_by_divisors(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d <= m; ++d) {
    if (m % d)
      continue;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (f.size() <= 1)
    return true;
  if (f.size() == 2)
    return f[0].second == 1 || f[1].second == 1;
  return f.size() == 3 && f[0].second == 1 && f[1].second == 1 && f[2].second == 1;
}

} // namespace

TEST_CASE("factorize recomposes") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n);
    REQUIRE(f.value() == n);
    for (std::size_t i = 1; i < f.pairs.size(); ++i)
      REQUIRE(f.pairs[i - 1].prime < f.pairs[i].prime);
    REQUIRE(is_prime_power(n) == (f.pairs.size() <= 1));
  }
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(360).to_string() == "2^3*3^2*5");
  CHECK(factorize(kMaxFactorizable).pairs == std::vector<PrimePower>{{2, 31}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kMaxFactorizable + 1), std::invalid_argument);
}

TEST_CASE("prime power convention") {
  CHECK(is_prime_power(1));
  CHECK(is_prime_power(8));
  CHECK_FALSE(is_prime_power(6));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_part(360, 2) == 8);
  CHECK(prime_part(360, 7) == 1);
}

TEST_CASE("modular arithmetic") {
  CHECK(gcd(12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 5) == 4);
  CHECK(multiplicative_order(2, 4) == 0);
}

TEST_CASE("order form examples") {
  CHECK(classify_order(1) == ElementOrderForm{PrimePowerForm{1, 0}});
  CHECK(classify_order(8) == ElementOrderForm{PrimePowerForm{2, 3}});
  CHECK(classify_order(12) == ElementOrderForm{PrimePowerTimesPrime{2, 2, 3}});
  CHECK(classify_order(6) == ElementOrderForm{PrimePowerTimesPrime{2, 1, 3}});
  CHECK(classify_order(75) == ElementOrderForm{PrimePowerTimesPrime{5, 2, 3}});
  CHECK(classify_order(30) == ElementOrderForm{ThreeDistinctPrimes{2, 3, 5}});
  const auto f60 = classify_order(60);
  REQUIRE(is_nonconforming(f60));
  CHECK(std::get<Nonconforming>(f60).factors.pairs ==
        std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(is_nonconforming(classify_order(36)));
  CHECK(is_nonconforming(classify_order(210)));
}

TEST_CASE("order form agrees with divisor oracle") {
  for (std::uint64_t n = 1; n <= 20000; ++n)
    REQUIRE(is_nonconforming(classify_order(n)) == !conforms_by_divisors(n));
}
