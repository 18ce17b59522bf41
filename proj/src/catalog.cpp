#include "powergraph/catalog.hpp"

#include "powergraph/numth.hpp"
#include "powergraph/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

namespace powergraph {

namespace {

using DFamily = GroupDescriptor::Family;

constexpr std::uint64_t kMaxParam = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxDegree = 12;

// Returns (p, k) when n = p^k with k >= 1.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  const auto f = factorize(n);
  if (f.pairs.size() != 1)
    return std::nullopt;
  return std::make_pair(f.pairs[0].prime, f.pairs[0].exponent);
}

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupDescriptor parse() {
    if (s_.substr(0, 5) == "file:") {
      if (s_.size() == 5)
        fail(5, "missing path after 'file:'");
      GroupDescriptor d;
      d.family = DFamily::File;
      d.path = std::string(s_.substr(5));
      return d;
    }
    if (s_.empty())
      fail(0, "empty descriptor");
    std::vector<GroupDescriptor> factors{factor()};
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      factors.push_back(factor());
    }
    if (pos_ != s_.size())
      fail(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    if (factors.size() == 1)
      return factors.front();
    GroupDescriptor d;
    d.family = DFamily::Product;
    d.factors = std::move(factors);
    return d;
  }

private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw DescriptorError(at, msg);
  }

  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word)
      return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > kMaxParam)
        fail(start, "number too large");
      ++pos_;
    }
    if (pos_ == start)
      fail(start, "expected a number");
    return v;
  }

  GroupDescriptor factor() {
    const std::size_t start = pos_;
    GroupDescriptor d;
    if (accept("SD"))
      d.family = DFamily::Semidihedral;
    else if (accept("Z"))
      d.family = DFamily::Cyclic;
    else if (accept("D"))
      d.family = DFamily::Dihedral;
    else if (accept("Q"))
      d.family = DFamily::Quaternion;
    else if (accept("M"))
      d.family = DFamily::Modular;
    else if (accept("E"))
      d.family = DFamily::Elementary;
    else if (accept("S"))
      d.family = DFamily::Symmetric;
    else if (accept("A"))
      d.family = DFamily::Alternating;
    else
      fail(start, "expected a family letter (Z, D, Q, SD, M, E, S, A)");

    const std::size_t num_at = pos_;
    const std::uint64_t n = number();
    d.params = {n};
    auto bad = [&](const std::string& msg) { fail(num_at, msg); };
    switch (d.family) {
    case DFamily::Cyclic:
      if (n == 0)
        bad("cyclic order must be positive");
      if (pos_ < s_.size() && s_[pos_] == ':')
        semidirect_tail(d);
      break;
    case DFamily::Dihedral:
      if (n < 2 || n % 2)
        bad("dihedral order must be even and at least 2");
      break;
    case DFamily::Quaternion: {
      const auto pp = as_prime_power(n);
      if (!pp || pp->first != 2 || pp->second < 3)
        bad("quaternion order must be 2^k with k >= 3");
      break;
    }
    case DFamily::Semidihedral: {
      const auto pp = as_prime_power(n);
      if (!pp || pp->first != 2 || pp->second < 4)
        bad("semidihedral order must be 2^k with k >= 4");
      break;
    }
    case DFamily::Modular: {
      const auto pp = as_prime_power(n);
      if (!pp || pp->second < (pp->first == 2 ? 4u : 3u))
        bad("modular order must be p^k with k >= 3 (k >= 4 for p = 2)");
      break;
    }
    case DFamily::Elementary:
      if (!as_prime_power(n))
        bad("elementary abelian order must be a prime power");
      break;
    case DFamily::Symmetric:
    case DFamily::Alternating:
      if (n == 0 || n > kMaxDegree)
        bad("degree must be between 1 and " + std::to_string(kMaxDegree));
      break;
    default:
      break;
    }
    return d;
  }

  void semidirect_tail(GroupDescriptor& d) {
    ++pos_;
    if (!accept("Z"))
      fail(pos_, "expected 'Z' after ':'");
    const std::size_t m_at = pos_;
    const std::uint64_t m = number();
    if (m == 0)
      fail(m_at, "cyclic order must be positive");
    expect('(');
    const std::size_t k_at = pos_;
    std::uint64_t k = number();
    expect(')');
    const std::uint64_t n = d.params[0];
    if (n > 1 && gcd(k % n, n) != 1)
      fail(k_at, "multiplier must be a unit mod " + std::to_string(n));
    if (pow_mod(k, m, n) != 1 % n)
      fail(k_at, "multiplier^" + std::to_string(m) + " is not 1 mod " + std::to_string(n));
    k = n > 1 ? k % n : 0;
    d.family = DFamily::Semidirect;
    d.params = {n, m, k};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

GroupDescriptor parse_descriptor(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupDescriptor& d) {
  const std::string n = d.params.empty() ? "" : std::to_string(d.params[0]);
  switch (d.family) {
  case DFamily::Cyclic:
    return "Z" + n;
  case DFamily::Dihedral:
    return "D" + n;
  case DFamily::Quaternion:
    return "Q" + n;
  case DFamily::Semidihedral:
    return "SD" + n;
  case DFamily::Modular:
    return "M" + n;
  case DFamily::Elementary:
    return "E" + n;
  case DFamily::Symmetric:
    return "S" + n;
  case DFamily::Alternating:
    return "A" + n;
  case DFamily::Semidirect:
    return "Z" + n + ":Z" + std::to_string(d.params[1]) + "(" + std::to_string(d.params[2]) + ")";
  case DFamily::Product: {
    std::string out;
    for (const auto& f : d.factors)
      out += (out.empty() ? "" : "x") + render(f);
    return out;
  }
  case DFamily::File:
    return "file:" + d.path;
  }
  return {};
}

FiniteGroup build_group(const GroupDescriptor& d, std::size_t bound) {
  const std::uint64_t n = d.params.empty() ? 0 : d.params[0];
  FiniteGroup g = [&] {
    switch (d.family) {
    case DFamily::Cyclic:
      return cyclic(n, bound);
    case DFamily::Dihedral:
      return dihedral(n, bound);
    case DFamily::Quaternion:
      return generalized_quaternion(n, bound);
    case DFamily::Semidihedral:
      return semidihedral(n, bound);
    case DFamily::Modular: {
      const auto pp = as_prime_power(n);
      if (!pp)
        throw GroupError(GroupErrorKind::InvalidParameters, "M" + std::to_string(n));
      return modular(pp->first, pp->second, bound);
    }
    case DFamily::Elementary: {
      const auto pp = as_prime_power(n);
      if (!pp)
        throw GroupError(GroupErrorKind::InvalidParameters, "E" + std::to_string(n));
      return elementary_abelian(pp->first, pp->second, bound);
    }
    case DFamily::Symmetric:
      return symmetric(static_cast<std::uint32_t>(n), bound);
    case DFamily::Alternating:
      return alternating(static_cast<std::uint32_t>(n), bound);
    case DFamily::Semidirect:
      return semidirect_cyclic(d.params[0], d.params[1], d.params[2], bound);
    case DFamily::Product: {
      if (d.factors.empty())
        throw GroupError(GroupErrorKind::InvalidParameters, "empty product");
      FiniteGroup acc = build_group(d.factors[0], bound);
      for (std::size_t i = 1; i < d.factors.size(); ++i)
        acc = direct_product(acc, build_group(d.factors[i], bound), bound);
      return acc;
    }
    case DFamily::File:
      return load_cayley_table(d.path, bound);
    }
    throw GroupError(GroupErrorKind::InvalidParameters, "unknown family");
  }();
  g.set_label(render(d));
  return g;
}

const char* to_string(Family f) {
  switch (f) {
  case Family::Cyclic:
    return "cyclic";
  case Family::Abelian:
    return "abelian";
  case Family::Dihedral:
    return "dihedral";
  case Family::Quaternion:
    return "quaternion";
  case Family::Semidihedral:
    return "semidihedral";
  case Family::Modular:
    return "modular";
  case Family::Elementary:
    return "elementary";
  case Family::SemidirectPQ:
    return "semidirect_pq";
  case Family::PermutationNamed:
    return "permutation_named";
  }
  return "unknown";
}

std::vector<Family> all_families() {
  return {Family::Cyclic,     Family::Abelian,      Family::Dihedral,
          Family::Quaternion, Family::Semidihedral, Family::Modular,
          Family::Elementary, Family::SemidirectPQ, Family::PermutationNamed};
}

Family parse_family(std::string_view name) {
  for (Family f : all_families())
    if (name == to_string(f))
      return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

GroupDescriptor simple(DFamily family, std::uint64_t n) {
  GroupDescriptor d;
  d.family = family;
  d.params = {n};
  return d;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p))
      out.push_back(p);
  return out;
}

// Partitions of e into parts, each listed in descending order.
void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

// Every abelian group of order <= max, as a list of prime-power factors
// grouped by ascending prime, exponents descending within a prime.
void abelian_groups(const std::vector<std::uint64_t>& primes, std::size_t i,
                    std::uint64_t product, std::uint64_t max,
                    std::vector<std::vector<std::uint64_t>>& cur,
                    std::vector<std::vector<std::vector<std::uint64_t>>>& out) {
  if (i == primes.size() || product * primes[i] > max) {
    out.push_back(cur);
    return;
  }
  abelian_groups(primes, i + 1, product, max, cur, out);
  const std::uint64_t p = primes[i];
  std::uint64_t pe = 1;
  for (unsigned e = 1; product * pe * p <= max; ++e) {
    pe *= p;
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> tmp;
    partitions(e, e, tmp, parts);
    for (const auto& part : parts) {
      std::vector<std::uint64_t> factors;
      for (unsigned a : part) {
        std::uint64_t f = 1;
        for (unsigned t = 0; t < a; ++t)
          f *= p;
        factors.push_back(f);
      }
      cur.push_back(std::move(factors));
      abelian_groups(primes, i + 1, product * pe, max, cur, out);
      cur.pop_back();
    }
  }
}

GroupDescriptor abelian_descriptor(const std::vector<std::vector<std::uint64_t>>& by_prime) {
  const bool cyclic_shape = std::all_of(by_prime.begin(), by_prime.end(),
                                        [](const auto& fs) { return fs.size() == 1; });
  if (cyclic_shape) {
    std::uint64_t n = 1;
    for (const auto& fs : by_prime)
      n *= fs[0];
    return simple(DFamily::Cyclic, n);
  }
  GroupDescriptor d;
  d.family = DFamily::Product;
  for (const auto& fs : by_prime)
    for (auto f : fs)
      d.factors.push_back(simple(DFamily::Cyclic, f));
  return d;
}

std::uint64_t factorial_over(std::uint64_t n, std::uint64_t div) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    f *= i;
  return f / div;
}

} // namespace

std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec) {
  if (spec.max_order > kMaxCatalogOrder)
    throw std::invalid_argument("max_order exceeds " + std::to_string(kMaxCatalogOrder));
  const std::uint64_t max = spec.max_order;
  std::map<std::pair<std::uint64_t, std::string>, GroupDescriptor> entries;
  auto add = [&](std::uint64_t order, GroupDescriptor d) {
    if (order < 1 || order > max)
      return;
    entries.emplace(std::make_pair(order, render(d)), std::move(d));
  };
  auto powers = [&](std::uint64_t p, unsigned min_k, const std::function<void(std::uint64_t)>& f) {
    std::uint64_t v = 1;
    for (unsigned k = 0; k < min_k; ++k)
      v *= p;
    for (; v <= max; v *= p)
      f(v);
  };

  for (Family fam : spec.families) {
    switch (fam) {
    case Family::Cyclic:
      for (std::uint64_t n = 1; n <= max; ++n)
        add(n, simple(DFamily::Cyclic, n));
      break;
    case Family::Abelian: {
      std::vector<std::vector<std::vector<std::uint64_t>>> groups;
      std::vector<std::vector<std::uint64_t>> cur;
      abelian_groups(primes_up_to(max), 0, 1, max, cur, groups);
      for (const auto& by_prime : groups) {
        std::uint64_t order = 1;
        for (const auto& fs : by_prime)
          for (auto f : fs)
            order *= f;
        add(order, abelian_descriptor(by_prime));
      }
      break;
    }
    case Family::Dihedral:
      for (std::uint64_t n = 6; n <= max; n += 2)
        add(n, simple(DFamily::Dihedral, n));
      break;
    case Family::Quaternion:
      powers(2, 3, [&](std::uint64_t v) { add(v, simple(DFamily::Quaternion, v)); });
      break;
    case Family::Semidihedral:
      powers(2, 4, [&](std::uint64_t v) { add(v, simple(DFamily::Semidihedral, v)); });
      break;
    case Family::Modular:
      for (auto p : primes_up_to(max))
        powers(p, p == 2 ? 4 : 3, [&](std::uint64_t v) { add(v, simple(DFamily::Modular, v)); });
      break;
    case Family::Elementary:
      powers(2, 1, [&](std::uint64_t v) { add(v, simple(DFamily::Elementary, v)); });
      break;
    case Family::SemidirectPQ: {
      const auto primes = primes_up_to(max);
      for (auto p : primes)
        for (auto q : primes) {
          if (q <= p || (q - 1) % p != 0 || p * q > max)
            continue;
          std::uint64_t k = 2;
          while (multiplicative_order(k, q) != p)
            ++k;
          GroupDescriptor d;
          d.family = DFamily::Semidirect;
          d.params = {q, p, k};
          add(p * q, std::move(d));
        }
      break;
    }
    case Family::PermutationNamed:
      for (std::uint64_t deg = 3; deg <= 5; ++deg) {
        add(factorial_over(deg, 1), simple(DFamily::Symmetric, deg));
        if (deg >= 4)
          add(factorial_over(deg, 2), simple(DFamily::Alternating, deg));
      }
      break;
    }
  }

  std::vector<CatalogEntry> out;
  out.reserve(entries.size());
  for (auto& [key, d] : entries)
    out.push_back({key.first, key.second, std::move(d)});
  return out;
}

} // namespace powergraph
