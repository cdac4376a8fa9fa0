#include "cyclo2/unit_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclo2 {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

namespace {

void check_exponent(unsigned e) {
  if (e < 3 || e > 22)
    throw std::invalid_argument("modulus exponent out of range: " + std::to_string(e));
}

}  // namespace

std::pair<int, std::uint64_t> decompose(unsigned e, std::uint64_t a) {
  check_exponent(e);
  const std::uint64_t m = std::uint64_t{1} << e;
  a &= m - 1;
  if ((a & 1) == 0) throw std::invalid_argument("decompose: residue must be odd");
  std::uint64_t p = 1;
  const std::uint64_t half = std::uint64_t{1} << (e - 2);
  for (std::uint64_t k = 0; k < half; ++k) {
    if (p == a) return {+1, k};
    if (m - p == a) return {-1, k};
    p = p * 5 % m;
  }
  throw std::logic_error("decompose: +-5^k parametrization failed");  // unreachable
}

std::uint64_t recompose(unsigned e, int sign, std::uint64_t log5) {
  check_exponent(e);
  const std::uint64_t m = std::uint64_t{1} << e;
  std::uint64_t p = pow_mod(5, log5, m);
  return sign >= 0 ? p : m - p;
}

UnitClass::UnitClass(unsigned e, std::uint64_t a) : modulus_exponent(e) {
  auto [s, k] = decompose(e, a);
  residue = a & ((std::uint64_t{1} << e) - 1);
  sign = s;
  log5 = k;
}

std::uint64_t order_mod(unsigned e, std::uint64_t a) {
  check_exponent(e);
  const std::uint64_t m = std::uint64_t{1} << e;
  a &= m - 1;
  if ((a & 1) == 0) throw std::invalid_argument("order_mod: residue must be odd");
  std::uint64_t n = 1;
  while (a != 1) {
    a = a * a % m;
    n <<= 1;
  }
  return n;
}

std::uint64_t order_of(const UnitClass& u) { return order_mod(u.modulus_exponent, u.residue); }

bool UnitSubgroup::contains(std::uint64_t a) const {
  return std::binary_search(elements.begin(), elements.end(), a & (modulus() - 1));
}

UnitSubgroup span(unsigned e, const std::vector<std::uint64_t>& gens) {
  check_exponent(e);
  const std::uint64_t m = std::uint64_t{1} << e;
  UnitSubgroup h;
  h.modulus_exponent = e;
  for (std::uint64_t g : gens) {
    if ((g & 1) == 0) throw std::invalid_argument("span: generator must be odd");
    h.generators.push_back(g & (m - 1));
  }
  std::vector<bool> seen(m, false);
  seen[1] = true;
  std::vector<std::uint64_t> queue{1};
  while (!queue.empty()) {
    std::uint64_t x = queue.back();
    queue.pop_back();
    for (std::uint64_t g : h.generators) {
      std::uint64_t y = x * g % m;
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (std::uint64_t x = 1; x < m; x += 2)
    if (seen[x]) h.elements.push_back(x);
  return h;
}

UnitSubgroup full_unit_group(unsigned e) {
  check_exponent(e);
  return span(e, {(std::uint64_t{1} << e) - 1, 5});
}

std::optional<std::uint64_t> cyclic_witness(const UnitSubgroup& h) {
  const std::uint64_t n = h.order();
  for (std::uint64_t x : h.elements)
    if (order_mod(h.modulus_exponent, x) == n) return x;
  return std::nullopt;
}

bool is_cyclic(const UnitSubgroup& h) { return cyclic_witness(h).has_value(); }

namespace {

// Index-2 extensions of k inside h: subgroups k' with k < k' <= h and
// [k':k] = 2. Each is k together with one coset x*k where x^2 in k.
// Returned in ascending order of the smallest element of that coset.
std::vector<UnitSubgroup> index2_extensions(const UnitSubgroup& k, const UnitSubgroup& h) {
  const std::uint64_t m = h.modulus();
  std::vector<bool> in_k(m, false);
  for (std::uint64_t x : k.elements) in_k[x] = true;
  std::vector<bool> claimed(m, false);
  std::vector<UnitSubgroup> out;
  for (std::uint64_t x : h.elements) {
    if (in_k[x] || claimed[x]) continue;
    if (!in_k[x * x % m]) continue;
    UnitSubgroup ext;
    ext.modulus_exponent = h.modulus_exponent;
    ext.generators = k.generators;
    ext.generators.push_back(x);
    ext.elements.reserve(k.elements.size() * 2);
    for (std::uint64_t t : k.elements) {
      std::uint64_t y = x * t % m;
      claimed[y] = true;
      ext.elements.push_back(y);
    }
    ext.elements.insert(ext.elements.end(), k.elements.begin(), k.elements.end());
    std::sort(ext.elements.begin(), ext.elements.end());
    out.push_back(std::move(ext));
  }
  return out;
}

void chain_dfs(const UnitSubgroup& h, std::vector<UnitSubgroup>& chain,
               std::vector<std::vector<UnitSubgroup>>& chains) {
  if (chain.back().order() == h.order()) {
    chains.push_back(chain);
    return;
  }
  for (auto& ext : index2_extensions(chain.back(), h)) {
    chain.push_back(std::move(ext));
    chain_dfs(h, chain, chains);
    chain.pop_back();
  }
}

}  // namespace

std::vector<std::vector<UnitSubgroup>> maximal_chains(const UnitSubgroup& h) {
  if (h.order() > (std::uint64_t{1} << 20))
    throw std::length_error("maximal_chains: subgroup larger than 2^20");
  UnitSubgroup trivial;
  trivial.modulus_exponent = h.modulus_exponent;
  trivial.elements = {1};
  std::vector<std::vector<UnitSubgroup>> chains;
  std::vector<UnitSubgroup> chain{trivial};
  chain_dfs(h, chain, chains);
  return chains;
}

}  // namespace cyclo2
