#ifndef SNMOD_TESTS_ORACLES_HPP
#define SNMOD_TESTS_ORACLES_HPP

// Test-only oracles, independent of the implementation paths they check.

#include <map>
#include <vector>

#include "snmod/partitions.hpp"

namespace snmod::oracles {

// number of partitions of n with no part divisible by p (Glaisher count)
inline long long coprime_parts_count(int n, uint32_t p) {
  std::vector<long long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (part % int(p) == 0) continue;
    for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

// Mullineux map through the crystal commutation m(f_i x) = f_{-i} m(x),
// entirely independent of the p-rim/symbol algorithm.
inline Partition crystal_mullineux(const Partition& la, uint32_t p) {
  static std::map<std::pair<std::vector<int>, uint32_t>, Partition> memo;
  if (la.empty()) return la;
  auto key = std::make_pair(la.parts(), p);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  for (uint32_t i = 0; i < p; ++i) {
    auto down = e_tilde(la, i, p);
    if (!down) continue;
    Partition image = crystal_mullineux(*down, p);
    uint32_t j = (p - i % p) % p;
    auto up = f_tilde(image, j, p);
    if (!up) throw domain_error("crystal mullineux oracle: missing cogood node");
    memo.emplace(key, *up);
    return *up;
  }
  throw domain_error("crystal mullineux oracle: no normal node");
}

} // namespace snmod::oracles

#endif
