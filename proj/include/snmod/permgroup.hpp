#ifndef SNMOD_PERMGROUP_HPP
#define SNMOD_PERMGROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "snmod/perm.hpp"

namespace snmod {

class PermGroup;

// G meet the base of S_a wr S_2, with the two factor projections.
struct BaseIntersection;

// Subgroup of S_n given by generators, with a deterministic Schreier-Sims
// stabilizer chain (base points picked in increasing order, no randomness).
// The chain is built lazily once; afterwards the value is immutable.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(int degree, std::vector<Permutation> gens = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool contains_group(const PermGroup& h) const;

  // orbit of a 0-based point
  std::vector<int> orbit_of(int point) const;
  bool is_transitive() const;
  bool is_primitive() const; // transitive with no nontrivial block system

  // i_k(G): orbits on unordered k-subsets of points
  uint64_t orbit_count_k_subsets(int k) const;
  bool is_k_transitive(int k) const;
  bool is_k_homogeneous(int k) const;

  // left coset representatives of h in *this (h must be a subgroup)
  std::vector<Permutation> coset_reps(const PermGroup& h) const;

  // full element list; throws cap_error when order() > cap
  std::vector<Permutation> elements(uint64_t cap = 2000000) const;

  // for G inside the standard S_a wr S_2 embedding on 2a points
  BaseIntersection base_intersection(int a) const;

 private:
  struct Level {
    int base = -1;
    std::vector<Permutation> sgens;
    std::vector<int> orbit;
    std::vector<int> pos;                 // point -> orbit index, -1 outside
    std::vector<Permutation> transversal; // u with u(base) = orbit point
  };
  struct Chain {
    std::vector<Level> levels;
    uint64_t order = 1;
  };

  const Chain& chain() const;
  static bool sift(const Chain& ch, const Permutation& g, Permutation* residue);

  // Lazily built chain, shared between copies. Construct-then-swap under a
  // mutex: concurrent first use may duplicate work but publishes one value.
  struct ChainBox {
    std::mutex m;
    std::shared_ptr<const Chain> ptr;
  };

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<ChainBox> box_ = std::make_shared<ChainBox>();
};

struct BaseIntersection {
  PermGroup intersection;  // G meet (S_a x S_a), degree 2a
  PermGroup projection1;   // degree a
  PermGroup projection2;   // degree a
  bool swaps_blocks;       // G escapes the base subgroup
};

// ---- named families (standard embeddings fixed here once and for all) ----

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
// S_{mu_1} x S_{mu_2} x ... on consecutive blocks of points
PermGroup young_subgroup(const std::vector<int>& mu);
// S_{n-k} x S_k; k = 0 yields S_n
PermGroup intransitive_group(int n, int k);
// S_a wr S_b on ab points; block i occupies {(i-1)a+1, ..., ia}
PermGroup wreath_product(int a, int b);
// copy of S_{n-1} inside S_n fixing the last point
PermGroup point_stabilizer(int n);
// one generator per line, cycle notation
PermGroup group_from_file(const std::string& path, int degree);

} // namespace snmod

#endif
