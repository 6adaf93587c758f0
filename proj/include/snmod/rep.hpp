#ifndef SNMOD_REP_HPP
#define SNMOD_REP_HPP

#include <string>
#include <vector>

#include "snmod/config.hpp"
#include "snmod/matfp.hpp"
#include "snmod/partitions.hpp"
#include "snmod/permgroup.hpp"

namespace snmod {

// A matrix representation over GF(p). For a full symmetric group the
// generators are the adjacent transpositions s_1..s_{n-1}; for a subgroup
// they are the group's own generators, kept alongside the images.
struct Rep {
  uint32_t p = 2;
  int degree = 0;           // the n of the ambient S_n
  bool symmetric_group = true;
  std::vector<Permutation> gen_perms; // subgroup reps only
  std::vector<MatFp> images;
  std::string basis_note;

  size_t dim() const { return images.empty() ? dim_hint : images[0].rows(); }
  size_t dim_hint = 0; // for zero-generator groups
  size_t gen_count() const { return images.size(); }

  // S_n reps only: image of an arbitrary permutation via its adjacent word
  MatFp evaluate(const Permutation& g) const;

  // same group and generator list?
  bool same_group(const Rep& o) const;

  // spot-check s_i^2 = 1 and the braid relations (S_n reps)
  bool check_coxeter(bool full = true) const;
};

// canonical tabloid basis of M^mu: all words w in {0..rows-1}^n with
// composition mu, in lexicographic order
std::vector<std::vector<uint8_t>> tabloid_words(int n, const std::vector<int>& mu);
// the k-subsets of {1..n} in the basis order of M_k = M^{(n-k,k)}
std::vector<std::vector<int>> subsets_in_basis_order(int n, int k);

// permutation module M^mu on tabloids
Rep perm_module(int n, uint32_t p, const std::vector<int>& mu);
// M_k = M^{(n-k,k)}
Rep perm_module_k(int n, uint32_t p, int k);

// standard Young tableaux of shape la, deterministic order; each tableau
// is a list of rows
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la);

// Specht module S^la in the standard polytabloid basis, plus the matrix of
// polytabloid columns inside M^la
struct SpechtData {
  Rep rep;
  MatFp polytabloids; // dim(M^la) x dim(S^la)
};
const SpechtData& specht_data(const Partition& la, uint32_t p);
Rep specht(const Partition& la, uint32_t p);
// Gram matrix of the bilinear form on the standard polytabloid basis
MatFp gram(const Partition& la, uint32_t p);

// D^la = S^la / rad(gram), for p-regular la (cached)
Rep irreducible(const Partition& la, uint32_t p);
size_t irreducible_dim(const Partition& la, uint32_t p);

Rep sign_twist(const Rep& v);
Rep dual_rep(const Rep& v);
// E(la) = End(D^la) with conjugation action, as kron images (row-major vec)
Rep conjugation_module(const Rep& v);
// outer tensor product: rep of the Young subgroup S_a x S_b (its generator
// order matches young_subgroup({a,b}))
Rep box_product(const Rep& a, const Rep& b);

// restriction of an S_n rep to a subgroup given by generators
Rep restrict_rep(const Rep& v, const PermGroup& g);

// induction of an S_n rep to S_{n+1}
Rep induce_up(const Rep& v, const Config& cfg = config());
// I(G): permutation module of S_n on the left cosets of G
Rep trivial_induced(const PermGroup& g, uint32_t p, const Config& cfg = config());

// G-invariant vectors
Subspace fixed_points(const Rep& v);

// smallest generator-invariant subspace containing vec
Subspace spin_up(const Rep& v, const std::vector<uint32_t>& vec);

// restriction of the action to an invariant subspace / quotient by it
Rep subrep(const Rep& v, const Subspace& w);
Rep quotient_rep(const Rep& v, const Subspace& w);

// deterministic binary cache of generator matrices (per n, p, la, kind)
bool cache_load(const std::string& dir, const std::string& kind,
                const Partition& la, uint32_t p, int degree, Rep* out);
void cache_store(const std::string& dir, const std::string& kind,
                 const Partition& la, uint32_t p, const Rep& rep);

} // namespace snmod

#endif
