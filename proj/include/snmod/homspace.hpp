#ifndef SNMOD_HOMSPACE_HPP
#define SNMOD_HOMSPACE_HPP

#include <optional>
#include <vector>

#include "snmod/rep.hpp"

namespace snmod {

// Basis of Hom_G(V, W): matrices T (dim W x dim V) with T rho_V(g) =
// rho_W(g) T for every generator. Computed by spinning V from seed vectors
// and solving for admissible seed images in W.
struct HomSpace {
  const Rep* source = nullptr;
  const Rep* target = nullptr;
  std::vector<MatFp> basis;
  size_t dim() const { return basis.size(); }
};

size_t hom_dim(const Rep& v, const Rep& w, const Config& cfg = config());
HomSpace hom_space(const Rep& v, const Rep& w, const Config& cfg = config());
size_t end_dim(const Rep& v, const Config& cfg = config());

// Frobenius route: dim Hom_{S_n}(M_k, X) = dim of the S_{n-k,k}-fixed
// vectors of X; with self-dual M_k this also gives Hom(X, M_k).
size_t hom_dim_from_perm_module(int k, const Rep& x, const Config& cfg = config());
size_t hom_dim_to_perm_module(int k, const Rep& x, const Config& cfg = config());

// true iff some element of hom_space(v, w) is invertible; deterministic
// enumeration for hom dimension <= 3, otherwise seeded random search with a
// reported failure (never a silent wrong answer)
bool is_isomorphic(const Rep& v, const Rep& w, const Config& cfg = config());

} // namespace snmod

#endif
