#ifndef SNMOD_MEATAXE_HPP
#define SNMOD_MEATAXE_HPP

#include <map>
#include <optional>

#include "snmod/homspace.hpp"
#include "snmod/rep.hpp"

namespace snmod {

enum class MeatAxeVerdict {
  AbsolutelyIrreducible,
  IrreducibleNotAbsolute,
  Reducible,
};

struct MeatAxeResult {
  MeatAxeVerdict verdict;
  std::optional<Subspace> submodule; // for Reducible: a proper nonzero one
  size_t endo_dim = 0;               // filled when it was computed
  int words_used = 0;
};

// Norton's irreducibility test with seeded word generation. AbsIrr verdicts
// come from a nullity-one word (primal and dual spins full). Reducible
// verdicts always carry an explicit invariant subspace. When no nullity-one
// word exists the endomorphism algebra decides; a hard word cap turns
// non-termination into a cap_error, never a wrong answer.
MeatAxeResult meataxe(const Rep& v, const Config& cfg = config());

// composition factor multiset of an S_n representation, labels matched
// against the irreducible library (dimension + block scalar, then Hom)
std::map<Partition, int> composition_factors(const Rep& v, const Config& cfg = config());

// the label mu with D^mu isomorphic to the given irreducible S_n rep
Partition identify_irreducible(const Rep& x, const Config& cfg = config());

// scalar by which the sum of all transpositions acts (x must be in one block)
uint32_t central_transposition_scalar(const Rep& x);

} // namespace snmod

#endif
