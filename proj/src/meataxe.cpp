#include "snmod/meataxe.hpp"

#include <algorithm>

namespace snmod {

namespace {

// transposed generators: closure under them is orthogonal-complement-dual
// to closure under the originals
std::vector<MatFp> transposed_images(const Rep& v) {
  std::vector<MatFp> out;
  for (const auto& m : v.images) out.push_back(m.transpose());
  return out;
}

Subspace spin_matrices(const std::vector<MatFp>& gens, uint32_t p,
                       const std::vector<uint32_t>& vec) {
  size_t d = vec.size();
  Echelon ech(d, p);
  std::vector<std::vector<uint32_t>> queue;
  auto push = [&](const std::vector<uint32_t>& x) {
    auto r = ech.reduce(x);
    for (uint32_t t : r)
      if (t) {
        ech.add(r);
        queue.push_back(std::move(r));
        return;
      }
  };
  push(vec);
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& m : gens) push(m.mul_vec(cur));
  }
  return Subspace::from_rows(ech.to_mat(), d);
}

// deterministic pseudo-random algebra element pool
struct WordGen {
  const Rep& v;
  Rng rng;
  std::vector<MatFp> pool;

  WordGen(const Rep& v_, uint64_t seed) : v(v_), rng(seed) {
    pool = v.images;
    if (pool.empty()) pool.push_back(MatFp::identity(v.dim(), v.p));
  }

  MatFp next() {
    // random product of two pool elements plus a random pool combination
    const MatFp& a = pool[rng.below(pool.size())];
    const MatFp& b = pool[rng.below(pool.size())];
    MatFp w = a * b;
    for (int extra = int(rng.below(3)); extra > 0; --extra)
      w = w * pool[rng.below(pool.size())];
    MatFp mix = w;
    for (size_t i = 0; i < pool.size(); ++i) {
      uint32_t c = uint32_t(rng.below(v.p));
      if (c) mix.add_scaled(pool[i], c);
    }
    if (pool.size() < 24) pool.push_back(w);
    return mix;
  }
};

// try to split V using kernels of non-scalar endomorphisms; End basis given
std::optional<Subspace> endo_split(const Rep& v, const std::vector<MatFp>& endos) {
  size_t d = v.dim();
  uint32_t p = v.p;
  for (const auto& e : endos) {
    // skip scalars
    bool scalar = true;
    uint32_t c0 = e.at(0, 0);
    MatFp diff = e - MatFp::identity(d, p).scaled(c0);
    scalar = diff.is_zero();
    if (scalar) continue;
    for (uint32_t c = 0; c < p; ++c) {
      MatFp shifted = e - MatFp::identity(d, p).scaled(c);
      MatFp ker = shifted.nullspace();
      if (ker.rows() > 0 && ker.rows() < d)
        return Subspace::from_rows(ker, d); // kernels of endomorphisms are submodules
    }
  }
  return std::nullopt;
}

// X = F[E] for a non-scalar endomorphism E: compute the minimal polynomial
// by linear algebra; if it factors with a proper kernel, split.
std::optional<Subspace> endo_minpoly_split(const Rep& v, const MatFp& e) {
  size_t d = v.dim();
  uint32_t p = v.p;
  // powers of E until linear dependence
  std::vector<MatFp> powers = {MatFp::identity(d, p)};
  Echelon ech(d * d, p, true);
  auto flat = [&](const MatFp& m) {
    std::vector<uint32_t> f(d * d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) f[i * d + j] = m.at(i, j);
    return f;
  };
  ech.add(flat(powers[0]));
  std::vector<uint32_t> coeffs;
  while (true) {
    MatFp nxt = powers.back() * e;
    if (!ech.add(flat(nxt), &coeffs)) {
      // nxt = sum coeffs[k] * E^k: minimal polynomial found
      break;
    }
    powers.push_back(std::move(nxt));
    if (powers.size() > d + 1) throw domain_error("minimal polynomial overflow");
  }
  size_t deg = powers.size(); // min poly degree
  // min poly m(x) = x^deg - sum coeffs[k] x^k; try roots in GF(p)
  auto eval = [&](uint32_t x) {
    uint32_t acc = fp::pow(x, deg, p);
    for (size_t k = 0; k < coeffs.size(); ++k)
      acc = fp::sub(acc, fp::mul(coeffs[k], fp::pow(x, k, p), p), p);
    return acc;
  };
  for (uint32_t x = 0; x < p; ++x) {
    if (eval(x) != 0) continue;
    MatFp ker = (e - MatFp::identity(d, p).scaled(x)).nullspace();
    if (ker.rows() > 0 && ker.rows() < d) return Subspace::from_rows(ker, d);
  }
  return std::nullopt;
}

} // namespace

MeatAxeResult meataxe(const Rep& v, const Config& cfg) {
  size_t d = v.dim();
  uint32_t p = v.p;
  MeatAxeResult res;
  if (d == 0) throw domain_error("meataxe on the zero module");
  if (d == 1) {
    res.verdict = MeatAxeVerdict::AbsolutelyIrreducible;
    res.endo_dim = 1;
    return res;
  }
  if (v.images.empty()) {
    // trivial group, dim > 1: any coordinate line is invariant
    MatFp line(1, d, p);
    line.set(0, 0, 1);
    res.verdict = MeatAxeVerdict::Reducible;
    res.submodule = Subspace::from_rows(line, d);
    return res;
  }

  auto trans = transposed_images(v);
  WordGen words(v, cfg.seed ^ 0x6d656174617865ULL);
  bool tried_endos = false;

  for (int round = 0; round < cfg.meataxe_word_cap; ++round) {
    MatFp theta = words.next();
    ++res.words_used;
    for (uint32_t c = 0; c < p; ++c) {
      MatFp shifted = theta - MatFp::identity(d, p).scaled(c);
      MatFp ker = shifted.nullspace();
      size_t nullity = ker.rows();
      if (nullity == 0 || nullity == d) continue;
      // spin every kernel basis vector
      bool all_full = true;
      for (size_t i = 0; i < nullity && all_full; ++i) {
        std::vector<uint32_t> vec(ker.row(i), ker.row(i) + d);
        Subspace span = spin_up(v, vec);
        if (span.dim() < d) {
          res.verdict = MeatAxeVerdict::Reducible;
          res.submodule = span;
          return res;
        }
      }
      if (nullity != 1) continue; // inconclusive without Norton's hypothesis
      // dual side: one null vector of the transpose
      MatFp kert = shifted.transpose().nullspace();
      std::vector<uint32_t> wvec(kert.row(0), kert.row(0) + d);
      Subspace dual_span = spin_matrices(trans, p, wvec);
      if (dual_span.dim() < d) {
        // the annihilator of the dual spin is a proper invariant subspace
        MatFp ann = dual_span.basis().nullspace();
        res.verdict = MeatAxeVerdict::Reducible;
        res.submodule = Subspace::from_rows(ann, d);
        return res;
      }
      // Norton: irreducible; a nullity-one element forces End = GF(p)
      res.verdict = MeatAxeVerdict::AbsolutelyIrreducible;
      res.endo_dim = 1;
      return res;
    }

    // after a while with no nullity-one element, consult the endomorphisms
    if (!tried_endos && round >= std::min(24, cfg.meataxe_word_cap / 2)) {
      tried_endos = true;
      HomSpace ends = hom_space(v, v, cfg);
      res.endo_dim = ends.dim();
      if (ends.dim() >= 2) {
        if (auto sub = endo_split(v, ends.basis)) {
          res.verdict = MeatAxeVerdict::Reducible;
          res.submodule = *sub;
          return res;
        }
        // pick a non-scalar endomorphism and use its minimal polynomial
        for (const auto& e : ends.basis) {
          MatFp diff = e - MatFp::identity(d, p).scaled(e.at(0, 0));
          if (diff.is_zero()) continue;
          if (auto sub = endo_minpoly_split(v, e)) {
            res.verdict = MeatAxeVerdict::Reducible;
            res.submodule = *sub;
            return res;
          }
          // irreducible minimal polynomial of degree = end dim: End is a
          // field, so V is irreducible but not absolutely so ... provided
          // it is irreducible at all; certify via a spin from any vector
          // of each theta-kernel having been full so far. Fall through to
          // the word loop, and only conclude when commutativity holds and
          // every kernel vector spins full.
          break;
        }
        // End is a commutative field candidate: check commutativity
        bool comm = true;
        for (size_t i = 0; i < ends.basis.size() && comm; ++i)
          for (size_t j = i + 1; j < ends.basis.size() && comm; ++j)
            comm = (ends.basis[i] * ends.basis[j] == ends.basis[j] * ends.basis[i]);
        if (comm) {
          // End is a finite-dimensional commutative algebra all of whose
          // elements we failed to split: treat kernels of words over the
          // End-field. V over K := End is irreducible iff some K-nullity
          // pattern spins full; run a dedicated check: any proper
          // submodule would eventually show as a proper spin of a kernel
          // vector. Keep drawing words; if the cap is reached, report.
        }
      }
    }
  }
  throw cap_error("meataxe word cap exceeded without a verdict");
}

uint32_t central_transposition_scalar(const Rep& x) {
  if (!x.symmetric_group)
    throw domain_error("central scalar needs an S_n representation");
  size_t d = x.dim();
  uint32_t p = x.p;
  int n = x.degree;
  std::vector<uint32_t> v(d, 0);
  v[0] = 1;
  std::vector<uint32_t> acc(d, 0);
  // sum over all transpositions (a, b), evaluated as words on the vector
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Permutation t = Permutation::transposition(n, a, b);
      std::vector<uint32_t> cur = v;
      auto word = t.adjacent_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = x.images[*it - 1].mul_vec(cur);
      for (size_t i = 0; i < d; ++i) acc[i] = fp::add(acc[i], cur[i], p);
    }
  uint32_t z = acc[0];
  for (size_t i = 1; i < d; ++i)
    if (acc[i] != (i == 0 ? z : 0) && !(i != 0 && acc[i] == 0))
      throw domain_error("module is not in a single block");
  return z;
}

Partition identify_irreducible(const Rep& x, const Config& cfg) {
  if (!x.symmetric_group)
    throw domain_error("identification needs an S_n representation");
  int n = x.degree;
  uint32_t p = x.p;
  uint32_t z = central_transposition_scalar(x);
  std::vector<Partition> candidates;
  for (const auto& mu : enumerate_p_regular(n, p)) {
    if (irreducible_dim(mu, p) != x.dim()) continue;
    if (residue_content(mu, p).central_scalar(p) != z) continue;
    candidates.push_back(mu);
  }
  if (candidates.empty())
    throw domain_error("unidentifiable irreducible factor (internal error)");
  if (candidates.size() == 1) return candidates[0];
  for (const auto& mu : candidates)
    if (hom_dim(irreducible(mu, p), x, cfg) > 0) return mu;
  throw domain_error("unidentifiable irreducible factor (no Hom match)");
}

std::map<Partition, int> composition_factors(const Rep& v, const Config& cfg) {
  if (!v.symmetric_group)
    throw domain_error("composition factors over S_n representations only");
  if (v.dim() > cfg.dimension_cap)
    throw cap_error("module exceeds the dimension cap");
  std::map<Partition, int> out;
  if (v.dim() == 0) return out;
  std::vector<Rep> stack = {v};
  while (!stack.empty()) {
    Rep cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim() == 0) continue;
    MeatAxeResult mr = meataxe(cur, cfg);
    if (mr.verdict == MeatAxeVerdict::Reducible) {
      stack.push_back(subrep(cur, *mr.submodule));
      stack.push_back(quotient_rep(cur, *mr.submodule));
    } else {
      out[identify_irreducible(cur, cfg)] += 1;
    }
  }
  return out;
}

} // namespace snmod
