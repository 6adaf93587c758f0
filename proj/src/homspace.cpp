#include "snmod/homspace.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

namespace snmod {

namespace {

// ------------------------------------------------------------------------
// V-side spin structure: basis vectors with definitions (seed or g*b_j),
// plus the linear relations discovered along the way.
struct SpinPlan {
  struct Def {
    bool is_seed;
    size_t seed_index;
    size_t gen;
    size_t src;
  };
  std::vector<Def> defs;
  std::vector<std::vector<uint32_t>> basis; // unreduced definition vectors
  struct Relation {
    size_t gen;
    size_t src;
    std::vector<uint32_t> coeffs; // g * b_src = sum coeffs[k] * b_k
  };
  std::vector<Relation> relations;
  size_t seeds = 0;
};

SpinPlan spin_plan(const Rep& v) {
  size_t d = v.dim();
  SpinPlan plan;
  Echelon ech(d, v.p, true);
  size_t next_probe = 0;
  size_t work = 0;
  while (ech.rank() < d) {
    // new seed: first standard coordinate outside the current span
    std::vector<uint32_t> e(d, 0);
    size_t x = next_probe;
    for (; x < d; ++x) {
      std::fill(e.begin(), e.end(), 0);
      e[x] = 1;
      if (!ech.contains(e)) break;
    }
    if (x == d) throw domain_error("spin_plan: no seed found");
    next_probe = x + 1;
    std::fill(e.begin(), e.end(), 0);
    e[x] = 1;
    ech.add(e);
    plan.defs.push_back({true, plan.seeds, 0, 0});
    plan.basis.push_back(e);
    ++plan.seeds;

    for (; work < plan.basis.size(); ++work) {
      for (size_t g = 0; g < v.images.size(); ++g) {
        std::vector<uint32_t> img = v.images[g].mul_vec(plan.basis[work]);
        std::vector<uint32_t> coeffs;
        if (ech.add(img, &coeffs)) {
          plan.defs.push_back({false, 0, g, work});
          plan.basis.push_back(std::move(img));
        } else {
          plan.relations.push_back({g, work, std::move(coeffs)});
        }
      }
    }
  }
  return plan;
}

// ------------------------------------------------------------------------
// W-side image blocks N_m (dW x U matrices, U = seeds * dW), stored packed
// for GF(2) and as uint32 otherwise.
struct Arena {
  uint32_t p = 2;
  size_t rows = 0, cols = 0;
  bool packed = false;
  size_t words = 0;
  std::vector<uint64_t> bits;
  std::vector<uint32_t> vals;
  size_t count = 0;

  void init(uint32_t p_, size_t rows_, size_t cols_, size_t blocks) {
    p = p_;
    rows = rows_;
    cols = cols_;
    packed = (p == 2);
    words = (cols + 63) / 64;
    size_t bytes = packed ? blocks * rows * words * 8 : blocks * rows * cols * 4;
    if (bytes > (size_t(2) << 30))
      throw cap_error("hom solver image arena exceeds the memory budget");
    if (packed)
      bits.assign(blocks * rows * words, 0);
    else
      vals.assign(blocks * rows * cols, 0);
  }

  uint64_t* brow(size_t blk, size_t r) { return &bits[(blk * rows + r) * words]; }
  const uint64_t* brow(size_t blk, size_t r) const {
    return &bits[(blk * rows + r) * words];
  }
  uint32_t* vrow(size_t blk, size_t r) { return &vals[(blk * rows + r) * cols]; }
  const uint32_t* vrow(size_t blk, size_t r) const {
    return &vals[(blk * rows + r) * cols];
  }

  void set_identity_block(size_t blk, size_t col_offset) {
    for (size_t r = 0; r < rows; ++r) {
      size_t c = col_offset + r;
      if (packed)
        brow(blk, r)[c / 64] |= uint64_t(1) << (c % 64);
      else
        vrow(blk, r)[c] = 1;
    }
  }

  // N_blk = A * N_src
  void set_mul(size_t blk, const MatFp& a, size_t src) {
    if (packed) {
      for (size_t i = 0; i < rows; ++i) {
        uint64_t* dst = brow(blk, i);
        for (size_t l = 0; l < rows; ++l) {
          if (!a.at(i, l)) continue;
          const uint64_t* srow = brow(src, l);
          for (size_t t = 0; t < words; ++t) dst[t] ^= srow[t];
        }
      }
      return;
    }
    std::vector<uint64_t> acc(cols);
    for (size_t i = 0; i < rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (size_t l = 0; l < rows; ++l) {
        uint64_t f = a.at(i, l);
        if (!f) continue;
        const uint32_t* srow = vrow(src, l);
        for (size_t c = 0; c < cols; ++c) acc[c] += f * srow[c];
      }
      uint32_t* dst = vrow(blk, i);
      for (size_t c = 0; c < cols; ++c) dst[c] = uint32_t(acc[c] % p);
    }
  }

  // row i of (A * N_src - sum_k coeffs[k] N_k), written into out
  void constraint_row(const MatFp& a, size_t src, const std::vector<uint32_t>& coeffs,
                      size_t i, std::vector<uint32_t>& out) const {
    if (packed) {
      std::vector<uint64_t> acc(words, 0);
      for (size_t l = 0; l < rows; ++l) {
        if (!a.at(i, l)) continue;
        const uint64_t* srow = brow(src, l);
        for (size_t t = 0; t < words; ++t) acc[t] ^= srow[t];
      }
      for (size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k]) continue;
        const uint64_t* krow = brow(k, i);
        for (size_t t = 0; t < words; ++t) acc[t] ^= krow[t];
      }
      out.assign(cols, 0);
      for (size_t c = 0; c < cols; ++c)
        out[c] = (acc[c / 64] >> (c % 64)) & 1;
      return;
    }
    std::vector<uint64_t> acc(cols, 0);
    for (size_t l = 0; l < rows; ++l) {
      uint64_t f = a.at(i, l);
      if (!f) continue;
      const uint32_t* srow = vrow(src, l);
      for (size_t c = 0; c < cols; ++c) acc[c] += f * srow[c];
    }
    uint64_t negf = 0;
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k]) continue;
      negf = p - coeffs[k];
      const uint32_t* krow = vrow(k, i);
      for (size_t c = 0; c < cols; ++c) acc[c] += negf * krow[c];
    }
    out.assign(cols, 0);
    for (size_t c = 0; c < cols; ++c) out[c] = uint32_t(acc[c] % p);
  }

  // N_blk * u, as a column of length rows
  void apply(size_t blk, const std::vector<uint32_t>& u, std::vector<uint32_t>& out) const {
    out.assign(rows, 0);
    if (packed) {
      for (size_t r = 0; r < rows; ++r) {
        const uint64_t* row = brow(blk, r);
        uint64_t s = 0;
        for (size_t c = 0; c < cols; ++c)
          if (u[c]) s ^= (row[c / 64] >> (c % 64)) & 1;
        out[r] = uint32_t(s & 1);
      }
      return;
    }
    for (size_t r = 0; r < rows; ++r) {
      const uint32_t* row = vrow(blk, r);
      uint64_t acc = 0;
      for (size_t c = 0; c < cols; ++c) acc += uint64_t(row[c]) * u[c];
      out[r] = uint32_t(acc % p);
    }
  }
};

bool intertwines(const MatFp& t, const Rep& v, const Rep& w) {
  for (size_t g = 0; g < v.images.size(); ++g)
    if (t * v.images[g] != w.images[g] * t) return false;
  return true;
}

} // namespace

HomSpace hom_space(const Rep& v, const Rep& w, const Config& cfg) {
  if (!v.same_group(w)) throw domain_error("hom_space: different groups");
  if (v.p != w.p) throw domain_error("hom_space: modulus mismatch");
  size_t dv = v.dim(), dw = w.dim();
  HomSpace out;
  out.source = &v;
  out.target = &w;
  if (dv == 0 || dw == 0) return out;
  if (v.images.empty()) {
    // trivial group: every matrix is a hom; only sensible for tiny dims
    if (dv * dw > cfg.dimension_cap)
      throw cap_error("hom space over the trivial group is too large");
    for (size_t a = 0; a < dw; ++a)
      for (size_t b = 0; b < dv; ++b) {
        MatFp t(dw, dv, v.p);
        t.set(a, b, 1);
        out.basis.push_back(std::move(t));
      }
    return out;
  }

  SpinPlan plan = spin_plan(v);
  size_t unknowns = plan.seeds * dw;

  Arena arena;
  arena.init(v.p, dw, unknowns, plan.basis.size());
  for (size_t m = 0; m < plan.defs.size(); ++m) {
    const auto& def = plan.defs[m];
    if (def.is_seed)
      arena.set_identity_block(m, def.seed_index * dw);
    else
      arena.set_mul(m, w.images[def.gen], def.src);
    ++arena.count;
  }

  Echelon cons(unknowns, v.p);
  std::vector<uint32_t> row;
  auto materialize = [&]() -> std::vector<MatFp> {
    MatFp null = cons.equations_nullspace();
    std::vector<MatFp> cand;
    if (null.rows() == 0) return cand;
    // B: columns are the basis vectors of V
    MatFp b(dv, dv, v.p);
    for (size_t m = 0; m < plan.basis.size(); ++m)
      for (size_t r = 0; r < dv; ++r) b.set(r, m, plan.basis[m][r]);
    auto binv = b.inverse();
    if (!binv) throw domain_error("hom solver: spin basis is singular");
    std::vector<uint32_t> u(unknowns), col;
    for (size_t s = 0; s < null.rows(); ++s) {
      u.assign(null.row(s), null.row(s) + unknowns);
      MatFp images(dw, dv, v.p);
      for (size_t m = 0; m < plan.basis.size(); ++m) {
        arena.apply(m, u, col);
        for (size_t r = 0; r < dw; ++r) images.set(r, m, col[r]);
      }
      cand.push_back(images * *binv);
    }
    return cand;
  };

  size_t stall = 0;
  const size_t stall_limit = 2;
  for (size_t ri = 0; ri < plan.relations.size(); ++ri) {
    const auto& rel = plan.relations[ri];
    size_t before = cons.rank();
    for (size_t i = 0; i < dw; ++i) {
      arena.constraint_row(w.images[rel.gen], rel.src, rel.coeffs, i, row);
      cons.add(row);
    }
    if (cons.rank() == unknowns) break; // hom space is zero
    stall = (cons.rank() == before) ? stall + 1 : 0;
    if (stall >= stall_limit && ri + 1 < plan.relations.size()) {
      auto cand = materialize();
      bool ok = true;
      for (const auto& t : cand)
        if (!intertwines(t, v, w)) { ok = false; break; }
      if (ok) {
        out.basis = std::move(cand);
        return out;
      }
      stall = 0;
    }
  }

  out.basis = materialize();
  for (const auto& t : out.basis)
    if (!intertwines(t, v, w))
      throw domain_error("hom solver produced a non-intertwiner");
  return out;
}

size_t hom_dim(const Rep& v, const Rep& w, const Config& cfg) {
  return hom_space(v, w, cfg).dim();
}

size_t end_dim(const Rep& v, const Config& cfg) { return hom_dim(v, v, cfg); }

size_t hom_dim_from_perm_module(int k, const Rep& x, const Config&) {
  if (!x.symmetric_group)
    throw domain_error("perm-module hom shortcut needs an S_n representation");
  int n = x.degree;
  if (k < 0 || k > n) throw domain_error("subset size out of range");
  Rep down = restrict_rep(x, intransitive_group(n, k));
  return fixed_points(down).dim();
}

size_t hom_dim_to_perm_module(int k, const Rep& x, const Config& cfg) {
  return hom_dim_from_perm_module(k, dual_rep(x), cfg);
}

bool is_isomorphic(const Rep& v, const Rep& w, const Config& cfg) {
  if (!v.same_group(w) || v.p != w.p) throw domain_error("iso test: different groups");
  if (v.dim() != w.dim()) return false;
  HomSpace hs = hom_space(v, w, cfg);
  if (hs.dim() == 0) return false;
  size_t d = v.dim();
  uint32_t p = v.p;
  if (hs.dim() <= 3) {
    // enumerate combinations up to scalar: first nonzero coefficient is 1
    size_t k = hs.dim();
    std::vector<uint32_t> c(k, 0);
    std::function<bool(size_t, bool)> rec = [&](size_t i, bool lead_set) -> bool {
      if (i == k) {
        if (!lead_set) return false;
        MatFp t(d, d, p);
        for (size_t m = 0; m < k; ++m)
          if (c[m]) t.add_scaled(hs.basis[m], c[m]);
        return t.rank() == d;
      }
      if (!lead_set) {
        c[i] = 0;
        if (rec(i + 1, false)) return true;
        c[i] = 1;
        return rec(i + 1, true);
      }
      for (uint32_t x = 0; x < p; ++x) {
        c[i] = x;
        if (rec(i + 1, true)) return true;
      }
      return false;
    };
    return rec(0, false);
  }
  Rng rng(cfg.seed ^ 0x686f6d736f6c76ULL);
  for (int tries = 0; tries < 64; ++tries) {
    MatFp t(d, d, p);
    for (const auto& b : hs.basis) t.add_scaled(b, uint32_t(rng.below(p)));
    if (t.rank() == d) return true;
  }
  throw cap_error("isomorphism search inconclusive: hom dimension exceeds 3");
}

} // namespace snmod
