#include "snmod/matfp.hpp"

#include <algorithm>
#include <cstring>

namespace snmod {

namespace {

size_t word_count(size_t cols) { return (cols + 63) / 64; }

void pack_row(const uint32_t* src, size_t cols, uint64_t* dst) {
  std::memset(dst, 0, word_count(cols) * sizeof(uint64_t));
  for (size_t j = 0; j < cols; ++j)
    if (src[j]) dst[j / 64] |= uint64_t(1) << (j % 64);
}

void unpack_row(const uint64_t* src, size_t cols, uint32_t* dst) {
  for (size_t j = 0; j < cols; ++j)
    dst[j] = (src[j / 64] >> (j % 64)) & 1;
}

// how many products (p-1)^2 fit in a uint64 accumulator
uint64_t reduce_chunk(uint32_t p) {
  if (p <= 65536) return ~uint64_t(0); // never overflows for our sizes
  uint64_t sq = uint64_t(p - 1) * (p - 1);
  return (~uint64_t(0) / 2) / sq;
}

} // namespace

MatFp::MatFp(size_t rows, size_t cols, uint32_t p) : p_(p), rows_(rows), cols_(cols) {
  fp::check_prime(p);
  a_.assign(rows * cols, 0);
}

MatFp MatFp::identity(size_t n, uint32_t p) {
  MatFp m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

size_t MatFp::rank() const { return rref().rank; }

bool MatFp::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool MatFp::operator==(const MatFp& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

MatFp MatFp::operator+(const MatFp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw domain_error("matrix addition shape/modulus mismatch");
  MatFp r(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::add(a_[i], o.a_[i], p_);
  return r;
}

MatFp MatFp::operator-(const MatFp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw domain_error("matrix subtraction shape/modulus mismatch");
  MatFp r(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::sub(a_[i], o.a_[i], p_);
  return r;
}

MatFp MatFp::scaled(uint32_t c) const {
  MatFp r(rows_, cols_, p_);
  c %= p_;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::mul(a_[i], c, p_);
  return r;
}

void MatFp::add_scaled(const MatFp& o, uint32_t c) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw domain_error("add_scaled shape/modulus mismatch");
  c %= p_;
  if (!c) return;
  for (size_t i = 0; i < a_.size(); ++i)
    a_[i] = fp::add(a_[i], fp::mul(o.a_[i], c, p_), p_);
}

MatFp MatFp::operator*(const MatFp& o) const {
  if (cols_ != o.rows_ || p_ != o.p_)
    throw domain_error("matrix product shape/modulus mismatch");
  MatFp r(rows_, o.cols_, p_);
  if (rows_ == 0 || cols_ == 0 || o.cols_ == 0) return r;

  if (p_ == 2) {
    size_t wa = word_count(cols_), wc = word_count(o.cols_);
    std::vector<uint64_t> bp(o.rows_ * wc), ap(rows_ * wa), cp(rows_ * wc, 0);
    for (size_t k = 0; k < o.rows_; ++k) pack_row(o.row(k), o.cols_, &bp[k * wc]);
    for (size_t i = 0; i < rows_; ++i) pack_row(row(i), cols_, &ap[i * wa]);
    for (size_t i = 0; i < rows_; ++i) {
      uint64_t* crow = &cp[i * wc];
      const uint64_t* arow = &ap[i * wa];
      for (size_t w = 0; w < wa; ++w) {
        uint64_t bitsw = arow[w];
        while (bitsw) {
          size_t k = w * 64 + size_t(__builtin_ctzll(bitsw));
          bitsw &= bitsw - 1;
          const uint64_t* brow = &bp[k * wc];
          for (size_t t = 0; t < wc; ++t) crow[t] ^= brow[t];
        }
      }
      unpack_row(crow, o.cols_, r.row(i));
    }
    return r;
  }

  uint64_t chunk = reduce_chunk(p_);
  std::vector<uint64_t> acc(o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    uint64_t since = 0;
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t aik = at(i, k);
      if (!aik) continue;
      const uint32_t* brow = o.row(k);
      for (size_t j = 0; j < o.cols_; ++j) acc[j] += aik * brow[j];
      if (++since >= chunk) {
        for (auto& v : acc) v %= p_;
        since = 0;
      }
    }
    uint32_t* rrow = r.row(i);
    for (size_t j = 0; j < o.cols_; ++j) rrow[j] = uint32_t(acc[j] % p_);
  }
  return r;
}

MatFp MatFp::transpose() const {
  MatFp r(cols_, rows_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

MatFp MatFp::kron(const MatFp& o) const {
  if (p_ != o.p_) throw domain_error("kron modulus mismatch");
  MatFp r(rows_ * o.rows_, cols_ * o.cols_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      uint32_t a = at(i, j);
      if (!a) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l) {
          uint32_t b = o.at(k, l);
          if (b) r.set(i * o.rows_ + k, j * o.cols_ + l, fp::mul(a, b, p_));
        }
    }
  return r;
}

std::vector<uint32_t> MatFp::mul_vec(const std::vector<uint32_t>& v) const {
  if (v.size() != cols_) throw domain_error("mul_vec length mismatch");
  std::vector<uint32_t> r(rows_, 0);
  uint64_t chunk = reduce_chunk(p_);
  for (size_t i = 0; i < rows_; ++i) {
    const uint32_t* arow = row(i);
    uint64_t acc = 0, since = 0;
    for (size_t j = 0; j < cols_; ++j) {
      acc += uint64_t(arow[j]) * v[j];
      if (++since >= chunk) { acc %= p_; since = 0; }
    }
    r[i] = uint32_t(acc % p_);
  }
  return r;
}

MatFp MatFp::pow(uint64_t e) const {
  if (!is_square()) throw domain_error("pow needs a square matrix");
  MatFp base = *this;
  MatFp r = identity(rows_, p_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MatFp MatFp::vstack(const MatFp& top, const MatFp& bottom) {
  if (top.cols() != bottom.cols() || top.modulus() != bottom.modulus())
    throw domain_error("vstack shape/modulus mismatch");
  MatFp r(top.rows() + bottom.rows(), top.cols(), top.modulus());
  for (size_t i = 0; i < top.rows(); ++i)
    std::copy(top.row(i), top.row(i) + top.cols(), r.row(i));
  for (size_t i = 0; i < bottom.rows(); ++i)
    std::copy(bottom.row(i), bottom.row(i) + bottom.cols(), r.row(top.rows() + i));
  return r;
}

RrefResult MatFp::rref() const {
  RrefResult res;
  res.mat = *this;
  MatFp& m = res.mat;
  size_t r = 0;

  if (p_ == 2 && rows_ > 0 && cols_ > 0) {
    size_t w = word_count(cols_);
    std::vector<uint64_t> bits(rows_ * w);
    for (size_t i = 0; i < rows_; ++i) pack_row(m.row(i), cols_, &bits[i * w]);
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t piv = rows_;
      for (size_t i = r; i < rows_; ++i)
        if ((bits[i * w + c / 64] >> (c % 64)) & 1) { piv = i; break; }
      if (piv == rows_) continue;
      if (piv != r)
        for (size_t t = 0; t < w; ++t) std::swap(bits[piv * w + t], bits[r * w + t]);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        if ((bits[i * w + c / 64] >> (c % 64)) & 1)
          for (size_t t = 0; t < w; ++t) bits[i * w + t] ^= bits[r * w + t];
      }
      res.pivots.push_back(c);
      ++r;
    }
    for (size_t i = 0; i < rows_; ++i) unpack_row(&bits[i * w], cols_, m.row(i));
    res.rank = r;
    return res;
  }

  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = rows_;
    for (size_t i = r; i < rows_; ++i)
      if (m.at(i, c)) { piv = i; break; }
    if (piv == rows_) continue;
    if (piv != r)
      for (size_t j = 0; j < cols_; ++j) {
        uint32_t t = m.at(piv, j);
        m.set(piv, j, m.at(r, j));
        m.set(r, j, t);
      }
    uint32_t inv = fp::inv(m.at(r, c), p_);
    if (inv != 1)
      for (size_t j = c; j < cols_; ++j) m.set(r, j, fp::mul(m.at(r, j), inv, p_));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, c);
      if (!f) continue;
      for (size_t j = c; j < cols_; ++j)
        m.set(i, j, fp::sub(m.at(i, j), fp::mul(f, m.at(r, j), p_), p_));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

MatFp MatFp::nullspace() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  size_t nul = cols_ - rr.rank;
  MatFp basis(nul, cols_, p_);
  size_t bi = 0;
  for (size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    basis.set(bi, f, 1);
    for (size_t i = 0; i < rr.rank; ++i) {
      uint32_t v = rr.mat.at(i, f);
      if (v) basis.set(bi, rr.pivots[i], fp::neg(v, p_));
    }
    ++bi;
  }
  // normalize to RREF for the Subspace contract
  return basis.rref().mat;
}

std::optional<MatFp> MatFp::solve(const MatFp& b) const {
  if (b.rows() != rows_ || b.modulus() != p_)
    throw domain_error("solve shape/modulus mismatch");
  MatFp aug(rows_, cols_ + b.cols(), p_);
  for (size_t i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, aug.row(i));
    std::copy(b.row(i), b.row(i) + b.cols(), aug.row(i) + cols_);
  }
  RrefResult rr = aug.rref();
  for (size_t c : rr.pivots)
    if (c >= cols_) return std::nullopt; // inconsistent
  MatFp x(cols_, b.cols(), p_);
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      x.set(rr.pivots[i], j, rr.mat.at(i, cols_ + j));
  return x;
}

std::optional<MatFp> MatFp::inverse() const {
  if (!is_square()) return std::nullopt;
  MatFp aug(rows_, 2 * cols_, p_);
  for (size_t i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, aug.row(i));
    aug.set(i, cols_ + i, 1);
  }
  RrefResult rr = aug.rref();
  if (rr.rank < rows_) return std::nullopt;
  for (size_t i = 0; i < rows_; ++i)
    if (rr.pivots[i] != i) return std::nullopt; // pivot escaped into the I half
  MatFp inv(rows_, cols_, p_);
  for (size_t i = 0; i < rows_; ++i)
    std::copy(rr.mat.row(i) + cols_, rr.mat.row(i) + 2 * cols_, inv.row(i));
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::from_rows(const MatFp& rows, size_t ambient) {
  if (rows.cols() != ambient) throw domain_error("subspace basis width != ambient");
  Subspace s;
  s.ambient_ = ambient;
  RrefResult rr = rows.rref();
  MatFp basis(rr.rank, ambient, rows.modulus());
  for (size_t i = 0; i < rr.rank; ++i)
    std::copy(rr.mat.row(i), rr.mat.row(i) + ambient, basis.row(i));
  s.basis_ = basis;
  return s;
}

Subspace Subspace::zero(size_t ambient, uint32_t p) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatFp(0, ambient, p);
  return s;
}

Subspace Subspace::full(size_t ambient, uint32_t p) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatFp::identity(ambient, p);
  return s;
}

bool Subspace::contains_vector(const std::vector<uint32_t>& v) const {
  if (v.size() != ambient_) throw domain_error("vector/ambient mismatch");
  uint32_t p = basis_.modulus();
  std::vector<uint32_t> r = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    size_t c = 0;
    while (c < ambient_ && basis_.at(i, c) == 0) ++c;
    if (c == ambient_) continue;
    uint32_t f = r[c]; // pivot entry is 1
    if (!f) continue;
    for (size_t j = c; j < ambient_; ++j)
      r[j] = fp::sub(r[j], fp::mul(f, basis_.at(i, j), p), p);
  }
  for (uint32_t x : r)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw domain_error("ambient mismatch");
  for (size_t i = 0; i < other.basis_.rows(); ++i) {
    std::vector<uint32_t> v(other.basis_.row(i), other.basis_.row(i) + ambient_);
    if (!contains_vector(v)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_; // RREF is canonical
}

Subspace Subspace::sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.modulus() != v.modulus())
    throw domain_error("subspace sum: ambient/modulus mismatch");
  return from_rows(MatFp::vstack(u.basis(), v.basis()), u.ambient_dim());
}

// Zassenhaus: rref of [U U; V 0]; rows with zero left half carry the
// intersection in their right half.
Subspace Subspace::intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.modulus() != v.modulus())
    throw domain_error("subspace intersection: ambient/modulus mismatch");
  size_t n = u.ambient_dim();
  uint32_t p = u.modulus();
  size_t du = u.dim(), dv = v.dim();
  MatFp big(du + dv, 2 * n, p);
  for (size_t i = 0; i < du; ++i)
    for (size_t j = 0; j < n; ++j) {
      uint32_t x = u.basis().at(i, j);
      big.set(i, j, x);
      big.set(i, n + j, x);
    }
  for (size_t i = 0; i < dv; ++i)
    for (size_t j = 0; j < n; ++j) big.set(du + i, j, v.basis().at(i, j));
  RrefResult rr = big.rref();
  std::vector<std::vector<uint32_t>> inter_rows;
  for (size_t i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n; ++j)
      if (rr.mat.at(i, j)) { left_zero = false; break; }
    if (left_zero)
      inter_rows.emplace_back(rr.mat.row(i) + n, rr.mat.row(i) + 2 * n);
  }
  MatFp m(inter_rows.size(), n, p);
  for (size_t i = 0; i < inter_rows.size(); ++i)
    std::copy(inter_rows[i].begin(), inter_rows[i].end(), m.row(i));
  return from_rows(m, n);
}

Subspace generalized_eigenspace(const MatFp& m, uint32_t c) {
  if (!m.is_square()) throw domain_error("generalized_eigenspace needs square matrix");
  size_t n = m.rows();
  uint32_t p = m.modulus();
  if (n == 0) return Subspace::zero(0, p);
  MatFp b = m - MatFp::identity(n, p).scaled(c);
  uint64_t e = 1;
  while (e < n) e <<= 1;
  return Subspace::from_rows(b.pow(e).nullspace(), n);
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(size_t width, uint32_t p, bool track_coeffs)
    : width_(width), p_(p), track_(track_coeffs), packed_(p == 2) {
  fp::check_prime(p);
}

bool Echelon::add(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs) {
  if (v.size() != width_) throw domain_error("echelon row width mismatch");
  std::vector<uint32_t> comb;
  if (track_) comb.assign(inserted_, 0);

  if (packed_) {
    size_t w = word_count(width_);
    std::vector<uint64_t> r(w, 0);
    pack_row(v.data(), width_, r.data());
    for (size_t i = 0; i < bits_.size(); ++i) {
      int c = pivot_[i];
      if ((r[c / 64] >> (c % 64)) & 1) {
        for (size_t t = 0; t < w; ++t) r[t] ^= bits_[i][t];
        if (track_)
          for (size_t k = 0; k < coeff_[i].size(); ++k)
            comb[k] ^= coeff_[i][k];
      }
    }
    int lead = -1;
    for (size_t t = 0; t < w && lead < 0; ++t)
      if (r[t]) lead = int(t * 64 + __builtin_ctzll(r[t]));
    if (lead < 0) {
      if (coeffs) *coeffs = comb;
      return false;
    }
    // back-eliminate existing rows against the new pivot
    for (size_t i = 0; i < bits_.size(); ++i) {
      if ((bits_[i][lead / 64] >> (lead % 64)) & 1) {
        for (size_t t = 0; t < w; ++t) bits_[i][t] ^= r[t];
        if (track_) {
          coeff_[i].resize(inserted_ + 1, 0);
          // new row = inserted_new - comb  =>  subtract it
          for (size_t k = 0; k < comb.size(); ++k) coeff_[i][k] ^= comb[k];
          coeff_[i][inserted_] ^= 1;
        }
      }
    }
    bits_.push_back(std::move(r));
    pivot_.push_back(lead);
    if (track_) {
      comb.resize(inserted_ + 1, 0);
      std::vector<uint32_t> cn(inserted_ + 1, 0);
      for (size_t k = 0; k <= inserted_; ++k) cn[k] = comb[k];
      cn[inserted_] ^= 1; // row = inserted_new - comb (mod 2: xor)
      coeff_.push_back(std::move(cn));
    }
    ++inserted_;
    return true;
  }

  std::vector<uint32_t> r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivot_[i];
    uint32_t f = r[c];
    if (!f) continue;
    const auto& er = rows_[i];
    for (size_t j = size_t(c); j < width_; ++j)
      if (er[j]) r[j] = fp::sub(r[j], fp::mul(f, er[j], p_), p_);
    if (track_)
      for (size_t k = 0; k < coeff_[i].size(); ++k)
        comb[k] = fp::add(comb[k], fp::mul(f, coeff_[i][k], p_), p_);
  }
  int lead = -1;
  for (size_t j = 0; j < width_; ++j)
    if (r[j]) { lead = int(j); break; }
  if (lead < 0) {
    if (coeffs) *coeffs = comb;
    return false;
  }
  uint32_t inv = fp::inv(r[lead], p_);
  std::vector<uint32_t> cn;
  if (track_) {
    cn.assign(inserted_ + 1, 0);
    // new echelon row = inv * (inserted_new - comb)
    for (size_t k = 0; k < comb.size(); ++k) cn[k] = fp::mul(fp::neg(comb[k], p_), inv, p_);
    cn[inserted_] = inv;
  }
  if (inv != 1)
    for (size_t j = size_t(lead); j < width_; ++j) r[j] = fp::mul(r[j], inv, p_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t f = rows_[i][lead];
    if (!f) continue;
    for (size_t j = size_t(lead); j < width_; ++j)
      rows_[i][j] = fp::sub(rows_[i][j], fp::mul(f, r[j], p_), p_);
    if (track_) {
      coeff_[i].resize(inserted_ + 1, 0);
      for (size_t k = 0; k <= inserted_; ++k)
        coeff_[i][k] = fp::sub(coeff_[i][k], fp::mul(f, cn[k], p_), p_);
    }
  }
  rows_.push_back(std::move(r));
  pivot_.push_back(lead);
  if (track_) coeff_.push_back(std::move(cn));
  ++inserted_;
  return true;
}

std::vector<uint32_t> Echelon::reduce(const std::vector<uint32_t>& v) const {
  if (v.size() != width_) throw domain_error("echelon row width mismatch");
  if (packed_) {
    size_t w = word_count(width_);
    std::vector<uint64_t> r(w, 0);
    pack_row(v.data(), width_, r.data());
    for (size_t i = 0; i < bits_.size(); ++i) {
      int c = pivot_[i];
      if ((r[c / 64] >> (c % 64)) & 1)
        for (size_t t = 0; t < w; ++t) r[t] ^= bits_[i][t];
    }
    std::vector<uint32_t> out(width_);
    unpack_row(r.data(), width_, out.data());
    return out;
  }
  std::vector<uint32_t> r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivot_[i];
    uint32_t f = r[c];
    if (!f) continue;
    for (size_t j = size_t(c); j < width_; ++j)
      if (rows_[i][j]) r[j] = fp::sub(r[j], fp::mul(f, rows_[i][j], p_), p_);
  }
  return r;
}

bool Echelon::contains(const std::vector<uint32_t>& v) const {
  auto r = reduce(v);
  for (uint32_t x : r)
    if (x) return false;
  return true;
}

MatFp Echelon::to_mat() const {
  size_t n = packed_ ? bits_.size() : rows_.size();
  // order rows by pivot so the result is genuine RREF
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivot_[a] < pivot_[b]; });
  MatFp m(n, width_, p_);
  for (size_t i = 0; i < n; ++i) {
    if (packed_)
      unpack_row(bits_[order[i]].data(), width_, m.row(i));
    else
      std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), m.row(i));
  }
  return m;
}

MatFp Echelon::equations_nullspace() const { return to_mat().nullspace(); }

} // namespace snmod
