#ifndef SNMOD_MATFP_HPP
#define SNMOD_MATFP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "snmod/fp.hpp"

namespace snmod {

struct RrefResult;

// Dense matrix over GF(p), row-major, entries always reduced mod p.
// GF(2) hot paths (mul, elimination) run on bit-packed rows internally;
// the observable contract is entry-level exactness for any prime p.
class MatFp {
 public:
  MatFp() : p_(2), rows_(0), cols_(0) {}
  MatFp(size_t rows, size_t cols, uint32_t p);

  static MatFp identity(size_t n, uint32_t p);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t modulus() const { return p_; }

  uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % p_; }

  const uint32_t* row(size_t i) const { return a_.data() + i * cols_; }
  uint32_t* row(size_t i) { return a_.data() + i * cols_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const MatFp& o) const;
  bool operator!=(const MatFp& o) const { return !(*this == o); }

  MatFp operator+(const MatFp& o) const;
  MatFp operator-(const MatFp& o) const;
  MatFp operator*(const MatFp& o) const;
  MatFp scaled(uint32_t c) const;
  MatFp transpose() const;
  MatFp kron(const MatFp& o) const;

  // this += c * o
  void add_scaled(const MatFp& o, uint32_t c);

  std::vector<uint32_t> mul_vec(const std::vector<uint32_t>& v) const;

  // A^e by repeated squaring (square matrices).
  MatFp pow(uint64_t e) const;

  RrefResult rref() const;
  size_t rank() const;

  // Basis of {v : this*v = 0} as matrix rows, in RREF. rows() = nullity.
  MatFp nullspace() const;

  // One solution x of this*x = b (column-stacked rhs), or nullopt.
  std::optional<MatFp> solve(const MatFp& b) const;
  std::optional<MatFp> inverse() const;

  // vertical stack
  static MatFp vstack(const MatFp& top, const MatFp& bottom);

 private:
  uint32_t p_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

struct RrefResult {
  MatFp mat;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

// Row space given by a basis in reduced row echelon form.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  // rref-izes the given spanning rows
  static Subspace from_rows(const MatFp& rows, size_t ambient);
  static Subspace zero(size_t ambient, uint32_t p);
  static Subspace full(size_t ambient, uint32_t p);

  size_t dim() const { return basis_.rows(); }
  size_t ambient_dim() const { return ambient_; }
  uint32_t modulus() const { return basis_.modulus(); }
  const MatFp& basis() const { return basis_; }

  bool contains_vector(const std::vector<uint32_t>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  static Subspace sum(const Subspace& u, const Subspace& v);
  static Subspace intersection(const Subspace& u, const Subspace& v);

 private:
  size_t ambient_;
  MatFp basis_;
};

// ker((m - c*I)^dim): the generalized eigenspace of m for eigenvalue c.
Subspace generalized_eigenspace(const MatFp& m, uint32_t c);

// Incremental row-space builder. Rows are kept in echelon form with
// normalized pivots; optionally tracks each echelon row as a linear
// combination of the inserted vectors (used by the spinning algorithms).
class Echelon {
 public:
  Echelon(size_t width, uint32_t p, bool track_coeffs = false);

  size_t rank() const { return packed_ ? bits_.size() : rows_.size(); }
  size_t width() const { return width_; }

  // Insert v. Returns true if the rank grew. When track_coeffs is on and v
  // reduced to zero, *coeffs receives x with v = sum_k x[k] * inserted[k]
  // (indexed over previously inserted vectors that grew the rank).
  bool add(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs = nullptr);

  // Reduce v against the current rows; returns remainder (not inserted).
  std::vector<uint32_t> reduce(const std::vector<uint32_t>& v) const;

  bool contains(const std::vector<uint32_t>& v) const;

  // Echelon rows as a matrix (RREF if fully reduced; rows are normalized and
  // mutually reduced, so yes).
  MatFp to_mat() const;

  // Nullspace of the row system (treating rows as equations): basis of
  // {x : R x = 0}, returned as RREF rows.
  MatFp equations_nullspace() const;

 private:
  size_t width_;
  uint32_t p_;
  bool track_;
  bool packed_;                              // p == 2 fast path
  std::vector<std::vector<uint32_t>> rows_;  // generic storage
  std::vector<std::vector<uint64_t>> bits_;  // packed storage
  std::vector<int> pivot_;                   // pivot column per row
  std::vector<std::vector<uint32_t>> coeff_; // combination over inserted idx
  size_t inserted_ = 0;
};

} // namespace snmod

#endif
