#include "doctest.h"

#include "snmod/matfp.hpp"

using namespace snmod;

namespace {

MatFp from_rows(std::vector<std::vector<uint32_t>> rows, uint32_t p) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  MatFp m(r, c, p);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  return m;
}

MatFp random_mat(size_t r, size_t c, uint32_t p, Rng& rng) {
  MatFp m(r, c, p);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.set(i, j, uint32_t(rng.below(p)));
  return m;
}

// all vectors of GF(p)^n, for exhaustive oracle checks
std::vector<std::vector<uint32_t>> all_vectors(size_t n, uint32_t p) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> v(n, 0);
  while (true) {
    out.push_back(v);
    size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool in_row_space(const MatFp& rows, const std::vector<uint32_t>& v) {
  return Subspace::from_rows(rows, rows.cols()).contains_vector(v);
}

} // namespace

TEST_CASE("rref basic examples") {
  MatFp id3 = MatFp::identity(3, 2);
  auto rr = id3.rref();
  CHECK(rr.mat == id3);
  CHECK(rr.rank == 3);

  MatFp z(2, 4, 3);
  auto rz = z.rref();
  CHECK(rz.rank == 0);
  CHECK(rz.mat.is_zero());

  MatFp m = from_rows({{1, 1}, {1, 1}}, 2);
  auto rm = m.rref();
  CHECK(rm.rank == 1);
  CHECK(rm.mat.at(0, 0) == 1);
  CHECK(rm.mat.at(0, 1) == 1);
  CHECK(rm.mat.at(1, 0) == 0);
  CHECK(rm.mat.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent and rank equals transpose rank") {
  Rng rng(7);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 10; ++t) {
      MatFp m = random_mat(6, 9, p, rng);
      auto r1 = m.rref();
      CHECK(r1.mat.rref().mat == r1.mat);
      CHECK(m.rank() == m.transpose().rank());
    }
  }
}

TEST_CASE("nullspace: exhaustive check over GF(2)^3") {
  MatFp m = from_rows({{1, 1, 0}, {0, 1, 1}}, 2);
  MatFp ns = m.nullspace();
  CHECK(ns.rows() == 1);
  // oracle: enumerate all 8 vectors
  std::vector<std::vector<uint32_t>> kernel;
  for (auto& v : all_vectors(3, 2)) {
    auto mv = m.mul_vec(v);
    bool zero = true;
    for (auto x : mv) zero &= (x == 0);
    if (zero && (v[0] || v[1] || v[2])) kernel.push_back(v);
  }
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == std::vector<uint32_t>{1, 1, 1});
  CHECK(std::vector<uint32_t>(ns.row(0), ns.row(0) + 3) == kernel[0]);
}

TEST_CASE("nullspace dimensions and orthogonality to rows") {
  MatFp id4 = MatFp::identity(4, 3);
  CHECK(id4.nullspace().rows() == 0);
  MatFp z(3, 5, 2);
  CHECK(z.nullspace().rows() == 5);

  Rng rng(11);
  for (uint32_t p : {2u, 3u, 5u}) {
    MatFp m = random_mat(5, 8, p, rng);
    MatFp ns = m.nullspace();
    CHECK(ns.rows() == 8 - m.rank());
    for (size_t i = 0; i < ns.rows(); ++i) {
      std::vector<uint32_t> v(ns.row(i), ns.row(i) + 8);
      for (auto x : m.mul_vec(v)) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve") {
  MatFp id = MatFp::identity(4, 5);
  Rng rng(3);
  MatFp b = random_mat(4, 2, 5, rng);
  auto x = id.solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  MatFp z(3, 3, 3);
  MatFp nb(3, 1, 3);
  nb.set(1, 0, 2);
  CHECK(!z.solve(nb).has_value());

  // random consistent 5x5 system over GF(3): residual must vanish exactly
  for (int t = 0; t < 8; ++t) {
    MatFp a = random_mat(5, 5, 3, rng);
    MatFp x0 = random_mat(5, 1, 3, rng);
    MatFp rhs = a * x0;
    auto sol = a.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK((a * *sol) == rhs);
  }

  MatFp bad(2, 1, 3);
  CHECK_THROWS_AS((void)MatFp(3, 3, 3).solve(bad), domain_error);
}

TEST_CASE("subspace operations and the modular law") {
  // u = v
  Rng rng(19);
  MatFp m = random_mat(3, 5, 2, rng);
  Subspace u = Subspace::from_rows(m, 5);
  CHECK(Subspace::sum(u, u) == u);
  CHECK(Subspace::intersection(u, u) == u);

  // complementary coordinate subspaces of GF(3)^4
  MatFp a(2, 4, 3), b(2, 4, 3);
  a.set(0, 0, 1);
  a.set(1, 1, 1);
  b.set(0, 2, 1);
  b.set(1, 3, 1);
  Subspace ua = Subspace::from_rows(a, 4), ub = Subspace::from_rows(b, 4);
  CHECK(Subspace::intersection(ua, ub).dim() == 0);
  CHECK(Subspace::sum(ua, ub) == Subspace::full(4, 3));

  // random 3-dim subspaces of GF(2)^5: check dims by exhaustive enumeration
  for (int t = 0; t < 6; ++t) {
    Subspace x = Subspace::from_rows(random_mat(3, 5, 2, rng), 5);
    Subspace y = Subspace::from_rows(random_mat(3, 5, 2, rng), 5);
    Subspace s = Subspace::sum(x, y), i = Subspace::intersection(x, y);
    CHECK(s.dim() + i.dim() == x.dim() + y.dim());
    size_t in_both = 0, in_sum_count = 0;
    for (auto& v : all_vectors(5, 2)) {
      if (x.contains_vector(v) && y.contains_vector(v)) {
        ++in_both;
        CHECK(i.contains_vector(v));
      }
      if (s.contains_vector(v)) ++in_sum_count;
    }
    CHECK(in_both == (size_t(1) << i.dim()));
    CHECK(in_sum_count == (size_t(1) << s.dim()));
  }
}

TEST_CASE("generalized eigenspaces") {
  // m = c*I
  MatFp ci = MatFp::identity(3, 5).scaled(2);
  CHECK(generalized_eigenspace(ci, 2).dim() == 3);
  CHECK(generalized_eigenspace(ci, 1).dim() == 0);

  // diag(0,1) over GF(2)
  MatFp d(2, 2, 2);
  d.set(1, 1, 1);
  Subspace e0 = generalized_eigenspace(d, 0);
  CHECK(e0.dim() == 1);
  CHECK(e0.contains_vector({1, 0}));

  // Jordan block J_2(1) over GF(3): generalized eigenspace strictly larger
  // than the plain kernel of (m - I)
  MatFp j = from_rows({{1, 1}, {0, 1}}, 3);
  CHECK((j - MatFp::identity(2, 3)).nullspace().rows() == 1);
  CHECK(generalized_eigenspace(j, 1).dim() == 2);
}

TEST_CASE("kron") {
  Rng rng(23);
  MatFp one(1, 1, 5);
  one.set(0, 0, 1);
  MatFp b = random_mat(3, 4, 5, rng);
  CHECK(one.kron(b) == b);
  CHECK(MatFp::identity(2, 3).kron(MatFp::identity(3, 3)) == MatFp::identity(6, 3));
  for (int t = 0; t < 5; ++t) {
    MatFp x = random_mat(3, 3, 5, rng), y = random_mat(3, 3, 5, rng);
    CHECK(x.kron(y).rank() == x.rank() * y.rank());
  }
}

TEST_CASE("matrix product against schoolbook oracle") {
  Rng rng(101);
  for (uint32_t p : {2u, 3u, 65521u}) {
    MatFp a = random_mat(7, 5, p, rng), b = random_mat(5, 6, p, rng);
    MatFp c = a * b;
    for (size_t i = 0; i < 7; ++i)
      for (size_t j = 0; j < 6; ++j) {
        uint64_t s = 0;
        for (size_t k = 0; k < 5; ++k) s = (s + uint64_t(a.at(i, k)) * b.at(k, j)) % p;
        CHECK(c.at(i, j) == s);
      }
  }
}

TEST_CASE("inverse and pow") {
  Rng rng(5);
  for (uint32_t p : {2u, 3u}) {
    for (int t = 0; t < 10; ++t) {
      MatFp m = random_mat(4, 4, p, rng);
      auto inv = m.inverse();
      if (m.rank() == 4) {
        REQUIRE(inv.has_value());
        CHECK((*inv * m) == MatFp::identity(4, p));
      } else {
        CHECK(!inv.has_value());
      }
    }
  }
  MatFp j = from_rows({{1, 1}, {0, 1}}, 3);
  CHECK(j.pow(3) == from_rows({{1, 3 % 3}, {0, 1}}, 3));
  CHECK(j.pow(0) == MatFp::identity(2, 3));
}

TEST_CASE("echelon with coefficient tracking") {
  Rng rng(31);
  for (uint32_t p : {2u, 3u, 5u}) {
    Echelon ech(6, p, true);
    std::vector<std::vector<uint32_t>> inserted;
    for (int t = 0; t < 12; ++t) {
      std::vector<uint32_t> v(6);
      for (auto& x : v) x = uint32_t(rng.below(p));
      std::vector<uint32_t> coeffs;
      bool grew = ech.add(v, &coeffs);
      if (grew) {
        inserted.push_back(v);
      } else {
        // v must be the recorded combination of the inserted vectors
        REQUIRE(coeffs.size() == inserted.size());
        std::vector<uint32_t> acc(6, 0);
        for (size_t k = 0; k < inserted.size(); ++k)
          for (size_t j = 0; j < 6; ++j)
            acc[j] = fp::add(acc[j], fp::mul(coeffs[k], inserted[k][j], p), p);
        CHECK(acc == v);
      }
    }
    CHECK(ech.rank() == inserted.size());
    CHECK(ech.to_mat().rref().mat == ech.to_mat());
  }
}
