#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "snmod/partitions.hpp"

using namespace snmod;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("parsing and printing") {
  CHECK(Partition::parse("(6,4,1)") == P({6, 4, 1}));
  CHECK(Partition::parse("()") == Partition());
  CHECK(P({6, 4, 1}).str() == "(6,4,1)");
  CHECK(Partition().str() == "()");
  CHECK_THROWS_AS(Partition::parse("(1,2)"), domain_error);
  CHECK_THROWS_AS(Partition::parse("(0)"), domain_error);
}

TEST_CASE("p-regularity") {
  CHECK(!is_p_regular(P({2, 2, 1}), 2));
  CHECK(is_p_regular(P({4, 1}), 2));
  CHECK(!is_p_regular(P({3, 3, 3}), 3));
  CHECK(is_p_regular(P({3, 3}), 3));
  CHECK(is_p_regular(Partition(), 2));
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({2, 2}), P({2, 2})));
  CHECK(dominance_leq(P({1, 1, 1, 1}), P({4})));
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), domain_error);
}

TEST_CASE("residue content") {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto c = residue_content(P({1}), p);
    CHECK(c.counts[0] == 1);
    CHECK(c.total() == 1);
  }
  auto c = residue_content(P({2, 1}), 2);
  CHECK(c.counts == std::vector<long long>{1, 2});
}

TEST_CASE("addable and removable nodes") {
  // straight row
  auto [add, rem] = addable_removable(P({5}), node_residue({1, 5}, 3), 3);
  CHECK(rem == std::vector<Node>{{1, 5}});
  auto adds = addable_nodes(P({5}));
  CHECK(adds == std::vector<Node>{{1, 6}, {2, 1}});

  // (2,1), p=2, i=0: three 0-addables, zero 0-removables
  auto [a0, r0] = addable_removable(P({2, 1}), 0, 2);
  CHECK(a0.size() == 3);
  CHECK(r0.empty());

  // removable count = number of distinct part sizes
  for (auto& la : enumerate_partitions(9)) {
    std::set<int> distinct(la.parts().begin(), la.parts().end());
    CHECK(removable_nodes(la).size() == distinct.size());
  }
}

TEST_CASE("signatures: frozen examples") {
  // (5,3,1), p=2: all parts odd, exactly one normal node overall
  CHECK(eps_sum(P({5, 3, 1}), 2) == 1);
  Signature s = signature(P({5, 3, 1}), node_residue({1, 5}, 2), 2);
  CHECK(s.eps == 1);
  CHECK(s.normal[0] == Node{1, 5});

  // (4,1), p=2, i=1: both removables are 1-normal
  Signature t = signature(P({4, 1}), 1, 2);
  CHECK(t.eps == 2);
  CHECK(t.good == Node{2, 1}); // leftmost in bottom-to-top reading order
}

TEST_CASE("conormal count law: phi-sum = eps-sum + 1 for every partition") {
  for (int n = 0; n <= 12; ++n)
    for (auto& la : enumerate_partitions(n))
      for (uint32_t p : {2u, 3u, 5u})
        CHECK(phi_sum(la, p) == eps_sum(la, p) + 1);
}

TEST_CASE("crystal operators") {
  // (n) -> (n-1)
  auto e = e_tilde(P({6}), node_residue({1, 6}, 3), 3);
  REQUIRE(e.has_value());
  CHECK(*e == P({5}));

  // (4,1), p=2, i=1: good node (2,1), so e_tilde = (4)
  auto e2 = e_tilde(P({4, 1}), 1, 2);
  REQUIRE(e2.has_value());
  CHECK(*e2 == P({4}));

  CHECK_THROWS_AS((void)e_tilde(P({2, 2}), 0, 2), domain_error);
}

TEST_CASE("crystal inverse laws on p-regular partitions up to n = 12") {
  for (uint32_t p : {2u, 3u}) {
    for (int n = 1; n <= 12; ++n) {
      for (auto& la : enumerate_p_regular(n, p)) {
        for (uint32_t i = 0; i < p; ++i) {
          auto down = e_tilde(la, i, p);
          if (down) {
            CHECK(is_p_regular(*down, p));
            auto back = f_tilde(*down, i, p);
            REQUIRE(back.has_value());
            CHECK(*back == la);
          }
          auto up = f_tilde(la, i, p);
          if (up) {
            CHECK(is_p_regular(*up, p));
            auto back = e_tilde(*up, i, p);
            REQUIRE(back.has_value());
            CHECK(*back == la);
          }
        }
      }
    }
  }
}

TEST_CASE("content bookkeeping: cont(e_tilde la) = cont(la) - gamma_i") {
  for (uint32_t p : {2u, 3u}) {
    for (auto& la : enumerate_p_regular(9, p)) {
      for (uint32_t i = 0; i < p; ++i) {
        auto down = e_tilde(la, i, p);
        if (!down) continue;
        auto c1 = residue_content(la, p), c2 = residue_content(*down, p);
        c1.counts[i] -= 1;
        CHECK(c1 == c2);
      }
    }
  }
}

TEST_CASE("conormality persistence (normal A, conormal B stays conormal in la_A)") {
  for (uint32_t p : {2u, 3u}) {
    for (int n = 2; n <= 11; ++n) {
      for (auto& la : enumerate_partitions(n)) {
        for (uint32_t i = 0; i < p; ++i) {
          Signature sig = signature(la, i, p);
          for (Node a : sig.normal) {
            Partition rm = la.remove_node(a);
            Signature sig2 = signature(rm, i, p);
            for (Node b : sig.conormal) {
              bool found = false;
              for (Node c : sig2.conormal) found |= (c == b);
              CHECK(found);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("JS detection") {
  CHECK(is_JS(P({7}), 2));
  CHECK(is_JS(P({5, 3, 1}), 2));
  CHECK(!is_JS(P({4, 1}), 2));
  CHECK_THROWS_AS(is_JS(P({3, 3}), 2), domain_error);

  // p = 2: JS iff all parts share one parity
  for (int n = 1; n <= 14; ++n) {
    for (auto& la : enumerate_p_regular(n, 2)) {
      bool same_parity = true;
      for (int r = 2; r <= la.height(); ++r)
        same_parity &= (la.part(r) % 2 == la.part(1) % 2);
      CHECK(is_JS(la, 2) == same_parity);
    }
  }
}

TEST_CASE("Mullineux map: paper pairs and involution") {
  CHECK(mullineux(P({3, 2, 2}), 3) == P({5, 1, 1}));
  CHECK(mullineux(P({4, 1, 1}), 3) == P({4, 1, 1}));
  CHECK(mullineux(P({5, 1, 1}), 3) == P({3, 2, 2}));

  for (uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 12; ++n) {
      for (auto& la : enumerate_p_regular(n, p)) {
        Partition m = mullineux(la, p);
        CHECK(m.n() == la.n());
        CHECK(is_p_regular(m, p));
        CHECK(mullineux(m, p) == la);
        if (p == 2) CHECK(m == la); // sign twist is trivial in characteristic 2
      }
    }
  }
}

TEST_CASE("Mullineux symbol round-trips and matches the crystal route") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 11; ++n) {
      for (auto& la : enumerate_p_regular(n, p)) {
        auto sym = mullineux_symbol(la, p);
        CHECK(partition_from_symbol(sym, p) == la);
        CHECK(mullineux(la, p) == oracles::crystal_mullineux(la, p));
      }
    }
  }
}

TEST_CASE("special partitions") {
  CHECK(special_partition(SpecialKind::beta, 10) == P({6, 4}));
  CHECK(special_partition(SpecialKind::beta, 7) == P({4, 3}));
  CHECK(special_partition(SpecialKind::alpha, 6) == P({5, 1}));
  CHECK_THROWS_AS(special_partition(SpecialKind::alpha, 1), domain_error);
  CHECK_THROWS_AS(special_partition(SpecialKind::beta, 1), domain_error);
}

TEST_CASE("two-step parity chain condition") {
  auto j1 = theorem_A_iv_condition(P({5, 4, 2}));
  REQUIRE(j1.has_value());
  CHECK(*j1 == 2);

  CHECK(!theorem_A_iv_condition(P({7, 5, 3})).has_value());

  auto j2 = theorem_A_iv_condition(P({6, 5, 3, 2}));
  REQUIRE(j2.has_value());
  CHECK(*j2 == 2);

  // JS partitions (all parts one parity) never satisfy the chain
  for (int n = 6; n <= 14; ++n)
    for (auto& la : enumerate_p_regular(n, 2))
      if (la.height() >= 3 && is_JS(la, 2))
        CHECK(!theorem_A_iv_condition(la).has_value());
}

TEST_CASE("l22 case analysis") {
  // all parts above the last odd, last part 2 -> case (b)
  {
    Partition la({5, 3, 2});
    REQUIRE(eps_i(la, 0, 2) + eps_i(la, 1, 2) == 2);
    uint32_t i = eps_i(la, 0, 2) > 0 && phi_i(la, 0, 2) > 0 ? 0u : 1u;
    auto c = lemma_l22_case(la, i);
    CHECK(std::holds_alternative<L22CaseB>(c));
  }
  {
    Partition la({5, 4, 2});
    // residue with both a normal and a conormal node
    uint32_t pick = 2;
    for (uint32_t i = 0; i < 2; ++i)
      if (eps_i(la, i, 2) > 0 && phi_i(la, i, 2) > 0) pick = i;
    REQUIRE(pick < 2);
    auto c = lemma_l22_case(la, pick);
    REQUIRE(std::holds_alternative<L22CaseA>(c));
    CHECK(std::get<L22CaseA>(c).j == 2);
  }
  // JS partition: precondition fails
  CHECK_THROWS_AS((void)lemma_l22_case(P({5, 3, 1}), 0), domain_error);
}

TEST_CASE("good/cogood geometry follows the l19 singularity rule") {
  // whenever eps_i, phi_i > 0, (la_B)^C is p-singular iff C = (a+p-1, b-1)
  for (uint32_t p : {2u, 3u}) {
    for (int n = 2; n <= 12; ++n) {
      for (auto& la : enumerate_p_regular(n, p)) {
        for (uint32_t i = 0; i < p; ++i) {
          Signature sig = signature(la, i, p);
          if (!sig.good || !sig.cogood) continue;
          Node b = *sig.good, c = *sig.cogood;
          Partition moved = la.remove_node(b).add_node(c);
          bool singular = !is_p_regular(moved, p);
          bool rule = (c.row == b.row + int(p) - 1) && (c.col == b.col - 1);
          CHECK(singular == rule);
        }
      }
    }
  }
}

TEST_CASE("row-indexed normal/conormal structure when eps_0 + eps_1 = 2 (p = 2)") {
  for (int n = 2; n <= 14; ++n) {
    for (auto& la : enumerate_p_regular(n, 2)) {
      if (eps_i(la, 0, 2) + eps_i(la, 1, 2) != 2) continue;
      int h = la.height();
      // residues of the row removable nodes (2-regular: one per row)
      std::vector<int> a(h + 1);
      for (int k = 1; k <= h; ++k) a[k] = int(node_residue({k, la.part(k)}, 2));
      std::vector<int> b;
      for (int k = 2; k <= h; ++k)
        if (a[k] == a[k - 1]) b.push_back(k);
      REQUIRE(!b.empty());
      std::set<int> normal_rows, conormal_rows;
      for (uint32_t i = 0; i < 2; ++i) {
        Signature sig = signature(la, i, 2);
        for (Node x : sig.normal) normal_rows.insert(x.row);
        for (Node x : sig.conormal) conormal_rows.insert(x.row);
      }
      CHECK(normal_rows == std::set<int>{1, b.front()});
      CHECK(conormal_rows == std::set<int>{b.back() - 1, h, h + 1});
      for (size_t k = 1; k < b.size(); ++k) CHECK(a[b[k]] != a[b[k - 1]]);
    }
  }
}

TEST_CASE("parity consequences of two-normal-node configurations (p = 2)") {
  for (int n = 2; n <= 14; ++n) {
    for (auto& la : enumerate_p_regular(n, 2)) {
      int e0 = eps_i(la, 0, 2), e1 = eps_i(la, 1, 2);
      // eps_i = 2, eps_{1-i} = 0, phi_i = 0 forces n odd
      for (uint32_t i = 0; i < 2; ++i) {
        int ei = i ? e1 : e0, eo = i ? e0 : e1;
        if (ei == 2 && eo == 0 && phi_i(la, i, 2) == 0) CHECK(n % 2 == 1);
      }
      // eps_0 = eps_1 = 1 and phi at the bottom normal node's residue = 3
      if (e0 == 1 && e1 == 1) {
        Node bottom{0, 0};
        uint32_t res = 0;
        for (uint32_t i = 0; i < 2; ++i) {
          Signature sig = signature(la, i, 2);
          for (Node x : sig.normal)
            if (x.row > bottom.row) { bottom = x; res = i; }
        }
        if (phi_i(la, res, 2) == 3) CHECK(n % 2 == 1);
      }
    }
  }
}

TEST_CASE("p-regular enumeration") {
  auto l42 = enumerate_p_regular(4, 2);
  REQUIRE(l42.size() == 2);
  CHECK(l42[0] == P({4}));
  CHECK(l42[1] == P({3, 1}));

  auto l0 = enumerate_p_regular(0, 3);
  REQUIRE(l0.size() == 1);
  CHECK(l0[0] == Partition());

  // lexicographically descending
  for (size_t i = 1; i < l42.size(); ++i) CHECK(l42[i] < l42[i - 1]);

  // Glaisher: #p-regular = #partitions with no part divisible by p
  for (int n = 0; n <= 20; ++n)
    CHECK((long long)enumerate_p_regular(n, 2).size() ==
          oracles::coprime_parts_count(n, 2));
  for (int n = 0; n <= 16; ++n)
    CHECK((long long)enumerate_p_regular(n, 3).size() ==
          oracles::coprime_parts_count(n, 3));
}
