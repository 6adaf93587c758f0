#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "snmod/permgroup.hpp"

using namespace snmod;

static const char* DATA = SNMOD_SOURCE_DATA_DIR;

namespace {
uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}

TEST_CASE("permutation basics") {
  Permutation p = Permutation::parse("(1,2)(3,4,5)", 5);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 3);
  CHECK(p.str() == "(1,2)(3,4,5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(p.sign() == -1); // (2-cycle)(3-cycle): sign (-1)*(+1)
  CHECK(Permutation::transposition(5, 1, 2).sign() == -1);
  CHECK(Permutation::cycle(5, {1, 2, 3}).sign() == 1);

  // adjacent word reconstructs the permutation
  std::vector<int> w = p.adjacent_word();
  Permutation acc(5);
  for (int i : w) acc = acc * Permutation::transposition(5, i, i + 1);
  CHECK(acc == p);
}

TEST_CASE("permutation sign is multiplicative") {
  for (int n : {4, 6}) {
    auto els = symmetric_group(n).elements();
    for (size_t i = 0; i < els.size(); i += 7)
      for (size_t j = 0; j < els.size(); j += 11)
        CHECK((els[i] * els[j]).sign() == els[i].sign() * els[j].sign());
  }
}

TEST_CASE("group orders") {
  for (int n = 1; n <= 8; ++n) CHECK(symmetric_group(n).order() == factorial(n));
  CHECK(PermGroup(5).order() == 1); // no generators
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(3).order() == 3);
  CHECK(young_subgroup({3, 2, 1}).order() == 12);
  CHECK(young_subgroup({6}).order() == 720);
  CHECK(wreath_product(3, 2).order() == 72);
  CHECK(wreath_product(2, 3).order() == 48);
  CHECK(wreath_product(5, 2).order() == 28800);
  CHECK(intransitive_group(6, 3).order() == 36);
  CHECK(point_stabilizer(7).order() == 720);
  CHECK(symmetric_group(12).order() == 479001600);
}

TEST_CASE("membership") {
  PermGroup a5 = alternating_group(5);
  CHECK(a5.contains(Permutation::cycle(5, {1, 2, 3})));
  CHECK(!a5.contains(Permutation::transposition(5, 1, 2)));
  PermGroup w = wreath_product(3, 2);
  CHECK(w.contains(Permutation::parse("(1,4)(2,5)(3,6)", 6)));
  CHECK(w.contains(Permutation::parse("(1,2,3)", 6)));
  CHECK(!w.contains(Permutation::parse("(3,4)", 6)));
  CHECK(symmetric_group(6).contains_group(w));
}

TEST_CASE("shipped generator files have the published orders") {
  CHECK(group_from_file(std::string(DATA) + "/groups/f20_deg5.grp", 5).order() == 20);
  CHECK(group_from_file(std::string(DATA) + "/groups/pgl25_deg6.grp", 6).order() == 120);
  CHECK(group_from_file(std::string(DATA) + "/groups/s6_deg10.grp", 10).order() == 720);
  CHECK(group_from_file(std::string(DATA) + "/groups/psl29_deg10.grp", 10).order() == 360);
  PermGroup m10 = group_from_file(std::string(DATA) + "/groups/m10_deg10.grp", 10);
  CHECK(m10.order() == 720);
  PermGroup aut = group_from_file(std::string(DATA) + "/groups/aut_a6_deg10.grp", 10);
  CHECK(aut.order() == 1440);
  PermGroup m12 = group_from_file(std::string(DATA) + "/groups/m12_deg12.grp", 12);
  CHECK(m12.order() == 95040);

  // M10 is the index-2 overgroup of PSL(2,9) distinct from PGL and PSigmaL:
  // its extra generator lies outside PGL(2,9) and outside S6's copy.
  std::vector<Permutation> pgl_gens = {
      Permutation::parse("(1,2,3)(4,5,6)(7,8,9)", 10),
      Permutation::parse("(2,4,5,8,3,7,9,6)", 10),
      Permutation::parse("(1,10)(4,6)(5,9)(7,8)", 10)};
  PermGroup pgl29(10, pgl_gens);
  CHECK(pgl29.order() == 720);
  Permutation extra = Permutation::parse("(2,4,3,7)(5,6,9,8)", 10);
  CHECK(!pgl29.contains(extra));
  CHECK(aut.contains_group(m10));
  CHECK(aut.contains_group(pgl29));
  CHECK(m10.is_k_transitive(2));
  CHECK(m12.is_k_transitive(5));
  CHECK(m10.is_primitive());
  CHECK(group_from_file(std::string(DATA) + "/groups/s6_deg10.grp", 10).is_primitive());
}

TEST_CASE("orbit counts on k-subsets") {
  for (int n : {6, 8}) {
    PermGroup s = symmetric_group(n);
    for (int k = 0; k <= n / 2; ++k) CHECK(s.orbit_count_k_subsets(k) == 1);
  }
  // S3 wr S2 on pairs: within-block vs cross-block
  CHECK(wreath_product(3, 2).orbit_count_k_subsets(2) == 2);
  // exhaustive oracle on all 15 pairs
  {
    PermGroup w = wreath_product(3, 2);
    auto els = w.elements();
    std::map<std::set<int>, int> cls;
    int next = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) cls[{a, b}] = next++;
    // union-find by orbit
    std::map<int, int> parent;
    for (auto& [s, i] : cls) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto& [s, i] : cls)
      for (auto& g : els) {
        std::set<int> im;
        for (int x : s) im.insert(g.apply(x));
        parent[find(cls[im])] = find(i);
      }
    std::set<int> roots;
    for (auto& [s, i] : cls) roots.insert(find(i));
    CHECK(roots.size() == 2);
  }
}

TEST_CASE("transitivity and homogeneity") {
  CHECK(symmetric_group(6).is_k_transitive(3));
  CHECK(alternating_group(4).is_k_transitive(2));
  CHECK(!alternating_group(4).is_k_transitive(3));
  for (int n : {6, 10}) {
    PermGroup w = wreath_product(n / 2, 2);
    CHECK(w.is_transitive());
    CHECK(!w.is_k_homogeneous(2));
    CHECK(!w.is_primitive());
  }
  CHECK(alternating_group(7).is_k_homogeneous(3));
  // k-transitive => k-homogeneous => (k-1)-homogeneous
  for (auto g : {alternating_group(6), symmetric_group(5), wreath_product(2, 3)}) {
    for (int k = 1; k <= 3; ++k) {
      if (g.is_k_transitive(k)) CHECK(g.is_k_homogeneous(k));
      if (g.is_k_homogeneous(k) && k > 1) CHECK(g.is_k_homogeneous(k - 1));
    }
  }
}

TEST_CASE("coset representatives") {
  PermGroup s3 = symmetric_group(3);
  CHECK(s3.coset_reps(s3).size() == 1);
  PermGroup h(3, {Permutation::transposition(3, 1, 2)});
  auto reps = s3.coset_reps(h);
  CHECK(reps.size() == 3);
  // pairwise distinct cosets
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK(!h.contains(reps[i].inverse() * reps[j]));

  CHECK(symmetric_group(6).coset_reps(wreath_product(3, 2)).size() == 10);
  CHECK_THROWS_AS((void)wreath_product(3, 2).coset_reps(symmetric_group(6)),
                  domain_error);
}

TEST_CASE("Burnside sanity: orbits on pairs = average fixed pairs") {
  for (auto g : {wreath_product(3, 2), alternating_group(5), young_subgroup({4, 2})}) {
    auto els = g.elements();
    int n = g.degree();
    uint64_t fixed_total = 0;
    for (auto& e : els) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          int ia = e.apply(a), ib = e.apply(b);
          if ((ia == a && ib == b) || (ia == b && ib == a)) ++fixed_total;
        }
    }
    CHECK(fixed_total == g.orbit_count_k_subsets(2) * els.size());
  }
}

TEST_CASE("base intersection and projections inside S_a wr S_2") {
  // the full wreath product projects onto S_a twice
  auto bi = wreath_product(4, 2).base_intersection(4);
  CHECK(bi.swaps_blocks);
  CHECK(bi.intersection.order() == 576); // 4! * 4!
  CHECK(bi.projection1.order() == 24);
  CHECK(bi.projection2.order() == 24);

  // the base itself: no swaps
  auto bb = young_subgroup({3, 3}).base_intersection(3);
  CHECK(!bb.swaps_blocks);
  CHECK(bb.intersection.order() == 36);

  // small generated subgroup, checked by exhaustive element listing
  PermGroup g(6, {Permutation::parse("(1,4)(2,5)(3,6)", 6),
                  Permutation::parse("(1,2,3)", 6)});
  auto gi = g.base_intersection(3);
  CHECK(gi.swaps_blocks);
  std::set<Permutation> base_elements;
  for (auto& e : g.elements()) {
    bool keeps = true;
    for (int x = 0; x < 3; ++x) keeps &= e.apply(x) < 3;
    if (keeps) base_elements.insert(e);
  }
  CHECK(gi.intersection.order() == base_elements.size());
  for (auto& e : base_elements) CHECK(gi.intersection.contains(e));

  CHECK_THROWS_AS((void)symmetric_group(6).base_intersection(3), domain_error);
}

TEST_CASE("monotone orbit counts for k <= n/2") {
  for (auto g : {wreath_product(3, 2), alternating_group(6), young_subgroup({4, 2}),
                 group_from_file(std::string(DATA) + "/groups/pgl25_deg6.grp", 6)}) {
    uint64_t prev = 1;
    for (int k = 1; k <= g.degree() / 2; ++k) {
      uint64_t cur = g.orbit_count_k_subsets(k);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}
