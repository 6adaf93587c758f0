#include "snmod/permgroup.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace snmod {

PermGroup::PermGroup(int degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (auto& g : gens_)
    if (g.degree() != degree_) throw domain_error("generator degree mismatch");
  gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                             [](const Permutation& g) { return g.is_identity(); }),
              gens_.end());
}

namespace {

// first point moved by g
int first_moved(const Permutation& g) {
  for (int x = 0; x < g.degree(); ++x)
    if (g.apply(x) != x) return x;
  return -1;
}

} // namespace

const PermGroup::Chain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(box_->m);
  if (box_->ptr) return *box_->ptr;

  auto ch = std::make_shared<Chain>();
  auto& levels = ch->levels;

  auto recompute_orbit = [&](size_t l) {
    Level& lv = levels[l];
    lv.orbit = {lv.base};
    lv.pos.assign(degree_, -1);
    lv.pos[lv.base] = 0;
    lv.transversal = {Permutation(degree_)};
    for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      int pt = lv.orbit[qi];
      for (const auto& s : lv.sgens) {
        int im = s.apply(pt);
        if (lv.pos[im] < 0) {
          lv.pos[im] = int(lv.orbit.size());
          lv.orbit.push_back(im);
          lv.transversal.push_back(s * lv.transversal[qi]);
        }
      }
    }
  };

  // add g to the generator lists of levels 0..j, where j is the first level
  // whose base point g moves; create a fresh base point when g fixes all.
  auto place_generator = [&](const Permutation& g) {
    if (g.is_identity()) return;
    size_t j = 0;
    while (j < levels.size() && g.apply(levels[j].base) == levels[j].base) ++j;
    if (j == levels.size()) {
      Level lv;
      lv.base = first_moved(g);
      levels.push_back(std::move(lv));
    }
    for (size_t m = 0; m <= j; ++m) levels[m].sgens.push_back(g);
  };

  for (const auto& g : gens_) place_generator(g);

  // deepest-first completion: every Schreier generator of level i must sift
  // to the identity through the (already complete) deeper levels
  int i = int(levels.size()) - 1;
  while (i >= 0) {
    recompute_orbit(size_t(i));
    Level& lv = levels[i];
    bool complete = true;
    for (size_t qi = 0; qi < lv.orbit.size() && complete; ++qi) {
      int pt = lv.orbit[qi];
      for (const auto& s : lv.sgens) {
        Permutation sch =
            lv.transversal[lv.pos[s.apply(pt)]].inverse() * s * lv.transversal[qi];
        if (sch.is_identity()) continue;
        // strip through levels below i
        Permutation cur = sch;
        size_t j = size_t(i) + 1;
        while (j < levels.size() && !cur.is_identity()) {
          Level& dl = levels[j];
          int x = cur.apply(dl.base);
          if (dl.pos[x] < 0) break;
          cur = dl.transversal[dl.pos[x]].inverse() * cur;
          ++j;
        }
        if (cur.is_identity()) continue;
        if (j == levels.size()) {
          Level nl;
          nl.base = first_moved(cur);
          levels.push_back(std::move(nl));
        }
        for (size_t m = size_t(i) + 1; m <= j; ++m) levels[m].sgens.push_back(cur);
        i = int(j);
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }

  ch->order = 1;
  for (const auto& lv : levels) ch->order *= lv.orbit.size();
  box_->ptr = std::move(ch);
  return *box_->ptr;
}

bool PermGroup::sift(const Chain& ch, const Permutation& g, Permutation* residue) {
  Permutation cur = g;
  for (const auto& lv : ch.levels) {
    if (cur.is_identity()) break;
    int x = cur.apply(lv.base);
    if (lv.pos[x] < 0) {
      if (residue) *residue = cur;
      return false;
    }
    cur = lv.transversal[lv.pos[x]].inverse() * cur;
  }
  if (!cur.is_identity()) {
    if (residue) *residue = cur;
    return false;
  }
  return true;
}

uint64_t PermGroup::order() const { return chain().order; }

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw domain_error("membership: degree mismatch");
  return sift(chain(), g, nullptr);
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  std::vector<int> orbit = {point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto& g : gens_) {
      int im = g.apply(orbit[qi]);
      if (!seen[im]) {
        seen[im] = true;
        orbit.push_back(im);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && int(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) return false;
  if (degree_ <= 2) return true;
  // minimal block containing {0, b} for each b; primitive iff all are full
  for (int b = 1; b < degree_; ++b) {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> queue = {{0, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      int rx = find(x), ry = find(y);
      if (rx == ry) continue;
      parent[ry] = rx;
      for (const auto& g : gens_) queue.push_back({g.apply(x), g.apply(y)});
    }
    int root = find(0), size = 0;
    for (int x = 0; x < degree_; ++x)
      if (find(x) == root) ++size;
    if (size < degree_) return false;
  }
  return true;
}

uint64_t PermGroup::orbit_count_k_subsets(int k) const {
  if (k < 0 || k > degree_) throw domain_error("k out of range");
  if (k == 0) return 1;
  std::map<std::vector<int>, bool> visited;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::vector<int>> all;
  while (true) {
    all.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == degree_ - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  for (auto& s : all) visited[s] = false;
  uint64_t orbits = 0;
  for (auto& s : all) {
    if (visited[s]) continue;
    ++orbits;
    std::vector<std::vector<int>> queue = {s};
    visited[s] = true;
    while (!queue.empty()) {
      auto t = queue.back();
      queue.pop_back();
      for (const auto& g : gens_) {
        std::vector<int> im(k);
        for (int i = 0; i < k; ++i) im[i] = g.apply(t[i]);
        std::sort(im.begin(), im.end());
        auto it = visited.find(im);
        if (!it->second) {
          it->second = true;
          queue.push_back(im);
        }
      }
    }
  }
  return orbits;
}

bool PermGroup::is_k_transitive(int k) const {
  if (k < 0 || k > degree_) throw domain_error("k out of range");
  if (k == 0) return true;
  uint64_t target = 1;
  for (int i = 0; i < k; ++i) target *= uint64_t(degree_ - i);
  std::set<std::vector<int>> seen;
  std::vector<int> start(k);
  std::iota(start.begin(), start.end(), 0);
  std::vector<std::vector<int>> queue = {start};
  seen.insert(start);
  while (!queue.empty()) {
    auto t = queue.back();
    queue.pop_back();
    for (const auto& g : gens_) {
      std::vector<int> im(k);
      for (int i = 0; i < k; ++i) im[i] = g.apply(t[i]);
      if (seen.insert(im).second) queue.push_back(im);
    }
  }
  return seen.size() == target;
}

bool PermGroup::is_k_homogeneous(int k) const {
  if (k < 0 || k > degree_) throw domain_error("k out of range");
  return orbit_count_k_subsets(k) == 1;
}

std::vector<Permutation> PermGroup::coset_reps(const PermGroup& h) const {
  if (h.degree() != degree_) throw domain_error("coset_reps: degree mismatch");
  if (!contains_group(h)) throw domain_error("coset_reps: not a subgroup");
  if (order() % h.order() != 0) throw domain_error("coset_reps: order mismatch");
  uint64_t index = order() / h.order();
  std::vector<Permutation> reps = {Permutation(degree_)};
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    for (const auto& g : gens_) {
      Permutation cand = g * reps[qi];
      bool fresh = true;
      for (const auto& r : reps)
        if (h.contains(r.inverse() * cand)) { fresh = false; break; }
      if (fresh) reps.push_back(cand);
      if (reps.size() == index) return reps;
    }
  }
  if (reps.size() != index) throw domain_error("coset enumeration failed");
  return reps;
}

std::vector<Permutation> PermGroup::elements(uint64_t cap) const {
  if (order() > cap) throw cap_error("group too large to enumerate");
  std::set<Permutation> seen;
  std::vector<Permutation> queue = {Permutation(degree_)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    Permutation t = queue.back();
    queue.pop_back();
    for (const auto& g : gens_) {
      Permutation im = g * t;
      if (seen.insert(im).second) queue.push_back(im);
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

BaseIntersection PermGroup::base_intersection(int a) const {
  if (degree_ != 2 * a) throw domain_error("base_intersection: degree must be 2a");
  auto block_of = [&](const Permutation& g) -> int {
    bool in1 = true, in2 = true;
    for (int x = 0; x < a; ++x) {
      if (g.apply(x) >= a) in1 = false;
      if (g.apply(x) < a) in2 = false;
    }
    if (in1) {
      for (int x = a; x < 2 * a; ++x)
        if (g.apply(x) < a) throw domain_error("not inside the wreath product");
      return 0;
    }
    if (in2) {
      for (int x = a; x < 2 * a; ++x)
        if (g.apply(x) >= a) throw domain_error("not inside the wreath product");
      return 1;
    }
    throw domain_error("not inside the wreath product");
  };

  std::vector<Permutation> keep, swap;
  for (const auto& g : gens_)
    (block_of(g) == 0 ? keep : swap).push_back(g);

  std::vector<Permutation> base_gens = keep;
  bool swaps = !swap.empty();
  if (swaps) {
    const Permutation& t = swap.front();
    for (const auto& s : swap) base_gens.push_back(t * s);
    for (const auto& s : keep) base_gens.push_back(t * s * t.inverse());
    base_gens.push_back(t * t);
  }
  PermGroup inter(degree_, base_gens);

  std::vector<Permutation> p1, p2;
  for (const auto& g : inter.generators()) {
    std::vector<int> i1(a), i2(a);
    for (int x = 0; x < a; ++x) i1[x] = g.apply(x);
    for (int x = 0; x < a; ++x) i2[x] = g.apply(a + x) - a;
    p1.push_back(Permutation(i1));
    p2.push_back(Permutation(i2));
  }
  return BaseIntersection{inter, PermGroup(a, p1), PermGroup(a, p2), swaps};
}

// ------------------------------------------------------------ constructors

PermGroup symmetric_group(int n) {
  if (n < 1) throw domain_error("symmetric_group needs n >= 1");
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return PermGroup(n, gens);
}

PermGroup alternating_group(int n) {
  if (n < 1) throw domain_error("alternating_group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(Permutation::cycle(n, {1, 2, 3}));
  if (n >= 4) {
    std::vector<int> pts;
    if (n % 2 == 1)
      for (int i = 1; i <= n; ++i) pts.push_back(i);
    else
      for (int i = 2; i <= n; ++i) pts.push_back(i);
    gens.push_back(Permutation::cycle(n, pts));
  }
  return PermGroup(n, gens);
}

PermGroup young_subgroup(const std::vector<int>& mu) {
  int n = 0;
  for (int m : mu) {
    if (m < 0) throw domain_error("young subgroup: negative part");
    n += m;
  }
  if (n < 1) throw domain_error("young subgroup: empty composition");
  std::vector<Permutation> gens;
  int start = 0;
  for (int m : mu) {
    for (int i = 1; i < m; ++i)
      gens.push_back(Permutation::transposition(n, start + i, start + i + 1));
    start += m;
  }
  return PermGroup(n, gens);
}

PermGroup intransitive_group(int n, int k) {
  if (k < 0 || k > n) throw domain_error("intransitive group: bad k");
  if (k == 0 || k == n) return symmetric_group(n);
  return young_subgroup({n - k, k});
}

PermGroup wreath_product(int a, int b) {
  if (a < 1 || b < 1) throw domain_error("wreath product: bad parameters");
  int n = a * b;
  std::vector<Permutation> gens;
  for (int i = 1; i < a; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  for (int j = 0; j + 1 < b; ++j) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < a; ++x) std::swap(img[j * a + x], img[(j + 1) * a + x]);
    gens.push_back(Permutation(img));
  }
  return PermGroup(n, gens);
}

PermGroup point_stabilizer(int n) {
  if (n < 2) throw domain_error("point stabilizer needs n >= 2");
  std::vector<Permutation> gens;
  for (int i = 1; i < n - 1; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return PermGroup(n, gens);
}

PermGroup group_from_file(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open group file: " + path);
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    size_t s = line.find_first_not_of(" \t\r");
    if (s == std::string::npos || line[s] == '#') continue;
    gens.push_back(Permutation::parse(line, degree));
  }
  return PermGroup(degree, gens);
}

} // namespace snmod
