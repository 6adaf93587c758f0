#include "snmod/rep.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace snmod {

MatFp Rep::evaluate(const Permutation& g) const {
  if (!symmetric_group)
    throw domain_error("evaluate: arbitrary elements need a full S_n representation");
  if (g.degree() != degree) throw domain_error("evaluate: degree mismatch");
  MatFp out = MatFp::identity(dim(), p);
  for (int i : g.adjacent_word()) out = out * images[i - 1];
  return out;
}

bool Rep::same_group(const Rep& o) const {
  if (p != o.p || degree != o.degree || symmetric_group != o.symmetric_group)
    return false;
  if (!symmetric_group && gen_perms != o.gen_perms) return false;
  return true;
}

bool Rep::check_coxeter(bool full) const {
  if (!symmetric_group) return true;
  size_t d = dim();
  MatFp id = MatFp::identity(d, p);
  size_t g = images.size();
  for (size_t i = 0; i < g; ++i)
    if (images[i] * images[i] != id) return false;
  for (size_t i = 0; i + 1 < g; ++i) {
    const MatFp &a = images[i], &b = images[i + 1];
    if (a * b * a != b * a * b) return false;
  }
  size_t step = full ? 1 : std::max<size_t>(1, g / 3);
  for (size_t i = 0; i < g; i += step)
    for (size_t j = i + 2; j < g; j += step)
      if (images[i] * images[j] != images[j] * images[i]) return false;
  return true;
}

std::vector<std::vector<uint8_t>> tabloid_words(int n, const std::vector<int>& mu) {
  int total = 0;
  for (int m : mu) {
    if (m < 0) throw domain_error("composition parts must be nonnegative");
    total += m;
  }
  if (total != n) throw domain_error("composition does not sum to n");
  std::vector<uint8_t> w;
  for (size_t r = 0; r < mu.size(); ++r)
    for (int t = 0; t < mu[r]; ++t) w.push_back(uint8_t(r));
  std::sort(w.begin(), w.end());
  std::vector<std::vector<uint8_t>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::vector<int>> subsets_in_basis_order(int n, int k) {
  auto words = tabloid_words(n, {n - k, k});
  std::vector<std::vector<int>> out;
  for (auto& w : words) {
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
      if (w[x] == 1) s.push_back(x + 1);
    out.push_back(s);
  }
  return out;
}

namespace {

size_t word_index(const std::vector<std::vector<uint8_t>>& words,
                  const std::vector<uint8_t>& w) {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) throw domain_error("tabloid lookup failed");
  return size_t(it - words.begin());
}

} // namespace

Rep perm_module(int n, uint32_t p, const std::vector<int>& mu) {
  fp::check_prime(p);
  auto words = tabloid_words(n, mu);
  size_t d = words.size();
  Rep rep;
  rep.p = p;
  rep.degree = n;
  rep.symmetric_group = true;
  rep.dim_hint = d;
  rep.basis_note = "tabloids";
  for (int i = 1; i < n; ++i) {
    MatFp m(d, d, p);
    for (size_t idx = 0; idx < d; ++idx) {
      std::vector<uint8_t> w = words[idx];
      std::swap(w[i - 1], w[i]);
      m.set(word_index(words, w), idx, 1);
    }
    rep.images.push_back(std::move(m));
  }
  return rep;
}

Rep perm_module_k(int n, uint32_t p, int k) {
  if (k < 0 || k > n) throw domain_error("subset size out of range");
  return perm_module(n, p, {n - k, k});
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la) {
  std::vector<std::vector<std::vector<int>>> out;
  int n = la.n();
  std::vector<std::vector<int>> rows(la.height());
  std::function<void(int)> rec = [&](int x) {
    if (x > n) {
      out.push_back(rows);
      return;
    }
    for (int r = 0; r < la.height(); ++r) {
      int len = int(rows[r].size());
      if (len >= la.part(r + 1)) continue;
      if (r > 0 && int(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(x);
      rec(x + 1);
      rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

// enumerate the column stabilizer of a tableau with signs
void for_each_column_perm(const std::vector<std::vector<int>>& cols, size_t c,
                          std::vector<int>& image, int sign,
                          const std::function<void(const std::vector<int>&, int)>& fn) {
  if (c == cols.size()) {
    fn(image, sign);
    return;
  }
  const auto& col = cols[c];
  std::vector<int> perm(col.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int s = 1;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) s = -s;
    for (size_t i = 0; i < col.size(); ++i) image[col[i]] = col[perm[i]];
    for_each_column_perm(cols, c + 1, image, sign * s, fn);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int x : col) image[x] = x;
}

struct SpechtKey {
  std::vector<int> parts;
  uint32_t p;
  bool operator<(const SpechtKey& o) const {
    return std::tie(parts, p) < std::tie(o.parts, o.p);
  }
};

std::map<SpechtKey, std::shared_ptr<const SpechtData>>& specht_cache() {
  static std::map<SpechtKey, std::shared_ptr<const SpechtData>> cache;
  return cache;
}

std::mutex& rep_cache_mutex() {
  static std::mutex m;
  return m;
}

SpechtData build_specht(const Partition& la, uint32_t p) {
  fp::check_prime(p);
  int n = la.n();
  if (n == 0) throw domain_error("Specht module of the empty partition");
  std::vector<int> mu(la.parts());
  auto words = tabloid_words(n, mu);
  auto tableaux = standard_tableaux(la);
  size_t dm = words.size(), ds = tableaux.size();

  MatFp e(dm, ds, p);
  for (size_t t = 0; t < ds; ++t) {
    const auto& rows = tableaux[t];
    // columns of the tableau (0-based entries)
    int width = la.part(1);
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < width; ++c) {
      std::vector<int> col;
      for (int r = 0; r < la.height(); ++r)
        if (c < int(rows[r].size())) col.push_back(rows[r][c] - 1);
      if (col.size() > 1) cols.push_back(col);
    }
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<uint8_t> base_word(n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int x : rows[r]) base_word[x - 1] = uint8_t(r);
    for_each_column_perm(cols, 0, image, 1,
                         [&](const std::vector<int>& img, int sign) {
                           std::vector<uint8_t> w(n);
                           for (int x = 0; x < n; ++x) w[img[x]] = base_word[x];
                           size_t idx = word_index(words, w);
                           uint32_t cur = e.at(idx, t);
                           uint32_t val = sign > 0 ? 1 : p - 1;
                           e.set(idx, t, fp::add(cur, val, p));
                         });
  }

  // the polytabloids of standard tableaux are independent; express the
  // permuted columns back in that basis to get the generator images
  Rep m = perm_module(n, p, mu);
  MatFp rhs(dm, ds * size_t(n - 1), p);
  for (int i = 0; i < n - 1; ++i) {
    MatFp me = m.images[i] * e;
    for (size_t r = 0; r < dm; ++r)
      for (size_t c = 0; c < ds; ++c) rhs.set(r, size_t(i) * ds + c, me.at(r, c));
  }
  auto sol = e.solve(rhs);
  if (!sol) throw domain_error("Specht action failed to close on polytabloids");

  SpechtData data;
  data.rep.p = p;
  data.rep.degree = n;
  data.rep.symmetric_group = true;
  data.rep.dim_hint = ds;
  data.rep.basis_note = "standard polytabloids";
  for (int i = 0; i < n - 1; ++i) {
    MatFp a(ds, ds, p);
    for (size_t r = 0; r < ds; ++r)
      for (size_t c = 0; c < ds; ++c) a.set(r, c, sol->at(r, size_t(i) * ds + c));
    data.rep.images.push_back(std::move(a));
  }
  data.polytabloids = e;
  return data;
}

} // namespace

const SpechtData& specht_data(const Partition& la, uint32_t p) {
  SpechtKey key{la.parts(), p};
  {
    std::lock_guard<std::mutex> lock(rep_cache_mutex());
    auto it = specht_cache().find(key);
    if (it != specht_cache().end()) return *it->second;
  }
  auto built = std::make_shared<SpechtData>(build_specht(la, p));
  std::lock_guard<std::mutex> lock(rep_cache_mutex());
  auto [it, fresh] = specht_cache().emplace(key, built);
  return *it->second;
}

Rep specht(const Partition& la, uint32_t p) { return specht_data(la, p).rep; }

MatFp gram(const Partition& la, uint32_t p) {
  const SpechtData& sd = specht_data(la, p);
  return sd.polytabloids.transpose() * sd.polytabloids;
}

namespace {

std::map<SpechtKey, std::shared_ptr<const Rep>>& irr_cache() {
  static std::map<SpechtKey, std::shared_ptr<const Rep>> cache;
  return cache;
}

} // namespace

Rep irreducible(const Partition& la, uint32_t p) {
  if (!is_p_regular(la, p))
    throw domain_error("irreducible modules are labeled by p-regular partitions");
  SpechtKey key{la.parts(), p};
  {
    std::lock_guard<std::mutex> lock(rep_cache_mutex());
    auto it = irr_cache().find(key);
    if (it != irr_cache().end()) return *it->second;
  }
  const std::string& dir = config().cache_dir;
  Rep loaded;
  if (!dir.empty() && cache_load(dir, "D", la, p, la.n(), &loaded)) {
    auto ptr = std::make_shared<const Rep>(std::move(loaded));
    std::lock_guard<std::mutex> lock(rep_cache_mutex());
    irr_cache().emplace(key, ptr);
    return *ptr;
  }
  Rep s = specht(la, p);
  MatFp g = gram(la, p);
  Subspace radical = Subspace::from_rows(g.nullspace(), s.dim());
  Rep d = quotient_rep(s, radical);
  d.basis_note = "specht mod radical";
  if (!dir.empty()) cache_store(dir, "D", la, p, d);
  auto ptr = std::make_shared<const Rep>(std::move(d));
  std::lock_guard<std::mutex> lock(rep_cache_mutex());
  auto [it, fresh] = irr_cache().emplace(key, ptr);
  return *it->second;
}

size_t irreducible_dim(const Partition& la, uint32_t p) {
  if (!is_p_regular(la, p))
    throw domain_error("irreducible modules are labeled by p-regular partitions");
  return gram(la, p).rank();
}

Rep sign_twist(const Rep& v) {
  if (!v.symmetric_group) throw domain_error("sign twist needs an S_n representation");
  Rep out = v;
  for (auto& m : out.images) m = m.scaled(v.p - 1);
  return out;
}

Rep dual_rep(const Rep& v) {
  Rep out = v;
  for (size_t i = 0; i < v.images.size(); ++i) {
    auto inv = v.images[i].inverse();
    if (!inv) throw domain_error("generator image is singular");
    out.images[i] = inv->transpose();
  }
  return out;
}

Rep conjugation_module(const Rep& v) {
  Rep out;
  out.p = v.p;
  out.degree = v.degree;
  out.symmetric_group = v.symmetric_group;
  out.gen_perms = v.gen_perms;
  out.dim_hint = v.dim() * v.dim();
  out.basis_note = "endomorphisms, row-major";
  for (const auto& m : v.images) {
    auto inv = m.inverse();
    if (!inv) throw domain_error("generator image is singular");
    out.images.push_back(m.kron(inv->transpose()));
  }
  return out;
}

Rep box_product(const Rep& a, const Rep& b) {
  if (a.p != b.p) throw domain_error("box product: modulus mismatch");
  if (!a.symmetric_group || !b.symmetric_group)
    throw domain_error("box product expects S_a and S_b representations");
  int n = a.degree + b.degree;
  Rep out;
  out.p = a.p;
  out.degree = n;
  out.symmetric_group = false;
  out.dim_hint = a.dim() * b.dim();
  PermGroup young = young_subgroup({a.degree, b.degree});
  out.gen_perms = young.generators();
  MatFp ia = MatFp::identity(a.dim(), a.p), ib = MatFp::identity(b.dim(), b.p);
  for (const auto& m : a.images) out.images.push_back(m.kron(ib));
  for (const auto& m : b.images) out.images.push_back(ia.kron(m));
  return out;
}

Rep restrict_rep(const Rep& v, const PermGroup& g) {
  if (!v.symmetric_group)
    throw domain_error("restriction starts from an S_n representation");
  if (g.degree() != v.degree) throw domain_error("restriction: degree mismatch");
  Rep out;
  out.p = v.p;
  out.degree = v.degree;
  out.symmetric_group = false;
  out.gen_perms = g.generators();
  out.dim_hint = v.dim();
  for (const auto& perm : g.generators()) out.images.push_back(v.evaluate(perm));
  return out;
}

Rep induce_up(const Rep& v, const Config& cfg) {
  if (!v.symmetric_group) throw domain_error("induce_up needs an S_n representation");
  int n = v.degree;
  size_t d = v.dim();
  size_t big = d * size_t(n + 1);
  if (big > cfg.dimension_cap)
    throw cap_error("induced module exceeds the dimension cap");
  // coset representatives c_r = s_r s_{r+1} ... s_n map n+1 to r
  std::vector<Permutation> reps(n + 1, Permutation(n + 1));
  for (int r = n; r >= 1; --r) {
    reps[r - 1] = Permutation::transposition(n + 1, r, r + 1);
    if (r < n) reps[r - 1] = reps[r - 1] * reps[r];
  }
  // reps[n] = identity (n+1 -> n+1)
  Rep out;
  out.p = v.p;
  out.degree = n + 1;
  out.symmetric_group = true;
  out.dim_hint = big;
  for (int i = 1; i <= n; ++i) {
    Permutation s = Permutation::transposition(n + 1, i, i + 1);
    MatFp m(big, big, v.p);
    for (int r = 1; r <= n + 1; ++r) {
      int rprime = s.apply(r - 1) + 1; // s moves coset anchors
      Permutation h_full = reps[rprime - 1].inverse() * s * reps[r - 1];
      if (h_full.apply(n) != n)
        throw domain_error("induce_up: coset arithmetic failed");
      std::vector<int> small(h_full.images().begin(), h_full.images().end() - 1);
      MatFp block = v.evaluate(Permutation(small));
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
          uint32_t val = block.at(a, b);
          if (val) m.set(size_t(rprime - 1) * d + a, size_t(r - 1) * d + b, val);
        }
    }
    out.images.push_back(std::move(m));
  }
  return out;
}

Rep trivial_induced(const PermGroup& g, uint32_t p, const Config& cfg) {
  PermGroup sn = symmetric_group(g.degree());
  uint64_t index = sn.order() / g.order();
  if (index > cfg.dimension_cap)
    throw cap_error("index of the subgroup exceeds the dimension cap");
  std::vector<Permutation> reps = sn.coset_reps(g);
  size_t d = reps.size();
  auto coset_of = [&](const Permutation& x) -> size_t {
    for (size_t r = 0; r < d; ++r)
      if (g.contains(reps[r].inverse() * x)) return r;
    throw domain_error("coset lookup failed");
  };
  Rep out;
  out.p = p;
  out.degree = g.degree();
  out.symmetric_group = true;
  out.dim_hint = d;
  out.basis_note = "cosets";
  for (int i = 1; i < g.degree(); ++i) {
    Permutation s = Permutation::transposition(g.degree(), i, i + 1);
    MatFp m(d, d, p);
    for (size_t r = 0; r < d; ++r) m.set(coset_of(s * reps[r]), r, 1);
    out.images.push_back(std::move(m));
  }
  return out;
}

Subspace fixed_points(const Rep& v) {
  size_t d = v.dim();
  Echelon eqs(d, v.p);
  for (const auto& m : v.images) {
    for (size_t i = 0; i < d; ++i) {
      std::vector<uint32_t> row(m.row(i), m.row(i) + d);
      row[i] = fp::sub(row[i], 1, v.p);
      eqs.add(row);
    }
  }
  return Subspace::from_rows(eqs.equations_nullspace(), d);
}

Subspace spin_up(const Rep& v, const std::vector<uint32_t>& vec) {
  size_t d = v.dim();
  if (vec.size() != d) throw domain_error("spin_up: vector length mismatch");
  Echelon ech(d, v.p);
  std::vector<std::vector<uint32_t>> queue;
  auto push = [&](const std::vector<uint32_t>& x) {
    auto r = ech.reduce(x);
    bool zero = true;
    for (uint32_t t : r) zero &= (t == 0);
    if (!zero) {
      ech.add(r);
      queue.push_back(std::move(r));
    }
  };
  push(vec);
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& m : v.images) push(m.mul_vec(cur));
  }
  return Subspace::from_rows(ech.to_mat(), d);
}

Rep subrep(const Rep& v, const Subspace& w) {
  size_t d = v.dim(), k = w.dim();
  if (w.ambient_dim() != d) throw domain_error("subrep: ambient mismatch");
  MatFp ut = w.basis().transpose(); // columns are basis vectors
  Rep out;
  out.p = v.p;
  out.degree = v.degree;
  out.symmetric_group = v.symmetric_group;
  out.gen_perms = v.gen_perms;
  out.dim_hint = k;
  for (const auto& m : v.images) {
    auto x = ut.solve(m * ut);
    if (!x) throw domain_error("subspace is not invariant");
    out.images.push_back(std::move(*x));
  }
  return out;
}

Rep quotient_rep(const Rep& v, const Subspace& w) {
  size_t d = v.dim(), r = w.dim();
  if (w.ambient_dim() != d) throw domain_error("quotient_rep: ambient mismatch");
  // non-pivot coordinates are the quotient coordinates
  std::vector<size_t> pivots;
  std::vector<bool> is_pivot(d, false);
  for (size_t i = 0; i < r; ++i) {
    size_t c = 0;
    while (c < d && w.basis().at(i, c) == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  size_t q = free_cols.size();

  // projection: reduce by the RREF basis, keep free coordinates
  MatFp proj(q, d, v.p);
  for (size_t c = 0; c < d; ++c) {
    std::vector<uint32_t> e(d, 0);
    e[c] = 1;
    // reduce e against w's basis
    for (size_t i = 0; i < r; ++i) {
      uint32_t f = e[pivots[i]];
      if (!f) continue;
      for (size_t j = 0; j < d; ++j)
        e[j] = fp::sub(e[j], fp::mul(f, w.basis().at(i, j), v.p), v.p);
    }
    for (size_t t = 0; t < q; ++t) proj.set(t, c, e[free_cols[t]]);
  }
  MatFp inj(d, q, v.p);
  for (size_t t = 0; t < q; ++t) inj.set(free_cols[t], t, 1);

  Rep out;
  out.p = v.p;
  out.degree = v.degree;
  out.symmetric_group = v.symmetric_group;
  out.gen_perms = v.gen_perms;
  out.dim_hint = q;
  for (const auto& m : v.images) out.images.push_back(proj * (m * inj));
  return out;
}

// ---------------------------------------------------------------- caching

namespace {
constexpr uint32_t kCacheMagic = 0x534e4d43; // "SNMC"
constexpr uint32_t kCacheVersion = 1;

std::string cache_path(const std::string& dir, const std::string& kind,
                       const Partition& la, uint32_t p) {
  std::string name = kind + "_p" + std::to_string(p) + "_n" + std::to_string(la.n());
  name += "_";
  for (size_t i = 0; i < la.parts().size(); ++i) {
    if (i) name += "-";
    name += std::to_string(la.parts()[i]);
  }
  return dir + "/" + name + ".mat";
}
} // namespace

bool cache_load(const std::string& dir, const std::string& kind,
                const Partition& la, uint32_t p, int degree, Rep* out) {
  std::ifstream in(cache_path(dir, kind, la, p), std::ios::binary);
  if (!in) return false;
  auto rd = [&]() {
    uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 4);
    return v;
  };
  if (rd() != kCacheMagic || rd() != kCacheVersion) return false;
  uint32_t n = rd(), pp = rd(), d = rd(), g = rd();
  if (int(n) != degree || pp != p) return false;
  Rep rep;
  rep.p = p;
  rep.degree = int(n);
  rep.symmetric_group = true;
  rep.dim_hint = d;
  for (uint32_t i = 0; i < g; ++i) {
    MatFp m(d, d, p);
    for (uint32_t r = 0; r < d; ++r)
      for (uint32_t c = 0; c < d; ++c) m.set(r, c, rd());
    rep.images.push_back(std::move(m));
  }
  if (!in.good()) return false;
  *out = std::move(rep);
  return true;
}

void cache_store(const std::string& dir, const std::string& kind,
                 const Partition& la, uint32_t p, const Rep& rep) {
  std::ofstream out(cache_path(dir, kind, la, p), std::ios::binary);
  if (!out) return; // cache is best effort
  auto wr = [&](uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
  wr(kCacheMagic);
  wr(kCacheVersion);
  wr(uint32_t(rep.degree));
  wr(p);
  wr(uint32_t(rep.dim()));
  wr(uint32_t(rep.images.size()));
  for (const auto& m : rep.images)
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) wr(m.at(r, c));
}

} // namespace snmod
