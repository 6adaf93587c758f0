#include "snmod/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "snmod/fp.hpp"

namespace snmod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw domain_error("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  size_t a = text.find('('), b = text.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw domain_error("partition text must look like \"(6,4,1)\"");
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t s = tok.find_first_not_of(" \t");
    if (s == std::string::npos) continue;
    size_t e = tok.find_last_not_of(" \t");
    parts.push_back(std::stoi(tok.substr(s, e - s + 1)));
  }
  return Partition(parts);
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::remove_node(Node a) const {
  if (part(a.row) != a.col)
    throw domain_error("node is not removable from partition");
  std::vector<int> q = parts_;
  q[a.row - 1] -= 1;
  if (q[a.row - 1] == 0) q.erase(q.begin() + (a.row - 1));
  return Partition(q);
}

Partition Partition::add_node(Node a) const {
  if (part(a.row) + 1 != a.col)
    throw domain_error("node is not addable to partition");
  std::vector<int> q = parts_;
  if (a.row == height() + 1)
    q.push_back(1);
  else
    q[a.row - 1] += 1;
  return Partition(q);
}

bool is_p_regular(const Partition& la, uint32_t p) {
  fp::check_prime(p);
  const auto& v = la.parts();
  size_t run = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    run = (v[i] == v[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return !(p == 1);
}

bool dominance_leq(const Partition& la, const Partition& mu) {
  if (la.n() != mu.n()) throw domain_error("dominance needs equal sizes");
  long long sl = 0, sm = 0;
  int h = std::max(la.height(), mu.height());
  for (int r = 1; r <= h; ++r) {
    sl += la.part(r);
    sm += mu.part(r);
    if (sl > sm) return false;
  }
  return true;
}

ResidueContent residue_content(const Partition& la, uint32_t p) {
  fp::check_prime(p);
  ResidueContent c;
  c.counts.assign(p, 0);
  for (int r = 1; r <= la.height(); ++r)
    for (int s = 1; s <= la.part(r); ++s)
      c.counts[node_residue({r, s}, p)]++;
  return c;
}

std::vector<Node> addable_nodes(const Partition& la) {
  std::vector<Node> out;
  int h = la.height();
  for (int r = 1; r <= h + 1; ++r)
    if (r == 1 || la.part(r - 1) > la.part(r)) out.push_back({r, la.part(r) + 1});
  if (h == 0) return {{1, 1}};
  return out;
}

std::vector<Node> removable_nodes(const Partition& la) {
  std::vector<Node> out;
  for (int r = 1; r <= la.height(); ++r)
    if (la.part(r) > la.part(r + 1)) out.push_back({r, la.part(r)});
  return out;
}

std::pair<std::vector<Node>, std::vector<Node>>
addable_removable(const Partition& la, uint32_t i, uint32_t p) {
  std::pair<std::vector<Node>, std::vector<Node>> out;
  for (Node a : addable_nodes(la))
    if (node_residue(a, p) == i % p) out.first.push_back(a);
  for (Node a : removable_nodes(la))
    if (node_residue(a, p) == i % p) out.second.push_back(a);
  return out;
}

Signature signature(const Partition& la, uint32_t i, uint32_t p) {
  fp::check_prime(p);
  i %= p;
  Signature sig;
  int h = la.height();
  // bottom left to top right: rows decreasing; at most one i-node per row
  for (int r = h + 1; r >= 1; --r) {
    bool addable = (r == h + 1) || r == 1 || la.part(r - 1) > la.part(r);
    if (addable) {
      Node a{r, la.part(r) + 1};
      if (node_residue(a, p) == i) sig.word.push_back({a, '+'});
    }
    if (r <= h && la.part(r) > la.part(r + 1)) {
      Node b{r, la.part(r)};
      if (node_residue(b, p) == i) sig.word.push_back({b, '-'});
    }
  }
  // cancel adjacent "-+" pairs: '-' opens, '+' closes
  std::vector<size_t> stack;
  std::vector<bool> alive(sig.word.size(), true);
  for (size_t k = 0; k < sig.word.size(); ++k) {
    if (sig.word[k].second == '-') {
      stack.push_back(k);
    } else if (!stack.empty()) {
      alive[stack.back()] = false;
      alive[k] = false;
      stack.pop_back();
    }
  }
  for (size_t k = 0; k < sig.word.size(); ++k) {
    if (!alive[k]) continue;
    if (sig.word[k].second == '-')
      sig.normal.push_back(sig.word[k].first);
    else
      sig.conormal.push_back(sig.word[k].first);
  }
  sig.eps = int(sig.normal.size());
  sig.phi = int(sig.conormal.size());
  if (sig.eps) sig.good = sig.normal.front();
  if (sig.phi) sig.cogood = sig.conormal.back();
  return sig;
}

int eps_i(const Partition& la, uint32_t i, uint32_t p) { return signature(la, i, p).eps; }
int phi_i(const Partition& la, uint32_t i, uint32_t p) { return signature(la, i, p).phi; }

int eps_sum(const Partition& la, uint32_t p) {
  int s = 0;
  for (uint32_t i = 0; i < p; ++i) s += eps_i(la, i, p);
  return s;
}

int phi_sum(const Partition& la, uint32_t p) {
  int s = 0;
  for (uint32_t i = 0; i < p; ++i) s += phi_i(la, i, p);
  return s;
}

std::optional<Partition> e_tilde(const Partition& la, uint32_t i, uint32_t p) {
  if (!is_p_regular(la, p)) throw domain_error("e_tilde requires a p-regular partition");
  Signature sig = signature(la, i, p);
  if (!sig.good) return std::nullopt;
  return la.remove_node(*sig.good);
}

std::optional<Partition> f_tilde(const Partition& la, uint32_t i, uint32_t p) {
  if (!is_p_regular(la, p)) throw domain_error("f_tilde requires a p-regular partition");
  Signature sig = signature(la, i, p);
  if (!sig.cogood) return std::nullopt;
  return la.add_node(*sig.cogood);
}

bool is_JS(const Partition& la, uint32_t p) {
  if (!is_p_regular(la, p)) throw domain_error("is_JS requires a p-regular partition");
  if (la.empty()) return false;
  return eps_sum(la, p) == 1;
}

RimStep p_rim_remove(const Partition& la, uint32_t p) {
  if (la.empty()) throw domain_error("p-rim of the empty partition");
  int h = la.height();
  std::vector<int> rest;
  int removed = 0;
  uint32_t c = 0; // nodes taken in the current p-segment
  for (int j = 1; j <= h; ++j) {
    int next = (j < h) ? la.part(j + 1) : 1;
    int run = la.part(j) - next + 1; // rim nodes in row j
    int take = std::min<int>(run, int(p - c));
    removed += take;
    int left = la.part(j) - take;
    if (left > 0) rest.push_back(left);
    c += take;
    if (c == p) c = 0; // segment complete: next one starts on the row below
  }
  RimStep step;
  step.rest = Partition(rest);
  step.removed = removed;
  step.height = h;
  return step;
}

MullineuxSymbol mullineux_symbol(const Partition& la, uint32_t p) {
  if (!is_p_regular(la, p))
    throw domain_error("Mullineux symbol requires a p-regular partition");
  MullineuxSymbol sym;
  Partition cur = la;
  while (!cur.empty()) {
    RimStep st = p_rim_remove(cur, p);
    sym.cols.push_back({st.removed, st.height});
    cur = st.rest;
  }
  return sym;
}

namespace {

// Inverse of one p-rim removal: the partition nu with h(nu) = r whose p-rim
// has a nodes and strips down to mu. Depth-first search over the segment
// walk; the reconstruction is unique for symbols of p-regular partitions.
bool rim_add_dfs(const std::vector<int>& mu, uint32_t p, int r, int j, uint32_t c,
                 int rem, int prev_nu, bool prev_case_b, int prev_mu,
                 std::vector<int>& nu, std::set<uint64_t>& dead) {
  if (j > r) return rem == 0;
  if (rem < (r - j + 1) || rem > (r - j + 1) * int(p)) return false;
  uint64_t key = (uint64_t(j) << 40) ^ (uint64_t(c) << 32) ^ (uint64_t(rem) << 16) ^
                 uint64_t(uint16_t(prev_nu)) ^ (uint64_t(prev_case_b) << 63) ^
                 (uint64_t(uint16_t(prev_mu)) << 48);
  if (dead.count(key)) return false;

  int mu_j = (j <= int(mu.size())) ? mu[j - 1] : 0;
  auto try_t = [&](int t, bool case_a) -> bool {
    int nu_j = mu_j + t;
    if (nu_j > prev_nu && j > 1) return false;       // weakly decreasing
    if (j > 1) {                                      // consistency with row j-1
      if (prev_case_b && nu_j != prev_mu + 1) return false;
      if (!prev_case_b && nu_j > prev_mu + 1) return false; // case A run bound
    }
    nu.push_back(nu_j);
    uint32_t cn = case_a ? 0 : c + uint32_t(t);
    if (rim_add_dfs(mu, p, r, j + 1, cn, rem - t, nu_j, !case_a, mu_j, nu, dead))
      return true;
    nu.pop_back();
    return false;
  };

  // case A: the segment completes in row j
  int ta = int(p - c);
  if (ta >= 1 && ta <= rem && try_t(ta, true)) return true;
  // case B: the row's rim run is exhausted first
  for (int t = 1; t < int(p - c); ++t) {
    if (t > rem) break;
    if (j == r && (mu_j != 0)) continue; // last row in case B is fully removed
    if (try_t(t, false)) return true;
  }
  dead.insert(key);
  return false;
}

Partition rim_add(const Partition& mu, int a, int r, uint32_t p) {
  if (r < 1 || a < r) throw domain_error("invalid Mullineux symbol column");
  if (mu.height() > r) throw domain_error("Mullineux symbol heights must be decreasing");
  std::vector<int> nu;
  std::set<uint64_t> dead;
  if (!rim_add_dfs(mu.parts(), p, r, 1, 0, a, 1 << 20, false, 0, nu, dead))
    throw domain_error("Mullineux symbol column is not realizable");
  return Partition(nu);
}

} // namespace

Partition partition_from_symbol(const MullineuxSymbol& sym, uint32_t p) {
  Partition cur; // empty
  for (auto it = sym.cols.rbegin(); it != sym.cols.rend(); ++it)
    cur = rim_add(cur, it->first, it->second, p);
  return cur;
}

Partition mullineux(const Partition& la, uint32_t p) {
  if (la.empty()) return la;
  MullineuxSymbol sym = mullineux_symbol(la, p);
  MullineuxSymbol out;
  for (auto [a, r] : sym.cols) {
    int x = (a % int(p) == 0) ? 0 : 1;
    out.cols.push_back({a, a + x - r});
  }
  Partition res = partition_from_symbol(out, p);
  if (res.n() != la.n() || !is_p_regular(res, p))
    throw domain_error("Mullineux image failed internal checks");
  return res;
}

Partition special_partition(SpecialKind kind, int n) {
  if (kind == SpecialKind::alpha) {
    if (n < 2) throw domain_error("alpha_n needs n >= 2");
    if (n == 2) return Partition({1, 1});
    return Partition({n - 1, 1});
  }
  if (n < 2) throw domain_error("beta_n needs n >= 2");
  if (n % 2 == 0) {
    if (n == 2) return Partition({2});
    return Partition({n / 2 + 1, n / 2 - 1});
  }
  return Partition({(n + 1) / 2, (n - 1) / 2});
}

std::optional<int> theorem_A_iv_condition(const Partition& la) {
  int h = la.height();
  if (h < 3) return std::nullopt;
  auto par = [&](int r) { return la.part(r) & 1; };
  for (int j = 1; j <= h; ++j) {
    if (la.part(j) != la.part(j + 1) + 2) continue;
    bool ok = true;
    for (int r = 2; r <= j - 1 && ok; ++r)
      if (par(r) != par(1)) ok = false;
    if (ok && j >= 2 && par(j - 1) == par(j)) ok = false;
    if (ok && j + 2 <= h) {
      if (par(j + 1) == par(j + 2)) ok = false;
      for (int r = j + 3; r <= h && ok; ++r)
        if (par(r) != par(j + 2)) ok = false;
    }
    if (ok) return j;
  }
  return std::nullopt;
}

L22Case lemma_l22_case(const Partition& la, uint32_t i) {
  const uint32_t p = 2;
  if (!is_p_regular(la, p)) throw domain_error("lemma_l22_case needs a 2-regular partition");
  if (eps_i(la, 0, p) + eps_i(la, 1, p) != 2)
    throw domain_error("lemma_l22_case needs eps_0 + eps_1 = 2");
  Signature sig = signature(la, i, p);
  if (!sig.good || !sig.cogood)
    throw domain_error("lemma_l22_case needs eps_i, phi_i > 0");
  Node b = *sig.good, c = *sig.cogood;
  // (la_B)^C is 2-singular iff C sits directly below-left of B
  if (!(c.row == b.row + 1 && c.col == b.col - 1)) return L22None{};
  int h = la.height();
  bool case_b = la.part(h) == 2;
  for (int r = 1; r < h && case_b; ++r)
    if (la.part(r) % 2 == 0) case_b = false;
  if (case_b) return L22CaseB{};
  auto j = theorem_A_iv_condition(la);
  if (j && *j < h) return L22CaseA{*j};
  throw domain_error("l22: singular good/cogood pair without a case pattern");
}

namespace {

void enum_rec(int n, int maxpart, uint32_t p, bool regular_only,
              std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    if (regular_only) {
      // count how many trailing parts already equal k
      size_t run = 0;
      for (auto it = cur.rbegin(); it != cur.rend() && *it == k; ++it) ++run;
      if (run + 1 >= p) continue;
    }
    cur.push_back(k);
    enum_rec(n - k, k, p, regular_only, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_p_regular(int n, uint32_t p) {
  fp::check_prime(p);
  if (n < 0) throw domain_error("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_rec(n, n, p, true, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw domain_error("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_rec(n, n, 2, false, cur, out);
  return out;
}

} // namespace snmod
