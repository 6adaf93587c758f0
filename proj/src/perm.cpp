#include "snmod/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace snmod {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= int(img_.size()) || seen[x])
      throw domain_error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw domain_error("bad transposition");
  Permutation t(degree);
  std::swap(t.img_[a - 1], t.img_[b - 1]);
  return t;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& pts) {
  Permutation c(degree);
  for (size_t i = 0; i < pts.size(); ++i) {
    int from = pts[i], to = pts[(i + 1) % pts.size()];
    if (from < 1 || from > degree) throw domain_error("cycle point out of range");
    c.img_[from - 1] = to - 1;
  }
  // validity re-check
  return Permutation(c.img_);
}

Permutation Permutation::parse(const std::string& text, int degree) {
  Permutation out(degree);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) { ++i; continue; }
    if (text[i] != '(') throw domain_error("permutation text: expected '('");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw domain_error("permutation text: missing ')'");
    std::string body = text.substr(i + 1, close - i - 1);
    std::vector<int> pts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t s = tok.find_first_not_of(" \t");
      if (s == std::string::npos) continue;
      pts.push_back(std::stoi(tok.substr(s)));
    }
    if (pts.size() >= 2) out = out * Permutation::cycle(degree, pts);
    i = close + 1;
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw domain_error("permutation degree mismatch");
  std::vector<int> r(degree());
  for (int x = 0; x < degree(); ++x) r[x] = img_[o.img_[x]];
  Permutation out;
  out.img_ = std::move(r);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> r(degree());
  for (int x = 0; x < degree(); ++x) r[img_[x]] = x;
  Permutation out;
  out.img_ = std::move(r);
  return out;
}

int Permutation::sign() const {
  std::vector<bool> seen(degree(), false);
  int parity = 0;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = img_[y];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree()) throw domain_error("cannot shrink a permutation");
  Permutation out(degree);
  for (int x = 0; x < this->degree(); ++x) out.img_[x] = img_[x];
  return out;
}

std::vector<int> Permutation::adjacent_word() const {
  // bubble sort of the one-line form; right-multiplying by s_i swaps
  // positions i-1, i, so the reversed swap list is a left-to-right word.
  std::vector<int> a = img_;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < int(a.size()); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(i + 1); // 1-based adjacent index
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string Permutation::str() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) { seen[x] = true; continue; }
    out += "(";
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += ",";
      out += std::to_string(y + 1);
      first = false;
      y = img_[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

} // namespace snmod
