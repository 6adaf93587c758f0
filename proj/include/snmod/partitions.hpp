#ifndef SNMOD_PARTITIONS_HPP
#define SNMOD_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snmod/errors.hpp"

namespace snmod {

// A node (r,s) of a Young diagram, rows and columns 1-based.
struct Node {
  int row = 0;
  int col = 0;
  bool operator==(const Node& o) const { return row == o.row && col == o.col; }
};

inline uint32_t node_residue(Node a, uint32_t p) {
  long long d = (long long)a.col - a.row;
  long long r = d % (long long)p;
  if (r < 0) r += p;
  return uint32_t(r);
}

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text); // "(6,4,1)" or "()"
  std::string str() const;

  int n() const { return n_; }
  int height() const { return int(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int row) const { // 1-based, zero beyond height
    return (row >= 1 && row <= height()) ? parts_[row - 1] : 0;
  }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  Partition remove_node(Node a) const;
  Partition add_node(Node a) const;
  bool contains_node(Node a) const {
    return a.row >= 1 && a.col >= 1 && a.col <= part(a.row);
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Element of Theta_n: node counts per residue class.
struct ResidueContent {
  std::vector<long long> counts; // length p

  bool operator==(const ResidueContent& o) const { return counts == o.counts; }
  long long total() const {
    long long s = 0;
    for (auto c : counts) s += c;
    return s;
  }
  // scalar of the sum-of-transpositions central element on this block
  uint32_t central_scalar(uint32_t p) const {
    long long s = 0;
    for (size_t i = 0; i < counts.size(); ++i) s += (long long)i * counts[i];
    long long r = s % (long long)p;
    if (r < 0) r += p;
    return uint32_t(r);
  }
};

// i-signature data: the +/- word read along the rim from bottom left to top
// right (rows decreasing), its reduction, and everything derived from it.
struct Signature {
  std::vector<std::pair<Node, char>> word; // '+' addable, '-' removable
  std::vector<Node> normal;                // surviving '-', word order
  std::vector<Node> conormal;              // surviving '+', word order
  int eps = 0;
  int phi = 0;
  std::optional<Node> good;   // leftmost normal in the word
  std::optional<Node> cogood; // rightmost conormal in the word
};

struct MullineuxSymbol {
  // column t holds (a_t, r_t): p-rim size and height of the t-th layer
  std::vector<std::pair<int, int>> cols;
  bool operator==(const MullineuxSymbol& o) const { return cols == o.cols; }
};

bool is_p_regular(const Partition& la, uint32_t p);

// true iff la is dominated by mu (la <= mu in dominance order)
bool dominance_leq(const Partition& la, const Partition& mu);

ResidueContent residue_content(const Partition& la, uint32_t p);

std::vector<Node> addable_nodes(const Partition& la);
std::vector<Node> removable_nodes(const Partition& la);
// nodes of residue i only
std::pair<std::vector<Node>, std::vector<Node>>
addable_removable(const Partition& la, uint32_t i, uint32_t p);

Signature signature(const Partition& la, uint32_t i, uint32_t p);
int eps_i(const Partition& la, uint32_t i, uint32_t p);
int phi_i(const Partition& la, uint32_t i, uint32_t p);
int eps_sum(const Partition& la, uint32_t p);
int phi_sum(const Partition& la, uint32_t p);

std::optional<Partition> e_tilde(const Partition& la, uint32_t i, uint32_t p);
std::optional<Partition> f_tilde(const Partition& la, uint32_t i, uint32_t p);

// exactly one normal node in total
bool is_JS(const Partition& la, uint32_t p);

// One step of p-rim removal: the stripped partition, the number of removed
// nodes and the height of the input.
struct RimStep {
  Partition rest;
  int removed = 0;
  int height = 0;
};
RimStep p_rim_remove(const Partition& la, uint32_t p);

MullineuxSymbol mullineux_symbol(const Partition& la, uint32_t p);
// unique partition with the given symbol (throws if none exists)
Partition partition_from_symbol(const MullineuxSymbol& sym, uint32_t p);
Partition mullineux(const Partition& la, uint32_t p);

enum class SpecialKind { alpha, beta };
Partition special_partition(SpecialKind kind, int n);

// the first j (1-based) realizing the two-step-with-parity-chain pattern
std::optional<int> theorem_A_iv_condition(const Partition& la);

// outcome of the good/cogood singularity analysis at residue i (p = 2)
struct L22None {};
struct L22CaseA { int j; };
struct L22CaseB {};
using L22Case = std::variant<L22None, L22CaseA, L22CaseB>;
L22Case lemma_l22_case(const Partition& la, uint32_t i);

// all p-regular partitions of n, lexicographically descending
std::vector<Partition> enumerate_p_regular(int n, uint32_t p);
// all partitions of n, lexicographically descending
std::vector<Partition> enumerate_partitions(int n);

} // namespace snmod

#endif
