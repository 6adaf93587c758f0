#ifndef SNMOD_PERM_HPP
#define SNMOD_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "snmod/errors.hpp"

namespace snmod {

// Permutation of {1..n}, stored 0-based: img[x] is the image of point x.
// Products compose as functions: (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);          // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int degree, int a, int b); // 1-based points
  static Permutation cycle(int degree, const std::vector<int>& pts);
  static Permutation parse(const std::string& text, int degree); // "(1,2)(3,4,5)"

  int degree() const { return int(img_.size()); }
  int apply(int x) const { return img_[x]; } // 0-based
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  int sign() const; // +1 or -1

  // extend to a larger degree, fixing the new points
  Permutation extended(int degree) const;

  // word w with *this = s_{w[0]} * s_{w[1]} * ... (s_i = (i, i+1), 1-based i)
  std::vector<int> adjacent_word() const;

  std::string str() const; // cycle notation, "()" for the identity

 private:
  std::vector<int> img_;
};

} // namespace snmod

#endif
