#pragma once

#include <functional>
#include <vector>

#include "qbrauer/errors.hpp"

namespace qbrauer {

// Permutation of {1,...,k}, stored by images.  Composition is function
// composition: (a*b)(p) = a(b(p)).
class Permutation {
 public:
  static Permutation identity(int k);
  // img[p-1] = sigma(p); validates bijectivity.
  static Permutation from_images(std::vector<int> img);
  // Adjacent transposition s_a = (a, a+1) inside S_k.
  static Permutation adjacent(int a, int k);
  static Permutation transposition(int a, int b, int k);

  [[nodiscard]] int size() const { return static_cast<int>(img_.size()); }
  [[nodiscard]] int operator()(int p) const;
  [[nodiscard]] const std::vector<int>& images() const { return img_; }

  [[nodiscard]] Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  [[nodiscard]] long inversions() const;
  [[nodiscard]] int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  // A reduced word (a_1,...,a_m) of adjacent transpositions with
  // *this = s_{a_1} * s_{a_2} * ... * s_{a_m}; m = inversions().
  [[nodiscard]] std::vector<int> adjacent_word() const;

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

// Calls fn on every permutation of {1..k} in lexicographic image order.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn);

}  // namespace qbrauer
