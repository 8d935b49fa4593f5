#include "qbrauer/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace qbrauer {

Permutation Permutation::identity(int k) {
  if (k < 1) throw DomainError("Permutation: degree must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> img) {
  const int k = static_cast<int>(img.size());
  if (k < 1) throw DomainError("Permutation: degree must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : img) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("Permutation: images are not a bijection of {1..k}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int a, int k) {
  return transposition(a, a + 1, k);
}

Permutation Permutation::transposition(int a, int b, int k) {
  if (a < 1 || b < 1 || a > k || b > k || a == b)
    throw DomainError("Permutation: invalid transposition indices");
  Permutation p = identity(k);
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

int Permutation::operator()(int p) const {
  if (p < 1 || p > size()) throw DomainError("Permutation: point out of range");
  return img_[static_cast<std::size_t>(p - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int p = 1; p <= size(); ++p) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(p - 1)] - 1)] = p;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeError("Permutation: degree mismatch");
  std::vector<int> img(a.img_.size());
  for (int p = 1; p <= a.size(); ++p) img[static_cast<std::size_t>(p - 1)] = a(b(p));
  return Permutation::from_images(std::move(img));
}

long Permutation::inversions() const {
  long n = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++n;
  return n;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble sort: repeatedly compose with s_j at a descent until the identity
  // is reached.  p0 * s_{w_1} * ... * s_{w_m} = id forces
  // p0 = s_{w_m} * ... * s_{w_1}, so the collected word is reversed.
  Permutation p = *this;
  std::vector<int> word;
  for (;;) {
    int j = 0;
    for (int i = 1; i < p.size(); ++i)
      if (p(i) > p(i + 1)) {
        j = i;
        break;
      }
    if (j == 0) break;
    p = p * adjacent(j, p.size());
    word.push_back(j);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace qbrauer
