#include "branchcalc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "branchcalc/errors.hpp"

namespace branchcalc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw DomainError("not a permutation in one-line notation");
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int m, int k) {
  if (k < 1 || k >= m) throw DomainError("simple reflection index out of range");
  Permutation p = identity(m);
  std::swap(p.images_[k - 1], p.images_[k]);
  return p;
}

std::vector<Permutation> Permutation::all(int m) {
  std::vector<Permutation> out;
  Permutation p = identity(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
  return out;
}

int Permutation::length() const {
  int n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++n;
  return n;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < rank(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  // Peel left descents: l(s_k w) < l(w) iff w^{-1}(k-1) > w^{-1}(k).
  while (!w.is_identity()) {
    const Permutation inv = w.inverse();
    for (int k = 1; k < rank(); ++k) {
      if (inv(k - 1) > inv(k)) {
        word.push_back(k);
        w = simple(rank(), k) * w;
        break;
      }
    }
  }
  return word;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) throw DomainError("permutation rank mismatch");
  std::vector<int> v(x.rank());
  for (int i = 0; i < x.rank(); ++i) v[i] = x(y(i));
  return Permutation(std::move(v));
}

Weight act(const Permutation& w, const Weight& lambda) {
  Weight out(lambda.size());
  for (int i = 0; i < w.rank(); ++i) out[w(i)] = lambda[i];
  return out;
}

Weight reflect(int k, const Weight& lambda) {
  Weight out = lambda;
  std::swap(out[k - 1], out[k]);
  return out;
}

std::string to_string(const Permutation& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int k : w.reduced_word()) out += "s" + std::to_string(k);
  return out;
}

std::string to_string(const Weight& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + ")";
}

}  // namespace branchcalc
