#pragma once

#include <compare>
#include <string>
#include <vector>

namespace branchcalc {

/// Weight lambda in Z^m, exponent vector of theta^lambda.
using Weight = std::vector<int>;

/// Element of S_m in one-line notation on {0, ..., m-1}: w(i) = images()[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  /// Simple transposition s_k swapping k-1 and k (1-based k, 1 <= k < m).
  static Permutation simple(int m, int k);
  /// All of S_m in lexicographic order of one-line notation.
  static std::vector<Permutation> all(int m);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// Number of inversions.
  int length() const;
  bool is_identity() const;
  Permutation inverse() const;
  /// Letters k_1 ... k_r with w = s_{k_1} ... s_{k_r}, r = length().
  std::vector<int> reduced_word() const;

  /// (x * y)(i) = x(y(i)).
  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& x, const Permutation& y) {
    return x.images_ <=> y.images_;
  }

 private:
  std::vector<int> images_;
};

/// Permutation action on weights: (w lambda)_{w(i)} = lambda_i.
Weight act(const Permutation& w, const Weight& lambda);
/// s_k lambda: swaps coordinates k and k+1 (1-based).
Weight reflect(int k, const Weight& lambda);

std::string to_string(const Permutation& w);  ///< "e" or "s1s2"
std::string to_string(const Weight& lambda);  ///< "(1,0,-2)"

}  // namespace branchcalc
