#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "discdet/matrix.hpp"

namespace discdet {

/// A periodic permutation matrix of type (h, k): consecutive images of sigma
/// differ by -h or +k. Stored as the 1-based image sequence of sigma.
struct Ppm {
  int h = 1;
  int k = 1;
  std::vector<int> sigma;

  int size() const { return static_cast<int>(sigma.size()); }
  /// Images separated by spaces, e.g. "3 1 4 2".
  std::string str() const;
  FpMatrix to_matrix(const PrimeCtx& ctx) const;

  friend bool operator==(const Ppm& a, const Ppm& b) {
    return a.h == b.h && a.k == b.k && a.sigma == b.sigma;
  }
  friend bool operator<(const Ppm& a, const Ppm& b) { return a.sigma < b.sigma; }
};

/// Throws InvalidArgument (bad h, k, d), NotPermutation or StepViolation.
Ppm validate(int h, int k, int d, const std::vector<int>& sigma);

/// A_m(h, k): the size-(h+k) PPM with sigma(1) = m.
Ppm a_matrix(int h, int k, int m);
/// B_j(h, k) = A_{h+k+1-j}(h, k).
Ppm b_matrix(int h, int k, int j);
/// K(h, k): the top-left (h+k-1) block of A_k(h, k).
Ppm k_matrix(int h, int k);

/// All PPMs of type (h, k) and size d from the block patterns of the
/// classification, deduplicated and sorted by image sequence.
std::vector<Ppm> enumerate(int h, int k, int d);

/// Exhaustive depth-first search over sigma(1) and step choices. d <= 24.
std::vector<Ppm> enumerate_bruteforce(int h, int k, int d);

/// Sign of the permutation by cycle decomposition.
int permutation_parity(const std::vector<int>& sigma);

/// Closed-form determinant for A_m(h,k) and K(h,k); parity otherwise.
int ppm_det(const Ppm& m);

}  // namespace discdet
