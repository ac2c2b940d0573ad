#include "discdet/ppm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "discdet/errors.hpp"

namespace discdet {

namespace {

void check_type(int h, int k) {
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) {
    throw InvalidArgument("PPM type needs h, k >= 1 with gcd(h, k) = 1");
  }
}

std::vector<int> identity_perm(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return s;
}

std::vector<int> reversal_perm(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = n - i;
  return s;
}

std::vector<int> block_diagonal(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> s;
  int off = 0;
  for (const auto& b : blocks) {
    for (int x : b) s.push_back(off + x);
    off += static_cast<int>(b.size());
  }
  return s;
}

// Blocks listed top to bottom, laid out from the top-right corner to the bottom-left.
std::vector<int> block_antidiagonal(const std::vector<std::vector<int>>& blocks) {
  int d = 0;
  for (const auto& b : blocks) d += static_cast<int>(b.size());
  std::vector<int> s;
  int used = 0;
  for (const auto& b : blocks) {
    used += static_cast<int>(b.size());
    for (int x : b) s.push_back(d - used + x);
  }
  return s;
}

std::vector<std::vector<int>> repeat(const std::vector<int>& block, int times,
                                     const std::vector<int>& tail) {
  std::vector<std::vector<int>> v(static_cast<std::size_t>(times), block);
  if (!tail.empty()) v.push_back(tail);
  return v;
}

}  // namespace

std::string Ppm::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? " " : "") << sigma[i];
  return os.str();
}

FpMatrix Ppm::to_matrix(const PrimeCtx& ctx) const {
  const auto n = sigma.size();
  FpMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(sigma[i] - 1)) = 1 % ctx.p();
  return m;
}

Ppm validate(int h, int k, int d, const std::vector<int>& sigma) {
  check_type(h, k);
  if (d < 1 || static_cast<int>(sigma.size()) != d) {
    throw InvalidArgument("validate: sigma must have length d >= 1");
  }
  std::vector<char> seen(static_cast<std::size_t>(d) + 1, 0);
  for (int x : sigma) {
    if (x < 1 || x > d || seen[static_cast<std::size_t>(x)]) {
      throw NotPermutation("validate: sigma is not a permutation of 1..d");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  for (int i = 0; i + 1 < d; ++i) {
    const int step = sigma[static_cast<std::size_t>(i + 1)] - sigma[static_cast<std::size_t>(i)];
    if (step != -h && step != k) {
      throw StepViolation("validate: step " + std::to_string(step) + " at i = " + std::to_string(i + 1),
                          static_cast<std::size_t>(i + 1));
    }
  }
  return Ppm{h, k, sigma};
}

Ppm a_matrix(int h, int k, int m) {
  check_type(h, k);
  const int n = h + k;
  if (m < 1 || m > n) throw InvalidArgument("a_matrix: m must lie in [1, h+k]");
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i - 1)] = ((k * i + m - k - 1) % n + n) % n + 1;
  return Ppm{h, k, s};
}

Ppm b_matrix(int h, int k, int j) { return a_matrix(h, k, h + k + 1 - j); }

Ppm k_matrix(int h, int k) {
  Ppm a = a_matrix(h, k, k);
  a.sigma.pop_back();
  return a;
}

std::vector<Ppm> enumerate(int h, int k, int d) {
  check_type(h, k);
  if (d < 1) return {};
  const int n = h + k;
  const int ell = d / n;
  const int rem = d % n;
  std::vector<std::vector<int>> found;
  auto add_diag = [&](const std::vector<int>& block, int times, const std::vector<int>& tail) {
    found.push_back(block_diagonal(repeat(block, times, tail)));
  };
  auto add_anti = [&](const std::vector<int>& block, int times, const std::vector<int>& tail) {
    found.push_back(block_antidiagonal(repeat(block, times, tail)));
  };
  auto A = [&](int m) { return a_matrix(h, k, m).sigma; };
  auto B = [&](int j) { return b_matrix(h, k, j).sigma; };

  if (h >= 2 && k >= 2) {
    if (rem == 1) {
      add_diag(A(1), ell, identity_perm(1));
      add_anti(B(1), ell, identity_perm(1));
    } else if (rem == n - 1) {
      add_diag(A(k), ell, k_matrix(h, k).sigma);
      add_anti(B(h), ell, k_matrix(h, k).sigma);
    } else if (rem == 0) {
      for (int m = 1; m <= k; ++m) add_diag(A(m), ell, {});
      for (int j = h; j >= 1; --j) add_anti(B(j), ell, {});
    }
  }
  if (h == 1) {
    if (rem >= 1) {
      add_diag(A(rem), ell, reversal_perm(rem));
      add_anti(B(1), ell, reversal_perm(rem));
    } else {
      for (int m = 1; m <= k; ++m) add_diag(A(m), ell, {});
      add_anti(B(1), ell, {});
    }
  }
  if (k == 1) {
    if (rem >= 1) {
      add_diag(A(1), ell, identity_perm(rem));
      add_anti(B(rem), ell, identity_perm(rem));
    } else {
      add_diag(A(1), ell, {});
      for (int j = h; j >= 1; --j) add_anti(B(j), ell, {});
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Ppm> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(validate(h, k, d, s));
  return out;
}

std::vector<Ppm> enumerate_bruteforce(int h, int k, int d) {
  check_type(h, k);
  if (d > 24) throw InvalidArgument("enumerate_bruteforce: d must be at most 24");
  std::vector<Ppm> out;
  if (d < 1) return out;
  std::vector<int> s;
  std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(s.size()) == d) {
      out.push_back(Ppm{h, k, s});
      return;
    }
    for (int step : {-h, k}) {
      const int next = s.back() + step;
      if (next < 1 || next > d || used[static_cast<std::size_t>(next)]) continue;
      used[static_cast<std::size_t>(next)] = 1;
      s.push_back(next);
      self(self);
      s.pop_back();
      used[static_cast<std::size_t>(next)] = 0;
    }
  };
  for (int first = 1; first <= d; ++first) {
    s.assign(1, first);
    used.assign(used.size(), 0);
    used[static_cast<std::size_t>(first)] = 1;
    dfs(dfs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int permutation_parity(const std::vector<int>& sigma) {
  const auto n = sigma.size();
  std::vector<char> seen(n, 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) seen[j] = 1;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

int ppm_det(const Ppm& m) {
  const int n = m.h + m.k;
  if (m.size() == n) {
    const int first = m.sigma.front();
    if (m == a_matrix(m.h, m.k, first)) {
      const int sign = ((n - 1) * (first - 1)) % 2 == 0 ? 1 : -1;
      return sign * bracket(m.k, n);
    }
  }
  if (m.size() == n - 1 && m == k_matrix(m.h, m.k)) return bracket(m.k, n);
  return permutation_parity(m.sigma);
}

}  // namespace discdet
