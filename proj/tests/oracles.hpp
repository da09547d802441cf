#pragma once

// Reference computations used to cross-check the library. They share no
// code with it: plain machine integers, explicit 2x2 matrices, brute force.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ringlab/matrix.hpp"

namespace oracle {

inline long long gcd(long long a, long long b) { return std::gcd(a, b); }
inline long long gcd3(long long a, long long b, long long c) { return std::gcd(std::gcd(a, b), c); }
inline long long mod(long long a, long long n) { return ((a % n) + n) % n; }

/// Trial division; primes ascending.
inline std::vector<std::pair<long long, int>> factor(long long n) {
  std::vector<std::pair<long long, int>> out;
  n = n < 0 ? -n : n;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long radical(long long n) {
  long long r = 1;
  for (auto [p, e] : factor(n)) r *= p;
  return r;
}

/// r = the part of a built from primes that do not divide b; s = a / r.
inline std::pair<long long, long long> adequate_by_factorization(long long a, long long b) {
  long long r = 1;
  for (auto [p, e] : factor(a)) {
    if (b % p != 0) {
      for (int i = 0; i < e; ++i) r *= p;
    }
  }
  return {r, (a < 0 ? -a : a) / r};
}

// ------------------------------------------------------------------- Z/n

/// Unimodular (a, b, c) in Z/n admits lambda with (a, b + c lambda) = Z/n.
inline bool zn_asr1_element(long long n, long long a) {
  for (long long b = 0; b < n; ++b) {
    for (long long c = 0; c < n; ++c) {
      if (gcd3(a, b, gcd(c, n)) != 1) continue;
      bool ok = false;
      for (long long l = 0; l < n && !ok; ++l) ok = gcd3(a, b + c * l, n) == 1;
      if (!ok) return false;
    }
  }
  return true;
}

inline bool zn_asr1(long long n) {
  for (long long a = 1; a < n; ++a) {
    if (!zn_asr1_element(n, a)) return false;
  }
  return true;
}

inline bool zn_sr1(long long n) {
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      if (gcd3(a, b, n) != 1) continue;
      bool ok = false;
      for (long long l = 0; l < n && !ok; ++l) ok = gcd(a + b * l, n) == 1;
      if (!ok) return false;
    }
  }
  return true;
}

inline std::vector<long long> zn_idempotents(long long n) {
  std::vector<long long> out;
  for (long long e = 0; e < n; ++e) {
    if (e * e % n == e) out.push_back(e);
  }
  return out;
}

inline bool zn_clean(long long n) {
  const auto idem = zn_idempotents(n);
  for (long long a = 0; a < n; ++a) {
    bool ok = false;
    for (long long e : idem) ok = ok || gcd(mod(a - e, n), n) == 1;
    if (!ok) return false;
  }
  return true;
}

/// Fixed-shift diadem reading over Z/n.
inline bool zn_dyadic(long long n) {
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      if (gcd3(a, b, n) != 1) continue;
      bool any_lambda = false;
      for (long long l = 0; l < n && !any_lambda; ++l) {
        const long long x = mod(a + b * l, n);
        bool all = true;
        for (long long c = 0; c < n && all; ++c) {
          for (long long d = 0; d < n && all; ++d) {
            if (gcd3(x, c, gcd(d, n)) != 1) continue;
            bool shift = false;
            for (long long m = 0; m < n && !shift; ++m) shift = gcd3(x, c + d * m, n) == 1;
            all = shift;
          }
        }
        any_lambda = all;
      }
      if (!any_lambda) return false;
    }
  }
  return true;
}

// ------------------------------------------------- 2x2 matrices over Z/p

struct Mat2 {
  int a = 0, b = 0, c = 0, d = 0;
  friend bool operator<(const Mat2& x, const Mat2& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Mat2Ring {
  int p = 2;
  bool upper = false;  // restrict to upper-triangular matrices

  std::vector<Mat2> elements() const {
    std::vector<Mat2> out;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < (upper ? 1 : p); ++c)
          for (int d = 0; d < p; ++d) out.push_back({a, b, c, d});
    return out;
  }
  Mat2 add(const Mat2& x, const Mat2& y) const {
    return {(x.a + y.a) % p, (x.b + y.b) % p, (x.c + y.c) % p, (x.d + y.d) % p};
  }
  Mat2 mul(const Mat2& x, const Mat2& y) const {
    return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
            (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
  }
  bool is_unit(const Mat2& x) const { return ((x.a * x.d - x.b * x.c) % p + p) % p != 0; }

  /// Naive fixed point: start from the generators, add every product and
  /// sum until nothing new appears. side: 'r' = xR, 'l' = Rx, 't' = RxR.
  std::set<Mat2> closure(const std::vector<Mat2>& gens, char side) const {
    const auto all = elements();
    std::set<Mat2> s(gens.begin(), gens.end());
    s.insert(Mat2{});
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Mat2> cur(s.begin(), s.end());
      for (const auto& x : cur) {
        for (const auto& r : all) {
          if (side != 'l') grew |= s.insert(mul(x, r)).second;
          if (side != 'r') grew |= s.insert(mul(r, x)).second;
        }
        for (const auto& y : cur) grew |= s.insert(add(x, y)).second;
      }
    }
    return s;
  }
};

// ------------------------------------------------------------- minors

/// Machine-integer arithmetic for laplace_det.
struct LongOps {
  using value_type = long long;
  long long zero() const { return 0; }
  long long add(long long a, long long b) const { return a + b; }
  long long sub(long long a, long long b) const { return a - b; }
  long long mul(long long a, long long b) const { return a * b; }
};

/// Determinant by cofactor expansion along the first row.
template <class Dom>
typename Dom::value_type laplace_det(const Dom& dom,
                                     const std::vector<std::vector<typename Dom::value_type>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  auto total = dom.zero();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<typename Dom::value_type>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<typename Dom::value_type> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    auto term = dom.mul(m[0][j], laplace_det(dom, sub));
    total = j % 2 == 0 ? dom.add(total, term) : dom.sub(total, term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors, computed with the domain's remainder and
/// normalized; gcd is taken by the plain Euclidean loop.
template <class Dom>
typename Dom::value_type minor_gcd(const Dom& dom, const ringlab::Matrix<typename Dom::value_type>& A,
                                   std::size_t k) {
  auto g = dom.zero();
  auto euclid = [&](typename Dom::value_type x, typename Dom::value_type y) {
    while (!dom.is_zero(y)) {
      auto r = dom.divmod(x, y).second;
      x = std::move(y);
      y = std::move(r);
    }
    return dom.normalize(x);
  };
  subsets(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
    subsets(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<typename Dom::value_type>> m;
      for (auto i : rows) {
        std::vector<typename Dom::value_type> row;
        for (auto j : cols) row.push_back(A(i, j));
        m.push_back(std::move(row));
      }
      g = euclid(g, laplace_det(dom, m));
    });
  });
  return g;
}

}  // namespace oracle
