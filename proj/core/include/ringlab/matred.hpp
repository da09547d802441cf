#pragma once

// Certified matrix reduction over Z and F_p[x]: Hermite steps on pairs, the
// 2x2 reduction of [[a, 0], [b, c]] to a unit corner, and full Smith normal
// form with transforms. Content ideals and the total-divisor test also cover
// finite rings.

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/domain.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/euclid.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/range_props.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

template <class V>
struct HermiteStep {
  V d;
  /// (a, b) * Q = (d, 0) for rows; Q * (a, b)^T = (d, 0)^T for columns.
  Matrix<V> Q;
};

/// (a, b) Q = (d, 0) with d = gcd(a, b) normalized and det Q = 1.
template <EuclideanDomain D>
HermiteStep<typename D::value_type> hermite_reduce_pair(const D& dom,
                                                        const typename D::value_type& a,
                                                        const typename D::value_type& b) {
  if (dom.is_zero(a) && dom.is_zero(b)) return {dom.zero(), Matrix<typename D::value_type>::identity(dom, 2)};
  auto c = extended_gcd(dom, a, b);
  Matrix<typename D::value_type> q(2, 2, dom.zero());
  q(0, 0) = c.x;
  q(1, 0) = c.y;
  q(0, 1) = dom.neg(dom.exact_div(b, c.d));
  q(1, 1) = dom.exact_div(a, c.d);
  return {c.d, std::move(q)};
}

/// Column variant: P (a, b)^T = (d, 0)^T with det P = 1.
template <EuclideanDomain D>
HermiteStep<typename D::value_type> hermite_reduce_column(const D& dom,
                                                          const typename D::value_type& a,
                                                          const typename D::value_type& b) {
  auto step = hermite_reduce_pair(dom, a, b);
  return {step.d, transpose(dom, step.Q)};
}

/// Fraction-free (Bareiss) determinant; exact in any integral domain.
template <EuclideanDomain D>
typename D::value_type determinant(const D& dom, Matrix<typename D::value_type> m) {
  using V = typename D::value_type;
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  V prev = dom.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (dom.is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && dom.is_zero(m(r, k))) ++r;
      if (r == n) return dom.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = dom.exact_div(dom.sub(dom.mul(m(i, j), m(k, k)), dom.mul(m(i, k), m(k, j))), prev);
      }
    }
    prev = m(k, k);
  }
  return negate ? dom.neg(m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <class V>
struct TriangularReduction {
  Matrix<V> A, P, Q, reduced;
  V z;
  /// Shift used in P = [[lambda, 1], [1, 0]] (before the unit shortcut).
  std::optional<V> lambda;
};

/// P [[a, 0], [b, c]] Q = [[z, 0], [*, *]] with z a unit. lambda comes from
/// the residue construction so that gcd(lambda*a + b, c) = 1; the Bezout
/// column (u, v) of that pair is completed to Q and a Hermite step clears the
/// top row. A unit a short-cuts to P = diag(a^-1, 1), Q = I; c = 0 is a
/// single column Hermite step. PreconditionError unless gcd(a, b, c) = 1.
template <EuclideanDomain D>
TriangularReduction<typename D::value_type> reduce_triangular(const D& dom,
                                                         const typename D::value_type& a,
                                                         const typename D::value_type& b,
                                                         const typename D::value_type& c) {
  using V = typename D::value_type;
  if (!dom.is_unit(gcd(dom, a, gcd(dom, b, c)))) {
    throw PreconditionError("(" + dom.to_string(a) + ", " + dom.to_string(b) + ", " +
                            dom.to_string(c) + ") does not generate the unit ideal");
  }
  Matrix<V> A(2, 2, dom.zero());
  A(0, 0) = a;
  A(1, 0) = b;
  A(1, 1) = c;
  TriangularReduction<V> out{A, Matrix<V>::identity(dom, 2), Matrix<V>::identity(dom, 2), A, dom.one(),
                         std::nullopt};
  if (dom.is_unit(a)) {
    out.P(0, 0) = dom.unit_inverse(a);
  } else if (dom.is_zero(c)) {
    out.P = hermite_reduce_column(dom, a, b).Q;
  } else {
    const V lambda = asr1_witness(dom, c, b, a).shifts.front();
    out.lambda = lambda;
    Matrix<V> p0(2, 2, dom.zero());
    p0(0, 0) = lambda;
    p0(0, 1) = dom.one();
    p0(1, 0) = dom.one();
    out.P = p0;
    const V top = dom.add(dom.mul(lambda, a), b);
    auto split = coprime_factor(dom, top, c);
    const auto& cert = split.certificate;  // a1*u + c1*v = 1
    Matrix<V> q = unimodular_completion(dom, cert.x, cert.y);
    auto partial = multiply(dom, multiply(dom, out.P, A), q);
    auto clear = hermite_reduce_pair(dom, partial(0, 0), partial(0, 1));
    out.Q = multiply(dom, q, clear.Q);
  }
  out.reduced = multiply(dom, multiply(dom, out.P, A), out.Q);
  out.z = out.reduced(0, 0);
  if (!dom.is_zero(out.reduced(0, 1)) || !dom.is_unit(out.z)) {
    throw CertificateError("2x2 reduction did not reach a unit corner");
  }
  return out;
}

template <EuclideanDomain D>
bool verify(const D& dom, const TriangularReduction<typename D::value_type>& r) {
  return multiply(dom, multiply(dom, r.P, r.A), r.Q) == r.reduced && dom.is_zero(r.reduced(0, 1)) &&
         r.reduced(0, 0) == r.z && dom.is_unit(r.z) && dom.is_unit(determinant(dom, r.P)) &&
         dom.is_unit(determinant(dom, r.Q));
}

template <class V>
struct ReductionCertificate {
  Matrix<V> A, P, Q, D;
  std::vector<V> diag;
  std::size_t rank = 0;
};

namespace detail {

template <EuclideanDomain D>
struct SnfState {
  const D& dom;
  Matrix<typename D::value_type> d, p, q;

  using V = typename D::value_type;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < p.cols(); ++c) std::swap(p(i, c), p(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < q.rows(); ++r) std::swap(q(r, i), q(r, j));
  }
  // row_i -= k * row_j
  void sub_row(std::size_t i, std::size_t j, const V& k) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = dom.sub(d(i, c), dom.mul(k, d(j, c)));
    for (std::size_t c = 0; c < p.cols(); ++c) p(i, c) = dom.sub(p(i, c), dom.mul(k, p(j, c)));
  }
  // col_i -= col_j * k
  void sub_col(std::size_t i, std::size_t j, const V& k) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) = dom.sub(d(r, i), dom.mul(d(r, j), k));
    for (std::size_t r = 0; r < q.rows(); ++r) q(r, i) = dom.sub(q(r, i), dom.mul(q(r, j), k));
  }
  void scale_row(std::size_t i, const V& u) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = dom.mul(u, d(i, c));
    for (std::size_t c = 0; c < p.cols(); ++c) p(i, c) = dom.mul(u, p(i, c));
  }
  // (row_i, row_j) <- M (row_i, row_j)
  void mix_rows(std::size_t i, std::size_t j, const Matrix<V>& m) {
    auto mix = [&](Matrix<V>& x) {
      for (std::size_t c = 0; c < x.cols(); ++c) {
        V ri = dom.add(dom.mul(m(0, 0), x(i, c)), dom.mul(m(0, 1), x(j, c)));
        V rj = dom.add(dom.mul(m(1, 0), x(i, c)), dom.mul(m(1, 1), x(j, c)));
        x(i, c) = std::move(ri);
        x(j, c) = std::move(rj);
      }
    };
    mix(d);
    mix(p);
  }
  // (col_i, col_j) <- (col_i, col_j) M
  void mix_cols(std::size_t i, std::size_t j, const Matrix<V>& m) {
    auto mix = [&](Matrix<V>& x) {
      for (std::size_t r = 0; r < x.rows(); ++r) {
        V ci = dom.add(dom.mul(x(r, i), m(0, 0)), dom.mul(x(r, j), m(1, 0)));
        V cj = dom.add(dom.mul(x(r, i), m(0, 1)), dom.mul(x(r, j), m(1, 1)));
        x(r, i) = std::move(ci);
        x(r, j) = std::move(cj);
      }
    };
    mix(d);
    mix(q);
  }
};

}  // namespace detail

/// P A Q = D with D = diag(d_1, ..., d_k, 0, ...), d_i normalized and
/// d_i | d_{i+1}. Pivot: smallest nonzero Euclidean size, ties to the lowest
/// (row, col); each restart strictly lowers the pivot size. Divisibility is
/// then repaired pairwise with (d_i, d_j) -> (gcd, lcm) and units are moved
/// into P.
template <EuclideanDomain D>
ReductionCertificate<typename D::value_type> smith_normal_form(const D& dom,
                                                               const Matrix<typename D::value_type>& A) {
  using V = typename D::value_type;
  const std::size_t m = A.rows(), n = A.cols();
  detail::SnfState<D> st{dom, A, Matrix<V>::identity(dom, m), Matrix<V>::identity(dom, n)};
  auto& d = st.d;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::optional<V> last_pivot;
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (dom.is_zero(d(i, j))) continue;
          if (!piv || dom.size_less(d(i, j), d(piv->first, piv->second))) piv = std::pair(i, j);
        }
      }
      if (!piv) break;
      if (last_pivot && !dom.size_less(d(piv->first, piv->second), *last_pivot)) {
        throw CertificateError("pivot size failed to decrease");
      }
      st.swap_rows(t, piv->first);
      st.swap_cols(t, piv->second);
      last_pivot = d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (dom.is_zero(d(i, t))) continue;
        st.sub_row(i, t, dom.divmod(d(i, t), d(t, t)).first);
        if (!dom.is_zero(d(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (dom.is_zero(d(t, j))) continue;
        st.sub_col(j, t, dom.divmod(d(t, j), d(t, t)).first);
        if (!dom.is_zero(d(t, j))) clean = false;
      }
      if (clean) break;
    }
    if (dom.is_zero(d(t, t))) break;
    rank = t + 1;
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const V a = d(i, i), b = d(j, j);
      if (dom.divides(a, b)) continue;
      auto c = extended_gcd(dom, a, b);
      const V bg = dom.exact_div(b, c.d), ag = dom.exact_div(a, c.d);
      Matrix<V> left(2, 2, dom.zero()), right(2, 2, dom.zero());
      left(0, 0) = c.x;
      left(0, 1) = c.y;
      left(1, 0) = dom.neg(bg);
      left(1, 1) = ag;
      right(0, 0) = dom.one();
      right(0, 1) = dom.neg(dom.mul(c.y, bg));
      right(1, 0) = dom.one();
      right(1, 1) = dom.mul(c.x, ag);
      st.mix_rows(i, j, left);
      st.mix_cols(i, j, right);
    }
  }
  ReductionCertificate<V> out{A, st.p, st.q, d, {}, rank};
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    const V u = dom.unit_part(d(i, i));
    if (u != dom.one()) st.scale_row(i, dom.unit_inverse(u));
  }
  out.P = st.p;
  out.D = st.d;
  for (std::size_t i = 0; i < std::min(m, n); ++i) out.diag.push_back(st.d(i, i));
  return out;
}

/// Exact re-check: P A Q = D, unit determinants, diagonal shape, normalized
/// entries and the divisibility chain.
template <EuclideanDomain D>
bool verify(const D& dom, const ReductionCertificate<typename D::value_type>& c) {
  if (multiply(dom, multiply(dom, c.P, c.A), c.Q) != c.D) return false;
  if (!dom.is_unit(determinant(dom, c.P)) || !dom.is_unit(determinant(dom, c.Q))) return false;
  const std::size_t k = std::min(c.D.rows(), c.D.cols());
  if (c.diag.size() != k) return false;
  for (std::size_t i = 0; i < c.D.rows(); ++i) {
    for (std::size_t j = 0; j < c.D.cols(); ++j) {
      if (i == j) {
        if (c.D(i, i) != c.diag[i] || dom.normalize(c.diag[i]) != c.diag[i]) return false;
      } else if (!dom.is_zero(c.D(i, j))) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!dom.divides(c.diag[i], c.diag[i + 1])) return false;
  }
  return true;
}

/// Gcd of all entries.
template <EuclideanDomain D>
typename D::value_type content_ideal(const D& dom, const Matrix<typename D::value_type>& A) {
  auto g = dom.zero();
  for (const auto& x : A.data()) g = gcd(dom, g, x);
  return g;
}

/// Two-sided ideal generated by all entries. UnsupportedRing for matrix and
/// triangular base rings (matrices of matrices are out of scope).
IdealClosure content_ideal(const FiniteRingPtr& ring, const Matrix<FiniteRing::Index>& A);

/// R d2 R contained in d1 R and in R d1, by three ideal closures.
bool check_total_divisor(const FiniteRingPtr& ring, FiniteRing::Index d1, FiniteRing::Index d2);

// ------------------------------------------------------------ JSON helpers

template <class Dom>
nlohmann::json matrix_to_json(const Dom& dom, const Matrix<typename Dom::value_type>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(dom.to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Rectangular, non-empty array of rows; entries through dom.from_json.
template <class Dom>
Matrix<typename Dom::value_type> matrix_from_json(const Dom& dom, const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw SyntaxError("matrix must be a non-empty array of non-empty rows");
  }
  Matrix<typename Dom::value_type> m(j.size(), j.front().size(), dom.zero());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw SyntaxError("ragged matrix rows");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = dom.from_json(j[i][k]);
  }
  return m;
}

template <EuclideanDomain D>
nlohmann::json to_json(const D& dom, const ReductionCertificate<typename D::value_type>& c) {
  auto diag = nlohmann::json::array();
  for (const auto& x : c.diag) diag.push_back(dom.to_json(x));
  return {{"ring", dom.name()},
          {"rows", matrix_to_json(dom, c.A)},
          {"P", matrix_to_json(dom, c.P)},
          {"Q", matrix_to_json(dom, c.Q)},
          {"D", matrix_to_json(dom, c.D)},
          {"diag", std::move(diag)},
          {"rank", c.rank}};
}

}  // namespace ringlab
