#pragma once

// Bezout kernels over Z and F_p[x]: certified gcds, unimodular completion of
// a coprime column, and the coprime factorization a = d a1, b = d b1.

#include <vector>

#include "ringlab/domain.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/matrix.hpp"

namespace ringlab {

/// a*x + b*y = d, d a normalized gcd of a and b.
template <class V>
struct BezoutCertificate {
  V a, b, d, x, y;
};

/// a = d*a1, b = d*b1, with `certificate` proving a1*x + b1*y = 1.
template <class V>
struct CoprimeFactorization {
  V a, b, d, a1, b1;
  BezoutCertificate<V> certificate;
};

/// Iterative extended Euclid; the unit of the raw remainder is moved into
/// the cofactors so d is non-negative (Z) or monic (F_p[x]).
/// gcd(0, 0) = 0 with x = y = 0.
template <EuclideanDomain D>
BezoutCertificate<typename D::value_type> extended_gcd(const D& dom,
                                                       const typename D::value_type& a,
                                                       const typename D::value_type& b) {
  using V = typename D::value_type;
  if (dom.is_zero(a) && dom.is_zero(b)) return {a, b, dom.zero(), dom.zero(), dom.zero()};
  V r0 = a, r1 = b;
  V s0 = dom.one(), s1 = dom.zero();
  V t0 = dom.zero(), t1 = dom.one();
  while (!dom.is_zero(r1)) {
    auto [q, r] = dom.divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    V s2 = dom.sub(s0, dom.mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    V t2 = dom.sub(t0, dom.mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const V inv = dom.unit_inverse(dom.unit_part(r0));
  return {a, b, dom.mul(r0, inv), dom.mul(s0, inv), dom.mul(t0, inv)};
}

template <EuclideanDomain D>
typename D::value_type gcd(const D& dom, const typename D::value_type& a,
                           const typename D::value_type& b) {
  return extended_gcd(dom, a, b).d;
}

/// Exact re-check of every certificate invariant by ring arithmetic.
template <EuclideanDomain D>
bool verify(const D& dom, const BezoutCertificate<typename D::value_type>& c) {
  if (dom.add(dom.mul(c.a, c.x), dom.mul(c.b, c.y)) != c.d) return false;
  if (dom.normalize(c.d) != c.d) return false;
  return dom.divides(c.d, c.a) && dom.divides(c.d, c.b);
}

template <EuclideanDomain D>
bool coprime(const D& dom, const typename D::value_type& a, const typename D::value_type& b) {
  return dom.is_unit(gcd(dom, a, b));
}

/// Q = [[u, -y], [v, x]] with u*x + v*y = 1, so Q has first column (u, v)
/// and determinant 1. Throws NotCoprime.
template <EuclideanDomain D>
Matrix<typename D::value_type> unimodular_completion(const D& dom,
                                                     const typename D::value_type& u,
                                                     const typename D::value_type& v) {
  auto c = extended_gcd(dom, u, v);
  if (c.d != dom.one()) {
    throw NotCoprime("(" + dom.to_string(u) + ", " + dom.to_string(v) + ") has gcd " +
                     dom.to_string(c.d));
  }
  Matrix<typename D::value_type> q(2, 2, dom.zero());
  q(0, 0) = u;
  q(1, 0) = v;
  q(0, 1) = dom.neg(c.y);
  q(1, 1) = c.x;
  return q;
}

/// Divide-out construction: d = gcd(a, b), a1 = a/d, b1 = b/d. The pair
/// (0, 0) maps to d = 0, a1 = 1, b1 = 0.
template <EuclideanDomain D>
CoprimeFactorization<typename D::value_type> coprime_factor(const D& dom,
                                                          const typename D::value_type& a,
                                                          const typename D::value_type& b) {
  if (dom.is_zero(a) && dom.is_zero(b)) {
    BezoutCertificate<typename D::value_type> cert{dom.one(), dom.zero(), dom.one(), dom.one(),
                                                   dom.zero()};
    return {a, b, dom.zero(), dom.one(), dom.zero(), cert};
  }
  const auto d = gcd(dom, a, b);
  auto a1 = dom.exact_div(a, d);
  auto b1 = dom.exact_div(b, d);
  auto cert = extended_gcd(dom, a1, b1);
  if (cert.d != dom.one()) throw CertificateError("cofactors of a gcd are not coprime");
  return {a, b, d, std::move(a1), std::move(b1), std::move(cert)};
}

template <EuclideanDomain D>
bool verify(const D& dom, const CoprimeFactorization<typename D::value_type>& f) {
  return dom.mul(f.d, f.a1) == f.a && dom.mul(f.d, f.b1) == f.b && f.certificate.a == f.a1 &&
         f.certificate.b == f.b1 && f.certificate.d == dom.one() && verify(dom, f.certificate);
}

/// Canonical x with x = r_i mod m_i for pairwise coprime nonzero moduli.
template <EuclideanDomain D>
typename D::value_type crt(const D& dom, const std::vector<typename D::value_type>& residues,
                           const std::vector<typename D::value_type>& moduli) {
  using V = typename D::value_type;
  V x = dom.zero();
  V m = dom.one();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    auto c = extended_gcd(dom, m, moduli[i]);
    if (!dom.is_unit(c.d)) throw NotCoprime("CRT moduli are not pairwise coprime");
    // x + m * ((r_i - x) * m^{-1} mod m_i)
    V k = dom.rem(dom.mul(dom.sub(residues[i], x), c.x), moduli[i]);
    x = dom.add(x, dom.mul(m, k));
    m = dom.mul(m, moduli[i]);
    x = dom.rem(x, m);
  }
  return x;
}

}  // namespace ringlab
