#pragma once

// Clean, exchange and neat conditions; adequate splittings a = r*s over Z
// and F_p[x]; the idempotent e = s*v of R/aR built from r*u + s*v = 1; and
// D-adequacy of elements of finite rings with the Dubrovin property.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/domain.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/euclid.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/range_props.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ------------------------------------------------------------ finite rings

struct CleanDecomposition {
  FiniteRing::Index a = 0, e = 0, u = 0;
};

/// First idempotent e (ascending) with a - e a unit. Throws NotClean.
CleanDecomposition clean_decompose(const FiniteRing& ring, FiniteRing::Index a);
bool verify(const FiniteRing& ring, const CleanDecomposition& d);

PropertyReport is_clean(const FiniteRing& ring);
/// For every a some idempotent e lies in aR with 1 - e in (1 - a)R.
PropertyReport is_exchange(const FiniteRing& ring);

/// Requires the Dubrovin property, a != 0 and RaR != R (PreconditionError).
/// For every b looks for a = r*s with RrR + RbR = R such that every proper
/// principal two-sided ideal J containing RsR has J + RbR != R.
PropertyReport is_D_adequate_element(const FiniteRing& ring, FiniteRing::Index a);
/// Every nonzero a with RaR != R is D-adequate. PreconditionError without
/// the Dubrovin property.
PropertyReport is_D_adequate_ring(const FiniteRing& ring);

// ------------------------------------------------------- Euclidean domains

template <class V>
struct AdequateDecomposition {
  V a, b, r, s;
};

/// Gcd iteration: t = a, s = 1; while g = gcd(t, b) is not a unit, move g
/// from t to s. Returns r = t. Throws ZeroElement for a = 0.
template <EuclideanDomain D>
AdequateDecomposition<typename D::value_type> adequate_decomposition(
    const D& dom, const typename D::value_type& a, const typename D::value_type& b) {
  if (dom.is_zero(a)) throw ZeroElement("adequate decomposition needs a != 0");
  auto t = a;
  auto s = dom.one();
  for (auto g = gcd(dom, t, b); !dom.is_unit(g); g = gcd(dom, t, b)) {
    t = dom.exact_div(t, g);
    s = dom.mul(s, g);
  }
  return {a, b, std::move(t), std::move(s)};
}

/// r*s = a, gcd(r, b) = 1, and every irreducible factor of s meets b.
template <EuclideanDomain D>
bool verify(const D& dom, const AdequateDecomposition<typename D::value_type>& d) {
  if (dom.mul(d.r, d.s) != d.a || !coprime(dom, d.r, d.b)) return false;
  if (dom.is_unit(d.s)) return true;
  for (const auto& [q, e] : dom.factor(d.s)) {
    if (coprime(dom, q, d.b)) return false;
  }
  return true;
}

template <class V>
struct IdempotentWitness {
  V a, b, c, r, s;
  /// Canonical representative of the idempotent of R/aR.
  V e;
  /// r*u + s*v = 1, then the gcds showing e in bR/aR and 1 - e in cR/aR.
  std::vector<BezoutCertificate<V>> certificates;
  /// "b" when a was split against b, "c" for the symmetric fallback.
  std::string split;
};

/// Finds a = r*s with gcd(r, b) = gcd(s, c) = gcd(r, s) = 1 by splitting a
/// against b (falling back to c), then e = s*v mod a from r*u + s*v = 1.
/// PreconditionError if a = 0 or gcd(a, b, c) != 1; NoDecomposition if
/// neither split satisfies the three coprimality conditions.
template <EuclideanDomain D>
IdempotentWitness<typename D::value_type> quotient_idempotent(const D& dom,
                                                           const typename D::value_type& a,
                                                           const typename D::value_type& b,
                                                           const typename D::value_type& c) {
  using V = typename D::value_type;
  if (dom.is_zero(a)) throw PreconditionError("the idempotent construction needs a != 0");
  if (!dom.is_unit(gcd(dom, a, gcd(dom, b, c)))) {
    throw PreconditionError("(" + dom.to_string(a) + ", " + dom.to_string(b) + ", " +
                            dom.to_string(c) + ") does not generate the unit ideal");
  }
  auto admissible = [&](const V& r, const V& s) {
    return coprime(dom, r, b) && coprime(dom, s, c) && coprime(dom, r, s);
  };
  V r, s;
  std::string split;
  if (auto d = adequate_decomposition(dom, a, b); admissible(d.r, d.s)) {
    r = d.r;
    s = d.s;
    split = "b";
  } else if (auto f = adequate_decomposition(dom, a, c); admissible(f.s, f.r)) {
    r = f.s;
    s = f.r;
    split = "c";
  } else {
    throw NoDecomposition("no splitting a = r*s with rR + bR = sR + cR = rR + sR = R for a = " +
                          dom.to_string(a));
  }
  auto rs = extended_gcd(dom, r, s);
  if (rs.d != dom.one()) throw CertificateError("r and s are not coprime");
  const V v = rs.y;
  const V e = dom.rem(dom.mul(s, v), a);
  IdempotentWitness<V> w{a, b, c, r, s, e, {}, split};
  w.certificates.push_back(std::move(rs));
  w.certificates.push_back(extended_gcd(dom, r, b));
  w.certificates.push_back(extended_gcd(dom, s, c));
  return w;
}

/// Exact re-check in R/aR: e^2 = e, e in bR/aR, 1 - e in cR/aR, plus
/// a = r*s and the three coprimality conditions.
template <EuclideanDomain D>
bool verify(const D& dom, const IdempotentWitness<typename D::value_type>& w) {
  if (dom.mul(w.r, w.s) != w.a) return false;
  if (!coprime(dom, w.r, w.b) || !coprime(dom, w.s, w.c) || !coprime(dom, w.r, w.s)) return false;
  for (const auto& cert : w.certificates) {
    if (!verify(dom, cert)) return false;
  }
  const auto& a = w.a;
  if (!dom.divides(a, dom.sub(dom.mul(w.e, w.e), w.e))) return false;
  // x in yR/aR iff gcd(y, a) divides x.
  if (!dom.divides(gcd(dom, w.b, a), w.e)) return false;
  return dom.divides(gcd(dom, w.c, a), dom.sub(dom.one(), w.e));
}

/// Units count as neat by convention (their quotient is the zero ring).
/// Otherwise builds R/aR and decides cleanness exhaustively. DomainError for
/// a = 0 or a quotient above the cardinality cap.
template <EuclideanDomain D>
PropertyReport is_neat_element(const D& dom, const typename D::value_type& a) {
  PropertyReport rep;
  rep.ring = dom.name();
  rep.property = "neat-element";
  if (!dom.is_zero(a) && dom.is_unit(a)) {
    rep.verdict = true;
    rep.witness = {{"a", dom.to_json(a)}, {"convention", "units are neat"}};
    return rep;
  }
  const auto spec = quotient_ring(dom, a);
  const auto quotient = FiniteRing::make(spec);
  auto clean = is_clean(*quotient);
  rep.verdict = clean.verdict;
  rep.witness = {{"a", dom.to_json(a)}, {"quotient", spec.to_string()}};
  rep.counterexample = clean.counterexample;
  rep.bounds = {{"quotient_size", quotient->size()}, {"method", "exhaustive"}};
  return rep;
}

/// Shift candidates in search order: 0, 1, -1, 2, -2, ... over Z; dense
/// index order over F_p[x].
inline Integer shift_candidate(const IntegerDomain&, std::uint64_t i) {
  const long long k = static_cast<long long>((i + 1) / 2);
  return Integer(static_cast<long>(i % 2 == 1 ? k : -k));
}
inline Poly shift_candidate(const PolyDomain& dom, std::uint64_t i) { return dom.nth(i); }

/// For each unimodular pair (a, b) looks for t with a + b*t neat, trying
/// `max_shifts` candidates. Pairs whose quotient would exceed the
/// cardinality cap are skipped candidate-wise.
template <EuclideanDomain D>
PropertyReport has_neat_range_1(
    const D& dom,
    const std::vector<std::pair<typename D::value_type, typename D::value_type>>& pairs,
    std::uint64_t max_shifts = 64) {
  PropertyReport rep;
  rep.ring = dom.name();
  rep.property = "neat-range-1";
  rep.verdict = true;
  rep.bounds = {{"pairs", pairs.size()}, {"max_shifts", max_shifts}, {"method", "sampled"}};
  auto shifts = nlohmann::json::array();
  for (const auto& [a, b] : pairs) {
    if (!coprime(dom, a, b)) continue;
    std::optional<typename D::value_type> found;
    for (std::uint64_t i = 0; i < max_shifts && !found; ++i) {
      const auto t = shift_candidate(dom, i);
      const auto c = dom.add(a, dom.mul(b, t));
      if (dom.is_zero(c)) continue;
      try {
        if (is_neat_element(dom, c).verdict) found = t;
      } catch (const DomainError&) {
        continue;
      }
    }
    if (!found) {
      rep.verdict = false;
      rep.counterexample = {{"a", dom.to_json(a)}, {"b", dom.to_json(b)}};
      return rep;
    }
    shifts.push_back({{"a", dom.to_json(a)}, {"b", dom.to_json(b)}, {"t", dom.to_json(*found)}});
  }
  rep.witness = {{"shifts", std::move(shifts)}};
  return rep;
}

/// Commutative reading of the D-adequate shift: split c against a as
/// c = r*s (r coprime to a, every prime of s dividing a) and take lambda = r,
/// so gcd(a + r*b, c) = 1. PreconditionError if c = 0 or gcd(a, b, c) != 1.
template <EuclideanDomain D>
RangeWitness<typename D::value_type> adequate_shift(const D& dom, const typename D::value_type& a,
                                                    const typename D::value_type& b,
                                                    const typename D::value_type& c) {
  if (dom.is_zero(c)) throw PreconditionError("the adequate shift needs c != 0");
  if (!dom.is_unit(gcd(dom, a, gcd(dom, b, c)))) {
    throw PreconditionError("(" + dom.to_string(a) + ", " + dom.to_string(b) + ", " +
                            dom.to_string(c) + ") does not generate the unit ideal");
  }
  auto split = adequate_decomposition(dom, c, a);
  auto cert = extended_gcd(dom, dom.add(a, dom.mul(split.r, b)), c);
  RangeWitness<typename D::value_type> w;
  w.kind = WitnessKind::ASR1TwoSided;
  w.inputs = {a, b, c};
  w.shifts = {split.r};
  w.verdict = dom.is_unit(cert.d);
  if (!w.verdict) w.counterexample = w.inputs;
  w.certificates.push_back(std::move(cert));
  return w;
}

}  // namespace ringlab
