#pragma once

// Ring abstraction: ideal closures, coboundaries, the Dubrovin property,
// quotients of the two Euclidean domains, and a dynamically typed element
// layer used by the command-line surface.

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/domain.hpp"
#include "ringlab/element_set.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

enum class Side { Right, Left, TwoSided };
const char* to_string(Side side);

/// Ideal generated by a list of elements of a finite ring, computed as a
/// fixed point: generators' multiples are added and the set is closed under
/// addition until nothing changes.
struct IdealClosure {
  FiniteRingPtr ring;
  Side side = Side::Right;
  std::vector<FiniteRing::Index> generators;
  ElementSet members;

  std::size_t size() const { return members.count(); }
  bool contains(FiniteRing::Index a) const { return members.test(a); }
  bool contains_one() const { return members.test(ring->one()); }
};

/// Throws PreconditionError for an empty generator list.
IdealClosure ideal_closure(const FiniteRingPtr& ring, Side side,
                           std::vector<FiniteRing::Index> generators);

/// Smallest additive subgroup containing the given elements.
ElementSet additive_span(const FiniteRing& ring, const std::vector<FiniteRing::Index>& elements);

struct CoboundaryResult {
  FiniteRing::Index element = 0;
  bool principal = false;
  /// b with RaR = bR = Rb.
  std::optional<FiniteRing::Index> generator;
};

/// Searches RaR for b with RaR = bR = Rb. Tries a itself first, then 1 when
/// RaR = R, then the members of RaR in index order.
CoboundaryResult coboundary(const FiniteRing& ring, FiniteRing::Index a);

/// True iff every nonzero a has a principal coboundary; the counterexample
/// is the smallest failing a.
PropertyReport has_D_property(const FiniteRing& ring);

/// Z/|a| for Z; F_p[x]/(a) for F_p[x]. DomainError when a is zero or a unit.
RingSpec quotient_ring(const IntegerDomain& domain, const Integer& a);
RingSpec quotient_ring(const PolyDomain& domain, const Poly& a);

// -------------------------------------------------- dynamically typed layer

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Realized arithmetic of any RingSpec: one of the two Euclidean domains or
/// a finite ring.
class Ring {
 public:
  static RingPtr make(const RingSpec& spec,
                      std::uint64_t max_cardinality = default_max_cardinality());
  static RingPtr make(std::string_view spec_text);

  const RingSpec& spec() const noexcept { return spec_; }
  bool is_finite() const noexcept { return finite_ != nullptr; }
  bool is_integers() const noexcept { return spec_.kind() == RingKind::Integer; }
  /// Throws UnsupportedRing for the infinite domains.
  const FiniteRingPtr& finite() const;
  /// Throws UnsupportedRing unless this is F_p[x].
  PolyDomain poly_domain() const;

 private:
  RingSpec spec_;
  FiniteRingPtr finite_;
};

class Elem {
 public:
  using Payload = std::variant<Integer, Poly, FiniteRing::Index>;

  /// Payload must match the ring (Integer for Z, Poly over F_p for F_p[x],
  /// an in-range index for finite rings); throws RingMismatch otherwise.
  Elem(RingPtr ring, Payload payload);
  /// Decimal string / integer for Z, coefficient array or "c0 + c1*x" text
  /// for F_p[x], nested arrays for finite rings.
  static Elem parse(RingPtr ring, const nlohmann::json& j);
  static Elem parse(RingPtr ring, std::string_view text);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Payload& payload() const noexcept { return payload_; }
  const Integer& integer() const { return std::get<Integer>(payload_); }
  const Poly& poly() const { return std::get<Poly>(payload_); }
  FiniteRing::Index index() const { return std::get<FiniteRing::Index>(payload_); }

  nlohmann::json to_json() const;
  std::string to_string() const;

  friend bool operator==(const Elem& a, const Elem& b);

 private:
  RingPtr ring_;
  Payload payload_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Throws RingMismatch when x and y live in different rings. For Neg, y is
/// ignored.
Elem arith(ArithOp op, const Elem& x, const Elem& y);

bool is_unit(const Elem& x);
/// Enumerated for finite rings; {1, -1} for Z and the nonzero constants for
/// F_p[x], answered analytically.
std::vector<Elem> units(const RingPtr& ring);
/// InfiniteEnumeration for Z and F_p[x].
std::vector<Elem> idempotents(const RingPtr& ring);
std::vector<Elem> jacobson_radical(const RingPtr& ring);
/// The spec of R/aR for R in {Z, F_p[x]}.
RingSpec quotient_ring(const Elem& a);

}  // namespace ringlab
