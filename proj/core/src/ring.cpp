#include "ringlab/ring.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

using Index = FiniteRing::Index;
using nlohmann::json;

const char* to_string(Side side) {
  switch (side) {
    case Side::Right:
      return "right";
    case Side::Left:
      return "left";
    case Side::TwoSided:
      return "two-sided";
  }
  return "?";
}

namespace {

// Adds g to an additively closed set, keeping `list` in sync with `set`.
void absorb(const FiniteRing& R, ElementSet& set, std::vector<Index>& list, Index g) {
  if (set.test(g)) return;
  const std::vector<Index> base = list;
  for (Index kg = g; !set.test(kg); kg = R.add(kg, g)) {
    for (Index b : base) {
      const Index y = R.add(b, kg);
      if (set.insert(y)) list.push_back(y);
    }
  }
}

}  // namespace

ElementSet additive_span(const FiniteRing& R, const std::vector<Index>& elements) {
  ElementSet set(R.size());
  set.set(R.zero());
  std::vector<Index> list{R.zero()};
  for (Index g : elements) absorb(R, set, list, g);
  return set;
}

IdealClosure ideal_closure(const FiniteRingPtr& ring, Side side, std::vector<Index> generators) {
  if (generators.empty()) throw PreconditionError("ideal closure needs at least one generator");
  const FiniteRing& R = *ring;
  for (Index g : generators) {
    if (g >= R.size()) throw DomainError("generator index out of range for " + R.name());
  }
  ElementSet set(R.size());
  set.set(R.zero());
  std::vector<Index> list{R.zero()};
  for (Index g : generators) absorb(R, set, list, g);

  const bool right = side != Side::Left;
  const bool left = side != Side::Right;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Index x = list[i];
      for (Index r = 0; r < R.size(); ++r) {
        if (right) {
          const Index y = R.mul(x, r);
          if (!set.test(y)) {
            absorb(R, set, list, y);
            changed = true;
          }
        }
        if (left) {
          const Index y = R.mul(r, x);
          if (!set.test(y)) {
            absorb(R, set, list, y);
            changed = true;
          }
        }
      }
    }
  }
  return IdealClosure{ring, side, std::move(generators), std::move(set)};
}

CoboundaryResult coboundary(const FiniteRing& R, Index a) {
  const auto target = R.two_sided_ideal(a);
  auto works = [&](Index b) {
    return R.right_ideal(b) == target && R.left_ideal(b) == target;
  };
  CoboundaryResult res{a, false, std::nullopt};
  if (works(a)) {
    res.principal = true;
    res.generator = a;
    return res;
  }
  if (target == R.whole() && works(R.one())) {
    res.principal = true;
    res.generator = R.one();
    return res;
  }
  for (Index b : R.member_list(target)) {
    if (works(b)) {
      res.principal = true;
      res.generator = b;
      return res;
    }
  }
  return res;
}

PropertyReport has_D_property(const FiniteRing& R) {
  PropertyReport rep;
  rep.ring = R.name();
  rep.property = "dprop";
  rep.bounds = {{"elements", R.size()}, {"exhaustive", true}};
  rep.verdict = true;
  json gens = json::array();
  for (Index a = 1; a < R.size(); ++a) {
    auto cb = coboundary(R, a);
    if (!cb.principal) {
      rep.verdict = false;
      rep.counterexample = {{"a", R.to_json(a)},
                            {"ideal_size", R.ideal_size(R.two_sided_ideal(a))}};
      return rep;
    }
    gens.push_back({R.to_json(a), R.to_json(*cb.generator)});
  }
  rep.witness = {{"generators", std::move(gens)}};
  return rep;
}

RingSpec quotient_ring(const IntegerDomain&, const Integer& a) {
  if (sgn(a) == 0) throw DomainError("Z/0 is not finite");
  if (abs(a) == 1) throw DomainError("Z/(unit) is the zero ring");
  Integer n = abs(a);
  if (!n.fits_ulong_p()) throw DomainError("quotient Z/" + n.get_str() + " is too large");
  RingSpec spec = RingSpec::residue(n.get_ui());
  spec.check_cardinality(default_max_cardinality());
  return spec;
}

RingSpec quotient_ring(const PolyDomain&, const Poly& a) {
  if (a.is_zero()) throw DomainError("F_p[x]/(0) is not finite");
  if (a.degree() == 0) throw DomainError("F_p[x]/(unit) is the zero ring");
  RingSpec spec = RingSpec::poly_quotient(a);
  spec.check_cardinality(default_max_cardinality());
  return spec;
}

// ----------------------------------------------------------------- Ring

RingPtr Ring::make(const RingSpec& spec, std::uint64_t max_cardinality) {
  auto r = std::make_shared<Ring>();
  r->spec_ = spec;
  if (spec.is_finite()) r->finite_ = FiniteRing::make(spec, max_cardinality);
  return r;
}

RingPtr Ring::make(std::string_view spec_text) { return make(parse_ring_spec(spec_text)); }

const FiniteRingPtr& Ring::finite() const {
  if (!finite_) throw UnsupportedRing(spec_.to_string() + " is not a finite ring");
  return finite_;
}

PolyDomain Ring::poly_domain() const {
  if (spec_.kind() != RingKind::PolyOverPrimeField) {
    throw UnsupportedRing(spec_.to_string() + " is not a polynomial ring F_p[x]");
  }
  return PolyDomain(static_cast<Poly::Coeff>(spec_.param()));
}

// ----------------------------------------------------------------- Elem

Elem::Elem(RingPtr ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {
  const auto& spec = ring_->spec();
  switch (spec.kind()) {
    case RingKind::Integer:
      if (!std::holds_alternative<Integer>(payload_)) {
        throw RingMismatch("Z expects an integer payload");
      }
      break;
    case RingKind::PolyOverPrimeField:
      if (!std::holds_alternative<Poly>(payload_) ||
          std::get<Poly>(payload_).modulus() != spec.param()) {
        throw RingMismatch(spec.to_string() + " expects a polynomial over F" +
                           std::to_string(spec.param()));
      }
      break;
    default:
      if (!std::holds_alternative<Index>(payload_) ||
          std::get<Index>(payload_) >= ring_->finite()->size()) {
        throw RingMismatch(spec.to_string() + " expects an element index below " +
                           std::to_string(ring_->finite()->size()));
      }
  }
}

Elem Elem::parse(RingPtr ring, const json& j) {
  const auto& spec = ring->spec();
  switch (spec.kind()) {
    case RingKind::Integer:
      return Elem(ring, IntegerDomain{}.from_json(j));
    case RingKind::PolyOverPrimeField:
      return Elem(ring, ring->poly_domain().from_json(j));
    default:
      return Elem(ring, ring->finite()->from_json(j));
  }
}

Elem Elem::parse(RingPtr ring, std::string_view text) {
  const auto& spec = ring->spec();
  if (spec.kind() == RingKind::Integer) return Elem(ring, parse_integer(text));
  if (spec.kind() == RingKind::PolyOverPrimeField) {
    auto j = json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_array()) return parse(ring, j);
    return Elem(ring, ring->poly_domain().parse(text));
  }
  auto j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SyntaxError("bad element literal '" + std::string(text) + "'");
  return parse(ring, j);
}

json Elem::to_json() const {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, Poly>) {
          return PolyDomain(v.modulus()).to_json(v);
        } else {
          return ring_->finite()->to_json(v);
        }
      },
      payload_);
}

std::string Elem::to_string() const {
  if (std::holds_alternative<Integer>(payload_)) return integer().get_str();
  if (std::holds_alternative<Poly>(payload_)) return poly().to_string();
  return to_json().dump();
}

bool operator==(const Elem& a, const Elem& b) {
  return a.ring_->spec() == b.ring_->spec() && a.payload_ == b.payload_;
}

Elem arith(ArithOp op, const Elem& x, const Elem& y) {
  if (!(x.ring().spec() == y.ring().spec())) {
    throw RingMismatch("operands live in " + x.ring().spec().to_string() + " and " +
                       y.ring().spec().to_string());
  }
  const auto& ring = x.ring_ptr();
  if (ring->is_finite()) {
    const auto& R = *ring->finite();
    const Index a = x.index(), b = y.index();
    switch (op) {
      case ArithOp::Add:
        return Elem(ring, R.add(a, b));
      case ArithOp::Sub:
        return Elem(ring, R.sub(a, b));
      case ArithOp::Mul:
        return Elem(ring, R.mul(a, b));
      case ArithOp::Neg:
        return Elem(ring, R.neg(a));
    }
  }
  return std::visit(
      [&](const auto& a) -> Elem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Index>) {
          throw RingMismatch("finite payload in an infinite ring");
        } else {
          const auto& b = std::get<T>(y.payload());
          switch (op) {
            case ArithOp::Add:
              return Elem(ring, T(a + b));
            case ArithOp::Sub:
              return Elem(ring, T(a - b));
            case ArithOp::Mul:
              return Elem(ring, T(a * b));
            case ArithOp::Neg:
              return Elem(ring, T(-a));
          }
          return Elem(ring, a);
        }
      },
      x.payload());
}

bool is_unit(const Elem& x) {
  switch (x.ring().spec().kind()) {
    case RingKind::Integer:
      return IntegerDomain{}.is_unit(x.integer());
    case RingKind::PolyOverPrimeField:
      return x.ring().poly_domain().is_unit(x.poly());
    default:
      return x.ring().finite()->is_unit(x.index());
  }
}

std::vector<Elem> units(const RingPtr& ring) {
  std::vector<Elem> out;
  switch (ring->spec().kind()) {
    case RingKind::Integer:
      for (const auto& u : IntegerDomain{}.units()) out.emplace_back(ring, u);
      break;
    case RingKind::PolyOverPrimeField:
      for (const auto& u : ring->poly_domain().units()) out.emplace_back(ring, u);
      break;
    default:
      for (Index u : ring->finite()->units()) out.emplace_back(ring, u);
  }
  return out;
}

namespace {
const FiniteRing& enumerable(const RingPtr& ring, const char* what) {
  if (!ring->is_finite()) {
    throw InfiniteEnumeration(std::string(what) + " of " + ring->spec().to_string() +
                              " cannot be enumerated");
  }
  return *ring->finite();
}
}  // namespace

std::vector<Elem> idempotents(const RingPtr& ring) {
  std::vector<Elem> out;
  for (Index e : enumerable(ring, "idempotents").idempotents()) out.emplace_back(ring, e);
  return out;
}

std::vector<Elem> jacobson_radical(const RingPtr& ring) {
  std::vector<Elem> out;
  for (Index e : enumerable(ring, "Jacobson radical").jacobson_radical()) {
    out.emplace_back(ring, e);
  }
  return out;
}

RingSpec quotient_ring(const Elem& a) {
  switch (a.ring().spec().kind()) {
    case RingKind::Integer:
      return quotient_ring(IntegerDomain{}, a.integer());
    case RingKind::PolyOverPrimeField:
      return quotient_ring(a.ring().poly_domain(), a.poly());
    default:
      throw UnsupportedRing("quotients are defined for Z and F_p[x] only");
  }
}

}  // namespace ringlab
