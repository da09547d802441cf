#include "ringlab/clean_adequate.hpp"

#include <unordered_map>

namespace ringlab {

using Index = FiniteRing::Index;
using IdealId = FiniteRing::IdealId;

CleanDecomposition clean_decompose(const FiniteRing& ring, Index a) {
  if (a >= ring.size()) throw DomainError("element index out of range");
  for (Index e : ring.idempotents()) {
    const Index u = ring.sub(a, e);
    if (ring.is_unit(u)) return {a, e, u};
  }
  throw NotClean(ring.to_string(a) + " is not a unit plus an idempotent in " + ring.name());
}

bool verify(const FiniteRing& ring, const CleanDecomposition& d) {
  return ring.mul(d.e, d.e) == d.e && ring.is_unit(d.u) && ring.add(d.e, d.u) == d.a;
}

PropertyReport is_clean(const FiniteRing& ring) {
  PropertyReport rep{ring.name(), "clean", true, {}, {}, {{"method", "exhaustive"}}};
  auto shown = nlohmann::json::array();
  for (Index a = 0; a < ring.size(); ++a) {
    try {
      auto d = clean_decompose(ring, a);
      if (shown.size() < 8 && !ring.is_unit(a) && a != ring.zero()) {
        shown.push_back({{"a", ring.to_json(a)}, {"e", ring.to_json(d.e)}, {"u", ring.to_json(d.u)}});
      }
    } catch (const NotClean&) {
      rep.verdict = false;
      rep.counterexample = {{"a", ring.to_json(a)}, {"index", a}};
      return rep;
    }
  }
  rep.witness = {{"decompositions", std::move(shown)}};
  return rep;
}

PropertyReport is_exchange(const FiniteRing& ring) {
  PropertyReport rep{ring.name(), "exchange", true, {}, {}, {{"method", "exhaustive"}}};
  for (Index a = 0; a < ring.size(); ++a) {
    const IdealId ar = ring.right_ideal(a);
    const IdealId br = ring.right_ideal(ring.sub(ring.one(), a));
    bool found = false;
    for (Index e : ring.idempotents()) {
      if (ring.contains(ar, e) && ring.contains(br, ring.sub(ring.one(), e))) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.verdict = false;
      rep.counterexample = {{"a", ring.to_json(a)}, {"index", a}};
      return rep;
    }
  }
  return rep;
}

namespace {

/// Distinct principal two-sided ideals and, per element, the proper ones
/// containing RxR.
struct TwoSidedLattice {
  std::vector<IdealId> ideals;                       // distinct RxR, proper only
  std::vector<std::vector<std::uint32_t>> above;     // per element: indices into ideals
};

TwoSidedLattice lattice(const FiniteRing& ring) {
  TwoSidedLattice out;
  std::unordered_map<IdealId, std::uint32_t> seen;
  for (Index x = 0; x < ring.size(); ++x) {
    const IdealId t = ring.two_sided_ideal(x);
    if (t != ring.whole() && seen.try_emplace(t, out.ideals.size()).second) out.ideals.push_back(t);
  }
  out.above.resize(ring.size());
  for (Index x = 0; x < ring.size(); ++x) {
    const IdealId t = ring.two_sided_ideal(x);
    for (std::uint32_t j = 0; j < out.ideals.size(); ++j) {
      if (ring.is_subset(t, out.ideals[j])) out.above[x].push_back(j);
    }
  }
  return out;
}

void require_dubrovin(const FiniteRing& ring) {
  if (!has_D_property(ring).verdict) {
    throw PreconditionError(ring.name() + " does not have the Dubrovin property");
  }
}

struct ElementVerdict {
  bool ok = true;
  Index failing_b = 0;
  nlohmann::json examples = nlohmann::json::array();
};

ElementVerdict d_adequate(const FiniteRing& ring, const TwoSidedLattice& lat, Index a) {
  ElementVerdict out;
  const Index n = ring.size();
  std::vector<std::pair<Index, Index>> factorizations;
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      if (ring.mul(r, s) == a) factorizations.emplace_back(r, s);
    }
  }
  std::vector<char> meets_b(lat.ideals.size());
  for (Index b = 0; b < n; ++b) {
    const IdealId tb = ring.two_sided_ideal(b);
    for (std::size_t j = 0; j < lat.ideals.size(); ++j) {
      meets_b[j] = ring.ideal_sum(lat.ideals[j], tb) == ring.whole();
    }
    std::optional<std::pair<Index, Index>> hit;
    for (auto [r, s] : factorizations) {
      if (ring.ideal_sum(ring.two_sided_ideal(r), tb) != ring.whole()) continue;
      bool divisors_ok = true;
      for (auto j : lat.above[s]) {
        if (meets_b[j]) {
          divisors_ok = false;
          break;
        }
      }
      if (divisors_ok) {
        hit = std::pair(r, s);
        break;
      }
    }
    if (!hit) {
      out.ok = false;
      out.failing_b = b;
      return out;
    }
    if (out.examples.size() < 8) {
      out.examples.push_back(
          {{"b", ring.to_json(b)}, {"r", ring.to_json(hit->first)}, {"s", ring.to_json(hit->second)}});
    }
  }
  return out;
}

}  // namespace

PropertyReport is_D_adequate_element(const FiniteRing& ring, Index a) {
  if (a >= ring.size()) throw DomainError("element index out of range");
  if (a == ring.zero()) throw PreconditionError("D-adequacy is defined for a != 0");
  require_dubrovin(ring);
  if (ring.two_sided_ideal(a) == ring.whole()) {
    throw PreconditionError("D-adequacy needs RaR != R, but " + ring.to_string(a) +
                            " generates the whole ring");
  }
  auto v = d_adequate(ring, lattice(ring), a);
  PropertyReport rep{ring.name(), "d-adequate-element", v.ok, {}, {}, {{"method", "exhaustive"}}};
  if (v.ok) {
    rep.witness = {{"a", ring.to_json(a)}, {"factorizations", std::move(v.examples)}};
  } else {
    rep.counterexample = {{"a", ring.to_json(a)}, {"b", ring.to_json(v.failing_b)},
                          {"indices", {a, v.failing_b}}};
  }
  return rep;
}

PropertyReport is_D_adequate_ring(const FiniteRing& ring) {
  require_dubrovin(ring);
  const auto lat = lattice(ring);
  PropertyReport rep{ring.name(), "d-adequate", true, {}, {}, {{"method", "exhaustive"}}};
  std::size_t checked = 0;
  for (Index a = 1; a < ring.size(); ++a) {
    if (ring.two_sided_ideal(a) == ring.whole()) continue;
    ++checked;
    auto v = d_adequate(ring, lat, a);
    if (!v.ok) {
      rep.verdict = false;
      rep.counterexample = {{"a", ring.to_json(a)}, {"b", ring.to_json(v.failing_b)},
                            {"indices", {a, v.failing_b}}};
      return rep;
    }
  }
  rep.bounds["elements_checked"] = checked;
  return rep;
}

}  // namespace ringlab
