#include "ringlab/range_props.hpp"

#include <array>
#include <limits>
#include <unordered_map>

#include "ringlab/errors.hpp"

namespace ringlab {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::SR1:
      return "sr1";
    case WitnessKind::SR2:
      return "sr2";
    case WitnessKind::ASR1Right:
      return "asr1-right";
    case WitnessKind::ASR1Left:
      return "asr1-left";
    case WitnessKind::ASR1TwoSided:
      return "asr1-2sided";
    case WitnessKind::Diadem:
      return "diadem";
  }
  return "unknown";
}

namespace {

using Index = FiniteRing::Index;
using IdealId = FiniteRing::IdealId;

constexpr std::size_t kShownWitnesses = 8;

/// Flat lookup of x*I + y*I and x*I + y*I + z*I == R for a per-element
/// family of ideals I(x) (principal right ideals or two-sided ideals).
class SumTables {
 public:
  SumTables(const FiniteRing& ring, const std::vector<IdealId>& per_element)
      : ring_(ring), n_(ring.size()), whole_(ring.whole()) {
    std::unordered_map<IdealId, std::uint32_t> gen_local;
    std::vector<IdealId> gens;
    gen_of_.resize(n_);
    for (Index x = 0; x < n_; ++x) {
      auto [it, fresh] = gen_local.try_emplace(per_element[x], gens.size());
      if (fresh) gens.push_back(per_element[x]);
      gen_of_[x] = it->second;
    }
    ng_ = gens.size();
    std::vector<IdealId> gen_sum(ng_ * ng_);
    for (std::size_t i = 0; i < ng_; ++i) {
      for (std::size_t j = i; j < ng_; ++j) {
        gen_sum[i * ng_ + j] = gen_sum[j * ng_ + i] = ring.ideal_sum(gens[i], gens[j]);
      }
    }
    std::unordered_map<IdealId, std::uint32_t> pair_local;
    std::vector<IdealId> pairs;
    std::vector<std::uint32_t> gen_pair(ng_ * ng_);
    for (std::size_t k = 0; k < gen_sum.size(); ++k) {
      auto [it, fresh] = pair_local.try_emplace(gen_sum[k], pairs.size());
      if (fresh) pairs.push_back(gen_sum[k]);
      gen_pair[k] = it->second;
    }
    pair_of_.resize(std::size_t{n_} * n_);
    pair_ideal_.resize(std::size_t{n_} * n_);
    pair_unit_.resize(std::size_t{n_} * n_);
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        const auto k = std::size_t{gen_of_[x]} * ng_ + gen_of_[y];
        const auto at = std::size_t{x} * n_ + y;
        pair_of_[at] = gen_pair[k];
        pair_ideal_[at] = gen_sum[k];
        pair_unit_[at] = gen_sum[k] == whole_;
      }
    }
    triple_unit_.resize(pairs.size() * ng_);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t g = 0; g < ng_; ++g) {
        triple_unit_[p * ng_ + g] = ring.ideal_sum(pairs[p], gens[g]) == whole_;
      }
    }
  }

  Index size() const { return n_; }
  bool pair_unit(Index x, Index y) const { return pair_unit_[std::size_t{x} * n_ + y]; }
  IdealId pair_ideal(Index x, Index y) const { return pair_ideal_[std::size_t{x} * n_ + y]; }
  bool triple_unit(Index x, Index y, Index z) const {
    return triple_unit_[std::size_t{pair_of_[std::size_t{x} * n_ + y]} * ng_ + gen_of_[z]];
  }

 private:
  const FiniteRing& ring_;
  Index n_;
  IdealId whole_;
  std::size_t ng_ = 0;
  std::vector<std::uint32_t> gen_of_, pair_of_;
  std::vector<IdealId> pair_ideal_;
  std::vector<char> pair_unit_, triple_unit_;
};

/// label[x] = smallest element of the coset x + I, memoized per ideal.
class CosetLabels {
 public:
  explicit CosetLabels(const FiniteRing& ring) : ring_(ring) {}

  const std::vector<Index>& of(IdealId ideal) {
    auto it = cache_.find(ideal);
    if (it != cache_.end()) return it->second;
    const Index n = ring_.size();
    std::vector<Index> label(n, n);
    const auto& members = ring_.member_list(ideal);
    for (Index x = 0; x < n; ++x) {
      if (label[x] != n) continue;
      for (Index m : members) label[ring_.add(x, m)] = x;
    }
    return cache_.emplace(ideal, std::move(label)).first->second;
  }

 private:
  const FiniteRing& ring_;
  std::unordered_map<IdealId, std::vector<Index>> cache_;
};

/// Generation-stamped mark array: clear() is O(1).
class Marks {
 public:
  explicit Marks(std::size_t n) : stamp_(n, 0) {}
  void clear() { ++gen_; }
  void set(std::size_t i) { stamp_[i] = gen_; }
  bool test(std::size_t i) const { return stamp_[i] == gen_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t gen_ = 1;
};

std::vector<IdealId> principal_right(const FiniteRing& ring) {
  std::vector<IdealId> out(ring.size());
  for (Index x = 0; x < ring.size(); ++x) out[x] = ring.right_ideal(x);
  return out;
}

std::vector<IdealId> principal_two_sided(const FiniteRing& ring) {
  std::vector<IdealId> out(ring.size());
  for (Index x = 0; x < ring.size(); ++x) out[x] = ring.two_sided_ideal(x);
  return out;
}

/// Ring whose right-sided questions answer the requested side of `ring`.
FiniteRingPtr oriented(const FiniteRing& ring, Side side) {
  if (side == Side::Right) return ring.shared_from_this();
  if (side == Side::Left) return ring.opposite();
  throw PreconditionError("expected Right or Left side");
}

nlohmann::json elements(const FiniteRing& ring, std::initializer_list<std::pair<const char*, Index>> xs) {
  nlohmann::json j = nlohmann::json::object();
  auto idx = nlohmann::json::array();
  for (const auto& [name, x] : xs) {
    j[name] = ring.to_json(x);
    idx.push_back(x);
  }
  j["indices"] = std::move(idx);
  return j;
}

using Triple = std::array<Index, 3>;
constexpr Index kNone = std::numeric_limits<Index>::max();

/// Per-anchor result of the right almost-stable-range-1 condition. The
/// condition is evaluated for every anchor including 0, since diadems need
/// it at arbitrary shifted anchors.
struct AnchorScan {
  std::vector<char> good;
  std::vector<Triple> first_failure;  // (a, b, c), smallest (b, c) per a
  std::size_t instances = 0;
};

AnchorScan scan_anchors(const FiniteRing& ring, const SumTables& t, std::optional<Index> only) {
  const Index n = ring.size();
  CosetLabels cosets(ring);
  Marks marks(n);
  AnchorScan out;
  out.good.assign(n, 1);
  out.first_failure.assign(n, Triple{kNone, kNone, kNone});
  for (Index c = 0; c < n; ++c) {
    const auto& label = cosets.of(ring.right_ideal(c));
    for (Index a = 0; a < n; ++a) {
      if (only && a != *only) continue;
      marks.clear();
      for (Index y = 0; y < n; ++y) {
        if (t.pair_unit(a, y)) marks.set(label[y]);
      }
      for (Index b = 0; b < n; ++b) {
        if (!t.triple_unit(a, b, c)) continue;
        ++out.instances;
        if (marks.test(label[b])) continue;
        auto& f = out.first_failure[a];
        if (out.good[a] || std::pair(b, c) < std::pair(f[1], f[2])) f = {a, b, c};
        out.good[a] = 0;
      }
    }
  }
  return out;
}

Index first_shift(const FiniteRing& ring, const SumTables& t, Index a, Index b, Index c) {
  for (Index l = 0; l < ring.size(); ++l) {
    if (t.pair_unit(a, ring.add(b, ring.mul(c, l)))) return l;
  }
  return kNone;
}

}  // namespace

// ------------------------------------------------------------ finite rings

PropertyReport is_stable_range_1(const FiniteRing& ring) {
  const Index n = ring.size();
  SumTables t(ring, principal_right(ring));
  CosetLabels cosets(ring);
  Marks unit_coset(n);
  PropertyReport rep{ring.name(), "sr1", true, {}, {}, {}};
  std::pair<Index, Index> worst{kNone, kNone};
  std::size_t pairs = 0;
  for (Index b = 0; b < n; ++b) {
    const auto& label = cosets.of(ring.right_ideal(b));
    unit_coset.clear();
    for (Index u : ring.units()) unit_coset.set(label[u]);
    for (Index a = 0; a < n; ++a) {
      if (!t.pair_unit(a, b)) continue;
      ++pairs;
      if (!unit_coset.test(label[a]) && std::pair(a, b) < worst) worst = {a, b};
    }
  }
  rep.bounds = {{"method", "exhaustive"}, {"unimodular_pairs", pairs}};
  if (worst.first != kNone) {
    rep.verdict = false;
    rep.counterexample = elements(ring, {{"a", worst.first}, {"b", worst.second}});
    return rep;
  }
  auto shown = nlohmann::json::array();
  for (Index a = 0; a < n && shown.size() < kShownWitnesses; ++a) {
    for (Index b = 1; b < n && shown.size() < kShownWitnesses; ++b) {
      if (!t.pair_unit(a, b) || ring.is_unit(a)) continue;
      for (Index l = 0; l < n; ++l) {
        if (ring.is_unit(ring.add(a, ring.mul(b, l)))) {
          auto w = elements(ring, {{"a", a}, {"b", b}, {"lambda", l}});
          shown.push_back(std::move(w));
          break;
        }
      }
    }
  }
  rep.witness = {{"shifts", std::move(shown)}};
  return rep;
}

PropertyReport is_stable_range_2(const FiniteRing& ring) {
  const Index n = ring.size();
  SumTables t(ring, principal_right(ring));
  CosetLabels cosets(ring);
  PropertyReport rep{ring.name(), "sr2", true, {}, {}, {}};
  Triple worst{kNone, kNone, kNone};
  std::size_t triples = 0;
  std::vector<char> good_pair(std::size_t{n} * n);
  for (Index c = 0; c < n; ++c) {
    const auto& label = cosets.of(ring.right_ideal(c));
    std::fill(good_pair.begin(), good_pair.end(), 0);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (t.pair_unit(x, y)) good_pair[std::size_t{label[x]} * n + label[y]] = 1;
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!t.triple_unit(a, b, c)) continue;
        ++triples;
        if (!good_pair[std::size_t{label[a]} * n + label[b]]) worst = std::min(worst, Triple{a, b, c});
      }
    }
  }
  rep.bounds = {{"method", "exhaustive"}, {"unimodular_triples", triples}};
  if (worst[0] != kNone) {
    rep.verdict = false;
    rep.counterexample = elements(ring, {{"a", worst[0]}, {"b", worst[1]}, {"c", worst[2]}});
  }
  return rep;
}

PropertyReport is_asr1_element(const FiniteRing& ring, Index a, Side side) {
  if (a >= ring.size()) throw DomainError("element index out of range");
  if (a == ring.zero()) throw ZeroElement("almost stable range 1 is defined for a != 0");
  const auto r = oriented(ring, side);
  SumTables t(*r, principal_right(*r));
  auto scan = scan_anchors(*r, t, a);
  PropertyReport rep{ring.name(), side == Side::Right ? "asr1-right-element" : "asr1-left-element",
                     scan.good[a] != 0, {}, {}, {}};
  rep.bounds = {{"method", "exhaustive"}, {"unimodular_triples", scan.instances}};
  if (!rep.verdict) {
    const auto& f = scan.first_failure[a];
    rep.counterexample = elements(ring, {{"a", f[0]}, {"b", f[1]}, {"c", f[2]}});
  } else {
    rep.witness = {{"a", ring.to_json(a)}};
  }
  return rep;
}

PropertyReport is_asr1_ring(const FiniteRing& ring, Side side) {
  const auto r = oriented(ring, side);
  SumTables t(*r, principal_right(*r));
  auto scan = scan_anchors(*r, t, std::nullopt);
  PropertyReport rep{ring.name(), side == Side::Right ? "asr1-right" : "asr1-left", true, {}, {}, {}};
  rep.bounds = {{"method", "exhaustive"}, {"unimodular_triples", scan.instances}};
  for (Index a = 1; a < ring.size(); ++a) {
    if (!scan.good[a]) {
      const auto& f = scan.first_failure[a];
      rep.verdict = false;
      rep.counterexample = elements(ring, {{"a", f[0]}, {"b", f[1]}, {"c", f[2]}});
      return rep;
    }
  }
  auto shown = nlohmann::json::array();
  for (Index a = 1; a < ring.size() && shown.size() < kShownWitnesses; ++a) {
    if (r->is_unit(a)) continue;
    for (Index b = 0; b < ring.size() && shown.size() < kShownWitnesses; ++b) {
      if (t.pair_unit(a, b)) continue;
      for (Index c = 1; c < ring.size(); ++c) {
        if (!t.triple_unit(a, b, c)) continue;
        shown.push_back(elements(ring, {{"a", a}, {"b", b}, {"c", c},
                                        {"lambda", first_shift(*r, t, a, b, c)}}));
        break;
      }
    }
  }
  rep.witness = {{"shifts", std::move(shown)}};
  return rep;
}

PropertyReport is_diadem(const FiniteRing& ring, Index a, Index b, Side side) {
  if (a >= ring.size() || b >= ring.size()) throw DomainError("element index out of range");
  const auto r = oriented(ring, side);
  SumTables t(*r, principal_right(*r));
  if (!t.pair_unit(a, b)) throw PreconditionError("pair does not generate the unit ideal");
  auto scan = scan_anchors(*r, t, std::nullopt);
  PropertyReport rep{ring.name(), side == Side::Right ? "right-diadem" : "left-diadem", false, {}, {},
                     {{"method", "exhaustive"}, {"quantifiers", "fixed lambda, then all (c, d)"}}};
  for (Index l = 0; l < ring.size(); ++l) {
    const Index anchor = r->add(a, r->mul(b, l));
    if (scan.good[anchor]) {
      rep.verdict = true;
      rep.witness = elements(ring, {{"a", a}, {"b", b}, {"lambda", l}, {"anchor", anchor}});
      return rep;
    }
  }
  const auto& f = scan.first_failure[a];
  rep.counterexample = elements(ring, {{"a", a}, {"b", b}, {"c_at_lambda_0", f[1]}, {"d_at_lambda_0", f[2]}});
  return rep;
}

PropertyReport is_dyadic_range_1(const FiniteRing& ring, Side side) {
  const auto r = oriented(ring, side);
  const Index n = ring.size();
  SumTables t(*r, principal_right(*r));
  auto scan = scan_anchors(*r, t, std::nullopt);
  CosetLabels cosets(*r);
  Marks good_coset(n);
  PropertyReport rep{ring.name(), side == Side::Right ? "dyadic-right" : "dyadic-left", true, {}, {}, {}};
  std::pair<Index, Index> worst{kNone, kNone};
  std::size_t pairs = 0;
  for (Index b = 0; b < n; ++b) {
    const auto& label = cosets.of(r->right_ideal(b));
    good_coset.clear();
    for (Index x = 0; x < n; ++x) {
      if (scan.good[x]) good_coset.set(label[x]);
    }
    for (Index a = 0; a < n; ++a) {
      if (!t.pair_unit(a, b)) continue;
      ++pairs;
      if (!good_coset.test(label[a])) worst = std::min(worst, std::pair(a, b));
    }
  }
  rep.bounds = {{"method", "exhaustive"}, {"unimodular_pairs", pairs}};
  if (worst.first != kNone) {
    rep.verdict = false;
    rep.counterexample = elements(ring, {{"a", worst.first}, {"b", worst.second}});
  }
  return rep;
}

PropertyReport is_L_ring(const FiniteRing& ring) {
  PropertyReport rep{ring.name(), "lring", true, {}, {}, {{"method", "exhaustive"}}};
  std::size_t full = 0;
  for (Index a = 0; a < ring.size(); ++a) {
    if (ring.two_sided_ideal(a) != ring.whole()) continue;
    ++full;
    if (!ring.is_unit(a)) {
      rep.verdict = false;
      rep.counterexample = elements(ring, {{"a", a}});
      rep.counterexample["reason"] = "RaR = R but a is not a unit";
      return rep;
    }
  }
  rep.bounds["full_two_sided_ideals"] = full;
  return rep;
}

PropertyReport is_right_bezout(const FiniteRing& ring) {
  PropertyReport rep{ring.name(), "right-bezout", true, {}, {}, {{"method", "exhaustive"}}};
  SumTables t(ring, principal_right(ring));
  for (Index x = 0; x < ring.size(); ++x) {
    for (Index y = x; y < ring.size(); ++y) {
      if (!ring.right_generator(t.pair_ideal(x, y))) {
        rep.verdict = false;
        rep.counterexample = elements(ring, {{"x", x}, {"y", y}});
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport is_asr1_two_sided(const FiniteRing& ring) {
  const Index n = ring.size();
  SumTables two(ring, principal_two_sided(ring));
  SumTables right(ring, principal_right(ring));
  const bool bezout = is_right_bezout(ring).verdict;
  // Principal-generator form per (y, c): yR + cR = dR with RdR = R.
  std::vector<char> generator_form(std::size_t{n} * n, 0);
  for (Index y = 0; y < n; ++y) {
    for (Index c = 0; c < n; ++c) {
      auto d = ring.right_generator(right.pair_ideal(y, c));
      generator_form[std::size_t{y} * n + c] = d && ring.two_sided_ideal(*d) == ring.whole();
    }
  }
  CosetLabels cosets(ring);
  Marks closes(n), closes_by_generator(n);
  Triple worst{kNone, kNone, kNone}, worst_generator{kNone, kNone, kNone};
  std::size_t triples = 0, mismatches = 0;
  for (Index a = 0; a < n; ++a) {
    // lambda*a + b runs over the coset b + Ra.
    const auto& label = cosets.of(ring.left_ideal(a));
    for (Index c = 1; c < n; ++c) {
      closes.clear();
      closes_by_generator.clear();
      for (Index y = 0; y < n; ++y) {
        if (two.pair_unit(y, c)) closes.set(label[y]);
        if (generator_form[std::size_t{y} * n + c]) closes_by_generator.set(label[y]);
      }
      for (Index b = 0; b < n; ++b) {
        if (!two.triple_unit(a, b, c)) continue;
        ++triples;
        const bool v1 = closes.test(label[b]);
        const bool v2 = closes_by_generator.test(label[b]);
        if (!v1) worst = std::min(worst, Triple{a, b, c});
        if (!v2) worst_generator = std::min(worst_generator, Triple{a, b, c});
        if (v1 != v2) ++mismatches;
      }
    }
  }
  PropertyReport rep{ring.name(), "asr1-2sided", worst[0] == kNone, {}, {}, {}};
  rep.bounds = {{"method", "exhaustive"}, {"instances", triples}};
  rep.witness = {{"generator_form",
                  {{"applicable", bezout},
                   {"verdict", worst_generator[0] == kNone},
                   {"mismatched_instances", mismatches},
                   {"agrees", !bezout || mismatches == 0}}}};
  if (!rep.verdict) {
    rep.counterexample = elements(ring, {{"a", worst[0]}, {"b", worst[1]}, {"c", worst[2]}});
  }
  return rep;
}

// ------------------------------------------------------ closure re-checks

bool unimodular_by_closure(const FiniteRingPtr& ring, Side side, const std::vector<Index>& elements) {
  return ideal_closure(ring, side, elements).contains_one();
}

bool check_asr1_shift(const FiniteRingPtr& ring, Side side, Index a, Index b, Index c, Index lambda) {
  if (side == Side::Right) {
    return unimodular_by_closure(ring, side, {a, ring->add(b, ring->mul(c, lambda))});
  }
  if (side == Side::Left) {
    return unimodular_by_closure(ring, side, {a, ring->add(b, ring->mul(lambda, c))});
  }
  throw PreconditionError("expected Right or Left side");
}

std::optional<Index> find_asr1_shift(const FiniteRingPtr& ring, Side side, Index a, Index b, Index c) {
  const auto r = oriented(*ring, side);
  const auto ida = r->right_ideal(a);
  for (Index l = 0; l < r->size(); ++l) {
    const Index shifted = r->add(b, r->mul(c, l));
    if (r->ideal_sum(ida, r->right_ideal(shifted)) == r->whole()) return l;
  }
  return std::nullopt;
}

}  // namespace ringlab
