#include "ringlab/harness.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "ringlab/clean_adequate.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/matred.hpp"

namespace ringlab {

using json = nlohmann::json;
using Index = FiniteRing::Index;

// ----------------------------------------------------------------- names

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::SrOneGivesAsr:
      return "sr1-asr1";
    case Theorem::AsrGivesDyadic:
      return "asr1-dyadic";
    case Theorem::RadicalQuotient:
      return "radical-quotient";
    case Theorem::DomainAsr:
      return "domain-asr1";
    case Theorem::QuotientIdempotent:
      return "quotient-idempotent";
    case Theorem::TwoSidedGenerator:
      return "two-sided-generator";
    case Theorem::LRingTwoSided:
      return "lring-two-sided";
    case Theorem::TwoSidedRange:
      return "two-sided-range";
    case Theorem::TriangularReduction:
      return "triangular-reduction";
  }
  return "?";
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified:
      return "Verified";
    case VerdictStatus::CounterexampleFound:
      return "CounterexampleFound";
    case VerdictStatus::VacuouslyTrue:
      return "VacuouslyTrue";
    case VerdictStatus::Skipped:
      return "Skipped";
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all{
      Theorem::SrOneGivesAsr,      Theorem::AsrGivesDyadic, Theorem::RadicalQuotient,
      Theorem::DomainAsr,          Theorem::QuotientIdempotent, Theorem::TwoSidedGenerator,
      Theorem::LRingTwoSided,      Theorem::TwoSidedRange,  Theorem::TriangularReduction};
  return all;
}

Theorem parse_theorem(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Theorem t : all_theorems()) {
    std::string n = to_string(t);
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == lower) return t;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

json TheoremVerdict::to_json() const {
  return {{"theorem", ringlab::to_string(theorem)},
          {"subject", subject},
          {"status", ringlab::to_string(status)},
          {"evidence", evidence}};
}

// ---------------------------------------------------------------- bounds

json SuiteBounds::to_json() const {
  return {{"int_bound", domain.int_bound},
          {"poly_degree", domain.poly_degree},
          {"max_pairs", domain.max_pairs},
          {"quotient_bound", quotient_bound},
          {"poly_triple_degree", poly_triple_degree},
          {"idempotent_samples", idempotent_samples},
          {"idempotent_max_a", idempotent_max_a},
          {"reduction_max", reduction_max},
          {"seed", seed}};
}

SuiteBounds SuiteBounds::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("bounds must be an object");
  SuiteBounds b;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ConfigError("bound '" + key + "' must be an integer");
    const long long v = value.get<long long>();
    if (v < 0) throw ConfigError("bound '" + key + "' must be non-negative");
    if (key == "int_bound") {
      b.domain.int_bound = v;
    } else if (key == "poly_degree") {
      b.domain.poly_degree = static_cast<int>(v);
    } else if (key == "max_pairs") {
      b.domain.max_pairs = static_cast<std::size_t>(v);
    } else if (key == "quotient_bound") {
      b.quotient_bound = v;
    } else if (key == "poly_triple_degree") {
      b.poly_triple_degree = static_cast<int>(v);
    } else if (key == "idempotent_samples") {
      b.idempotent_samples = static_cast<std::size_t>(v);
    } else if (key == "idempotent_max_a") {
      if (v < 2) throw ConfigError("idempotent_max_a must be at least 2");
      b.idempotent_max_a = v;
    } else if (key == "reduction_max") {
      b.reduction_max = v;
    } else if (key == "seed") {
      b.seed = static_cast<std::uint64_t>(v);
    } else {
      throw ConfigError("unknown bound '" + key + "'");
    }
  }
  return b;
}

// --------------------------------------------------------------- catalog

namespace {

std::vector<std::string> tags_for(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::Integer:
    case RingKind::PolyOverPrimeField:
      return {"domain", "commutative"};
    case RingKind::Residue:
      return {"residue", "commutative"};
    case RingKind::PolyQuotient:
      return {"poly-quotient", "commutative"};
    case RingKind::MatrixRing:
      return {"matrix", "noncommutative"};
    case RingKind::UpperTriangular:
      return {"triangular", "noncommutative"};
    case RingKind::Product:
      return {"product"};
  }
  return {};
}

CatalogEntry entry(RingSpec spec) {
  auto tags = tags_for(spec);
  return {std::move(spec), std::move(tags)};
}

}  // namespace

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  for (std::uint64_t n = 2; n <= 30; ++n) out.push_back(entry(RingSpec::residue(n)));
  for (std::uint64_t p : {2u, 3u}) {
    for (int deg = 1; deg <= 3; ++deg) {
      std::uint64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t low = 0; low < count; ++low) {
        auto f = Poly::from_index(p, low) + Poly::monomial(p, static_cast<std::size_t>(deg));
        out.push_back(entry(RingSpec::poly_quotient(f)));
      }
    }
  }
  for (std::uint64_t p : {2u, 3u}) out.push_back(entry(RingSpec::matrix(2, RingSpec::residue(p))));
  for (std::uint64_t p : {2u, 3u}) {
    out.push_back(entry(RingSpec::upper_triangular(2, RingSpec::residue(p))));
  }
  out.push_back(entry(RingSpec::product({RingSpec::residue(4), RingSpec::residue(9)})));
  out.push_back(entry(
      RingSpec::product({RingSpec::residue(2), RingSpec::matrix(2, RingSpec::residue(2))})));
  out.push_back(entry(RingSpec::integers()));
  out.push_back(entry(RingSpec::poly(2)));
  out.push_back(entry(RingSpec::poly(3)));
  return out;
}

std::vector<CatalogEntry> load_catalog(const json& doc, SuiteBounds* bounds) {
  const json* rings = &doc;
  if (doc.is_object()) {
    if (!doc.contains("rings")) throw ConfigError("catalog object needs a \"rings\" array");
    rings = &doc["rings"];
    for (const auto& [key, value] : doc.items()) {
      if (key != "rings" && key != "bounds") throw ConfigError("unknown catalog key \"" + key + "\"");
    }
    if (doc.contains("bounds")) {
      auto b = SuiteBounds::from_json(doc["bounds"]);
      if (bounds) *bounds = b;
    }
  }
  if (!rings->is_array()) throw ConfigError("catalog rings must be an array");
  std::vector<CatalogEntry> out;
  for (const auto& item : *rings) {
    try {
      if (item.is_string()) {
        out.push_back(entry(parse_ring_spec(item.get<std::string>())));
      } else if (item.is_object() && item.contains("spec") && item["spec"].is_string()) {
        CatalogEntry e = entry(parse_ring_spec(item["spec"].get<std::string>()));
        if (item.contains("tags")) {
          if (!item["tags"].is_array()) throw ConfigError("tags must be an array of strings");
          e.tags.clear();
          for (const auto& t : item["tags"]) {
            if (!t.is_string()) throw ConfigError("tags must be an array of strings");
            e.tags.push_back(t.get<std::string>());
          }
        }
        out.push_back(std::move(e));
      } else {
        throw ConfigError("catalog entry must be a spec string or {\"spec\": ...}: " + item.dump());
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const RingError& e) {
      throw ConfigError(std::string("invalid catalog entry ") + item.dump() + ": " + e.what());
    }
  }
  return out;
}

// -------------------------------------------------------------- analysis

RingAnalysis::RingAnalysis(FiniteRingPtr ring) : ring_(std::move(ring)) {}

template <class F>
const PropertyReport& RingAnalysis::memo(const std::string& key, F&& compute) {
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute()).first;
  return it->second;
}

const PropertyReport& RingAnalysis::sr1() {
  return memo("sr1", [&] { return is_stable_range_1(*ring_); });
}
const PropertyReport& RingAnalysis::sr2() {
  return memo("sr2", [&] { return is_stable_range_2(*ring_); });
}
const PropertyReport& RingAnalysis::asr1(Side side) {
  return memo(std::string("asr1-") + to_string(side), [&] { return is_asr1_ring(*ring_, side); });
}
const PropertyReport& RingAnalysis::dyadic(Side side) {
  return memo(std::string("dyadic-") + to_string(side),
              [&] { return is_dyadic_range_1(*ring_, side); });
}
const PropertyReport& RingAnalysis::lring() {
  return memo("lring", [&] { return is_L_ring(*ring_); });
}
const PropertyReport& RingAnalysis::asr1_two_sided() {
  return memo("asr1-2sided", [&] { return is_asr1_two_sided(*ring_); });
}
bool RingAnalysis::bezout() {
  if (!bezout_) {
    bezout_ = is_right_bezout(*ring_).verdict && is_right_bezout(*ring_->opposite()).verdict;
  }
  return *bezout_;
}

RingAnalysis& SuiteContext::analysis(const RingSpec& spec) {
  const auto key = spec.to_string();
  auto it = rings_.find(key);
  if (it == rings_.end()) {
    it = rings_.emplace(key, std::make_unique<RingAnalysis>(FiniteRing::make(spec))).first;
  }
  return *it->second;
}

// ----------------------------------------------------------------- suites

namespace {

json summary(const PropertyReport& r) {
  json j{{"property", r.property}, {"verdict", r.verdict}, {"bounds", r.bounds}};
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  return j;
}

int severity(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::CounterexampleFound:
      return 3;
    case VerdictStatus::Skipped:
      return 2;
    case VerdictStatus::Verified:
      return 1;
    case VerdictStatus::VacuouslyTrue:
      return 0;
  }
  return 0;
}

VerdictStatus combine(VerdictStatus a, VerdictStatus b) { return severity(a) >= severity(b) ? a : b; }

/// hypothesis => conclusion, with an optional structural hypothesis (the
/// Bezout condition) that is not part of the checked implication: when it
/// fails and the conclusion fails too, the instance is outside the
/// theorem's scope and is skipped rather than counted against it.
VerdictStatus implication(bool hypothesis, bool conclusion, bool scope = true) {
  if (!hypothesis) return VerdictStatus::VacuouslyTrue;
  if (conclusion) return VerdictStatus::Verified;
  return scope ? VerdictStatus::CounterexampleFound : VerdictStatus::Skipped;
}

std::string replay(const std::string& ring, const std::string& property) {
  return "ringlab check '" + ring + "' --property " + property;
}

/// Re-checks reported shifts through ideal closures (not the search tables).
std::size_t recheck_asr1(const FiniteRingPtr& ring, Side side, const PropertyReport& rep) {
  std::size_t n = 0;
  if (!rep.witness.contains("shifts")) return 0;
  for (const auto& w : rep.witness["shifts"]) {
    const auto& ix = w["indices"];
    if (!check_asr1_shift(ring, side, ix[0].get<Index>(), ix[1].get<Index>(), ix[2].get<Index>(),
                          ix[3].get<Index>())) {
      throw CertificateError("reported shift fails closure re-check in " + ring->name());
    }
    ++n;
  }
  return n;
}

void recheck_asr1_counterexample(const FiniteRingPtr& ring, Side side, const PropertyReport& rep) {
  if (rep.verdict) return;
  const auto& ix = rep.counterexample["indices"];
  const Index a = ix[0].get<Index>(), b = ix[1].get<Index>(), c = ix[2].get<Index>();
  if (!unimodular_by_closure(ring, side, {a, b, c}) || find_asr1_shift(ring, side, a, b, c)) {
    throw CertificateError("reported counterexample does not re-check in " + ring->name());
  }
}

std::size_t recheck_sr1(const FiniteRing& ring, const PropertyReport& rep) {
  std::size_t n = 0;
  if (!rep.witness.contains("shifts")) return 0;
  for (const auto& w : rep.witness["shifts"]) {
    const auto& ix = w["indices"];
    const Index x = ring.add(ix[0].get<Index>(), ring.mul(ix[1].get<Index>(), ix[2].get<Index>()));
    if (!ring.is_unit(x)) throw CertificateError("reported stable range 1 shift is not a unit");
    ++n;
  }
  return n;
}

std::uint64_t squarefree_part(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    r *= d;
    while (n % d == 0) n /= d;
  }
  return n > 1 ? r * n : r;
}

/// R/J(R) as a spec, when the kind allows it: Z/n -> Z/rad(n),
/// F_p[x]/(f) -> F_p[x]/(rad f), M_k(S) -> M_k(S/J(S)),
/// UT_k(S) -> (S/J(S))^k, products componentwise.
RingSpec radical_quotient(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::Residue:
      return RingSpec::residue(squarefree_part(spec.param()));
    case RingKind::PolyQuotient: {
      PolyDomain dom(spec.param());
      Poly r = dom.one();
      for (const auto& [q, e] : dom.factor(spec.modulus())) r = r * q;
      return RingSpec::poly_quotient(r);
    }
    case RingKind::MatrixRing:
      return RingSpec::matrix(spec.param(), radical_quotient(spec.children()[0]));
    case RingKind::UpperTriangular: {
      std::vector<RingSpec> parts(spec.param(), radical_quotient(spec.children()[0]));
      return RingSpec::product(std::move(parts));
    }
    case RingKind::Product: {
      std::vector<RingSpec> parts;
      for (const auto& c : spec.children()) parts.push_back(radical_quotient(c));
      return RingSpec::product(std::move(parts));
    }
    default:
      throw UnsupportedRing("no radical quotient for " + spec.to_string());
  }
}

TheoremVerdict check_sr1_asr1(RingAnalysis& an) {
  const auto& ring = an.ring();
  const auto& sr1 = an.sr1();
  const auto& asr1 = an.asr1(Side::Right);
  const bool bez = is_right_bezout(*ring).verdict;
  TheoremVerdict v{Theorem::SrOneGivesAsr, ring->name(), implication(sr1.verdict, asr1.verdict, bez), {}};
  v.evidence = {{"sr1", summary(sr1)}, {"asr1_right", summary(asr1)}, {"right_bezout", bez}};
  v.evidence["rechecked_shifts"] = recheck_sr1(*ring, sr1) + recheck_asr1(ring, Side::Right, asr1);
  recheck_asr1_counterexample(ring, Side::Right, asr1);
  if (v.status == VerdictStatus::CounterexampleFound) v.evidence["replay"] = replay(ring->name(), "asr1-right");
  return v;
}

TheoremVerdict check_asr1_dyadic(RingAnalysis& an) {
  const auto& ring = an.ring();
  TheoremVerdict v{Theorem::AsrGivesDyadic, ring->name(), VerdictStatus::VacuouslyTrue, json::object()};
  for (Side side : {Side::Right, Side::Left}) {
    const auto& asr1 = an.asr1(side);
    const auto& dyadic = an.dyadic(side);
    const auto s = implication(asr1.verdict, dyadic.verdict);
    v.status = combine(v.status, s);
    v.evidence[to_string(side)] = {{"asr1", summary(asr1)}, {"dyadic", summary(dyadic)},
                                   {"status", to_string(s)}};
    if (s == VerdictStatus::CounterexampleFound) {
      v.evidence["replay"] = replay(ring->name(), "dyadic");
    }
  }
  return v;
}

TheoremVerdict check_radical_quotient(RingAnalysis& an, SuiteContext& ctx) {
  const auto& ring = an.ring();
  TheoremVerdict v{Theorem::RadicalQuotient, ring->name(), VerdictStatus::Skipped, json::object()};
  RingSpec quotient_spec;
  try {
    quotient_spec = radical_quotient(ring->spec());
  } catch (const UnsupportedRing& e) {
    v.evidence["reason"] = e.what();
    return v;
  }
  auto& quotient = ctx.analysis(quotient_spec);
  const std::size_t radical = ring->jacobson_radical().size();
  if (radical * quotient.ring()->size() != ring->size()) {
    throw CertificateError("radical quotient of " + ring->name() + " has the wrong size");
  }
  const auto& lhs = an.asr1(Side::Right);
  const auto& rhs = quotient.asr1(Side::Right);
  v.status = lhs.verdict == rhs.verdict ? VerdictStatus::Verified : VerdictStatus::CounterexampleFound;
  v.evidence = {{"quotient", quotient_spec.to_string()},
                {"radical_size", radical},
                {"asr1_right", summary(lhs)},
                {"quotient_asr1_right", summary(rhs)}};
  if (v.status == VerdictStatus::CounterexampleFound) v.evidence["replay"] = replay(ring->name(), "asr1-right");
  return v;
}

TheoremVerdict check_two_sided_generator(RingAnalysis& an) {
  const auto& ring = an.ring();
  const auto& rep = an.asr1_two_sided();
  const bool bez = an.bezout();
  const auto& form = rep.witness["generator_form"];
  TheoremVerdict v{Theorem::TwoSidedGenerator, ring->name(), VerdictStatus::Skipped, {}};
  v.evidence = {{"asr1_2sided", summary(rep)}, {"generator_form", form}, {"bezout", bez}};
  if (!bez) {
    v.evidence["reason"] = "ring is not Bezout";
    return v;
  }
  const bool agree = form["agrees"].get<bool>() && form["verdict"].get<bool>() == rep.verdict;
  v.status = agree ? VerdictStatus::Verified : VerdictStatus::CounterexampleFound;
  if (!agree) v.evidence["replay"] = replay(ring->name(), "asr1-2sided");
  return v;
}

TheoremVerdict check_lring_two_sided(RingAnalysis& an) {
  const auto& ring = an.ring();
  const auto& l = an.lring();
  const auto& two = an.asr1_two_sided();
  const auto& right = an.asr1(Side::Right);
  TheoremVerdict v{Theorem::LRingTwoSided, ring->name(), implication(l.verdict && two.verdict, right.verdict), {}};
  v.evidence = {{"lring", summary(l)}, {"asr1_2sided", summary(two)}, {"asr1_right", summary(right)}};
  v.evidence["rechecked_shifts"] = recheck_asr1(ring, Side::Right, right);
  if (v.status == VerdictStatus::CounterexampleFound) v.evidence["replay"] = replay(ring->name(), "asr1-right");
  return v;
}

TheoremVerdict check_two_sided_range(RingAnalysis& an) {
  const auto& ring = an.ring();
  const bool bez = an.bezout();
  const auto& l = an.lring();
  const auto& two = an.asr1_two_sided();
  const auto& sr1 = an.sr1();
  const auto& sr2 = an.sr2();
  const auto first = implication(l.verdict && two.verdict, sr2.verdict, bez);
  const auto second = implication(sr1.verdict, two.verdict, bez);
  TheoremVerdict v{Theorem::TwoSidedRange, ring->name(), combine(first, second), {}};
  v.evidence = {{"bezout", bez},
                {"lring", summary(l)},
                {"asr1_2sided", summary(two)},
                {"sr1", summary(sr1)},
                {"sr2", summary(sr2)},
                {"lring_asr1_implies_sr2", to_string(first)},
                {"sr1_implies_asr1_2sided", to_string(second)}};
  if (v.status == VerdictStatus::CounterexampleFound) v.evidence["replay"] = replay(ring->name(), "asr1-2sided");
  return v;
}

// ---- domain suites

template <EuclideanDomain D>
std::vector<typename D::value_type> grid(const D& dom, const SuiteBounds& b);

template <>
std::vector<Integer> grid(const IntegerDomain& dom, const SuiteBounds& b) {
  return dom.sample(b.domain.int_bound);
}
template <>
std::vector<Poly> grid(const PolyDomain& dom, const SuiteBounds& b) {
  return dom.sample(b.poly_triple_degree);
}

/// All grid triples, or a fixed-seed sample of max_pairs of them.
template <class V, class F>
void for_triples(const std::vector<V>& g, const SuiteBounds& b, F&& f) {
  const std::size_t n = g.size();
  if (n * n * n <= b.domain.max_pairs) {
    for (const auto& x : g)
      for (const auto& y : g)
        for (const auto& z : g) f(x, y, z);
    return;
  }
  std::mt19937_64 rng(b.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < b.domain.max_pairs; ++k) f(g[pick(rng)], g[pick(rng)], g[pick(rng)]);
}

/// Proper quotients whose stable range 1 is checked: Z/a for 2 <= a <= bound,
/// F_p[x]/(f) for monic f with 1 <= deg f <= 3.
std::vector<RingSpec> proper_quotients(const IntegerDomain&, const SuiteBounds& b) {
  std::vector<RingSpec> out;
  for (long long a = 2; a <= b.quotient_bound; ++a) out.push_back(RingSpec::residue(a));
  return out;
}
std::vector<RingSpec> proper_quotients(const PolyDomain& dom, const SuiteBounds&) {
  std::vector<RingSpec> out;
  const auto p = dom.modulus();
  for (int deg = 1; deg <= 3; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    if (count > 4096) break;
    for (std::uint64_t low = 0; low < count; ++low) {
      out.push_back(RingSpec::poly_quotient(Poly::from_index(p, low) +
                                            Poly::monomial(p, static_cast<std::size_t>(deg))));
    }
  }
  return out;
}

template <EuclideanDomain D>
TheoremVerdict check_domain_asr1(const D& dom, const SuiteBounds& b) {
  TheoremVerdict v{Theorem::DomainAsr, dom.name(), VerdictStatus::Verified, {}};
  const auto sr1 = is_stable_range_1(dom);
  std::size_t triples = 0;
  json failure;
  const auto g = grid(dom, b);
  for_triples(g, b, [&](const auto& a, const auto& x, const auto& y) {
    if (!failure.is_null() || dom.is_zero(a)) return;
    if (!dom.is_unit(gcd(dom, a, gcd(dom, x, y)))) return;
    auto w = asr1_witness(dom, a, x, y);
    if (!verify(dom, w)) failure = to_json(dom, w);
    ++triples;
  });
  std::size_t quotients = 0;
  json quotient_failure;
  for (const auto& spec : proper_quotients(dom, b)) {
    auto r = FiniteRing::make(spec);
    auto rep = is_stable_range_1(*r);
    ++quotients;
    if (!rep.verdict && quotient_failure.is_null()) quotient_failure = summary(rep);
  }
  v.evidence = {{"sr1", summary(sr1)},
                {"triples_checked", triples},
                {"quotients_checked", quotients},
                {"bounds", b.to_json()}};
  if (sr1.verdict || !failure.is_null() || !quotient_failure.is_null()) {
    v.status = VerdictStatus::CounterexampleFound;
    if (!failure.is_null()) v.evidence["witness_failure"] = failure;
    if (!quotient_failure.is_null()) v.evidence["quotient_failure"] = quotient_failure;
  }
  return v;
}

Integer random_element(const IntegerDomain&, std::mt19937_64& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return Integer(static_cast<long>(d(rng)));
}

Poly random_poly(const PolyDomain& dom, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<Poly::Coeff> c(0, dom.modulus() - 1);
  std::vector<Poly::Coeff> coeffs(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : coeffs) x = c(rng);
  return Poly(dom.modulus(), coeffs);
}

template <EuclideanDomain D>
TheoremVerdict t5_core(const D& dom, const SuiteBounds& b, auto&& draw) {
  TheoremVerdict v{Theorem::QuotientIdempotent, dom.name(), VerdictStatus::Verified, {}};
  std::mt19937_64 rng(b.seed);
  std::size_t done = 0, attempts = 0;
  std::set<std::string> moduli;
  json failure;
  std::size_t fallback = 0;
  while (done < b.idempotent_samples && attempts < 50 * b.idempotent_samples + 100) {
    ++attempts;
    auto [a, x, y] = draw(rng);
    if (dom.is_zero(a) || dom.is_unit(a)) continue;
    if (!dom.is_unit(gcd(dom, a, gcd(dom, x, y)))) continue;
    ++done;
    try {
      auto w = quotient_idempotent(dom, a, x, y);
      if (w.split != "b") ++fallback;
      if (!verify(dom, w)) {
        failure = {{"a", dom.to_json(a)}, {"b", dom.to_json(x)}, {"c", dom.to_json(y)},
                   {"reason", "idempotent identities fail"}};
        break;
      }
      moduli.insert(dom.to_string(dom.normalize(a)));
    } catch (const NoDecomposition&) {
      failure = {{"a", dom.to_json(a)}, {"b", dom.to_json(x)}, {"c", dom.to_json(y)},
                 {"reason", "no decomposition found"}};
      break;
    }
  }
  // The conclusion itself: each quotient R/aR that occurred is clean.
  std::size_t clean_checked = 0;
  json not_clean;
  for (const auto& text : moduli) {
    const auto a = dom.parse(text);
    auto ring = FiniteRing::make(quotient_ring(dom, a));
    auto rep = is_clean(*ring);
    ++clean_checked;
    if (!rep.verdict && not_clean.is_null()) not_clean = summary(rep);
  }
  v.evidence = {{"triples_checked", done},
                {"fallback_splits", fallback},
                {"quotients_checked_clean", clean_checked},
                {"bounds", b.to_json()}};
  if (done < b.idempotent_samples) v.evidence["note"] = "fewer admissible triples than requested";
  if (!failure.is_null() || !not_clean.is_null()) {
    v.status = VerdictStatus::CounterexampleFound;
    if (!failure.is_null()) v.evidence["failure"] = failure;
    if (!not_clean.is_null()) v.evidence["not_clean"] = not_clean;
  }
  return v;
}

TheoremVerdict check_quotient_idempotent(const IntegerDomain& dom, const SuiteBounds& b) {
  return t5_core(dom, b, [&](std::mt19937_64& rng) {
    return std::tuple{random_element(dom, rng, 2, b.idempotent_max_a),
                      random_element(dom, rng, -b.idempotent_max_a, b.idempotent_max_a),
                      random_element(dom, rng, -b.idempotent_max_a, b.idempotent_max_a)};
  });
}

TheoremVerdict check_quotient_idempotent(const PolyDomain& dom, const SuiteBounds& b) {
  const int deg = std::min(b.domain.poly_degree, 4);
  return t5_core(dom, b, [&](std::mt19937_64& rng) {
    return std::tuple{random_poly(dom, rng, deg), random_poly(dom, rng, deg), random_poly(dom, rng, deg)};
  });
}

std::vector<Integer> t12_grid(const IntegerDomain& dom, const SuiteBounds& b) {
  std::vector<Integer> out;
  for (long long v = 1; v <= b.reduction_max; ++v) out.push_back(dom.from_int(v));
  return out;
}
std::vector<Poly> t12_grid(const PolyDomain& dom, const SuiteBounds& b) {
  auto all = dom.sample(b.poly_triple_degree);
  all.erase(all.begin());  // drop 0
  return all;
}

template <EuclideanDomain D>
TheoremVerdict check_triangular_reduction(const D& dom, const SuiteBounds& b) {
  TheoremVerdict v{Theorem::TriangularReduction, dom.name(), VerdictStatus::Verified, {}};
  const auto g = t12_grid(dom, b);
  std::size_t done = 0;
  json failure;
  for (const auto& a : g) {
    for (const auto& x : g) {
      for (const auto& y : g) {
        if (!failure.is_null()) break;
        if (!dom.is_unit(gcd(dom, a, gcd(dom, x, y)))) continue;
        ++done;
        auto r = reduce_triangular(dom, a, x, y);
        Matrix<typename D::value_type> m(2, 2, dom.zero());
        m(0, 0) = a;
        m(1, 0) = x;
        m(1, 1) = y;
        auto snf = smith_normal_form(dom, m);
        const bool ok = verify(dom, r) && verify(dom, snf) && snf.diag[0] == dom.one() &&
                        snf.diag[1] == dom.normalize(dom.mul(a, y));
        if (!ok) {
          failure = {{"a", dom.to_json(a)}, {"b", dom.to_json(x)}, {"c", dom.to_json(y)},
                     {"snf", to_json(dom, snf)}};
        }
      }
    }
  }
  v.evidence = {{"triples_checked", done}, {"bounds", b.to_json()}};
  if (!failure.is_null()) {
    v.status = VerdictStatus::CounterexampleFound;
    v.evidence["failure"] = failure;
  }
  return v;
}

template <class F>
std::optional<TheoremVerdict> on_domain(const RingSpec& spec, F&& f) {
  if (spec.kind() == RingKind::Integer) return f(IntegerDomain{});
  if (spec.kind() == RingKind::PolyOverPrimeField) return f(PolyDomain(spec.param()));
  return std::nullopt;
}

}  // namespace

std::vector<TheoremVerdict> run_suite(Theorem theorem, const std::vector<CatalogEntry>& catalog,
                                      SuiteContext& ctx) {
  std::vector<TheoremVerdict> out;
  const auto& b = ctx.bounds();
  for (const auto& e : catalog) {
    const bool finite = e.spec.is_finite();
    std::optional<TheoremVerdict> v;
    switch (theorem) {
      case Theorem::SrOneGivesAsr:
        if (finite) v = check_sr1_asr1(ctx.analysis(e.spec));
        break;
      case Theorem::AsrGivesDyadic:
        if (finite) v = check_asr1_dyadic(ctx.analysis(e.spec));
        break;
      case Theorem::RadicalQuotient:
        if (finite) v = check_radical_quotient(ctx.analysis(e.spec), ctx);
        break;
      case Theorem::TwoSidedGenerator:
        if (finite) v = check_two_sided_generator(ctx.analysis(e.spec));
        break;
      case Theorem::LRingTwoSided:
        if (finite) v = check_lring_two_sided(ctx.analysis(e.spec));
        break;
      case Theorem::TwoSidedRange:
        if (finite) v = check_two_sided_range(ctx.analysis(e.spec));
        break;
      case Theorem::DomainAsr:
        v = on_domain(e.spec, [&](const auto& dom) { return check_domain_asr1(dom, b); });
        break;
      case Theorem::QuotientIdempotent:
        v = on_domain(e.spec, [&](const auto& dom) { return check_quotient_idempotent(dom, b); });
        break;
      case Theorem::TriangularReduction:
        v = on_domain(e.spec, [&](const auto& dom) { return check_triangular_reduction(dom, b); });
        break;
    }
    if (v) out.push_back(std::move(*v));
  }
  return out;
}

std::vector<TheoremVerdict> run_suite(Theorem theorem, const std::vector<CatalogEntry>& catalog,
                                      const SuiteBounds& bounds) {
  SuiteContext ctx(bounds);
  return run_suite(theorem, catalog, ctx);
}

bool any_counterexample(const std::vector<TheoremVerdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) {
    return v.status == VerdictStatus::CounterexampleFound;
  });
}

json make_report(const std::vector<TheoremVerdict>& verdicts, const std::vector<CatalogEntry>& catalog,
                 const SuiteBounds& bounds, const json& metadata) {
  json cat = json::array();
  for (const auto& e : catalog) cat.push_back({{"spec", e.spec.to_string()}, {"tags", e.tags}});
  json list = json::array();
  std::map<std::string, std::size_t> counts{{"Verified", 0},
                                            {"CounterexampleFound", 0},
                                            {"VacuouslyTrue", 0},
                                            {"Skipped", 0}};
  for (const auto& v : verdicts) {
    list.push_back(v.to_json());
    ++counts[to_string(v.status)];
  }
  return {{"schema", kReportSchema},
          {"bounds", bounds.to_json()},
          {"catalog", std::move(cat)},
          {"verdicts", std::move(list)},
          {"summary", counts},
          {"passed", !any_counterexample(verdicts)},
          {"metadata", metadata}};
}

}  // namespace ringlab
