#pragma once

// Implication suites over a ring catalog and the report document they
// produce.
//
// Catalog entries are ring specs. Finite entries feed the structural suites;
// the domains Z and F_p[x] feed domain-asr1, quotient-idempotent and
// triangular-reduction. An entry that does not fit a suite is simply not
// visited by it, so an empty catalog yields no verdicts.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/range_props.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

/// Each suite checks one implication between ring properties:
///   sr1-asr1              right Bezout and stable range 1 => right asr1
///   asr1-dyadic           asr1 => dyadic range 1, on each side
///   radical-quotient      asr1(R) == asr1(R/J(R))
///   domain-asr1           every triple of a Bezout domain shifts; Z and F_p[x] are not sr1
///   quotient-idempotent   a = rs splitting gives an idempotent of R/aR
///   two-sided-generator   two-sided asr1 agrees with its generator form on Bezout rings
///   lring-two-sided       L-ring and two-sided asr1 => right asr1
///   two-sided-range       sr1 => two-sided asr1; L-ring and two-sided asr1 => sr2
///   triangular-reduction  [[a, 0], [b, c]] reduces to a unit corner
enum class Theorem {
  SrOneGivesAsr,
  AsrGivesDyadic,
  RadicalQuotient,
  DomainAsr,
  QuotientIdempotent,
  TwoSidedGenerator,
  LRingTwoSided,
  TwoSidedRange,
  TriangularReduction,
};
enum class VerdictStatus { Verified, CounterexampleFound, VacuouslyTrue, Skipped };

const char* to_string(Theorem t);
const char* to_string(VerdictStatus s);
/// Case-insensitive suite name. ConfigError for unknown names.
Theorem parse_theorem(std::string_view name);
const std::vector<Theorem>& all_theorems();

struct CatalogEntry {
  RingSpec spec;
  std::vector<std::string> tags;
};

struct SuiteBounds {
  DomainBounds domain;
  /// Largest |a| whose quotient Z/a is checked for stable range 1.
  long long quotient_bound = 30;
  /// Degree bound for F_p[x] triples.
  int poly_triple_degree = 2;
  /// Number of random triples and the range of a for the idempotent suite.
  std::size_t idempotent_samples = 500;
  long long idempotent_max_a = 500;
  /// 1 <= a, b, c <= reduction_max in the triangular suite.
  long long reduction_max = 15;
  std::uint64_t seed = 20240917;

  nlohmann::json to_json() const;
  /// Unknown keys and ill-typed values raise ConfigError.
  static SuiteBounds from_json(const nlohmann::json& j);
};

struct TheoremVerdict {
  Theorem theorem = Theorem::SrOneGivesAsr;
  std::string subject;
  VerdictStatus status = VerdictStatus::Skipped;
  nlohmann::json evidence;

  nlohmann::json to_json() const;
};

std::vector<CatalogEntry> default_catalog();
/// Either a plain array of entries or {"rings": [...], "bounds": {...}};
/// entries are spec strings or {"spec": "...", "tags": [...]}. The bounds
/// override, if present, is written to *bounds. ConfigError on bad input.
std::vector<CatalogEntry> load_catalog(const nlohmann::json& doc, SuiteBounds* bounds = nullptr);

/// Memoizes the verdicts of the structural checkers for one finite ring.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteRingPtr ring);

  const FiniteRingPtr& ring() const { return ring_; }
  const PropertyReport& sr1();
  const PropertyReport& sr2();
  const PropertyReport& asr1(Side side);
  const PropertyReport& dyadic(Side side);
  const PropertyReport& lring();
  const PropertyReport& asr1_two_sided();
  /// Right and left Bezout.
  bool bezout();

 private:
  FiniteRingPtr ring_;
  std::map<std::string, PropertyReport> cache_;
  std::optional<bool> bezout_;

  template <class F>
  const PropertyReport& memo(const std::string& key, F&& compute);
};

/// Shares RingAnalysis objects between suites of one run.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteBounds bounds = {}) : bounds_(std::move(bounds)) {}
  const SuiteBounds& bounds() const { return bounds_; }
  RingAnalysis& analysis(const RingSpec& spec);

 private:
  SuiteBounds bounds_;
  std::map<std::string, std::unique_ptr<RingAnalysis>> rings_;
};

std::vector<TheoremVerdict> run_suite(Theorem theorem, const std::vector<CatalogEntry>& catalog,
                                      SuiteContext& context);
std::vector<TheoremVerdict> run_suite(Theorem theorem, const std::vector<CatalogEntry>& catalog,
                                      const SuiteBounds& bounds = {});

bool any_counterexample(const std::vector<TheoremVerdict>& verdicts);

/// Deterministic report: everything except "metadata" is a pure function of
/// the inputs.
nlohmann::json make_report(const std::vector<TheoremVerdict>& verdicts,
                           const std::vector<CatalogEntry>& catalog, const SuiteBounds& bounds,
                           const nlohmann::json& metadata = nlohmann::json::object());

inline constexpr const char* kReportSchema = "ringlab.report/1";

}  // namespace ringlab
