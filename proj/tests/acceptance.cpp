// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ringlab/clean_adequate.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/matred.hpp"
#include "ringlab/range_props.hpp"

using namespace ringlab;
using Index = FiniteRing::Index;

namespace {

const IntegerDomain Z;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void check(bool cond, const std::string& what) {
    ++checked;
    if (cond) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checked << " checks";
    if (failed) s << ", " << failed << " failed, first: " << first;
    return {failed == 0, s.str()};
  }
};

template <class V>
std::vector<std::vector<V>> rows_of(const Matrix<V>& m) {
  std::vector<std::vector<V>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  return out;
}

template <class Dom>
bool divides(const Dom& dom, const typename Dom::value_type& d, const typename Dom::value_type& x) {
  if (dom.is_zero(d)) return dom.is_zero(x);
  return dom.is_zero(dom.divmod(x, d).second);
}

template <class Dom>
void check_snf(const Dom& dom, const Matrix<typename Dom::value_type>& A, Tally& t) {
  const auto c = smith_normal_form(dom, A);
  const std::string tag = dom.name() + " " + std::to_string(A.rows()) + "x" + std::to_string(A.cols());
  t.check(multiply(dom, multiply(dom, c.P, A), c.Q) == c.D, tag + ": P*A*Q != D");
  t.check(dom.is_unit(oracle::laplace_det(dom, rows_of(c.P))), tag + ": det P not a unit");
  t.check(dom.is_unit(oracle::laplace_det(dom, rows_of(c.Q))), tag + ": det Q not a unit");
  bool diagonal = true;
  for (std::size_t i = 0; i < c.D.rows(); ++i)
    for (std::size_t j = 0; j < c.D.cols(); ++j)
      if (i != j && !dom.is_zero(c.D(i, j))) diagonal = false;
  t.check(diagonal, tag + ": D not diagonal");
  const std::size_t k = std::min(A.rows(), A.cols());
  auto prod = dom.one();
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 < k) t.check(divides(dom, c.D(i, i), c.D(i + 1, i + 1)), tag + ": chain broken");
    prod = dom.mul(prod, c.D(i, i));
    t.check(dom.normalize(prod) == oracle::minor_gcd(dom, A, i + 1), tag + ": minor gcd mismatch");
  }
}

Outcome snf_correctness() {
  std::mt19937_64 rng(1001);
  Tally t;
  std::uniform_int_distribution<long> entry(-20, 20);
  std::uniform_int_distribution<std::size_t> size5(1, 5), size4(1, 4);
  for (int n = 0; n < 1000; ++n) {
    Matrix<Integer> A(size5(rng), size5(rng), Integer(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = entry(rng);
    check_snf(Z, A, t);
  }
  const PolyDomain f5(5);
  for (int n = 0; n < 500; ++n) {
    Matrix<Poly> A(size4(rng), size4(rng), Poly(5));
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        std::vector<Poly::Coeff> c(rng() % 6);  // degree <= 4
        for (auto& x : c) x = static_cast<Poly::Coeff>(rng() % 5);
        A(i, j) = Poly(5, c);
      }
    }
    check_snf(f5, A, t);
  }
  return t.outcome("1000 integer and 500 F5[x] matrices");
}

Outcome catalog_implications() {
  std::vector<CatalogEntry> finite;
  for (auto& e : default_catalog())
    if (e.spec.is_finite()) finite.push_back(e);
  SuiteContext context;
  Tally t;
  long verified = 0, vacuous = 0;
  for (Theorem th : {Theorem::SrOneGivesAsr, Theorem::AsrGivesDyadic, Theorem::LRingTwoSided, Theorem::TwoSidedRange}) {
    for (const auto& v : run_suite(th, finite, context)) {
      const bool fine = v.status == VerdictStatus::Verified || v.status == VerdictStatus::VacuouslyTrue;
      t.check(fine, std::string(to_string(th)) + " " + v.subject + " " + to_string(v.status));
      verified += v.status == VerdictStatus::Verified;
      vacuous += v.status == VerdictStatus::VacuouslyTrue;
    }
  }
  return t.outcome(std::to_string(finite.size()) + " rings, " + std::to_string(verified) +
                   " verified, " + std::to_string(vacuous) + " with unmet hypothesis");
}

Outcome radical_quotient() {
  Tally t;
  for (long n = 2; n <= 30; ++n) {
    const long rad = oracle::radical(n);
    const bool full = is_asr1_ring(*FiniteRing::make("Z/" + std::to_string(n)), Side::Right).verdict;
    const bool quot = is_asr1_ring(*FiniteRing::make("Z/" + std::to_string(rad)), Side::Right).verdict;
    t.check(full == quot, "Z/" + std::to_string(n) + " vs Z/" + std::to_string(rad));
    t.check(full == oracle::zn_asr1(n), "Z/" + std::to_string(n) + " disagrees with brute force");
  }
  std::vector<CatalogEntry> cat;
  for (long n = 2; n <= 30; ++n) cat.push_back({parse_ring_spec("Z/" + std::to_string(n)), {}});
  for (const auto& v : run_suite(Theorem::RadicalQuotient, cat)) {
    t.check(v.status == VerdictStatus::Verified, "suite verdict for " + v.subject);
  }
  return t.outcome("n in [2, 30]");
}

Outcome integer_separation() {
  Tally t;
  const auto rep = is_stable_range_1(Z);
  t.check(!rep.verdict, "Z reported as stable range 1");
  if (!rep.verdict) {
    const long a = std::stol(rep.counterexample["a"].get<std::string>());
    const long b = std::stol(rep.counterexample["b"].get<std::string>());
    t.check(oracle::gcd(a, b) == 1, "counterexample pair not coprime");
    for (long u : {1L, -1L}) t.check((u - a) % b != 0, "b divides u - a");
  }
  long triples = 0;
  for (long a = -20; a <= 20; ++a) {
    if (a == 0) continue;
    for (long b = -20; b <= 20; ++b) {
      for (long c = -20; c <= 20; ++c) {
        if (oracle::gcd3(a, b, c) != 1) continue;
        ++triples;
        const auto w = asr1_witness(Z, Integer(a), Integer(b), Integer(c));
        const Integer l = w.shifts.front();
        const auto g = extended_gcd(Z, Integer(a), Integer(b) + Integer(c) * l);
        t.check(w.verdict && g.d == 1 && Integer(a) * g.x + (Integer(b) + Integer(c) * l) * g.y == 1,
                "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    }
  }
  return t.outcome("SR1(Z) refuted, " + std::to_string(triples) + " triples shifted");
}

Outcome idempotent_construction() {
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<long> da(2, 500), dbc(-500, 500);
  Tally t;
  int triples = 0;
  while (triples < 500) {
    const long a = da(rng), b = dbc(rng), c = dbc(rng);
    if (oracle::gcd3(a, b, c) != 1) continue;
    ++triples;
    const std::string tag = "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
    const auto w = quotient_idempotent(Z, Integer(a), Integer(b), Integer(c));
    const Integer A(a), e = w.e;
    t.check(w.r * w.s == A, tag + ": r*s != a");
    t.check(verify(Z, w), tag + ": certificate rejected");
    // e^2 = e, e in bR/aR and 1 - e in cR/aR, all modulo a.
    const Integer sq = e * e - e;
    t.check(sq % A == 0, tag + ": not idempotent");
    t.check(e % Integer(static_cast<long>(oracle::gcd(b, a))) == 0, tag + ": e not in bR/aR");
    t.check((Integer(1) - e) % Integer(static_cast<long>(oracle::gcd(c, a))) == 0, tag + ": 1 - e not in cR/aR");
  }
  return t.outcome("500 integer triples");
}

Outcome adequate_splitting() {
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<long> db(-10000, 10000);
  std::vector<long> bs{0, 1, -1};
  while (bs.size() < 100) bs.push_back(db(rng));
  Tally t;
  for (long a = 1; a <= 10000; ++a) {
    for (long b : bs) {
      const auto d = adequate_decomposition(Z, Integer(a), Integer(b));
      const long r = d.r.get_si(), s = d.s.get_si();
      const auto [fr, fs] = oracle::adequate_by_factorization(a, b);
      bool primes_ok = true;
      for (auto [q, e] : oracle::factor(s)) primes_ok = primes_ok && b % q == 0;
      const bool ok = r * s == a && oracle::gcd(r, b) == 1 && primes_ok &&
                      std::abs(r) == fr && std::abs(s) == fs;
      t.check(ok, "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  return t.outcome("a in [1, 10000] x 100 values of b");
}

Outcome two_by_two_reduction() {
  Tally t;
  for (long a = 1; a <= 15; ++a) {
    for (long b = 1; b <= 15; ++b) {
      for (long c = 1; c <= 15; ++c) {
        if (oracle::gcd3(a, b, c) != 1) continue;
        const std::string tag = "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
        const auto r = reduce_triangular(Z, Integer(a), Integer(b), Integer(c));
        t.check(r.z == 1 || r.z == -1, tag + ": z not +-1");
        t.check(multiply(Z, multiply(Z, r.P, r.A), r.Q) == r.reduced && r.reduced(0, 1) == 0 &&
                    r.reduced(0, 0) == r.z,
                tag + ": transform mismatch");
        const Integer dp = oracle::laplace_det(Z, rows_of(r.P)), dq = oracle::laplace_det(Z, rows_of(r.Q));
        t.check(abs(dp) == 1 && abs(dq) == 1, tag + ": transform not invertible");
        const auto snf = smith_normal_form(Z, r.A);
        t.check(snf.D(0, 0) == 1 && snf.D(1, 1) == Integer(a * c) && snf.D(0, 1) == 0 && snf.D(1, 0) == 0,
                tag + ": SNF not diag(1, ac)");
      }
    }
  }
  return t.outcome("1 <= a, b, c <= 15");
}

Outcome content_invariance() {
  std::mt19937_64 rng(8008);
  Tally t;
  for (long n : {6L, 8L}) {
    const auto ring = FiniteRing::make("Z/" + std::to_string(n));
    auto random_matrix = [&](std::size_t m, std::size_t k) {
      Matrix<Index> x(m, k, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = static_cast<Index>(rng() % n);
      return x;
    };
    auto det_mod = [&](const Matrix<Index>& m) {
      std::vector<std::vector<long long>> rows(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
      return oracle::mod(oracle::laplace_det(oracle::LongOps{}, rows), n);
    };
    int samples = 0;
    while (samples < 200) {
      const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      const auto A = random_matrix(rows, cols);
      const auto P = random_matrix(rows, rows), Q = random_matrix(cols, cols);
      if (oracle::gcd(det_mod(P), n) != 1 || oracle::gcd(det_mod(Q), n) != 1) continue;
      ++samples;
      const auto B = multiply(*ring, multiply(*ring, P, A), Q);
      const auto ca = content_ideal(ring, A), cb = content_ideal(ring, B);
      t.check(ca.members == cb.members, "Z/" + std::to_string(n) + " sample " + std::to_string(samples));
      // In Z/n the content ideal is generated by gcd(entries, n).
      long g = n;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g = oracle::gcd(g, static_cast<long>(A(i, j)));
      t.check(static_cast<long>(ca.size()) == n / g, "Z/" + std::to_string(n) + " content size");
    }
  }
  return t.outcome("200 samples each over Z/6 and Z/8");
}

Outcome negative_controls() {
  Tally t;
  const auto ut = FiniteRing::make("UT2(Z/2)");
  const Index ut_e11 = ut->from_json(nlohmann::json{{1, 0}, {0, 0}});
  const auto d = has_D_property(*ut);
  t.check(!d.verdict, "UT2(Z/2) reported with the D-property");
  t.check(!d.verdict && ut->from_json(d.counterexample["a"]) == ut_e11, "UT2(Z/2) witness is not E11");
  // Independent confirmation: no g generates the two-sided ideal of E11 from both sides.
  const auto two = ideal_closure(ut, Side::TwoSided, {ut_e11}).members;
  bool common = false;
  for (Index g = 0; g < ut->size(); ++g) {
    common = common || (ideal_closure(ut, Side::Right, {g}).members == two &&
                        ideal_closure(ut, Side::Left, {g}).members == two);
  }
  t.check(!common, "UT2(Z/2): E11 has a common generator");

  const auto m2 = FiniteRing::make("M2(Z/2)");
  const Index m_e11 = m2->from_json(nlohmann::json{{1, 0}, {0, 0}});
  const auto l = is_L_ring(*m2);
  t.check(!l.verdict, "M2(Z/2) reported as L-ring");
  t.check(!l.verdict && m2->from_json(l.counterexample["a"]) == m_e11, "M2(Z/2) witness is not E11");
  const oracle::Mat2Ring ref{2, false};
  t.check(ref.closure({{1, 0, 0, 0}}, 't').size() == 16 && !ref.is_unit({1, 0, 0, 0}),
          "M2(Z/2): E11 does not generate R as a non-unit");
  return t.outcome("UT2(Z/2) D-property and M2(Z/2) L-ring");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "snf-correctness", 30, snf_correctness},
      {2, "catalog-implications", 60, catalog_implications},
      {3, "radical-quotient", 5, radical_quotient},
      {4, "integer-separation", 10, integer_separation},
      {5, "idempotent-construction", 10, idempotent_construction},
      {6, "adequate-splitting", 20, adequate_splitting},
      {7, "two-by-two-reduction", 10, two_by_two_reduction},
      {8, "content-invariance", 10, content_invariance},
      {9, "negative-controls", 5, negative_controls},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s %d %s (%.2f s, limit %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
