#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;
using Index = FiniteRing::Index;

namespace {

Index mat(const FiniteRing& r, int a, int b, int c, int d) {
  return r.from_json(nlohmann::json{{a, b}, {c, d}});
}

oracle::Mat2 to_mat2(const FiniteRing& r, Index x) {
  const auto j = r.to_json(x);
  return {j[0][0].get<int>(), j[0][1].get<int>(), j[1][0].get<int>(), j[1][1].get<int>()};
}

std::set<oracle::Mat2> as_mat2(const FiniteRing& r, const ElementSet& s) {
  std::set<oracle::Mat2> out;
  for (auto x : s.to_vector()) out.insert(to_mat2(r, x));
  return out;
}

}  // namespace

TEST(RingSpec, ParsesAndCounts) {
  const auto z6 = parse_ring_spec("Z/6");
  EXPECT_EQ(z6.kind(), RingKind::Residue);
  EXPECT_EQ(z6.cardinality(), 6u);
  const auto m2 = parse_ring_spec("M2(Z/2)");
  EXPECT_EQ(m2.kind(), RingKind::MatrixRing);
  EXPECT_EQ(m2.cardinality(), 16u);
  EXPECT_EQ(parse_ring_spec(" UT2( Z/3 ) ").cardinality(), 27u);
  EXPECT_EQ(parse_ring_spec("Z/4 x Z/9").cardinality(), 36u);
  EXPECT_EQ(parse_ring_spec("Z/2 x M2(Z/2)").cardinality(), 32u);
  EXPECT_EQ(parse_ring_spec("M2(Z/3)").cardinality(), 81u);
  EXPECT_FALSE(parse_ring_spec("Z").is_finite());
  EXPECT_FALSE(parse_ring_spec("F3[x]").cardinality().has_value());
  EXPECT_EQ(parse_ring_spec("F2[x]/(1,1,1)").cardinality(), 4u);
}

TEST(RingSpec, CanonicalTextRoundTrips) {
  for (const char* text : {"Z", "F5[x]", "Z/12", "M2(Z/3)", "UT2(Z/2)", "Z/4 x Z/9",
                           "Z/2 x M2(Z/2)", "F3[x]/(2,0,1)", "M2(Z/2 x Z/3)"}) {
    const auto spec = parse_ring_spec(text);
    EXPECT_EQ(parse_ring_spec(spec.to_string()), spec) << text;
  }
}

TEST(RingSpec, RejectsBadInput) {
  EXPECT_THROW(parse_ring_spec("Z/1"), DomainError);
  EXPECT_THROW(parse_ring_spec("Z/0"), DomainError);
  EXPECT_THROW(parse_ring_spec("F4[x]"), DomainError);
  EXPECT_THROW(parse_ring_spec("M2(Z)"), DomainError);
  EXPECT_THROW(parse_ring_spec("Z x Z/2"), DomainError);
  EXPECT_THROW(parse_ring_spec("UT1(Z/2)"), DomainError);
  EXPECT_THROW(parse_ring_spec("M3(Z/7)"), DomainError);  // 7^9 elements
  EXPECT_THROW(parse_ring_spec("Q"), SyntaxError);
  EXPECT_THROW(parse_ring_spec("Z/"), SyntaxError);
  EXPECT_THROW(parse_ring_spec("M2(Z/2"), SyntaxError);
  EXPECT_THROW(parse_ring_spec(""), SyntaxError);
}

TEST(RingSpec, CardinalityCapIsConfigurable) {
  EXPECT_THROW(parse_ring_spec("Z/100", 50), DomainError);
  EXPECT_NO_THROW(parse_ring_spec("Z/100", 100));
}

TEST(Arith, Examples) {
  auto z6 = Ring::make("Z/6");
  EXPECT_EQ(arith(ArithOp::Mul, Elem(z6, Index{4}), Elem(z6, Index{4})).index(), 4u);
  auto f2 = Ring::make("F2[x]");
  auto sum = arith(ArithOp::Add, Elem::parse(f2, std::string_view("x+1")),
                   Elem::parse(f2, std::string_view("x")));
  EXPECT_EQ(sum.poly(), Poly::constant(2, 1));
  auto m2 = Ring::make("M2(Z/2)");
  const auto& fr = *m2->finite();
  const Index e12 = mat(fr, 0, 1, 0, 0);
  EXPECT_EQ(e12, 2u);
  EXPECT_EQ(arith(ArithOp::Mul, Elem(m2, e12), Elem(m2, e12)).index(), fr.zero());
}

TEST(Arith, MismatchedRingsThrow) {
  auto z6 = Ring::make("Z/6");
  auto z4 = Ring::make("Z/4");
  EXPECT_THROW(arith(ArithOp::Add, Elem(z6, Index{1}), Elem(z4, Index{1})), RingMismatch);
  auto zz = Ring::make("Z");
  EXPECT_THROW(Elem(zz, Index{1}), RingMismatch);
  EXPECT_THROW(Elem(z6, Index{6}), RingMismatch);
}

TEST(Arith, MatrixMultiplicationMatchesExplicitMatrices) {
  for (auto [text, p, upper] : {std::tuple{"M2(Z/2)", 2, false}, std::tuple{"M2(Z/3)", 3, false},
                                std::tuple{"UT2(Z/3)", 3, true}}) {
    const auto r = FiniteRing::make(text);
    const oracle::Mat2Ring ref{p, upper};
    for (Index x = 0; x < r->size(); ++x) {
      for (Index y = 0; y < r->size(); ++y) {
        ASSERT_EQ(to_mat2(*r, r->mul(x, y)), ref.mul(to_mat2(*r, x), to_mat2(*r, y))) << text;
        ASSERT_EQ(to_mat2(*r, r->add(x, y)), ref.add(to_mat2(*r, x), to_mat2(*r, y))) << text;
      }
    }
  }
}

TEST(Arith, IndexLayoutOfTwoByTwoMatrices) {
  const auto r = FiniteRing::make("M2(Z/2)");
  EXPECT_EQ(mat(*r, 1, 0, 0, 0), 1u);
  EXPECT_EQ(mat(*r, 0, 1, 0, 0), 2u);
  EXPECT_EQ(mat(*r, 0, 0, 1, 0), 4u);
  EXPECT_EQ(r->one(), 9u);
}

TEST(Units, Examples) {
  auto z6 = Ring::make("Z/6");
  EXPECT_TRUE(is_unit(Elem(z6, Index{5})));
  EXPECT_FALSE(is_unit(Elem(z6, Index{2})));
  EXPECT_EQ(units(Ring::make("M2(Z/2)")).size(), 6u);
  EXPECT_EQ(units(Ring::make("M2(Z/3)")).size(), 48u);
  EXPECT_EQ(units(Ring::make("Z")).size(), 2u);
  EXPECT_EQ(units(Ring::make("F5[x]")).size(), 4u);
  EXPECT_THROW(idempotents(Ring::make("Z")), InfiniteEnumeration);
}

TEST(Units, AgreeWithGcdForResidues) {
  for (long long n = 2; n <= 60; ++n) {
    const auto r = FiniteRing::make("Z/" + std::to_string(n));
    for (long long a = 0; a < n; ++a) {
      ASSERT_EQ(r->is_unit(static_cast<Index>(a)), oracle::gcd(a, n) == 1) << n << " " << a;
    }
  }
}

TEST(Idempotents, Examples) {
  const auto z6 = FiniteRing::make("Z/6");
  EXPECT_EQ(z6->idempotents(), (std::vector<Index>{0, 1, 3, 4}));
  EXPECT_EQ(FiniteRing::make("Z/4")->idempotents(), (std::vector<Index>{0, 1}));
  for (long long n = 2; n <= 60; ++n) {
    const auto r = FiniteRing::make("Z/" + std::to_string(n));
    std::vector<Index> expect;
    for (auto e : oracle::zn_idempotents(n)) expect.push_back(static_cast<Index>(e));
    ASSERT_EQ(r->idempotents(), expect) << n;
  }
}

TEST(Idempotents, ZeroAndOneAlwaysPresent) {
  for (const char* text : {"M2(Z/2)", "UT2(Z/3)", "Z/4 x Z/9", "F3[x]/(1,0,1)"}) {
    const auto r = FiniteRing::make(text);
    const auto& idem = r->idempotents();
    EXPECT_NE(std::find(idem.begin(), idem.end(), r->zero()), idem.end());
    EXPECT_NE(std::find(idem.begin(), idem.end(), r->one()), idem.end());
    for (Index e : idem) EXPECT_EQ(r->mul(e, e), e);
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(FiniteRing::make("Z/12")->jacobson_radical(), (std::vector<Index>{0, 6}));
  EXPECT_EQ(FiniteRing::make("M2(Z/2)")->jacobson_radical(), (std::vector<Index>{0}));
  EXPECT_EQ(FiniteRing::make("Z/5")->jacobson_radical(), (std::vector<Index>{0}));
}

TEST(Radical, MatchesRadicalOfModulus) {
  for (long long n = 2; n <= 60; ++n) {
    const auto r = FiniteRing::make("Z/" + std::to_string(n));
    const long long rad = oracle::radical(n);
    std::vector<Index> expect;
    for (long long x = 0; x < n; x += rad) expect.push_back(static_cast<Index>(x));
    ASSERT_EQ(r->jacobson_radical(), expect) << n;
  }
}

TEST(Radical, IsATwoSidedIdeal) {
  for (const char* text : {"UT2(Z/2)", "UT2(Z/3)", "Z/4 x Z/9", "M2(Z/4)", "F2[x]/(0,0,1)"}) {
    const auto r = FiniteRing::make(text);
    const auto& J = r->jacobson_radical();
    std::set<Index> js(J.begin(), J.end());
    for (Index x : J) {
      for (Index y : J) ASSERT_TRUE(js.count(r->add(x, y))) << text;
      for (Index s = 0; s < r->size(); ++s) {
        ASSERT_TRUE(js.count(r->mul(s, x))) << text;
        ASSERT_TRUE(js.count(r->mul(x, s))) << text;
      }
    }
  }
}

TEST(IdealClosure, Examples) {
  const auto z6 = FiniteRing::make("Z/6");
  const auto c = ideal_closure(z6, Side::Right, {2, 3});
  EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(c.contains_one());

  const auto m2 = FiniteRing::make("M2(Z/2)");
  EXPECT_EQ(ideal_closure(m2, Side::TwoSided, {1}).size(), 16u);

  const auto ut = FiniteRing::make("UT2(Z/2)");
  const Index e12 = mat(*ut, 0, 1, 0, 0);
  const auto t = ideal_closure(ut, Side::TwoSided, {e12});
  EXPECT_EQ(t.members.to_vector(), (std::vector<Index>{0, e12}));
  EXPECT_THROW(ideal_closure(z6, Side::Right, {}), PreconditionError);
}

TEST(IdealClosure, AgreesWithNaiveMatrixClosure) {
  for (auto [text, p, upper] : {std::tuple{"M2(Z/2)", 2, false}, std::tuple{"UT2(Z/2)", 2, true},
                                std::tuple{"UT2(Z/3)", 3, true}}) {
    const auto r = FiniteRing::make(text);
    const oracle::Mat2Ring ref{p, upper};
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Index> gens{static_cast<Index>(rng() % r->size())};
      if (trial % 2) gens.push_back(static_cast<Index>(rng() % r->size()));
      std::vector<oracle::Mat2> mg;
      for (auto g : gens) mg.push_back(to_mat2(*r, g));
      for (auto [side, code] : {std::pair{Side::Right, 'r'}, std::pair{Side::Left, 'l'},
                                std::pair{Side::TwoSided, 't'}}) {
        const auto got = ideal_closure(r, side, gens);
        ASSERT_EQ(as_mat2(*r, got.members), ref.closure(mg, code)) << text << " " << to_string(side);
      }
    }
  }
}

TEST(IdealClosure, IsMinimalAndClosed) {
  for (const char* text : {"UT2(Z/3)", "Z/4 x Z/9", "M2(Z/2)", "Z/2 x M2(Z/2)"}) {
    const auto r = FiniteRing::make(text);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Index> gens{static_cast<Index>(rng() % r->size()),
                              static_cast<Index>(rng() % r->size())};
      const auto c = ideal_closure(r, Side::Right, gens);
      const auto members = c.members.to_vector();
      for (Index x : members) {
        for (Index y : members) ASSERT_TRUE(c.contains(r->add(x, y)));
        for (Index s = 0; s < r->size(); ++s) ASSERT_TRUE(c.contains(r->mul(x, s)));
      }
      // Dropping a non-generator member breaks closure.
      for (Index drop : members) {
        if (std::find(gens.begin(), gens.end(), drop) != gens.end()) continue;
        bool broken = false;
        for (Index x : members) {
          if (x == drop) continue;
          for (Index y : members) {
            if (y != drop && r->add(x, y) == drop) broken = true;
          }
          for (Index s = 0; s < r->size() && !broken; ++s) broken = r->mul(x, s) == drop;
          if (broken) break;
        }
        ASSERT_TRUE(broken) << text;
      }
    }
  }
}

TEST(Coboundary, Examples) {
  const auto z6 = FiniteRing::make("Z/6");
  auto c = coboundary(*z6, 2);
  EXPECT_TRUE(c.principal);
  EXPECT_EQ(c.generator, 2u);

  const auto m2 = FiniteRing::make("M2(Z/2)");
  c = coboundary(*m2, 1);
  EXPECT_TRUE(c.principal);
  EXPECT_EQ(c.generator, m2->one());

  const auto ut = FiniteRing::make("UT2(Z/2)");
  c = coboundary(*ut, mat(*ut, 1, 0, 0, 0));
  EXPECT_FALSE(c.principal);
  EXPECT_FALSE(c.generator.has_value());
}

TEST(Coboundary, CommutativeRingsUseTheElementItself) {
  for (const char* text : {"Z/12", "Z/4 x Z/9", "F3[x]/(1,0,1)", "F2[x]/(0,1,1)"}) {
    const auto r = FiniteRing::make(text);
    for (Index a = 0; a < r->size(); ++a) {
      const auto c = coboundary(*r, a);
      ASSERT_TRUE(c.principal);
      ASSERT_EQ(c.generator, a);
    }
  }
}

TEST(Coboundary, GeneratorSatisfiesDefinition) {
  for (const char* text : {"M2(Z/2)", "UT2(Z/2)", "UT2(Z/3)", "Z/2 x M2(Z/2)"}) {
    const auto r = FiniteRing::make(text);
    for (Index a = 0; a < r->size(); ++a) {
      const auto c = coboundary(*r, a);
      if (!c.principal) continue;
      const auto t = ideal_closure(r, Side::TwoSided, {a}).members;
      EXPECT_EQ(ideal_closure(r, Side::Right, {*c.generator}).members, t);
      EXPECT_EQ(ideal_closure(r, Side::Left, {*c.generator}).members, t);
    }
  }
}

TEST(DProperty, Examples) {
  EXPECT_TRUE(has_D_property(*FiniteRing::make("Z/6")).verdict);
  EXPECT_TRUE(has_D_property(*FiniteRing::make("M2(Z/2)")).verdict);
  const auto ut = FiniteRing::make("UT2(Z/2)");
  const auto rep = has_D_property(*ut);
  EXPECT_FALSE(rep.verdict);
  EXPECT_EQ(ut->from_json(rep.counterexample["a"]), mat(*ut, 1, 0, 0, 0));
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_ring(IntegerDomain{}, Integer(6)), parse_ring_spec("Z/6"));
  EXPECT_EQ(quotient_ring(IntegerDomain{}, Integer(-6)), parse_ring_spec("Z/6"));
  EXPECT_THROW(quotient_ring(IntegerDomain{}, Integer(1)), DomainError);
  EXPECT_THROW(quotient_ring(IntegerDomain{}, Integer(0)), DomainError);

  const PolyDomain f2(2);
  const auto q = quotient_ring(f2, Poly::parse(2, "x^2+x+1"));
  const auto r = FiniteRing::make(q);
  EXPECT_EQ(r->size(), 4u);
  EXPECT_EQ(r->units().size(), 3u);  // a field
  EXPECT_THROW(quotient_ring(f2, Poly::constant(2, 1)), DomainError);
}

TEST(Quotient, PolynomialQuotientArithmetic) {
  // F3[x]/(x^2+1) is the field of nine elements.
  const auto r = FiniteRing::make(quotient_ring(PolyDomain(3), Poly::parse(3, "x^2+1")));
  EXPECT_EQ(r->units().size(), 8u);
  // F2[x]/(x^2) has the radical {0, x}.
  const auto s = FiniteRing::make(quotient_ring(PolyDomain(2), Poly::parse(2, "x^2")));
  EXPECT_EQ(s->jacobson_radical().size(), 2u);
}

TEST(MaxCardinality, EnvironmentOverride) {
  ::setenv("RINGLAB_MAX_CARD", "10", 1);
  EXPECT_THROW(parse_ring_spec("Z/11"), DomainError);
  ::setenv("RINGLAB_MAX_CARD", "nonsense", 1);
  EXPECT_THROW(parse_ring_spec("Z/11"), ConfigError);
  ::unsetenv("RINGLAB_MAX_CARD");
  EXPECT_NO_THROW(parse_ring_spec("Z/11"));
}
