#include "genus0/genus0.hpp"

#include <gtest/gtest.h>

using namespace genus0;

TEST(Rational, ExactAndReduced) {
  const Rational a = make_rational(2, 4);
  EXPECT_EQ(numerator(a), 1);
  EXPECT_EQ(denominator(a), 2);
  EXPECT_TRUE(is_integral(make_rational(6, 3)));
  EXPECT_FALSE(is_integral(make_rational(7, 3)));
  EXPECT_EQ(to_int64(make_rational(-8, 4)), -2);
  EXPECT_FALSE(to_int64(make_rational(1, 3)).has_value());
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
}

TEST(Signature, SortedCanonicalForm) {
  const Signature s(0, {6, 2, 3});
  EXPECT_EQ(s.periods(), (std::vector<unsigned>{2, 3, 6}));
  EXPECT_EQ(s, Signature(0, {3, 6, 2}));
  EXPECT_EQ(to_string(s), "(0|2,3,6)");
  EXPECT_EQ(to_string(Signature(2, {})), "(2|-)");
  EXPECT_THROW(Signature(0, {1, 2}), SignatureError);
}

TEST(Signature, ParseRoundTrip) {
  for (const char* text : {"(0|2,2,3,3)", "(0|-)", "(3|-)", "(1|2,5)"}) EXPECT_EQ(to_string(parse_signature(text)), text);
  EXPECT_EQ(parse_signature(" ( 0 | 5, 2 ) "), Signature(0, {2, 5}));
  EXPECT_EQ(parse_signature("(0|)"), Signature(0, {}));
}

TEST(Signature, ParseErrors) {
  EXPECT_THROW(parse_signature("0|2,3"), SignatureError);
  EXPECT_THROW(parse_signature("(0,2,3)"), SignatureError);
  EXPECT_THROW(parse_signature("(0|2,x)"), SignatureError);
  EXPECT_THROW(parse_signature("(0|2,1)"), SignatureError);
  EXPECT_THROW(parse_signature("(0|2,inf)"), SignatureError);
  EXPECT_THROW(parse_signature("(0|2,,3)"), SignatureError);
}

TEST(RiemannHurwitz, Examples) {
  for (std::size_t n = 2; n <= 40; ++n) EXPECT_EQ(rh_genus(n, Signature(0, {unsigned(n), unsigned(n)})), 0);
  EXPECT_EQ(rh_genus(20, Signature(0, {4, 4, 5})), 4);
  for (long long p : {3, 5, 7, 11}) EXPECT_EQ(rh_genus(4 * p, Signature(0, {4, 4, unsigned(p)})), p - 1);
  EXPECT_EQ(rh_genus(6, Signature(0, {2, 2, 3, 3})), 2);
  EXPECT_EQ(rh_genus(1, Signature(0, {})), 0);
  EXPECT_EQ(rh_genus(1, Signature(3, {})), 3);
}

TEST(RiemannHurwitz, Errors) {
  try {
    rh_genus(4, Signature(0, {3, 3, 3, 3}));
    FAIL();
  } catch (const RiemannHurwitzError& e) {
    EXPECT_EQ(e.kind(), RiemannHurwitzError::Kind::NonIntegral);
  }
  try {
    rh_genus(2, Signature(0, {}));
    FAIL();
  } catch (const RiemannHurwitzError& e) {
    EXPECT_EQ(e.kind(), RiemannHurwitzError::Kind::NegativeGenus);
  }
  EXPECT_THROW(rh_genus(0, Signature(0, {2, 2})), std::invalid_argument);
}

TEST(RiemannHurwitz, MonotoneInPeriods) {
  const std::vector<unsigned> extra{2, 3, 4, 6, 12};
  for (const auto& base : {Signature(0, {12, 12}), Signature(0, {2, 3, 12}), Signature(0, {4, 4, 6})}) {
    const GenusResult g0 = try_rh_genus(12, base);
    for (unsigned n : extra) {
      std::vector<unsigned> p = base.periods();
      p.push_back(n);
      const GenusResult g1 = try_rh_genus(12, Signature(0, p));
      if (g0.genus && g1.genus) {
        EXPECT_GE(*g1.genus, *g0.genus);
      }
    }
  }
}

TEST(Geometry, Trichotomy) {
  EXPECT_EQ(geometry_type(Signature(0, {2, 3, 5})), Geometry::Spherical);
  EXPECT_EQ(geometry_type(Signature(0, {2, 3, 6})), Geometry::Euclidean);
  EXPECT_EQ(geometry_type(Signature(0, {4, 4, 5})), Geometry::Hyperbolic);
  EXPECT_EQ(geometry_type(Signature(0, {2, 2, 17})), Geometry::Spherical);
  EXPECT_EQ(geometry_type(Signature(0, {2, 2, 2, 2})), Geometry::Euclidean);
  EXPECT_EQ(geometry_type(Signature(0, {7, 7})), Geometry::Spherical);
  EXPECT_EQ(geometry_type(Signature(0, {2, 2, 2, 3})), Geometry::Hyperbolic);
  EXPECT_THROW(geometry_type(Signature(1, {2})), SignatureError);
}

TEST(Geometry, SphereSignaturesAreSpherical) {
  for (const auto& row : sphere_rows()) EXPECT_EQ(geometry_type(row.signature), Geometry::Spherical) << to_string(row.signature);
  for (const auto& row : torus_rows()) EXPECT_EQ(geometry_type(row.signature), Geometry::Euclidean) << to_string(row.signature);
}

TEST(EnumerateSignatures, Z2AtGenusZero) {
  const auto s = enumerate_signatures(build_cyclic(2), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].signature, Signature(0, {2, 2}));
}

TEST(EnumerateSignatures, Z6ContainsTheoremSignatures) {
  const auto s = enumerate_signatures(build_cyclic(6), 2);
  for (const SignatureGenus& want : {SignatureGenus{Signature(0, {6, 6}), 0}, SignatureGenus{Signature(0, {2, 3, 6}), 1},
                                     SignatureGenus{Signature(0, {2, 2, 3, 3}), 2}})
    EXPECT_NE(std::find(s.begin(), s.end(), want), s.end()) << to_string(want.signature);
}

TEST(EnumerateSignatures, A5UsesOnlyElementOrders) {
  for (const auto& s : enumerate_signatures(build_polyhedral(PolyhedralKind::A5), 2))
    for (unsigned n : s.signature.periods()) EXPECT_TRUE(n == 2 || n == 3 || n == 5);
}

TEST(EnumerateSignatures, ExhaustiveAgainstBruteForce) {
  // every multiset of periods from the spectrum with r <= 8, filtered by RH
  const FiniteGroup g = build_cyclic(12);
  const long long bound = 7;
  std::set<std::pair<std::vector<unsigned>, long long>> brute;
  const std::vector<unsigned> orders{2, 3, 4, 6, 12};
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, std::size_t first) -> void {
    const GenusResult res = try_rh_genus(12, Signature(0, cur));
    if (res.genus && *res.genus <= bound) brute.insert({cur, *res.genus});
    if (cur.size() == 8) return;
    for (std::size_t k = first; k < orders.size(); ++k) {
      cur.push_back(orders[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::set<std::pair<std::vector<unsigned>, long long>> got;
  for (const auto& s : enumerate_signatures(g, bound)) got.insert({s.signature.periods(), s.genus});
  EXPECT_EQ(got, brute);
}

TEST(EnumerateSignatures, SupersetWhenBoundGrows) {
  const FiniteGroup g = build_polyhedral(PolyhedralKind::S4);
  for (long long b = 0; b < 6; ++b) {
    const auto small = enumerate_signatures(g, b), large = enumerate_signatures(g, b + 1);
    for (const auto& s : small) EXPECT_NE(std::find(large.begin(), large.end(), s), large.end());
  }
}

TEST(EnumerateSignatures, SortedByGenusThenSignature) {
  const auto s = enumerate_signatures(build_dihedral(6), 6);
  for (std::size_t i = 1; i < s.size(); ++i)
    EXPECT_TRUE(s[i - 1].genus < s[i].genus || (s[i - 1].genus == s[i].genus && s[i - 1].signature < s[i].signature));
}
