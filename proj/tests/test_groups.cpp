#include "genus0/genus0.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace genus0;

namespace {

std::vector<unsigned> order_multiset(const FiniteGroup& g) {
  std::vector<unsigned> out;
  for (Element x = 0; x < g.order(); ++x) out.push_back(g.elt_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteGroup> all_constructors() {
  return {build_cyclic(1),
          build_cyclic(12),
          build_dihedral(2),
          build_dihedral(7),
          build_generalized_quaternion(3),
          build_generalized_quaternion(5),
          build_polyhedral(PolyhedralKind::A4),
          build_polyhedral(PolyhedralKind::S4),
          build_polyhedral(PolyhedralKind::A5),
          build_binary_icosahedral(),
          build_zm(5, 4, -1),
          build_zm(7, 3, 2),
          build_zm(3, 8, -1),
          build_type_ii(3, 1),
          build_type_ii(5, -1)};
}

}  // namespace

TEST(Cyclic, TrivialGroup) {
  const FiniteGroup g = build_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.elt_order(0), 1u);
}

TEST(Cyclic, ElementOrdersOfZ6) {
  EXPECT_EQ(order_multiset(build_cyclic(6)), (std::vector<unsigned>{1, 2, 3, 3, 6, 6}));
}

TEST(Cyclic, OrderIsNOverGcd) {
  const FiniteGroup g = build_cyclic(36);
  for (Element k = 0; k < 36; ++k) EXPECT_EQ(g.elt_order(k), 36 / std::gcd(36u, k == 0 ? 36u : k));
}

TEST(Cyclic, Z12HasUniqueInvolution) { EXPECT_EQ(build_cyclic(12).elements_of_order(2).size(), 1u); }

TEST(Dihedral, D6) {
  const FiniteGroup g = build_dihedral(3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.elements_of_order(2).size(), 3u);
  EXPECT_EQ(g.elements_of_order(3).size(), 2u);
}

TEST(Dihedral, KleinFour) {
  const FiniteGroup g = build_dihedral(2);
  for (Element x = 1; x < 4; ++x) EXPECT_EQ(g.elt_order(x), 2u);
}

TEST(Dihedral, D10Conditions) {
  const FiniteGroup g = build_dihedral(5);
  EXPECT_TRUE(check_conditions(g, Condition::P2));
  EXPECT_FALSE(check_conditions(g, Condition::PQ));
}

TEST(Dihedral, RejectsSmallN) { EXPECT_THROW(build_dihedral(1), GroupError); }

TEST(Quaternion, Q8) {
  const FiniteGroup g = build_generalized_quaternion(3);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.elements_of_order(2).size(), 1u);
  EXPECT_EQ(g.elements_of_order(4).size(), 6u);
}

TEST(Quaternion, OrderFourElementsOfQ16) {
  const FiniteGroup g = build_generalized_quaternion(4);
  std::vector<Element> expected;
  for (long long alpha : {1, 3}) expected.push_back(metacyclic_element(g, 0, 2 * alpha));
  for (long long a = 0; a < 8; ++a) expected.push_back(metacyclic_element(g, 1, a));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(g.elements_of_order(4), expected);
}

TEST(Quaternion, CenterIsGeneratedByBSquared) {
  const FiniteGroup g = build_generalized_quaternion(4);
  const ElementSet z = center(g);
  EXPECT_EQ(z.count(), 2u);
  const Element b = metacyclic_element(g, 1, 0);
  EXPECT_TRUE(z.test(g.mul(b, b)));
}

TEST(Quaternion, SpectrumAndUniqueInvolution) {
  for (long long n = 3; n <= 6; ++n) {
    const FiniteGroup g = build_generalized_quaternion(n);
    std::vector<unsigned> expected;
    for (long long k = 0; k < n; ++k) expected.push_back(1u << k);
    EXPECT_EQ(g.order_spectrum(), expected);
    EXPECT_EQ(g.elements_of_order(2).size(), 1u);
  }
}

TEST(Quaternion, RejectsSmallN) { EXPECT_THROW(build_generalized_quaternion(2), GroupError); }

TEST(ZM, G54) {
  const FiniteGroup g = build_zm(5, 4, -1);
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(g.order_spectrum(), (std::vector<unsigned>{1, 2, 4, 5, 10}));
}

TEST(ZM, G32IsDihedralShaped) {
  const FiniteGroup g = build_zm(3, 2, -1);
  EXPECT_EQ(order_multiset(g), order_multiset(build_dihedral(3)));
  EXPECT_FALSE(g.is_abelian());
}

TEST(ZM, RejectsGcdViolation) {
  EXPECT_THROW(build_zm(4, 2, -1), GroupError);
  EXPECT_NE(zm_condition_failure(4, 2, -1).find("GCD"), std::string::npos);
}

TEST(ZM, RejectsPowerViolation) {
  EXPECT_THROW(build_zm(7, 2, 2), GroupError);
  EXPECT_FALSE(zm_condition_failure(7, 2, 2).empty());
}

TEST(ZM, AbelianizationHasOrderN) {
  for (auto [m, n, r] : std::vector<std::array<long long, 3>>{{5, 4, -1}, {7, 3, 2}, {3, 8, -1}, {9, 4, -1}, {5, 6, -1}}) {
    const FiniteGroup g = build_zm(m, n, r);
    EXPECT_EQ(g.order() / commutator_subgroup(g).count(), static_cast<std::size_t>(n)) << m << "," << n << "," << r;
  }
}

TEST(ZM, PqConditionsHold) { EXPECT_TRUE(check_conditions(build_zm(5, 4, -1), Condition::PQ)); }

TEST(Polyhedral, OrdersAndSpectra) {
  const FiniteGroup a4 = build_polyhedral(PolyhedralKind::A4);
  const FiniteGroup s4 = build_polyhedral(PolyhedralKind::S4);
  const FiniteGroup a5 = build_polyhedral(PolyhedralKind::A5);
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(a4.order_spectrum(), (std::vector<unsigned>{1, 2, 3}));
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(a5.order_spectrum(), (std::vector<unsigned>{1, 2, 3, 5}));
}

TEST(BinaryIcosahedral, OrderSpectrumAndInvolution) {
  const FiniteGroup g = build_binary_icosahedral();
  EXPECT_EQ(g.order(), 120u);
  EXPECT_EQ(g.order_spectrum(), (std::vector<unsigned>{1, 2, 3, 4, 5, 6, 10}));
  EXPECT_EQ(g.elements_of_order(2).size(), 1u);
  EXPECT_TRUE(check_conditions(g, Condition::PQ));
}

TEST(TypeII, OrderAndRelations) {
  const FiniteGroup g = build_type_ii(3, -1);
  EXPECT_EQ(g.order(), 24u);
  const Element A = type_ii_element(3, 0, 0, 1), B = type_ii_element(3, 0, 1, 0), R = type_ii_element(3, 1, 0, 0);
  EXPECT_EQ(g.elt_order(A), 3u);
  EXPECT_EQ(g.elt_order(B), 4u);
  EXPECT_EQ(g.mul(R, R), g.mul(B, B));
  EXPECT_EQ(g.conj(B, A), g.inv(A));
  EXPECT_EQ(g.conj(R, A), g.inv(A));
  EXPECT_EQ(g.conj(R, B), g.inv(B));
}

TEST(TypeII, CyclicSubgroupWhenLIsOne) {
  const FiniteGroup g = build_type_ii(3, 1);
  const Element gens[2] = {type_ii_element(3, 0, 0, 1), type_ii_element(3, 1, 0, 0)};
  const ElementSet h = g.closure(gens);
  EXPECT_EQ(h.count(), 12u);
  const Subgroup sub{g, to_vector(h, g.order()), {}};
  bool cyclic = false;
  for (Element x : sub.elements) cyclic = cyclic || g.elt_order(x) == 12;
  EXPECT_TRUE(cyclic);
}

TEST(TypeII, RabHasOrder4p) {
  for (long long p : {3, 5, 7}) {
    const FiniteGroup g = build_type_ii(p, -1);
    const Element rab = g.mul(g.mul(type_ii_element(p, 1, 0, 0), type_ii_element(p, 0, 0, 1)), type_ii_element(p, 0, 1, 0));
    EXPECT_EQ(g.elt_order(rab), static_cast<unsigned>(4 * p));
    EXPECT_EQ(g.pow(rab, 4), g.pow(type_ii_element(p, 0, 0, 1), -4));
  }
}

TEST(TypeII, RejectsBadParameters) {
  EXPECT_THROW(build_type_ii(4, -1), GroupError);
  EXPECT_THROW(build_type_ii(5, 2), GroupError);
}

TEST(Axioms, EveryConstructor) {
  for (const auto& g : all_constructors()) {
    SCOPED_TRACE(describe(g.family()));
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(0, x), x);
      EXPECT_EQ(g.mul(x, 0), x);
      EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
      EXPECT_EQ(g.pow(x, g.elt_order(x)), 0u);
      for (unsigned k = 1; k < g.elt_order(x); ++k) EXPECT_NE(g.pow(x, k), 0u);
    }
    EXPECT_TRUE(check_associativity(g));
  }
}

TEST(Axioms, ConjugationPreservesOrder) {
  for (const auto& g : all_constructors())
    for (Element d = 0; d < g.order(); ++d)
      for (Element x = 0; x < g.order(); ++x) ASSERT_EQ(g.elt_order(g.conj(d, x)), g.elt_order(x));
}

TEST(Axioms, BadTablesRejected) {
  EXPECT_THROW(FiniteGroup({0, 1, 1, 1}, Family{FamilyKind::Custom, 2}), GroupError);
  EXPECT_THROW(FiniteGroup({1, 0, 0, 1}, Family{FamilyKind::Custom, 2}), GroupError);
  EXPECT_THROW(FiniteGroup({0, 1, 1}, Family{FamilyKind::Custom, 2}), GroupError);
}

TEST(Axioms, NonAssociativeLatinSquareDetected) {
  // a loop of order 5 that is not a group
  const std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const FiniteGroup loop(t, Family{FamilyKind::Custom, 5});
  EXPECT_FALSE(check_associativity(loop));
}

TEST(Subgroups, CyclicSubgroup) {
  const FiniteGroup g = build_cyclic(6);
  EXPECT_EQ(cyclic_subgroup(g, 0).order(), 1u);
  EXPECT_EQ(cyclic_subgroup(g, 2).order(), 3u);
  const FiniteGroup q = build_generalized_quaternion(3);
  const Subgroup z = cyclic_subgroup(q, q.elements_of_order(2).front());
  EXPECT_EQ(z.as_set(), center(q));
}

TEST(Subgroups, PrimeOrderRepresentatives) {
  EXPECT_EQ(prime_order_subgroups_up_to_conjugacy(build_cyclic(6)).size(), 2u);
  const auto q = prime_order_subgroups_up_to_conjugacy(build_generalized_quaternion(3));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].order(), 2u);
  const FiniteGroup a4 = build_polyhedral(PolyhedralKind::A4);
  const auto reps = prime_order_subgroups_up_to_conjugacy(a4);
  ASSERT_EQ(reps.size(), 2u);
  for (const auto& h : reps) {
    std::set<std::vector<Element>> conjugates;
    for (Element d = 0; d < a4.order(); ++d) conjugates.insert(conjugate_elements(h, d));
    EXPECT_EQ(conjugates.size(), h.order() == 2 ? 3u : 4u);
  }
  EXPECT_THROW(prime_order_subgroups_up_to_conjugacy(build_cyclic(1)), GroupError);
}

TEST(Subgroups, RepresentativesCoverAndAreNonConjugate) {
  for (const auto& g : all_constructors()) {
    if (g.order() == 1) continue;
    const auto reps = prime_order_subgroups_up_to_conjugacy(g);
    ElementSet covered;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (Element d = 0; d < g.order(); ++d) {
        const auto c = conjugate_elements(reps[i], d);
        for (Element x : c) covered.set(x);
        for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_NE(c, reps[j].elements);
      }
    for (Element x = 1; x < g.order(); ++x)
      if (detail::is_prime(g.elt_order(x))) {
        EXPECT_TRUE(covered.test(x));
      }
  }
}

TEST(Subgroups, LagrangeAndClosure) {
  const FiniteGroup g = build_polyhedral(PolyhedralKind::S4);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x; y < g.order(); y += 5) {
      const Subgroup h = Subgroup::generated_by(g, {x, y});
      EXPECT_EQ(g.order() % h.order(), 0u);
      for (Element a : h.elements) {
        EXPECT_TRUE(h.contains(g.inv(a)));
        for (Element b : h.elements) EXPECT_TRUE(h.contains(g.mul(a, b)));
      }
    }
}

TEST(Conditions, CyclicGroupsSatisfyAll) {
  for (long long n : {1, 6, 12, 30, 49}) {
    const FiniteGroup g = build_cyclic(n);
    EXPECT_TRUE(check_conditions(g, Condition::P2));
    EXPECT_TRUE(check_conditions(g, Condition::PQ));
    EXPECT_TRUE(check_conditions(g, Condition::Sylow));
  }
}

TEST(Conditions, KleinFourFailsP2) {
  EXPECT_FALSE(check_conditions(build_dihedral(2), Condition::P2));
  EXPECT_FALSE(check_conditions(build_dihedral(2), Condition::Sylow));
  EXPECT_TRUE(check_conditions(build_generalized_quaternion(4), Condition::Sylow));
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphisms(build_cyclic(8)).size(), 4u);
  EXPECT_EQ(automorphisms(build_cyclic(7)).size(), 6u);
  EXPECT_EQ(automorphisms(build_dihedral(3)).size(), 6u);
  EXPECT_EQ(automorphisms(build_generalized_quaternion(3)).size(), 24u);
  EXPECT_EQ(automorphisms(build_polyhedral(PolyhedralKind::A4)).size(), 24u);
}
