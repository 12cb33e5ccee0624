#include "genus0/genus0.hpp"

#include <gtest/gtest.h>

using namespace genus0;

namespace {

std::vector<SignatureGenus> found(const ClassificationReport& r) {
  std::vector<SignatureGenus> out;
  for (const auto& e : r.admissible) out.push_back({e.signature, e.genus});
  return out;
}

std::vector<SignatureGenus> positive(const ClassificationReport& r) {
  std::vector<SignatureGenus> out;
  for (const auto& e : r.admissible)
    if (e.genus > 0) out.push_back({e.signature, e.genus});
  return out;
}

const TheoremCheck* find_check(const VerifyResult& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(GenusZeroAction, Z6Witness) {
  EXPECT_TRUE(is_genus_zero_action({build_cyclic(6), Signature(0, {2, 2, 3, 3}), {3, 3, 2, 4}}));
}

TEST(GenusZeroAction, TrivialGroupIsVacuous) { EXPECT_TRUE(is_genus_zero_action({build_cyclic(1), Signature(0, {}), {}})); }

TEST(GenusZeroSignatures, Z6) {
  const auto r = genus_zero_signatures(build_cyclic(6), 3);
  EXPECT_EQ(found(r), (std::vector<SignatureGenus>{{Signature(0, {6, 6}), 0}, {Signature(0, {2, 3, 6}), 1}, {Signature(0, {2, 2, 3, 3}), 2}}));
  EXPECT_EQ(r.verdict, Verdict::HasGenusZero);
  EXPECT_FALSE(r.partial());
}

TEST(GenusZeroSignatures, Z12OnlySphere) {
  const auto r = genus_zero_signatures(build_cyclic(12), 6);
  EXPECT_TRUE(positive(r).empty());
  EXPECT_EQ(found(r), (std::vector<SignatureGenus>{{Signature(0, {12, 12}), 0}}));
}

TEST(GenusZeroSignatures, Q8IncludesEvenR) {
  // every r >= 0 is realized; r = 0 is the genus-2 action with the
  // hyperelliptic involution as the central element
  const auto r = genus_zero_signatures(build_generalized_quaternion(3), 10);
  std::vector<SignatureGenus> expected;
  for (std::size_t k = 0; k <= 4; ++k) expected.push_back({repeated_signature(2, k, {4, 4, 4}), 2 * static_cast<long long>(k + 1)});
  EXPECT_EQ(found(r), expected);
}

TEST(GenusZeroSignatures, Q8GenusTwoWitnessIsGenuine) {
  const FiniteGroup g = build_generalized_quaternion(3);
  const Element a = metacyclic_element(g, 0, 1), b = metacyclic_element(g, 1, 0);
  const GeneratingVector v{g, Signature(0, {4, 4, 4}), {a, b, g.inv(g.mul(a, b))}};
  ASSERT_TRUE(validate(v).ok());
  EXPECT_EQ(rh_genus(8, v.signature), 2);
  const QuotientReport q = quotient_genus(v, cyclic_subgroup(g, metacyclic_element(g, 0, 2)));
  EXPECT_EQ(q.fixed_points, 6);
  EXPECT_EQ(q.quotient_genus, 0);
  EXPECT_EQ(gamma_prime_signature_oracle(v, q.subgroup), Signature(0, {2, 2, 2, 2, 2, 2}));
}

TEST(GenusZeroSignatures, PruningIsExact) {
  // constrained search against brute force: enumerate everything, filter
  for (const auto& g : {build_cyclic(12), build_dihedral(6), build_generalized_quaternion(4), build_polyhedral(PolyhedralKind::A4),
                        build_zm(5, 4, -1), build_type_ii(3, -1), build_polyhedral(PolyhedralKind::S4)}) {
    const PrimeSubgroups primes(g);
    for (const auto& s : enumerate_signatures(g, 9)) {
      std::set<std::vector<Element>> brute;
      SearchOptions o;
      o.cap = 20000;
      const VectorList all = enumerate_vectors(g, s.signature, o);
      if (all.stats.capped) continue;
      for (const auto& v : all.vectors)
        if (is_genus_zero_action(v, primes)) brute.insert(v.elements);
      const VectorList pruned = genus_zero_vectors(g, primes, s.signature, s.genus);
      EXPECT_EQ(as_set(pruned.vectors), brute) << describe(g.family()) << " " << to_string(s.signature);
    }
  }
}

TEST(GenusZeroSignatures, LargerBoundNeverRemovesEntries) {
  for (const auto& g : {build_cyclic(8), build_zm(3, 4, -1), build_generalized_quaternion(3)}) {
    const auto small = found(genus_zero_signatures(g, 6)), large = found(genus_zero_signatures(g, 10));
    for (const auto& s : small) EXPECT_NE(std::find(large.begin(), large.end(), s), large.end());
  }
}

TEST(GenusZeroSignatures, BudgetExhaustionIsReported) {
  ClassifyOptions opts;
  opts.node_budget = 3;
  const auto r = genus_zero_signatures(build_polyhedral(PolyhedralKind::A5), 6, opts);
  EXPECT_TRUE(r.partial());
  const auto full = classify_group(build_polyhedral(PolyhedralKind::A5), 6, opts);
  EXPECT_TRUE(full.failed());
}

TEST(GenusZeroSignatures, WitnessesRevalidate) {
  for (const auto& g : small_catalogue()) {
    const auto r = genus_zero_signatures(g, 8);
    for (const auto& e : r.admissible) {
      const GeneratingVector v{g, e.signature, e.witness};
      EXPECT_TRUE(validate(v).ok());
      EXPECT_TRUE(is_genus_zero_action(v));
      EXPECT_EQ(rh_genus(g.order(), e.signature), e.genus);
      EXPECT_GE(e.raw_vector_count, 1u);
    }
  }
}

TEST(Predictions, Cyclic) {
  EXPECT_EQ(predicted_cyclic(8, 10).size(), 6u);
  EXPECT_EQ(predicted_cyclic(5, 4), (std::vector<SignatureGenus>{{Signature(0, {5, 5}), 0}, {Signature(0, {5, 5, 5}), 2}, {Signature(0, {5, 5, 5, 5}), 4}}));
  EXPECT_EQ(predicted_cyclic(7, 3).size(), 2u);  // (0|7,7) and (0|7,7,7) at g = 3
  EXPECT_EQ(predicted_cyclic(12, 100), (std::vector<SignatureGenus>{{Signature(0, {12, 12}), 0}}));
  EXPECT_EQ(predicted_cyclic(1, 0), (std::vector<SignatureGenus>{{Signature(0, {}), 0}}));
}

TEST(Predictions, PrimeFamilyOnlyIntegralGenus) {
  // Z_2: g = (r-2)/2, so only even r occur
  for (const auto& s : predicted_cyclic(2, 6)) EXPECT_EQ(s.signature.r() % 2, 0u);
  EXPECT_EQ(found(genus_zero_signatures(build_cyclic(2), 6)), predicted_cyclic(2, 6));
  EXPECT_EQ(found(genus_zero_signatures(build_cyclic(3), 6)), predicted_cyclic(3, 6));
}

TEST(Predictions, GenusZeroFamilyClasses) {
  EXPECT_EQ(genus_zero_family(build_zm(5, 4, -1)), GenusZeroFamily::ZMp4);
  EXPECT_EQ(genus_zero_family(build_zm(9, 4, -1)), GenusZeroFamily::Excluded);
  EXPECT_EQ(genus_zero_family(build_zm(5, 4, 2)), GenusZeroFamily::Excluded);
  EXPECT_EQ(genus_zero_family(build_zm(5, 2, -1)), GenusZeroFamily::Dihedral);
  EXPECT_EQ(genus_zero_family(build_cyclic(7)), GenusZeroFamily::Cyclic);
  EXPECT_EQ(genus_zero_family(build_type_ii(3, -1)), GenusZeroFamily::Excluded);
  EXPECT_EQ(genus_zero_family(build_binary_icosahedral()), GenusZeroFamily::Excluded);
}

TEST(FamilyVectors, MatchRawEnumeration) {
  const std::vector<std::pair<FiniteGroup, long long>> cases{
      {build_cyclic(6), 2}, {build_cyclic(15), 8}, {build_cyclic(8), 6}, {build_cyclic(9), 6}, {build_cyclic(5), 4}, {build_zm(3, 4, -1), 2},
      {build_zm(5, 4, -1), 4}, {build_zm(7, 4, -1), 6}, {build_generalized_quaternion(4), 16}, {build_generalized_quaternion(5), 16}};
  for (const auto& [g, bound] : cases) {
    const PrimeSubgroups primes(g);
    std::size_t compared = 0;
    for (const auto& e : genus_zero_signatures(g, bound).admissible) {
      const auto fam = family_vectors(g, e.signature);
      if (!fam) continue;
      ++compared;
      EXPECT_EQ(as_set(genus_zero_vectors(g, primes, e.signature, e.genus).vectors), *fam) << describe(g.family()) << to_string(e.signature);
    }
    EXPECT_GT(compared, 0u) << describe(g.family());
  }
}

TEST(Verifiers, Pq) {
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 3}, {3, 5}, {2, 5}}) EXPECT_TRUE(verify_pq(p, q).passed()) << p * q;
  const auto r = genus_zero_signatures(build_cyclic(15), 8);
  EXPECT_EQ(found(r), (std::vector<SignatureGenus>{{Signature(0, {15, 15}), 0}, {Signature(0, {3, 5, 15}), 4}, {Signature(0, {3, 3, 5, 5}), 8}}));
  const auto z10 = genus_zero_signatures(build_cyclic(10), 4);
  EXPECT_EQ(positive(z10), (std::vector<SignatureGenus>{{Signature(0, {2, 5, 10}), 2}, {Signature(0, {2, 2, 5, 5}), 4}}));
}

TEST(Verifiers, CyclicPrimePower) {
  EXPECT_TRUE(verify_cyclic_prime_power(2, 3, 5).passed());
  EXPECT_TRUE(verify_cyclic_prime_power(3, 2, 4).passed());
  EXPECT_TRUE(verify_cyclic_prime_power(3, 1, 6).passed());
  EXPECT_TRUE(verify_cyclic_prime_power(5, 1, 5).passed());
  EXPECT_TRUE(verify_cyclic_prime_power(2, 5, 1).passed());
  EXPECT_EQ(rh_genus(5, Signature(0, {5, 5, 5})), 2);
}

TEST(Verifiers, QuaternionStatedFamilyIsIncomplete) {
  // the stated odd-r list misses the even-r signatures found exhaustively
  for (long long n : {3, 4}) {
    const VerifyResult v = verify_quaternion(n, 3);
    const TheoremCheck* set = find_check(v, "signature set");
    ASSERT_NE(set, nullptr);
    EXPECT_EQ(set->status, Status::Fail);
    const TheoremCheck* formula = find_check(v, "genus formula");
    ASSERT_NE(formula, nullptr);
    EXPECT_EQ(formula->status, Status::Pass);
    const TheoremCheck* witness = find_check(v, "witness validation");
    ASSERT_NE(witness, nullptr);
    EXPECT_EQ(witness->status, Status::Pass);
  }
}

TEST(Verifiers, QuaternionOddRParameterization) {
  const FiniteGroup g = build_generalized_quaternion(4);
  const auto rep = classify_group(g, 16);
  for (const auto& c : rep.theorems)
    if (c.name.rfind("parameterization", 0) == 0) {
      EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.details;
    }
}

TEST(Verifiers, Zm) {
  for (long long p : {3, 5, 7}) {
    const VerifyResult v = verify_zm(p);
    EXPECT_TRUE(v.passed()) << p;
    for (const auto& c : v.checks) EXPECT_NE(c.status, Status::Warn) << c.name;
  }
  const auto r = genus_zero_signatures(build_zm(5, 4, -1), 8);
  EXPECT_EQ(positive(r), (std::vector<SignatureGenus>{{Signature(0, {4, 4, 5}), 4}}));
}

TEST(Verifiers, NoPositiveGenus) {
  for (long long n : {12, 18, 20, 45, 50, 30, 42, 60}) EXPECT_TRUE(verify_no_positive_genus(build_cyclic(n), 10).passed()) << n;
  EXPECT_TRUE(verify_no_positive_genus(build_type_ii(3, 1), 12).passed());
  EXPECT_TRUE(verify_no_positive_genus(build_type_ii(3, -1), 12).passed());
}

TEST(Verifiers, Icosahedral) {
  EXPECT_TRUE(nonnegative_solutions(kIcosahedralCoefficients, 121).empty());
  const auto control = nonnegative_solutions(kIcosahedralCoefficients, 120);
  EXPECT_NE(std::find(control.begin(), control.end(), std::vector<long long>{4, 0, 0, 0, 0, 0}), control.end());
  EXPECT_TRUE(verify_icosahedral().passed());
}

TEST(Verifiers, SphereAndTorus) {
  const VerifyResult v = verify_sphere_and_torus();
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.checks.size(), sphere_rows().size() + torus_rows().size());
}

TEST(Verifiers, FamilySweep) {
  const VerifyResult v = verify_family_sweep(family_catalogue());
  EXPECT_TRUE(v.passed());
  for (const auto& c : v.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.details;
}

TEST(ClassifyGroup, Examples) {
  const auto q16 = classify_group(build_generalized_quaternion(4), 8);
  EXPECT_EQ(q16.verdict, Verdict::HasGenusZero);
  const auto fs = found(q16);
  EXPECT_NE(std::find(fs.begin(), fs.end(), SignatureGenus{Signature(0, {2, 4, 4, 8}), 8}), fs.end());

  const auto istar = classify_group(build_binary_icosahedral(), 2);
  EXPECT_EQ(istar.verdict, Verdict::NoneFound);
  EXPECT_FALSE(istar.failed());

  const auto t2 = classify_group(build_type_ii(3, -1), 12);
  EXPECT_EQ(t2.verdict, Verdict::NoneFound);
  EXPECT_FALSE(t2.failed());
  const auto t1 = classify_group(build_type_ii(3, 1), 12);
  EXPECT_EQ(t1.verdict, Verdict::NoneFound);
  EXPECT_FALSE(t1.failed());
}

TEST(ClassifyGroup, CustomTableUsesCyclicityOnly) {
  const FiniteGroup c = build_cyclic(6);
  const FiniteGroup custom(std::vector<Element>(c.table().begin(), c.table().end()), Family{FamilyKind::Custom, 6});
  const auto r = classify_group(custom, 3);
  EXPECT_EQ(found(r), found(classify_group(c, 3)));
  EXPECT_FALSE(r.failed());
  const FiniteGroup s3 = build_dihedral(3);
  const FiniteGroup custom_s3(std::vector<Element>(s3.table().begin(), s3.table().end()), Family{FamilyKind::Custom, 6});
  const auto rs = classify_group(custom_s3, 2);
  EXPECT_EQ(genus_zero_family(custom_s3), GenusZeroFamily::Unknown);
  EXPECT_FALSE(rs.failed());
}
