#pragma once

#include "genus0/classify.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace genus0 {

struct VerifyResult {
  std::string name;
  std::vector<TheoremCheck> checks;
  double seconds = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }
  void add(std::string check, bool ok, std::string details) {
    checks.push_back({std::move(check), ok ? Status::Pass : Status::Fail, std::move(details)});
  }
  void absorb(const ClassificationReport& rep) {
    for (const auto& c : rep.theorems) checks.push_back(c);
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string group_label(const FiniteGroup& g) { return spec_string(g.family(), g.order()); }

}  // namespace detail

/// Z_{p^e}: the genus-zero signatures up to the genus of the family member
/// with r = max_r, their genera, and the explicit epimorphisms.
inline VerifyResult verify_cyclic_prime_power(long long p, int e, long long max_r, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  const long long n = ipow(p, e);
  VerifyResult res{"cyclic prime power Z_" + std::to_string(n), {}, 0};
  const long long bound = e == 1 ? (max_r - 2) * (p - 1) / 2 : max_r * (n - n / p) / 2;
  const FiniteGroup g = build_cyclic(n);
  const ClassificationReport rep = classify_group(g, bound, opts);
  res.absorb(rep);
  bool formula = true, re = true;
  for (const auto& a : rep.admissible) {
    const auto r = static_cast<long long>(a.signature.count(static_cast<unsigned>(p)));
    const long long twice = e == 1 ? (r - 2) * (p - 1) : r * (n - n / p);
    formula = formula && twice == 2 * a.genus;
    if (e > 1) re = re && a.signature.count(static_cast<unsigned>(n)) >= 2;
  }
  res.add("genus formula", formula, "checked on " + std::to_string(rep.admissible.size()) + " signatures up to genus " + std::to_string(bound));
  if (e > 1) res.add("r_e >= 2", re, "every signature carries at least two periods p^e");
  res.seconds = sw.seconds();
  return res;
}

/// Q(2^n): signatures (0 | 2^r, 4, 4, 2^{n-1}) with r odd up to r = max_r.
inline VerifyResult verify_quaternion(long long n, long long max_r, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"generalized quaternion Q" + std::to_string(1LL << n), {}, 0};
  const long long bound = (1LL << (n - 2)) * (max_r + 1);
  const ClassificationReport rep = classify_group(build_generalized_quaternion(n), bound, opts);
  res.absorb(rep);
  bool formula = true;
  for (const auto& a : rep.admissible)
    formula = formula && a.genus == (1LL << (n - 2)) * static_cast<long long>(a.signature.count(2) + 1);
  res.add("genus formula", formula, "g = 2^{n-2}(r+1) on every found signature");
  res.seconds = sw.seconds();
  return res;
}

/// Z_{pq}: exactly the three signatures with their genera.
inline VerifyResult verify_pq(long long p, long long q, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"cyclic Z_" + std::to_string(p * q), {}, 0};
  res.absorb(classify_group(build_cyclic(p * q), 2 * (p - 1) * (q - 1), opts));
  res.seconds = sw.seconds();
  return res;
}

inline VerifyResult verify_no_positive_genus(const FiniteGroup& g, long long max_genus, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"no positive genus " + detail::group_label(g), {}, 0};
  const ClassificationReport rep = genus_zero_signatures(g, max_genus, opts);
  std::size_t positive = 0;
  for (const auto& a : rep.admissible) positive += a.genus > 0;
  res.add("positive-genus entries", positive == 0 && !rep.partial(),
          std::to_string(positive) + " within genus " + std::to_string(max_genus) + (rep.partial() ? " (partial search)" : ""));
  res.seconds = sw.seconds();
  return res;
}

/// Raw (0|4,4,p) vectors of G_{p,4}(-1) against theta(X) = B^e A^a,
/// theta(Y) = B^-e A^b, theta(Z) = A^c with -a + b + c = 0 mod p.
inline TheoremCheck check_zm_linear_relation(const FiniteGroup& g, const std::vector<GeneratingVector>& raw) {
  const long long p = g.family().a;
  std::size_t bad = 0;
  for (const auto& v : raw) {
    // sorted periods put the order-p entry first only when p = 3
    const std::size_t zi = p < 4 ? 0 : 2, xi = p < 4 ? 1 : 0, yi = p < 4 ? 2 : 1;
    const MetacyclicForm x = metacyclic_form(g, v.elements[xi]), y = metacyclic_form(g, v.elements[yi]),
                         z = metacyclic_form(g, v.elements[zi]);
    const bool shape = (x.b == 1 || x.b == 3) && y.b == 4 - x.b && z.b == 0;
    if (!shape || detail::mod(-x.a + y.a + z.a, p) != 0) ++bad;
  }
  return {"-a+b+c = 0 mod p", bad == 0 ? Status::Pass : Status::Fail,
          std::to_string(raw.size() - bad) + "/" + std::to_string(raw.size()) + " raw vectors satisfy the relation"};
}

inline VerifyResult verify_zm(long long p, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"ZM G_{" + std::to_string(p) + ",4}(-1)", {}, 0};
  const FiniteGroup g = build_zm(p, 4, -1);
  const ClassificationReport rep = classify_group(g, 2 * p, opts);
  res.absorb(rep);
  const Signature sig(0, {4, 4, static_cast<unsigned>(p)});
  const VectorList raw = genus_zero_vectors(g, PrimeSubgroups(g), sig, p - 1, opts);
  res.checks.push_back(check_zm_linear_relation(g, raw.vectors));
  res.add("raw vector count", raw.vectors.size() == static_cast<std::size_t>(2 * p * (p - 1)),
          std::to_string(raw.vectors.size()) + " raw vectors, expected 2p(p-1) = " + std::to_string(2 * p * (p - 1)));
  res.seconds = sw.seconds();
  return res;
}

/// The I* argument: Riemann-Hurwitz forces genus 2, which needs a
/// nonnegative solution of 30r+40s+45t+48u+50v+54w=121.
inline VerifyResult verify_icosahedral(const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"binary icosahedral I*", {}, 0};
  const auto none = nonnegative_solutions(kIcosahedralCoefficients, kIcosahedralRhs);
  res.add("Diophantine equation (rhs 121)", none.empty(), std::to_string(none.size()) + " nonnegative solutions");
  const auto control = nonnegative_solutions(kIcosahedralCoefficients, kIcosahedralRhs - 1);
  res.add("control (rhs 120)", !control.empty(), std::to_string(control.size()) + " nonnegative solutions");
  const FiniteGroup g = build_binary_icosahedral();
  std::size_t genus2 = 0;
  for (const auto& s : enumerate_signatures(g, 2)) genus2 += s.genus == 2;
  res.add("genus-2 signatures", genus2 == 0, std::to_string(genus2) + " signatures of genus 2 for |G| = 120");
  const ClassificationReport rep = genus_zero_signatures(g, 2, opts);
  res.add("classification up to genus 2", rep.admissible.empty() && !rep.partial(),
          std::to_string(rep.admissible.size()) + " admissible entries, verdict " + to_string(rep.verdict));
  res.seconds = sw.seconds();
  return res;
}

struct SurfaceRow {
  FiniteGroup group;
  Signature signature;
  long long genus = 0;
};

inline std::vector<SurfaceRow> sphere_rows() {
  std::vector<SurfaceRow> rows;
  for (long long n : {2, 3, 5, 6, 12}) rows.push_back({build_cyclic(n), Signature(0, {unsigned(n), unsigned(n)}), 0});
  for (long long n : {2, 3, 5, 6}) rows.push_back({build_dihedral(n), Signature(0, {2, 2, unsigned(n)}), 0});
  rows.push_back({build_polyhedral(PolyhedralKind::A4), Signature(0, {2, 3, 3}), 0});
  rows.push_back({build_polyhedral(PolyhedralKind::S4), Signature(0, {2, 3, 4}), 0});
  rows.push_back({build_polyhedral(PolyhedralKind::A5), Signature(0, {2, 3, 5}), 0});
  return rows;
}

inline std::vector<SurfaceRow> torus_rows() {
  return {{build_cyclic(2), Signature(0, {2, 2, 2, 2}), 1},
          {build_cyclic(3), Signature(0, {3, 3, 3}), 1},
          {build_cyclic(4), Signature(0, {2, 4, 4}), 1},
          {build_cyclic(6), Signature(0, {2, 3, 6}), 1}};
}

/// Number of generating vectors for the signature up to Aut(G).
inline std::size_t aut_orbit_count(const FiniteGroup& g, const Signature& sig) {
  return count_orbits(enumerate_vectors(g, sig).vectors, automorphisms(g));
}

inline VerifyResult verify_sphere_and_torus() {
  detail::Stopwatch sw;
  VerifyResult res{"sphere and torus tables", {}, 0};
  auto row_check = [&](const SurfaceRow& row, bool torus) {
    const FiniteGroup& g = row.group;
    const std::string label = detail::group_label(g) + " " + to_string(row.signature);
    const GenusResult gr = try_rh_genus(g.order(), row.signature);
    const bool genus_ok = gr.genus && *gr.genus == row.genus;
    const VectorList gz = genus_zero_vectors(g, PrimeSubgroups(g), row.signature, row.genus);
    const bool found = exists(g, row.signature);
    const std::size_t orbits = aut_orbit_count(g, row.signature);
    const bool unique_ok = !torus || orbits == 1;
    res.add(label, genus_ok && found && !gz.vectors.empty() && unique_ok,
            "genus " + (gr.genus ? std::to_string(*gr.genus) : std::string("n/a")) + ", exists " + (found ? "yes" : "no") +
                ", genus-zero witnesses " + std::to_string(gz.vectors.size()) + ", Aut(G)-orbits " + std::to_string(orbits));
  };
  for (const auto& row : sphere_rows()) row_check(row, false);
  for (const auto& row : torus_rows()) row_check(row, true);
  res.seconds = sw.seconds();
  return res;
}

// ---------------------------------------------------------------------------
// Catalogues.

inline std::vector<FiniteGroup> small_catalogue() {
  return {build_cyclic(2),
          build_cyclic(6),
          build_cyclic(8),
          build_cyclic(9),
          build_cyclic(12),
          build_dihedral(3),
          build_dihedral(4),
          build_dihedral(5),
          build_generalized_quaternion(3),
          build_generalized_quaternion(4),
          build_polyhedral(PolyhedralKind::A4),
          build_polyhedral(PolyhedralKind::S4),
          build_zm(3, 4, -1),
          build_zm(5, 4, -1),
          build_zm(7, 3, 2),
          build_type_ii(3, 1),
          build_type_ii(3, -1)};
}

/// Every group of the family sweep.
inline std::vector<FiniteGroup> family_catalogue() {
  std::vector<FiniteGroup> out;
  for (long long n = 2; n <= 60; ++n) out.push_back(build_cyclic(n));
  for (long long n = 2; n <= 30; ++n) out.push_back(build_dihedral(n));
  for (long long n = 3; n <= 6; ++n) out.push_back(build_generalized_quaternion(n));
  out.push_back(build_polyhedral(PolyhedralKind::A4));
  out.push_back(build_polyhedral(PolyhedralKind::S4));
  out.push_back(build_polyhedral(PolyhedralKind::A5));
  for (long long p : {3, 5, 7, 11}) out.push_back(build_zm(p, 4, -1));
  out.push_back(build_zm(3, 2, -1));
  out.push_back(build_zm(5, 2, -1));
  out.push_back(build_zm(7, 3, 2));
  out.push_back(build_zm(5, 4, 2));
  out.push_back(build_zm(3, 8, -1));
  out.push_back(build_zm(9, 4, -1));
  out.push_back(build_zm(5, 6, -1));
  out.push_back(build_zm(7, 9, 2));
  out.push_back(build_type_ii(3, 1));
  out.push_back(build_type_ii(3, -1));
  out.push_back(build_binary_icosahedral());
  return out;
}

/// Genus bound that reaches every family member's witness: |G|/2 covers
/// Q(2^n) at 2^{n-1} and G_{p,4}(-1) at p - 1.
inline long long sweep_bound(const FiniteGroup& g) { return std::max<long long>(1, static_cast<long long>(g.order()) / 2); }

/// Verdict HasGenusZero iff the group is in the genus-zero list.
inline VerifyResult verify_family_sweep(const std::vector<FiniteGroup>& groups, const ClassifyOptions& opts = {}) {
  detail::Stopwatch sw;
  VerifyResult res{"genus-zero group list sweep", {}, 0};
  for (const auto& g : groups) {
    const long long bound = sweep_bound(g);
    const ClassificationReport rep = genus_zero_signatures(g, bound, opts);
    const GenusZeroFamily cls = genus_zero_family(g);
    const bool ok = !rep.partial() && (rep.verdict == Verdict::HasGenusZero) == in_genus_zero_family(cls);
    res.add(detail::group_label(g), ok,
            std::string(to_string(rep.verdict)) + " within genus " + std::to_string(bound) + ", family " + to_string(cls) +
                (rep.partial() ? ", partial" : ""));
  }
  res.seconds = sw.seconds();
  return res;
}

/// Actions enumerated for the property checks: every generating vector of
/// every signature up to max_genus, at most `cap` per signature.
template <typename Visit>
void for_each_action(const FiniteGroup& g, long long max_genus, std::size_t cap, Visit&& visit) {
  for (const auto& s : enumerate_signatures(g, max_genus)) {
    SearchOptions opts;
    opts.cap = cap;
    search_vectors(
        g, s.signature,
        [&](std::span<const Element> v) {
          visit(GeneratingVector{g, s.signature, std::vector<Element>(v.begin(), v.end())});
          return true;
        },
        opts);
  }
}

struct PropertyTotals {
  std::size_t actions = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t tripwires = 0;
};

/// The coset-cycle signature of theta^-1(H) against fixed-point counts and
/// the quotient genus, for every prime-order subgroup H.
inline PropertyTotals oracle_equivalence(const FiniteGroup& g, long long max_genus, std::size_t cap) {
  PropertyTotals t;
  std::vector<Subgroup> subgroups;
  for (Element x = 1; x < g.order(); ++x)
    if (detail::is_prime(g.elt_order(x))) {
      Subgroup h = cyclic_subgroup(g, x);
      if (h.elements[1] == x) subgroups.push_back(std::move(h));  // one generator per subgroup
    }
  for_each_action(g, max_genus, cap, [&](const GeneratingVector& v) {
    ++t.actions;
    for (const Subgroup& h : subgroups) {
      ++t.comparisons;
      try {
        const QuotientReport q = quotient_genus(v, h);
        const Signature oracle = gamma_prime_signature_oracle(v, h);
        if (oracle != q.gamma_prime_signature) ++t.mismatches;
      } catch (const NonIntegralQuotientGenus&) {
        ++t.tripwires;
      }
    }
  });
  return t;
}

/// sum over s != 1 of Fix(s) against |G| sum(1 - 1/n_j).
inline PropertyTotals ramification_identity(const FiniteGroup& g, long long max_genus, std::size_t cap) {
  PropertyTotals t;
  for_each_action(g, max_genus, cap, [&](const GeneratingVector& v) {
    ++t.actions;
    ++t.comparisons;
    long long total = 0;
    for (Element s = 1; s < g.order(); ++s) total += fixed_point_count(v, s);
    Rational rhs = 0;
    for (unsigned n : v.signature.periods()) rhs += make_rational(static_cast<std::int64_t>(n) - 1, n);
    rhs *= static_cast<long long>(g.order());
    if (Rational(total) != rhs) ++t.mismatches;
  });
  return t;
}

/// Defaults for the property checks over the small catalogue.
inline constexpr long long kPropertyGenus = 5;
inline constexpr std::size_t kPropertyCap = 400;

inline VerifyResult verify_oracle_equivalence(const std::vector<FiniteGroup>& groups, long long max_genus = kPropertyGenus,
                                              std::size_t cap = kPropertyCap) {
  detail::Stopwatch sw;
  VerifyResult res{"quotient signature oracle", {}, 0};
  for (const auto& g : groups) {
    const PropertyTotals t = oracle_equivalence(g, max_genus, cap);
    res.add(detail::group_label(g), t.mismatches == 0 && t.tripwires == 0,
            std::to_string(t.actions) + " actions, " + std::to_string(t.comparisons) + " subgroup checks, " +
                std::to_string(t.mismatches) + " mismatches, " + std::to_string(t.tripwires) + " tripwires");
  }
  res.seconds = sw.seconds();
  return res;
}

inline VerifyResult verify_ramification_identity(const std::vector<FiniteGroup>& groups, long long max_genus = kPropertyGenus,
                                                 std::size_t cap = kPropertyCap) {
  detail::Stopwatch sw;
  VerifyResult res{"ramification identity", {}, 0};
  for (const auto& g : groups) {
    const PropertyTotals t = ramification_identity(g, max_genus, cap);
    res.add(detail::group_label(g), t.mismatches == 0,
            std::to_string(t.actions) + " actions, " + std::to_string(t.mismatches) + " mismatches");
  }
  res.seconds = sw.seconds();
  return res;
}

// ---------------------------------------------------------------------------
// Built-in manifest for the full verification run.

inline constexpr const char* kManifestVersion = "1";

/// Multiplies every genus bound / family length in the manifest.
struct ManifestScale {
  long long factor = 1;
};

inline std::vector<VerifyResult> run_manifest(const ManifestScale& scale = {}, const ClassifyOptions& opts = {}) {
  const long long k = std::max<long long>(1, scale.factor);
  std::vector<VerifyResult> out;
  out.push_back(verify_pq(2, 3, opts));
  out.push_back(verify_pq(2, 5, opts));
  out.push_back(verify_pq(3, 5, opts));
  out.push_back(verify_cyclic_prime_power(2, 3, 5 * k, opts));
  out.push_back(verify_cyclic_prime_power(3, 2, 4 * k, opts));
  out.push_back(verify_cyclic_prime_power(5, 1, 6 * k, opts));
  out.push_back(verify_cyclic_prime_power(2, 4, 2 * k, opts));
  out.push_back(verify_quaternion(3, 5 * k, opts));
  out.push_back(verify_quaternion(4, 3 * k, opts));
  for (long long p : {3, 5, 7}) out.push_back(verify_zm(p, opts));
  for (long long n : {12, 18, 20, 45, 50, 30, 42, 60}) out.push_back(verify_no_positive_genus(build_cyclic(n), 10 * k, opts));
  out.push_back(verify_no_positive_genus(build_type_ii(3, 1), 12 * k, opts));
  out.push_back(verify_no_positive_genus(build_type_ii(3, -1), 12 * k, opts));
  out.push_back(verify_icosahedral(opts));
  out.push_back(verify_sphere_and_torus());
  out.push_back(verify_oracle_equivalence(small_catalogue()));
  out.push_back(verify_ramification_identity(small_catalogue()));
  out.push_back(verify_family_sweep(family_catalogue(), opts));
  return out;
}

}  // namespace genus0
