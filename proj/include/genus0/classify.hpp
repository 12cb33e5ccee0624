#pragma once

#include "genus0/constructors.hpp"
#include "genus0/generating_vector.hpp"
#include "genus0/group.hpp"
#include "genus0/quotients.hpp"
#include "genus0/signature.hpp"
#include "genus0/subgroups.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus0 {

/// Prime-order subgroup representatives, computed once per group.
struct PrimeSubgroups {
  std::vector<Subgroup> reps;

  explicit PrimeSubgroups(const FiniteGroup& g) {
    if (g.order() > 1) reps = prime_order_subgroups_up_to_conjugacy(g);
  }
};

/// True iff M/H has genus 0 for every subgroup H of prime order.  Checking
/// one subgroup per conjugacy class suffices.
inline bool is_genus_zero_action(const GeneratingVector& v, const PrimeSubgroups& primes) {
  for (const Subgroup& h : primes.reps)
    if (quotient_genus(v, h).quotient_genus != 0) return false;
  return true;
}

inline bool is_genus_zero_action(const GeneratingVector& v) { return is_genus_zero_action(v, PrimeSubgroups(v.group)); }

/// Fixed-point weights turning "M/<s> has genus 0" into a linear condition
/// on the entries of a vector, one per prime-order subgroup class.
///
/// With k = 0, 2g - 2 = p(-2 + t(1 - 1/p)) fixes t = (2g - 2 + 2p)/(p - 1),
/// and t = sum_j w(T_j) with w(x) = |C(s)| |cl(s) ∩ <x>| / |x|.  Returns
/// nullopt when some required t is not a nonnegative integer, in which case
/// no vector of that genus can have genus zero.
inline std::optional<std::vector<WeightConstraint>> genus_zero_constraints(const FiniteGroup& g, const PrimeSubgroups& primes,
                                                                           long long genus) {
  std::vector<WeightConstraint> out;
  for (const Subgroup& h : primes.reps) {
    const auto p = static_cast<long long>(h.order());
    const long long num = 2 * genus - 2 + 2 * p;
    if (num < 0 || num % (p - 1) != 0) return std::nullopt;
    const Element s = h.generators.front();
    const std::size_t cls = g.class_of(s);
    const auto centralizer = static_cast<long long>(g.centralizer_order(s));
    WeightConstraint c;
    c.target = num / (p - 1);
    c.weight.assign(g.order(), 0);
    for (Element x = 1; x < g.order(); ++x) {
      long long in_class = 0;
      Element y = x;
      do {
        if (g.class_of(y) == cls) ++in_class;
        y = g.mul(y, x);
      } while (y != 0);
      c.weight[x] = centralizer * in_class / g.elt_order(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

struct ClassifyOptions {
  /// Per-signature node budget for the vector search.
  std::optional<std::size_t> node_budget = 200'000'000;
  /// Raw genus-zero vectors counted per signature before the count is
  /// reported as a lower bound.
  std::size_t count_cap = 1'000'000;
};

struct AdmissibleEntry {
  Signature signature;
  long long genus = 0;
  std::vector<Element> witness;
  std::size_t raw_vector_count = 0;
  bool count_capped = false;
};

enum class Verdict { HasGenusZero, NoneFound };

inline const char* to_string(Verdict v) { return v == Verdict::HasGenusZero ? "HasGenusZero" : "NoneFound"; }

enum class Status { Pass, Fail, Warn };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
  }
  return "?";
}

struct TheoremCheck {
  std::string name;
  Status status = Status::Pass;
  std::string details;
};

struct ClassificationReport {
  FiniteGroup group;
  long long max_genus = 0;
  std::vector<AdmissibleEntry> admissible;
  Verdict verdict = Verdict::NoneFound;
  std::vector<TheoremCheck> theorems;
  /// Signatures whose search ran out of budget; nonempty means partial.
  std::vector<Signature> exhausted;

  bool partial() const { return !exhausted.empty(); }
  bool failed() const {
    for (const auto& t : theorems)
      if (t.status == Status::Fail) return true;
    return false;
  }
  bool has_positive_genus() const {
    for (const auto& e : admissible)
      if (e.genus > 0) return true;
    return false;
  }
};

/// All genus-zero raw vectors for one signature of the given genus.
inline VectorList genus_zero_vectors(const FiniteGroup& g, const PrimeSubgroups& primes, const Signature& sig, long long genus,
                                     const ClassifyOptions& opts = {}) {
  VectorList out;
  auto constraints = genus_zero_constraints(g, primes, genus);
  if (!constraints) return out;
  SearchOptions so;
  so.node_budget = opts.node_budget;
  so.cap = opts.count_cap;
  so.constraints = std::move(*constraints);
  out.stats = search_vectors(
      g, sig,
      [&](std::span<const Element> v) {
        GeneratingVector gv{g, sig, std::vector<Element>(v.begin(), v.end())};
        // the weights are exact, so this only trips on an internal error
        if (!validate(gv) || !is_genus_zero_action(gv, primes))
          throw std::logic_error("genus-zero pruning admitted a vector that fails the quotient check");
        out.vectors.push_back(std::move(gv));
        return true;
      },
      so);
  return out;
}

/// Searches every candidate signature of genus <= max_genus for a vector
/// whose prime-order quotients all have genus 0.
inline ClassificationReport genus_zero_signatures(const FiniteGroup& g, long long max_genus, const ClassifyOptions& opts = {}) {
  ClassificationReport report;
  report.group = g;
  report.max_genus = max_genus;
  const PrimeSubgroups primes(g);
  for (const auto& cand : enumerate_signatures(g, max_genus)) {
    VectorList found = genus_zero_vectors(g, primes, cand.signature, cand.genus, opts);
    if (found.stats.budget_exhausted) report.exhausted.push_back(cand.signature);
    if (found.vectors.empty()) continue;
    report.admissible.push_back(
        {cand.signature, cand.genus, found.vectors.front().elements, found.vectors.size(), found.stats.capped});
  }
  report.verdict = report.admissible.empty() ? Verdict::NoneFound : Verdict::HasGenusZero;
  return report;
}

// ---------------------------------------------------------------------------
// Predictions of the classification theorems.

struct Factorization {
  std::vector<std::pair<long long, int>> factors;

  explicit Factorization(long long n) {
    for (long long d = 2; d * d <= n; ++d) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
  }
};

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// (0 | p,...,p (r times), extra...) as a Signature.
inline Signature repeated_signature(unsigned small, std::size_t r, std::vector<unsigned> extra) {
  std::vector<unsigned> periods(r, small);
  periods.insert(periods.end(), extra.begin(), extra.end());
  return Signature(0, std::move(periods));
}

/// Genus-zero signatures of Z_n up to max_genus as the cyclic theorems
/// describe them: prime powers, products of two primes, and everything else
/// acting only on the sphere.
inline std::vector<SignatureGenus> predicted_cyclic(long long n, long long max_genus) {
  std::vector<SignatureGenus> out;
  if (n == 1) {
    out.push_back({Signature(0, {}), 0});
    return out;
  }
  const Factorization f(n);
  if (f.factors.size() == 1) {
    const auto [p, e] = f.factors.front();
    const auto pe = static_cast<unsigned>(n);
    for (std::size_t r = 0;; ++r) {
      Signature sig = e == 1 ? repeated_signature(static_cast<unsigned>(p), r, {}) : repeated_signature(static_cast<unsigned>(p), r, {pe, pe});
      if (e == 1 && r < 2) continue;
      // twice the genus: (r-2)(p-1) for e = 1, r(p^e - p^{e-1}) otherwise
      const long long twice = e == 1 ? static_cast<long long>(r - 2) * (p - 1) : static_cast<long long>(r) * (n - n / p);
      if (twice > 2 * max_genus) break;
      if (twice % 2 == 0) out.push_back({std::move(sig), twice / 2});
    }
  } else if (f.factors.size() == 2 && f.factors[0].second == 1 && f.factors[1].second == 1) {
    const auto p = static_cast<unsigned>(f.factors[0].first), q = static_cast<unsigned>(f.factors[1].first);
    const auto pq = static_cast<unsigned>(n);
    const SignatureGenus fam[] = {
        {Signature(0, {pq, pq}), 0},
        {Signature(0, {p, q, pq}), static_cast<long long>((p - 1) * (q - 1) / 2)},
        {Signature(0, {p, p, q, q}), static_cast<long long>((p - 1) * (q - 1))},
    };
    for (const auto& s : fam)
      if (s.genus <= max_genus) out.push_back(s);
  } else {
    out.push_back({Signature(0, {static_cast<unsigned>(n), static_cast<unsigned>(n)}), 0});
  }
  return out;
}

/// Q(2^n): (0 | 2,...,2 (r odd), 4, 4, 2^{n-1}) with genus 2^{n-2}(r + 1).
inline std::vector<SignatureGenus> predicted_quaternion(long long n, long long max_genus) {
  std::vector<SignatureGenus> out;
  const long long quarter = 1LL << (n - 2);
  for (std::size_t r = 1; quarter * static_cast<long long>(r + 1) <= max_genus; r += 2)
    out.push_back({repeated_signature(2, r, {4, 4, static_cast<unsigned>(1LL << (n - 1))}), quarter * static_cast<long long>(r + 1)});
  return out;
}

enum class GenusZeroFamily { Cyclic, Dihedral, Quaternion, Polyhedral, ZMp4, Excluded, Unknown };

inline const char* to_string(GenusZeroFamily c) {
  switch (c) {
    case GenusZeroFamily::Cyclic: return "cyclic";
    case GenusZeroFamily::Dihedral: return "dihedral";
    case GenusZeroFamily::Quaternion: return "generalized quaternion";
    case GenusZeroFamily::Polyhedral: return "polyhedral";
    case GenusZeroFamily::ZMp4: return "ZM G_{p,4}(-1)";
    case GenusZeroFamily::Excluded: return "not in the genus-zero list";
    case GenusZeroFamily::Unknown: return "unknown";
  }
  return "?";
}

/// Where a group sits in the genus-zero classification, from constructor
/// metadata (and cyclicity for custom tables).
inline GenusZeroFamily genus_zero_family(const FiniteGroup& g) {
  const Family& f = g.family();
  switch (f.kind) {
    case FamilyKind::Cyclic: return GenusZeroFamily::Cyclic;
    case FamilyKind::Dihedral: return GenusZeroFamily::Dihedral;
    case FamilyKind::GeneralizedQuaternion: return GenusZeroFamily::Quaternion;
    case FamilyKind::Polyhedral: return GenusZeroFamily::Polyhedral;
    case FamilyKind::BinaryIcosahedral:
    case FamilyKind::TypeII: return GenusZeroFamily::Excluded;
    case FamilyKind::ZM: {
      const long long m = f.a, n = f.b, r = detail::mod(f.c, std::max(1LL, m));
      if (m == 1 || n == 1) return GenusZeroFamily::Cyclic;
      if (n == 2) return GenusZeroFamily::Dihedral;  // r = -1 is forced, m odd
      if (n == 4 && r == m - 1 && m > 2 && detail::is_prime(m)) return GenusZeroFamily::ZMp4;
      return GenusZeroFamily::Excluded;
    }
    case FamilyKind::Custom: return g.is_cyclic() ? GenusZeroFamily::Cyclic : GenusZeroFamily::Unknown;
  }
  return GenusZeroFamily::Unknown;
}

inline bool in_genus_zero_family(GenusZeroFamily c) { return c != GenusZeroFamily::Excluded && c != GenusZeroFamily::Unknown; }

/// The admissible list the classification theorems predict for g up to
/// max_genus, or nullopt when the group is outside the catalogue.
inline std::optional<std::vector<SignatureGenus>> predicted_signatures(const FiniteGroup& g, long long max_genus) {
  const Family& f = g.family();
  const auto n = static_cast<long long>(g.order());
  std::vector<SignatureGenus> out;
  switch (genus_zero_family(g)) {
    case GenusZeroFamily::Cyclic: out = predicted_cyclic(n, max_genus); break;
    case GenusZeroFamily::Dihedral: out.push_back({Signature(0, {2, 2, static_cast<unsigned>(n / 2)}), 0}); break;
    case GenusZeroFamily::Quaternion: out = predicted_quaternion(f.a, max_genus); break;
    case GenusZeroFamily::Polyhedral: {
      const unsigned k = f.a == static_cast<long long>(PolyhedralKind::A4) ? 3 : f.a == static_cast<long long>(PolyhedralKind::S4) ? 4 : 5;
      out.push_back({Signature(0, {2, 3, k}), 0});
      break;
    }
    case GenusZeroFamily::ZMp4:
      if (f.a - 1 <= max_genus) out.push_back({Signature(0, {4, 4, static_cast<unsigned>(f.a)}), f.a - 1});
      break;
    case GenusZeroFamily::Excluded: break;
    case GenusZeroFamily::Unknown: return std::nullopt;
  }
  std::sort(out.begin(), out.end(), [](const SignatureGenus& a, const SignatureGenus& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    return a.signature < b.signature;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Stated parameterizations of the epimorphisms.

using VectorSet = std::set<std::vector<Element>>;

inline VectorSet as_set(const std::vector<GeneratingVector>& vs) {
  VectorSet s;
  for (const auto& v : vs) s.insert(v.elements);
  return s;
}

/// Vectors theta(X_j) listed by the explicit epimorphism families for
/// Z_{p^e}, Z_{pq}, Q(2^n) with n >= 4 and G_{p,4}(-1); nullopt when no
/// parameterization applies to this group and signature.
inline std::optional<VectorSet> family_vectors(const FiniteGroup& g, const Signature& sig) {
  const Family& f = g.family();
  const auto n = static_cast<long long>(g.order());
  VectorSet out;
  const auto& per = sig.periods();

  if (genus_zero_family(g) == GenusZeroFamily::Cyclic && f.kind == FamilyKind::Cyclic && n > 1) {
    const Factorization fac(n);
    if (fac.factors.size() == 1) {
      // theta(X_j) = T^{a_j p^{e-1}}, theta(Y_i) = T^{b_i}, a_j, b_i prime to p,
      // p^{e-1} sum a_j + b_1 + b_2 = 0 mod p^e
      const auto [p, e] = fac.factors.front();
      const long long low = n / p;
      std::size_t r = sig.count(static_cast<unsigned>(p));
      const bool prime = e == 1;
      if (!prime && (sig.count(static_cast<unsigned>(n)) != 2 || r + 2 != sig.r())) return std::nullopt;
      if (prime && r != sig.r()) return std::nullopt;
      const std::size_t tail = prime ? 0 : 2;
      std::vector<Element> cur(sig.r());
      std::size_t budget = 2'000'000;
      auto rec = [&](auto&& self, std::size_t j, long long sum) -> void {
        if (budget == 0) return;
        if (j == r + tail) {
          if (sum % n == 0) {
            out.insert(cur);
            --budget;
          }
          return;
        }
        const long long range = j < r ? p : n;
        const long long scale = j < r ? low : 1;
        for (long long a = 1; a < range; ++a) {
          if (a % p == 0) continue;
          cur[j] = static_cast<Element>((a * scale) % n);
          self(self, j + 1, sum + a * scale);
        }
      };
      rec(rec, 0, 0);
      if (budget == 0) return std::nullopt;
      return out;
    }
    if (fac.factors.size() == 2 && fac.factors[0].second == 1 && fac.factors[1].second == 1) {
      // A = T^q of order p, B = T^p of order q
      const long long p = fac.factors[0].first, q = fac.factors[1].first;
      const auto A = [&](long long a) { return detail::mod(a * q, n); };
      const auto B = [&](long long b) { return detail::mod(b * p, n); };
      const std::vector<unsigned> s1{static_cast<unsigned>(n), static_cast<unsigned>(n)};
      const std::vector<unsigned> s2{static_cast<unsigned>(p), static_cast<unsigned>(q), static_cast<unsigned>(n)};
      const std::vector<unsigned> s3{static_cast<unsigned>(p), static_cast<unsigned>(p), static_cast<unsigned>(q), static_cast<unsigned>(q)};
      for (long long a = 1; a < p; ++a)
        for (long long b = 1; b < q; ++b) {
          const auto ab = static_cast<Element>(detail::mod(A(a) + B(b), n));
          const auto ab_inv = static_cast<Element>(detail::mod(-A(a) - B(b), n));
          if (per == s1) out.insert({ab, ab_inv});
          if (per == s2) out.insert({static_cast<Element>(A(a)), static_cast<Element>(B(b)), ab_inv});
          if (per == s3)
            out.insert({static_cast<Element>(A(a)), static_cast<Element>(A(-a)), static_cast<Element>(B(b)), static_cast<Element>(B(-b))});
        }
      if (out.empty()) return std::nullopt;
      return out;
    }
    return std::nullopt;
  }

  if (f.kind == FamilyKind::GeneralizedQuaternion && f.a >= 4) {
    // theta(X_j) = B^2, theta(Y_i) = B A^{a_i}, theta(Z) = A^alpha, alpha odd,
    // a_2 - a_1 + alpha = 0 mod 2^{n-1}
    const long long m = 1LL << (f.a - 1);
    const std::size_t r = sig.count(2);
    if (sig.r() != r + 3 || sig.count(4) != 2 || sig.count(static_cast<unsigned>(m)) != 1 || r % 2 == 0) return std::nullopt;
    const Element b2 = metacyclic_element(g, 0, m / 2);  // B^2 = A^{m/2}
    for (long long a1 = 0; a1 < m; ++a1)
      for (long long alpha = 1; alpha < m; alpha += 2) {
        const long long a2 = detail::mod(a1 - alpha, m);
        std::vector<Element> v(r, b2);
        v.push_back(metacyclic_element(g, 1, a1));
        v.push_back(metacyclic_element(g, 1, a2));
        v.push_back(metacyclic_element(g, 0, alpha));
        out.insert(std::move(v));
      }
    return out;
  }

  if (genus_zero_family(g) == GenusZeroFamily::ZMp4) {
    // theta(X) = B^e A^a, theta(Y) = B^-e A^b, theta(Z) = A^c, -a + b + c = 0 mod p
    const long long p = f.a;
    if (sig != Signature(0, {4, 4, static_cast<unsigned>(p)})) return std::nullopt;
    for (long long eps : {1LL, 3LL})
      for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) {
          const long long c = detail::mod(a - b, p);
          if (c == 0) continue;
          const Element x = metacyclic_element(g, eps, a), y = metacyclic_element(g, -eps, b), z = metacyclic_element(g, 0, c);
          // sorted periods put Z first when p < 4; (Z, X, Y) is a rotation of XYZ = 1
          out.insert(p < 4 ? std::vector<Element>{z, x, y} : std::vector<Element>{x, y, z});
        }
    return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Conformance checks.

namespace detail {

inline std::string list_signatures(const std::vector<SignatureGenus>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i].signature) + " g=" + std::to_string(s[i].genus);
  }
  return out + "}";
}

inline std::vector<SignatureGenus> found_signatures(const ClassificationReport& rep) {
  std::vector<SignatureGenus> out;
  for (const auto& e : rep.admissible) out.push_back({e.signature, e.genus});
  return out;
}

}  // namespace detail

/// Found admissible list against the theorem prediction.
inline TheoremCheck check_prediction(const ClassificationReport& rep) {
  TheoremCheck c{"signature set", Status::Pass, ""};
  const auto expected = predicted_signatures(rep.group, rep.max_genus);
  const auto found = detail::found_signatures(rep);
  if (!expected) {
    c.status = Status::Warn;
    c.details = "no prediction for " + describe(rep.group.family()) + "; found " + detail::list_signatures(found);
    return c;
  }
  c.status = found == *expected ? Status::Pass : Status::Fail;
  c.details = "found " + detail::list_signatures(found) + ", predicted " + detail::list_signatures(*expected) +
              " within genus " + std::to_string(rep.max_genus);
  return c;
}

/// Raw genus-zero vectors against the stated epimorphism family.
inline TheoremCheck check_parameterization(const FiniteGroup& g, const Signature& sig, const std::vector<GeneratingVector>& raw) {
  TheoremCheck c{"parameterization " + to_string(sig), Status::Pass, ""};
  const auto fam = family_vectors(g, sig);
  if (!fam) {
    c.status = Status::Warn;
    c.details = "no stated parameterization to compare";
    return c;
  }
  const VectorSet found = as_set(raw);
  std::size_t missing = 0, extra = 0;
  for (const auto& v : *fam) missing += !found.count(v);
  for (const auto& v : found) extra += !fam->count(v);
  c.status = missing == 0 && extra == 0 ? Status::Pass : Status::Warn;
  c.details = std::to_string(found.size()) + " raw vectors, " + std::to_string(fam->size()) + " in family";
  if (c.status != Status::Pass)
    c.details += " (" + std::to_string(missing) + " family vectors not found, " + std::to_string(extra) + " raw vectors outside family)";
  return c;
}

inline TheoremCheck check_family_membership(const ClassificationReport& rep) {
  TheoremCheck c{"genus-zero group list", Status::Pass, ""};
  const GenusZeroFamily cls = genus_zero_family(rep.group);
  const bool has = rep.verdict == Verdict::HasGenusZero;
  if (cls == GenusZeroFamily::Unknown) {
    c.status = Status::Warn;
    c.details = std::string("family unknown; verdict ") + to_string(rep.verdict);
    return c;
  }
  c.status = has == in_genus_zero_family(cls) ? Status::Pass : Status::Fail;
  c.details = std::string(to_string(cls)) + ", verdict " + to_string(rep.verdict) + " within genus " + std::to_string(rep.max_genus);
  return c;
}

/// All nonnegative solutions of sum coeffs[i] x_i = rhs.
inline std::vector<std::vector<long long>> nonnegative_solutions(const std::vector<long long>& coeffs, long long rhs) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(coeffs.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, long long rest) -> void {
    if (i == coeffs.size()) {
      if (rest == 0) out.push_back(x);
      return;
    }
    for (long long k = 0; k * coeffs[i] <= rest; ++k) {
      x[i] = k;
      self(self, i + 1, rest - k * coeffs[i]);
    }
    x[i] = 0;
  };
  rec(rec, 0, rhs);
  return out;
}

/// Equation obtained from Riemann-Hurwitz for I* at genus 2 with r, s, t,
/// u, v, w periods of orders 2, 3, 4, 5, 6, 10.
inline const std::vector<long long> kIcosahedralCoefficients{30, 40, 45, 48, 50, 54};
inline constexpr long long kIcosahedralRhs = 121;

/// Family-specific checks beyond the signature set.
inline std::vector<TheoremCheck> family_checks(const ClassificationReport& rep, const ClassifyOptions& opts) {
  std::vector<TheoremCheck> out;
  const FiniteGroup& g = rep.group;
  const Family& f = g.family();
  const PrimeSubgroups primes(g);

  for (const auto& e : rep.admissible) {
    if (!family_vectors(g, e.signature)) continue;
    const VectorList raw = genus_zero_vectors(g, primes, e.signature, e.genus, opts);
    out.push_back(check_parameterization(g, e.signature, raw.vectors));
  }

  if (f.kind == FamilyKind::GeneralizedQuaternion) {
    // 2 r_1 + r = 0 mod 4, r = number of period-4 entries of the form B A^a
    TheoremCheck c{"B-letter count", Status::Pass, ""};
    std::size_t checked = 0;
    for (const auto& e : rep.admissible) {
      const VectorList raw = genus_zero_vectors(g, primes, e.signature, e.genus, opts);
      for (const auto& v : raw.vectors) {
        std::size_t r1 = 0, rb = 0;
        for (std::size_t j = 0; j < v.elements.size(); ++j) {
          if (e.signature.periods()[j] == 2) ++r1;
          if (e.signature.periods()[j] == 4 && metacyclic_form(g, v.elements[j]).b == 1) ++rb;
        }
        ++checked;
        if ((2 * r1 + rb) % 4 != 0) {
          c.status = Status::Fail;
          c.details = "violated by a witness of " + to_string(e.signature);
        }
      }
    }
    if (c.status == Status::Pass) c.details = "holds for " + std::to_string(checked) + " raw vectors";
    out.push_back(c);
  }

  if (genus_zero_family(g) == GenusZeroFamily::ZMp4) {
    const long long p = f.a;
    TheoremCheck fix{"fixed points of B^2 and A", Status::Pass, ""};
    const Element b2 = metacyclic_element(g, 2, 0), a = metacyclic_element(g, 0, 1);
    for (const auto& e : rep.admissible) {
      const GeneratingVector w{g, e.signature, e.witness};
      // r = 0, s = 2, t = 1, u = 0: 2pr + ps + 2u and 4t + 2u
      const long long fb = fixed_point_count(w, b2), fa = fixed_point_count(w, a);
      if (fb != 2 * p || fa != 4) fix.status = Status::Fail;
      fix.details = "Fix(B^2) = " + std::to_string(fb) + " (expect " + std::to_string(2 * p) + "), Fix(A) = " + std::to_string(fa) + " (expect 4)";
    }
    if (rep.admissible.empty()) fix.details = "no admissible entry to check";
    out.push_back(fix);
  }

  if (f.kind == FamilyKind::BinaryIcosahedral) {
    const auto sols = nonnegative_solutions(kIcosahedralCoefficients, kIcosahedralRhs);
    out.push_back({"genus-2 Diophantine equation", sols.empty() ? Status::Pass : Status::Fail,
                   std::to_string(sols.size()) + " nonnegative solutions of 30r+40s+45t+48u+50v+54w=121"});
  }

  if (f.kind == FamilyKind::TypeII) {
    const long long p = f.a;
    const bool l_is_one = detail::mod(f.b, p) == 1;
    const Element A = type_ii_element(p, 0, 0, 1), B = type_ii_element(p, 0, 1, 0), R = type_ii_element(p, 1, 0, 0);
    TheoremCheck c{"cyclic subgroup of order 4p", Status::Pass, ""};
    if (l_is_one) {
      const Element gens[2] = {A, R};
      const ElementSet h = g.closure(gens);
      const bool cyclic = g.elt_order(g.mul(A, R)) == 4 * p;
      c.status = h.count() == static_cast<std::size_t>(4 * p) && cyclic ? Status::Pass : Status::Fail;
      c.details = "<A,R> has order " + std::to_string(h.count()) + (cyclic ? " and is cyclic" : " and is not cyclic");
    } else {
      // (RAB)^2 = B^2 A^-2, so (RAB)^4 = A^-4 generates <A>
      const Element rab = g.mul(g.mul(R, A), B);
      const bool fourth = g.pow(rab, 4) == g.pow(A, -4);
      c.status = fourth && g.elt_order(rab) == 4 * p ? Status::Pass : Status::Fail;
      c.details = std::string("(RAB)^4 ") + (fourth ? "=" : "!=") + " A^-4, RAB has order " + std::to_string(g.elt_order(rab));
    }
    out.push_back(c);
  }
  return out;
}

/// Full report: search within the genus bound, then every conformance check
/// that applies to the group's family.
inline ClassificationReport classify_group(const FiniteGroup& g, long long max_genus, const ClassifyOptions& opts = {}) {
  ClassificationReport rep = genus_zero_signatures(g, max_genus, opts);
  // soundness: re-validate every witness end to end
  TheoremCheck sound{"witness validation", Status::Pass, std::to_string(rep.admissible.size()) + " witnesses re-validated"};
  for (const auto& e : rep.admissible) {
    const GeneratingVector v{g, e.signature, e.witness};
    if (!validate(v) || !is_genus_zero_action(v) || rh_genus(g.order(), e.signature) != e.genus) {
      sound.status = Status::Fail;
      sound.details = "witness for " + to_string(e.signature) + " failed re-validation";
    }
  }
  rep.theorems.push_back(sound);
  rep.theorems.push_back(check_family_membership(rep));
  rep.theorems.push_back(check_prediction(rep));
  for (auto& c : family_checks(rep, opts)) rep.theorems.push_back(std::move(c));
  if (rep.partial())
    rep.theorems.push_back({"search budget", Status::Fail, std::to_string(rep.exhausted.size()) + " signatures exhausted the node budget"});
  return rep;
}

}  // namespace genus0
