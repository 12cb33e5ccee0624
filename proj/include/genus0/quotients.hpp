#pragma once

#include "genus0/constructors.hpp"
#include "genus0/generating_vector.hpp"
#include "genus0/group.hpp"
#include "genus0/rational.hpp"
#include "genus0/signature.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace genus0 {

/// Raised when the Riemann-Hurwitz bookkeeping of a quotient does not close
/// up.  Never expected on validated vectors.
class NonIntegralQuotientGenus : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct QuotientReport {
  Subgroup subgroup;
  unsigned prime = 0;
  Element generator = 0;
  long long fixed_points = 0;
  long long quotient_genus = 0;
  Signature gamma_prime_signature;
};

/// Number of points of M fixed by s: sum over j of the cosets d G_j with
/// d^-1 s d in G_j = <T_j>.
inline long long fixed_point_count(const GeneratingVector& v, Element s) {
  const FiniteGroup& g = v.group;
  if (s == 0) throw std::invalid_argument("fixed_point_count: the identity fixes every point");
  if (s >= g.order()) throw std::invalid_argument("fixed_point_count: element id out of range");
  long long total = 0;
  for (Element tj : v.elements) {
    const ElementSet gj = g.cyclic(tj);
    long long hits = 0;
    for (Element d = 0; d < g.order(); ++d)
      if (gj.test(g.conj(g.inv(d), s))) ++hits;
    const long long nj = g.elt_order(tj);
    if (hits % nj != 0) throw NonIntegralQuotientGenus("coset count not divisible by |G_j|");
    total += hits / nj;
  }
  return total;
}

/// |G| * sum of 1/n_j over periods divisible by p, valid when G has a unique
/// subgroup of order p.
inline long long fixed_points_unique_subgroup(const GeneratingVector& v, unsigned p) {
  const FiniteGroup& g = v.group;
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (g.elements_of_order(p).size() != p - 1)
    throw std::invalid_argument("G does not have a unique subgroup of order " + std::to_string(p));
  Rational sum = 0;
  for (unsigned n : v.signature.periods())
    if (n % p == 0) sum += make_rational(1, n);
  const Rational t = make_rational(static_cast<std::int64_t>(g.order())) * sum;
  const auto out = to_int64(t);
  if (!out) throw NonIntegralQuotientGenus("fixed point count is not an integer");
  return *out;
}

/// Signature of theta^-1(H) read off the cycles of each T_j acting on the
/// left cosets of H: a cycle of length l < n_j contributes period n_j / l.
inline Signature gamma_prime_signature_oracle(const GeneratingVector& v, const Subgroup& h) {
  const FiniteGroup& g = v.group;
  const std::size_t n = g.order();
  // coset id of x H
  std::vector<std::size_t> coset(n, static_cast<std::size_t>(-1));
  std::size_t cosets = 0;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != static_cast<std::size_t>(-1)) continue;
    for (Element y : h.elements) coset[g.mul(x, y)] = cosets;
    ++cosets;
  }
  std::vector<Element> rep(cosets);
  for (Element x = n; x-- > 0;) rep[coset[x]] = x;

  std::vector<unsigned> periods;
  Rational period_sum = 0;
  for (Element tj : v.elements) {
    const unsigned nj = g.elt_order(tj);
    std::vector<bool> seen(cosets);
    for (std::size_t c = 0; c < cosets; ++c) {
      if (seen[c]) continue;
      unsigned len = 0;
      for (std::size_t d = c; !seen[d]; d = coset[g.mul(tj, rep[d])]) {
        seen[d] = true;
        ++len;
      }
      if (len < nj) {
        periods.push_back(nj / len);
        period_sum += make_rational(nj / len - 1, nj / len);
      }
    }
  }
  // 2h' - 2 + sum(1 - 1/m) = [G:H] (-2 + sum(1 - 1/n_j))
  const Rational rhs = make_rational(static_cast<std::int64_t>(cosets)) * area_term(v.signature);
  const Rational h_prime = (rhs - period_sum + 2) / 2;
  const auto hp = to_int64(h_prime);
  if (!hp || *hp < 0) throw NonIntegralQuotientGenus("orbit genus of Gamma' is not a nonnegative integer");
  return Signature(static_cast<unsigned>(*hp), std::move(periods));
}

/// Quotient data for a subgroup H of prime order p: fixed points t of a
/// generator and the genus k of M/H from 2g - 2 = p(2k - 2 + t(1 - 1/p)).
inline QuotientReport quotient_genus(const GeneratingVector& v, const Subgroup& h) {
  const FiniteGroup& g = v.group;
  const auto p = static_cast<unsigned>(h.order());
  if (!detail::is_prime(p)) throw std::invalid_argument("quotient_genus needs a subgroup of prime order");
  Element gen = 0;
  for (Element x : h.elements)
    if (x != 0) {
      gen = x;
      break;
    }
  const long long genus = rh_genus(g.order(), v.signature);
  const long long t = fixed_point_count(v, gen);
  const Rational two_k = make_rational(2 * genus - 2, p) + 2 - make_rational(t * (p - 1), p);
  const auto k = to_int64(two_k / 2);
  if (!k || *k < 0)
    throw NonIntegralQuotientGenus("quotient genus " + to_string(two_k / 2) + " for subgroup of order " + std::to_string(p));
  std::vector<unsigned> periods(static_cast<std::size_t>(t), p);
  return QuotientReport{h, p, gen, t, *k, Signature(static_cast<unsigned>(*k), std::move(periods))};
}

}  // namespace genus0
