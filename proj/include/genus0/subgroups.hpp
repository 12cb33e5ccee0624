#pragma once

#include "genus0/constructors.hpp"
#include "genus0/group.hpp"

#include <functional>
#include <set>
#include <vector>

namespace genus0 {

inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> ps;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    ps.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// One representative of every conjugacy class of subgroups of prime order,
/// listed by increasing least generator id.
inline std::vector<Subgroup> prime_order_subgroups_up_to_conjugacy(const FiniteGroup& g) {
  if (g.order() <= 1) throw GroupError("the trivial group has no subgroups of prime order");
  std::vector<Subgroup> reps;
  ElementSet covered;
  for (Element x = 1; x < g.order(); ++x) {
    if (covered.test(x) || !detail::is_prime(g.elt_order(x))) continue;
    Subgroup h = cyclic_subgroup(g, x);
    for (Element d = 0; d < g.order(); ++d)
      for (Element y : h.elements) covered.set(g.conj(d, y));
    reps.push_back(std::move(h));
  }
  return reps;
}

enum class Condition { P2, PQ, Sylow };

namespace detail {

/// True when every subgroup whose order lies in `orders` is cyclic, by
/// scanning subgroups generated by pairs of elements.
inline bool two_generated_subgroups_cyclic(const FiniteGroup& g, const std::set<long long>& orders) {
  std::vector<Element> candidates;
  for (Element x = 0; x < g.order(); ++x) {
    for (long long o : orders)
      if (o % g.elt_order(x) == 0) {
        candidates.push_back(x);
        break;
      }
  }
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const Element gens[2] = {candidates[a], candidates[b]};
      const ElementSet h = g.closure(gens);
      const long long size = static_cast<long long>(h.count());
      if (!orders.count(size)) continue;
      bool cyclic = false;
      for (std::size_t i = 0; i < g.order() && !cyclic; ++i)
        cyclic = h.test(i) && g.elt_order(static_cast<Element>(i)) == size;
      if (!cyclic) return false;
    }
  return true;
}

/// A Sylow p-subgroup grown greedily through p-elements.
inline ElementSet sylow_subgroup(const FiniteGroup& g, long long p) {
  long long target = 1;
  for (long long n = static_cast<long long>(g.order()); n % p == 0; n /= p) target *= p;
  auto is_p_power = [p](long long v) {
    while (v % p == 0) v /= p;
    return v == 1;
  };
  std::vector<Element> gens;
  ElementSet s = g.closure(gens);
  bool grew = true;
  while (static_cast<long long>(s.count()) < target && grew) {
    grew = false;
    for (Element x = 1; x < g.order(); ++x) {
      if (s.test(x) || !is_p_power(g.elt_order(x))) continue;
      ElementSet t = g.extend(s, gens, x);
      if (is_p_power(static_cast<long long>(t.count()))) {
        gens.push_back(x);
        s = t;
        grew = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace detail

/// p2: every subgroup of order p^2 is cyclic.  pq: every subgroup of order
/// pq is cyclic (p = q allowed).  Sylow: Sylow subgroups are cyclic, or
/// generalized quaternion for p = 2.
inline bool check_conditions(const FiniteGroup& g, Condition which) {
  const auto primes = prime_divisors(static_cast<long long>(g.order()));
  const long long n = static_cast<long long>(g.order());
  if (which == Condition::Sylow) {
    for (long long p : primes) {
      const ElementSet s = detail::sylow_subgroup(g, p);
      const auto size = static_cast<unsigned>(s.count());
      bool cyclic = false;
      unsigned involutions = 0;
      for (std::size_t i = 0; i < g.order(); ++i) {
        if (!s.test(i)) continue;
        cyclic = cyclic || g.elt_order(static_cast<Element>(i)) == size;
        involutions += g.elt_order(static_cast<Element>(i)) == 2;
      }
      if (!cyclic && !(p == 2 && involutions == 1)) return false;
    }
    return true;
  }
  std::set<long long> orders;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i; j < primes.size(); ++j) {
      if (which == Condition::P2 && i != j) continue;
      const long long o = primes[i] * primes[j];
      if (n % o == 0) orders.insert(o);
    }
  if (orders.empty()) return true;
  return detail::two_generated_subgroups_cyclic(g, orders);
}

inline ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (Element x = 0; x < g.order(); ++x)
    if (g.class_size(g.class_of(x)) == 1) z.set(x);
  return z;
}

/// Subgroup generated by all commutators.
inline ElementSet commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  ElementSet seen;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return g.closure(comms);
}

/// Greedy generating set: elements in id order that enlarge the span.
inline std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet s;
  s.set(0);
  // Prefer high-order elements so fewer generators are needed.
  std::vector<Element> order_desc(g.order());
  std::iota(order_desc.begin(), order_desc.end(), 0);
  std::stable_sort(order_desc.begin(), order_desc.end(),
                   [&](Element a, Element b) { return g.elt_order(a) > g.elt_order(b); });
  for (Element x : order_desc) {
    if (s.count() == g.order()) break;
    if (s.test(x)) continue;
    s = g.extend(s, gens, x);
    gens.push_back(x);
  }
  return gens;
}

/// All automorphisms of g as permutations of element ids.  Intended for the
/// small groups the classifiers handle; cost is roughly the product of the
/// candidate-image counts of a greedy generating set.
inline std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g) {
  const std::vector<Element> gens = generating_set(g);
  const std::size_t n = g.order();
  // Spanning tree: every element as parent * gens[k].
  std::vector<Element> parent(n, 0);
  std::vector<std::size_t> via(n, 0);
  std::vector<Element> bfs{0};
  std::vector<bool> seen(n);
  seen[0] = true;
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element z = g.mul(bfs[h], gens[k]);
      if (!seen[z]) {
        seen[z] = true;
        parent[z] = bfs[h];
        via[z] = k;
        bfs.push_back(z);
      }
    }

  std::vector<std::vector<Element>> out;
  std::vector<Element> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) {
      std::vector<Element> phi(n);
      phi[0] = 0;
      for (std::size_t i = 1; i < bfs.size(); ++i) phi[bfs[i]] = g.mul(phi[parent[bfs[i]]], images[via[bfs[i]]]);
      std::vector<bool> hit(n);
      for (Element x : phi) {
        if (hit[x]) return;
        hit[x] = true;
      }
      for (Element x = 0; x < n; ++x)
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (phi[g.mul(x, gens[j])] != g.mul(phi[x], images[j])) return;
      out.push_back(std::move(phi));
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (g.elt_order(y) != g.elt_order(gens[k])) continue;
      images[k] = y;
      assign(k + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace genus0
