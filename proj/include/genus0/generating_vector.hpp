#pragma once

#include "genus0/group.hpp"
#include "genus0/signature.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus0 {

/// Images (T_1, ..., T_r) of the elliptic generators of Gamma(0 | n_1..n_r),
/// aligned with the sorted periods of `signature`.
struct GeneratingVector {
  FiniteGroup group;
  Signature signature;
  std::vector<Element> elements;
};

enum class VectorFailure { None, Order, Product, Generation };

inline const char* to_string(VectorFailure f) {
  switch (f) {
    case VectorFailure::None: return "none";
    case VectorFailure::Order: return "order";
    case VectorFailure::Product: return "product";
    case VectorFailure::Generation: return "generation";
  }
  return "?";
}

struct Validation {
  VectorFailure failure = VectorFailure::None;
  /// Offending position for order failures.
  std::size_t index = 0;
  std::string reason;

  bool ok() const { return failure == VectorFailure::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks the three surface-kernel conditions in the order: element orders
/// match the periods, the product is the identity, the entries generate G.
inline Validation validate(const GeneratingVector& v) {
  const FiniteGroup& g = v.group;
  if (v.signature.orbit_genus() != 0) throw std::invalid_argument("only orbit genus 0 vectors are supported");
  if (v.elements.size() != v.signature.r())
    throw std::invalid_argument("arity mismatch: " + std::to_string(v.elements.size()) + " elements for " +
                                std::to_string(v.signature.r()) + " periods");
  for (Element x : v.elements)
    if (x >= g.order()) throw std::invalid_argument("element id " + std::to_string(x) + " out of range");
  for (std::size_t j = 0; j < v.elements.size(); ++j) {
    const unsigned o = g.elt_order(v.elements[j]);
    if (o != v.signature.periods()[j])
      return {VectorFailure::Order, j,
              "T_" + std::to_string(j + 1) + " has order " + std::to_string(o) + ", period is " +
                  std::to_string(v.signature.periods()[j])};
  }
  if (g.product(v.elements) != 0) return {VectorFailure::Product, 0, "T_1 T_2 ... T_r != 1"};
  if (g.closure(v.elements).count() != g.order()) return {VectorFailure::Generation, 0, "the T_j do not generate G"};
  return {};
}

/// Additive side condition on a vector: sum_j weight[T_j] == target.
/// Weights must be nonnegative.
struct WeightConstraint {
  std::vector<long long> weight;
  long long target = 0;
};

struct SearchOptions {
  /// Stop after this many vectors have been emitted.
  std::optional<std::size_t> cap;
  /// Abort after visiting this many search nodes.
  std::optional<std::size_t> node_budget;
  std::vector<WeightConstraint> constraints;
};

struct SearchStats {
  std::size_t emitted = 0;
  std::size_t nodes = 0;
  bool capped = false;
  bool budget_exhausted = false;
};

/// Backtracking enumeration of generating vectors for `sig`, in
/// lexicographic order of element ids.  T_1..T_{r-1} range over elements of
/// the exact period orders; T_r is solved from the product relation.
/// `visit(std::span<const Element>)` returns false to stop early.
template <typename Visit>
SearchStats search_vectors(const FiniteGroup& g, const Signature& sig, Visit&& visit, const SearchOptions& opts = {}) {
  if (sig.orbit_genus() != 0) throw std::invalid_argument("vector search needs orbit genus 0");
  SearchStats stats;
  const std::size_t r = sig.r();
  const auto& periods = sig.periods();
  if (r == 0) {
    if (g.order() == 1 && std::all_of(opts.constraints.begin(), opts.constraints.end(), [](const WeightConstraint& c) { return c.target == 0; })) {
      ++stats.emitted;
      visit(std::span<const Element>{});
    }
    return stats;
  }

  std::vector<std::vector<Element>> candidates(r);
  for (std::size_t j = 0; j < r; ++j) {
    candidates[j] = g.elements_of_order(periods[j]);
    if (candidates[j].empty()) return stats;
  }

  // Suffix bounds on each constraint's remaining contribution.
  const std::size_t nc = opts.constraints.size();
  std::vector<std::vector<long long>> min_suffix(nc, std::vector<long long>(r + 1, 0));
  std::vector<std::vector<long long>> max_suffix(nc, std::vector<long long>(r + 1, 0));
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& w = opts.constraints[c].weight;
    for (std::size_t j = r; j-- > 0;) {
      long long lo = std::numeric_limits<long long>::max(), hi = 0;
      for (Element x : candidates[j]) {
        lo = std::min(lo, w[x]);
        hi = std::max(hi, w[x]);
      }
      min_suffix[c][j] = min_suffix[c][j + 1] + lo;
      max_suffix[c][j] = max_suffix[c][j + 1] + hi;
    }
  }
  std::vector<long long> partial(nc, 0);
  auto feasible_after = [&](std::size_t next) {
    for (std::size_t c = 0; c < nc; ++c) {
      const long long t = opts.constraints[c].target;
      if (partial[c] + min_suffix[c][next] > t || partial[c] + max_suffix[c][next] < t) return false;
    }
    return true;
  };
  if (!feasible_after(0)) return stats;

  std::vector<Element> chosen(r);
  std::vector<ElementSet> span(r);
  std::vector<Element> prefix(r);
  const std::size_t full = g.order();
  bool stop = false;

  auto descend = [&](auto&& self, std::size_t j, Element prod, const ElementSet& generated) -> void {
    if (stop) return;
    if (j + 1 == r) {
      const Element last = g.inv(prod);
      if (g.elt_order(last) != periods[j]) return;
      if (generated.count() != full) return;
      for (std::size_t c = 0; c < nc; ++c)
        if (partial[c] + opts.constraints[c].weight[last] != opts.constraints[c].target) return;
      chosen[j] = last;
      ++stats.emitted;
      if (!visit(std::span<const Element>(chosen))) stop = true;
      if (opts.cap && stats.emitted >= *opts.cap) {
        stats.capped = true;
        stop = true;
      }
      return;
    }
    for (Element x : candidates[j]) {
      if (stop) return;
      ++stats.nodes;
      if (opts.node_budget && stats.nodes > *opts.node_budget) {
        stats.budget_exhausted = true;
        stop = true;
        return;
      }
      for (std::size_t c = 0; c < nc; ++c) partial[c] += opts.constraints[c].weight[x];
      if (feasible_after(j + 1)) {
        chosen[j] = x;
        const ElementSet next = g.extend(generated, std::span<const Element>(chosen.data(), j), x);
        // the last entry adds no generator, so the first r-1 must already
        // generate G by the time we reach it
        if (j + 2 < r || next.count() == full) self(self, j + 1, g.mul(prod, x), next);
      }
      for (std::size_t c = 0; c < nc; ++c) partial[c] -= opts.constraints[c].weight[x];
    }
  };
  ElementSet trivial;
  trivial.set(0);
  descend(descend, 0, 0, trivial);
  return stats;
}

struct VectorList {
  std::vector<GeneratingVector> vectors;
  SearchStats stats;
};

inline VectorList enumerate_vectors(const FiniteGroup& g, const Signature& sig, const SearchOptions& opts = {}) {
  VectorList out;
  out.stats = search_vectors(
      g, sig,
      [&](std::span<const Element> v) {
        out.vectors.push_back({g, sig, std::vector<Element>(v.begin(), v.end())});
        return true;
      },
      opts);
  return out;
}

inline bool exists(const FiniteGroup& g, const Signature& sig) {
  SearchOptions opts;
  opts.cap = 1;
  return search_vectors(g, sig, [](std::span<const Element>) { return false; }, opts).emitted > 0;
}

/// Vectors whose simultaneous-conjugation orbit has them as the
/// lexicographically least member.
inline std::vector<GeneratingVector> dedup_up_to_conjugation(const std::vector<GeneratingVector>& vs) {
  std::vector<GeneratingVector> out;
  for (const auto& v : vs) {
    const FiniteGroup& g = v.group;
    bool least = true;
    std::vector<Element> w(v.elements.size());
    for (Element d = 1; d < g.order() && least; ++d) {
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = g.conj(d, v.elements[j]);
      if (w < v.elements) least = false;
    }
    if (least) out.push_back(v);
  }
  return out;
}

/// Number of orbits of a set of vectors (all for one group and signature)
/// under the diagonal action of the given automorphisms.
inline std::size_t count_orbits(const std::vector<GeneratingVector>& vs, const std::vector<std::vector<Element>>& autos) {
  std::set<std::vector<Element>> remaining;
  for (const auto& v : vs) remaining.insert(v.elements);
  std::size_t orbits = 0;
  while (!remaining.empty()) {
    const std::vector<Element> seed = *remaining.begin();
    ++orbits;
    std::vector<Element> img(seed.size());
    for (const auto& phi : autos) {
      for (std::size_t j = 0; j < seed.size(); ++j) img[j] = phi[seed[j]];
      remaining.erase(img);
    }
    remaining.erase(seed);
  }
  return orbits;
}

}  // namespace genus0
