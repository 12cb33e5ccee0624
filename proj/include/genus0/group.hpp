#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus0 {

using Element = std::uint32_t;

/// Largest group order representable; subgroups are bitsets of this width.
inline constexpr std::size_t kMaxOrder = 512;
using ElementSet = std::bitset<kMaxOrder>;

enum class FamilyKind {
  Cyclic,
  Dihedral,
  GeneralizedQuaternion,
  Polyhedral,
  BinaryIcosahedral,
  ZM,
  TypeII,
  Custom,
};

enum class PolyhedralKind { A4, S4, A5 };

/// Constructor metadata. Parameters are interpreted per kind:
/// Cyclic(n): a=n.  Dihedral(2n): a=n.  GeneralizedQuaternion(2^n): a=n.
/// Polyhedral: a=PolyhedralKind.  ZM(m,n,r): a,b,c.  TypeII(p,l): a=p, b=l.
struct Family {
  FamilyKind kind = FamilyKind::Custom;
  long long a = 0;
  long long b = 0;
  long long c = 0;

  bool operator==(const Family&) const = default;
};

inline std::string polyhedral_name(PolyhedralKind k) {
  switch (k) {
    case PolyhedralKind::A4: return "A4";
    case PolyhedralKind::S4: return "S4";
    case PolyhedralKind::A5: return "A5";
  }
  return "?";
}

/// Descriptive tag, e.g. "Dihedral(10)" or "ZM(5,4,-1)".
inline std::string describe(const Family& f) {
  using std::to_string;
  switch (f.kind) {
    case FamilyKind::Cyclic: return "Cyclic(" + to_string(f.a) + ")";
    case FamilyKind::Dihedral: return "Dihedral(" + to_string(2 * f.a) + ")";
    case FamilyKind::GeneralizedQuaternion: return "GeneralizedQuaternion(" + to_string(1LL << f.a) + ")";
    case FamilyKind::Polyhedral: return "Polyhedral(" + polyhedral_name(static_cast<PolyhedralKind>(f.a)) + ")";
    case FamilyKind::BinaryIcosahedral: return "BinaryIcosahedral";
    case FamilyKind::ZM: return "ZM(" + to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c) + ")";
    case FamilyKind::TypeII: return "TypeII(" + to_string(f.a) + "," + to_string(f.b) + ")";
    case FamilyKind::Custom: return "Custom";
  }
  return "Custom";
}

/// Group spec in the CLI mini-language, e.g. "D10", "Q16", "Istar".
inline std::string spec_string(const Family& f, std::size_t order) {
  using std::to_string;
  switch (f.kind) {
    case FamilyKind::Cyclic: return "C" + to_string(f.a);
    case FamilyKind::Dihedral: return "D" + to_string(2 * f.a);
    case FamilyKind::GeneralizedQuaternion: return "Q" + to_string(1LL << f.a);
    case FamilyKind::Polyhedral: return polyhedral_name(static_cast<PolyhedralKind>(f.a));
    case FamilyKind::BinaryIcosahedral: return "Istar";
    case FamilyKind::ZM: return "ZM(" + to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c) + ")";
    case FamilyKind::TypeII: return "TypeII(" + to_string(f.a) + "," + to_string(f.b) + ")";
    case FamilyKind::Custom: return "Custom(" + to_string(order) + ")";
  }
  return "Custom";
}

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An explicit finite group given by its multiplication table.
///
/// Element 0 is the identity. Copies share the underlying table, so a
/// FiniteGroup is cheap to pass by value and immutable once built.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<Element>{0}, Family{FamilyKind::Cyclic, 1}) {}

  /// `table` is row-major, table[i*order + j] = i*j.  Throws GroupError
  /// unless 0 is a two-sided identity and every row and column is a
  /// permutation.  Associativity is not checked here; see check_associativity.
  FiniteGroup(std::vector<Element> table, Family family, std::vector<std::string> words = {})
      : data_(std::make_shared<Data>()) {
    Data& d = *data_;
    const std::size_t n = isqrt(table.size());
    if (n == 0 || n * n != table.size()) throw GroupError("multiplication table is not square");
    if (n > kMaxOrder) throw GroupError("group order exceeds " + std::to_string(kMaxOrder));
    d.order = n;
    d.table = std::move(table);
    d.family = family;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row_seen(n), col_seen(n);
      for (std::size_t j = 0; j < n; ++j) {
        Element r = d.table[i * n + j];
        Element c = d.table[j * n + i];
        if (r >= n || c >= n || row_seen[r] || col_seen[c]) throw GroupError("table is not a Latin square");
        row_seen[r] = col_seen[c] = true;
      }
      if (d.table[i] != i || d.table[i * n] != i) throw GroupError("element 0 is not the identity");
    }
    d.inverse.resize(n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (d.table[x * n + y] == 0) d.inverse[x] = y;
    d.elt_order.resize(n);
    for (Element x = 0; x < n; ++x) {
      unsigned k = 1;
      for (Element p = x; p != 0; p = d.table[p * n + x]) ++k;
      d.elt_order[x] = k;
    }
    d.words = std::move(words);
    if (d.words.size() != n) {
      d.words.resize(n);
      for (Element x = 0; x < n; ++x) d.words[x] = x == 0 ? "1" : "g" + std::to_string(x);
    }
    compute_classes();
  }

  std::size_t order() const { return data_->order; }
  const Family& family() const { return data_->family; }

  Element mul(Element a, Element b) const { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  unsigned elt_order(Element a) const { return data_->elt_order[a]; }
  const std::string& word(Element a) const { return data_->words[a]; }
  std::span<const Element> table() const { return data_->table; }

  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  Element pow(Element x, long long k) const {
    const long long m = elt_order(x);
    k %= m;
    if (k < 0) k += m;
    Element r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  Element product(std::span<const Element> xs) const {
    Element r = 0;
    for (Element x : xs) r = mul(r, x);
    return r;
  }

  std::vector<Element> elements_of_order(unsigned n) const {
    std::vector<Element> out;
    for (Element x = 0; x < order(); ++x)
      if (elt_order(x) == n) out.push_back(x);
    return out;
  }

  /// Sorted set of distinct element orders.
  std::vector<unsigned> order_spectrum() const {
    std::vector<unsigned> s(data_->elt_order.begin(), data_->elt_order.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  /// Conjugacy class index of x; classes are numbered by their least element.
  std::size_t class_of(Element x) const { return data_->class_of[x]; }
  std::size_t class_count() const { return data_->class_reps.size(); }
  Element class_rep(std::size_t c) const { return data_->class_reps[c]; }
  std::size_t class_size(std::size_t c) const { return data_->class_sizes[c]; }
  std::size_t centralizer_order(Element x) const { return order() / class_size(class_of(x)); }

  ElementSet all() const {
    ElementSet s;
    for (std::size_t i = 0; i < order(); ++i) s.set(i);
    return s;
  }

  /// Subgroup generated by `base` and `x`, where `base` is the subgroup
  /// generated by `base_gens`.
  ElementSet extend(const ElementSet& base, std::span<const Element> base_gens, Element x) const {
    if (base.test(x)) return base;
    std::vector<Element> step(base_gens.begin(), base_gens.end());
    step.push_back(x);
    ElementSet s = base;
    s.set(0);
    std::vector<Element> queue;
    for (std::size_t i = 0; i < order(); ++i)
      if (s.test(i)) queue.push_back(static_cast<Element>(i));
    for (std::size_t head = 0; head < queue.size() && queue.size() < order(); ++head) {
      const Element y = queue[head];
      for (Element g : step) {
        const Element z = mul(y, g);
        if (!s.test(z)) {
          s.set(z);
          queue.push_back(z);
        }
      }
    }
    return s;
  }

  ElementSet closure(std::span<const Element> gens) const {
    ElementSet s;
    s.set(0);
    for (std::size_t i = 0; i < gens.size(); ++i) s = extend(s, gens.first(i), gens[i]);
    return s;
  }

  ElementSet cyclic(Element x) const {
    ElementSet s;
    Element p = 0;
    do {
      s.set(p);
      p = mul(p, x);
    } while (p != 0);
    return s;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_cyclic() const {
    for (Element x = 0; x < order(); ++x)
      if (elt_order(x) == order()) return true;
    return false;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<unsigned> elt_order;
    std::vector<std::string> words;
    Family family;
    std::vector<std::size_t> class_of;
    std::vector<Element> class_reps;
    std::vector<std::size_t> class_sizes;
  };

  static std::size_t isqrt(std::size_t v) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }

  void compute_classes() {
    Data& d = *data_;
    const std::size_t none = static_cast<std::size_t>(-1);
    d.class_of.assign(d.order, none);
    for (Element x = 0; x < d.order; ++x) {
      if (d.class_of[x] != none) continue;
      const std::size_t c = d.class_reps.size();
      d.class_reps.push_back(x);
      std::size_t size = 0;
      for (Element g = 0; g < d.order; ++g) {
        Element y = conj(g, x);
        if (d.class_of[y] == none) {
          d.class_of[y] = c;
          ++size;
        }
      }
      d.class_sizes.push_back(size);
    }
  }

  std::shared_ptr<Data> data_;
};

inline std::vector<Element> to_vector(const ElementSet& s, std::size_t order) {
  std::vector<Element> v;
  for (std::size_t i = 0; i < order; ++i)
    if (s.test(i)) v.push_back(static_cast<Element>(i));
  return v;
}

/// Exhaustive for order <= 64, otherwise `samples` random triples.
inline bool check_associativity(const FiniteGroup& g, std::size_t samples = 100000, unsigned seed = 1) {
  const std::size_t n = g.order();
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

/// A subgroup of a FiniteGroup, stored as a sorted element list.
struct Subgroup {
  FiniteGroup parent;
  std::vector<Element> elements;
  std::vector<Element> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

  ElementSet as_set() const {
    ElementSet s;
    for (Element x : elements) s.set(x);
    return s;
  }

  static Subgroup generated_by(const FiniteGroup& g, std::vector<Element> gens) {
    ElementSet s = g.closure(gens);
    return Subgroup{g, to_vector(s, g.order()), std::move(gens)};
  }
};

inline Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw GroupError("element id out of range");
  return Subgroup{g, to_vector(g.cyclic(x), g.order()), {x}};
}

/// g H g^-1 as a sorted element list.
inline std::vector<Element> conjugate_elements(const Subgroup& h, Element g) {
  std::vector<Element> out;
  out.reserve(h.elements.size());
  for (Element x : h.elements) out.push_back(h.parent.conj(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace genus0
