#pragma once

#include "genus0/group.hpp"

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace genus0 {

namespace detail {

inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long pow_mod(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base = mod(base, m);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
  }
  return r;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// "X", "X^e" or "" for e == 0.
inline std::string term(const char* letter, long long e) {
  if (e == 0) return "";
  if (e == 1) return letter;
  return std::string(letter) + "^" + std::to_string(e);
}

inline std::string join_terms(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out.empty() ? "1" : out;
}

/// Tabulates a group given by an explicit element list (identity first)
/// and a multiplication on the representation.
template <typename T, typename Mul, typename Word>
FiniteGroup tabulate(const std::vector<T>& elems, Mul mul, Word word, Family family) {
  std::map<T, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(mul(elems[i], elems[j]));
      if (it == index.end()) throw GroupError("element list is not closed under multiplication");
      table[i * n + j] = it->second;
    }
  std::vector<std::string> words;
  words.reserve(n);
  for (const T& e : elems) words.push_back(word(e));
  return FiniteGroup(std::move(table), family, std::move(words));
}

using Perm = std::vector<int>;

inline std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

inline bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace detail

/// Z_n with element k standing for T^k.
inline FiniteGroup build_cyclic(long long n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  if (static_cast<std::size_t>(n) > kMaxOrder) throw GroupError("group order too large");
  std::vector<Element> table(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) table[static_cast<std::size_t>(i * n + j)] = static_cast<Element>((i + j) % n);
  std::vector<std::string> words;
  for (long long k = 0; k < n; ++k) words.push_back(detail::join_terms({detail::term("T", k)}));
  return FiniteGroup(std::move(table), Family{FamilyKind::Cyclic, n}, std::move(words));
}

/// D_{2n} = <R, S | R^n = S^2 = 1, S R S = R^-1>; id i + n*j is R^i S^j.
inline FiniteGroup build_dihedral(long long n) {
  if (n < 2) throw GroupError("dihedral group needs n >= 2");
  if (static_cast<std::size_t>(2 * n) > kMaxOrder) throw GroupError("group order too large");
  using E = std::array<long long, 2>;  // {j, i} orders ids by (j, i)
  std::vector<E> elems;
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < n; ++i) elems.push_back({j, i});
  auto mul = [n](const E& x, const E& y) {
    const long long i = detail::mod(x[1] + (x[0] ? -y[1] : y[1]), n);
    return E{(x[0] + y[0]) % 2, i};
  };
  auto word = [](const E& x) { return detail::join_terms({detail::term("R", x[1]), detail::term("S", x[0])}); };
  return detail::tabulate(elems, mul, word, Family{FamilyKind::Dihedral, n});
}

/// Q(2^n) = <A, B | A^{2^{n-1}} = 1, B^2 = A^{2^{n-2}}, B A B^-1 = A^-1>.
/// Elements are B^j A^i (j in {0,1}) with id i + 2^{n-1} j.
inline FiniteGroup build_generalized_quaternion(long long n) {
  if (n < 3) throw GroupError("generalized quaternion group needs n >= 3 (smaller cases are cyclic)");
  if (n > 62 || (1ULL << n) > kMaxOrder) throw GroupError("group order too large");
  const long long m = 1LL << (n - 1);
  using E = std::array<long long, 2>;  // {j, i}
  std::vector<E> elems;
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < m; ++i) elems.push_back({j, i});
  // (B^j A^i)(B^l A^k) = B^{j+l} A^{(-1)^l i + k}, and B^2 = A^{m/2} is central.
  auto mul = [m](const E& x, const E& y) {
    long long i = (y[0] ? -x[1] : x[1]) + y[1];
    long long j = x[0] + y[0];
    if (j >= 2) {
      j -= 2;
      i += m / 2;
    }
    return E{j, detail::mod(i, m)};
  };
  auto word = [](const E& x) { return detail::join_terms({detail::term("B", x[0]), detail::term("A", x[1])}); };
  return detail::tabulate(elems, mul, word, Family{FamilyKind::GeneralizedQuaternion, n});
}

/// Reason a ZM parameter triple was rejected, empty when valid.
inline std::string zm_condition_failure(long long m, long long n, long long r) {
  if (m < 1 || n < 1) return "m and n must be positive";
  if (std::gcd((r - 1) * n, m) != 1)
    return "GCD((r-1)n, m) = " + std::to_string(std::gcd((r - 1) * n, m)) + " != 1";
  if (detail::pow_mod(r, n, m) != 1 % m) return "r^n is not 1 mod m";
  return {};
}

/// G_{m,n}(r) = <A, B | A^m = B^n = 1, B A B^-1 = A^r>.
/// Elements are B^j A^i with id i + m j.
inline FiniteGroup build_zm(long long m, long long n, long long r) {
  if (auto why = zm_condition_failure(m, n, r); !why.empty()) throw GroupError("ZM(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ") rejected: " + why);
  if (static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n) > kMaxOrder) throw GroupError("group order too large");
  // A^i B = B A^{i r^-1}
  const long long rinv = detail::pow_mod(r, n - 1, m);
  std::vector<long long> rinv_pow(static_cast<std::size_t>(n));
  for (long long l = 0; l < n; ++l) rinv_pow[static_cast<std::size_t>(l)] = detail::pow_mod(rinv, l, m);
  using E = std::array<long long, 2>;  // {j, i}
  std::vector<E> elems;
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < m; ++i) elems.push_back({j, i});
  auto mul = [m, n, &rinv_pow](const E& x, const E& y) {
    const long long i = (x[1] * rinv_pow[static_cast<std::size_t>(y[0])] + y[1]) % m;
    return E{(x[0] + y[0]) % n, i};
  };
  auto word = [](const E& x) { return detail::join_terms({detail::term("B", x[0]), detail::term("A", x[1])}); };
  return detail::tabulate(elems, mul, word, Family{FamilyKind::ZM, m, n, r});
}

/// Even (A4, A5) or all (S4) permutations of 4 or 5 points.
inline FiniteGroup build_polyhedral(PolyhedralKind kind) {
  const int points = kind == PolyhedralKind::A5 ? 5 : 4;
  const bool even_only = kind != PolyhedralKind::S4;
  std::vector<detail::Perm> elems;
  detail::Perm p(static_cast<std::size_t>(points));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || detail::is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // (x y)(i) = x(y(i))
  auto mul = [](const detail::Perm& x, const detail::Perm& y) {
    detail::Perm z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[static_cast<std::size_t>(y[i])];
    return z;
  };
  return detail::tabulate(elems, mul, detail::cycle_notation, Family{FamilyKind::Polyhedral, static_cast<long long>(kind)});
}

/// I* realized as SL(2, 5).
inline FiniteGroup build_binary_icosahedral() {
  using M = std::array<int, 4>;  // [a b; c d]
  std::vector<M> elems{{1, 0, 0, 1}};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          M x{a, b, c, d};
          if (x != M{1, 0, 0, 1} && ((a * d - b * c) % 5 + 5) % 5 == 1) elems.push_back(x);
        }
  auto mul = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
             (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
  };
  auto word = [](const M& x) {
    if (x == M{1, 0, 0, 1}) return std::string("1");
    return "[" + std::to_string(x[0]) + " " + std::to_string(x[1]) + "; " + std::to_string(x[2]) + " " + std::to_string(x[3]) + "]";
  };
  return detail::tabulate(elems, mul, word, Family{FamilyKind::BinaryIcosahedral});
}

/// Order-8p group <A, B, R | A^p = B^4 = 1, B A B^-1 = A^-1, R^2 = B^2,
/// R A R^-1 = A^l, R B R^-1 = B^-1>.  Elements are R^k B^j A^i with id
/// i + p (j + 4k).  Both l = 1 and l = -1 (mod p) are accepted.
inline FiniteGroup build_type_ii(long long p, long long l) {
  if (p < 3 || !detail::is_prime(p)) throw GroupError("TypeII needs an odd prime p");
  const long long lm = detail::mod(l, p);
  if (lm != 1 && lm != p - 1) throw GroupError("TypeII needs l = +-1 mod p");
  if (static_cast<std::size_t>(8 * p) > kMaxOrder) throw GroupError("group order too large");
  using E = std::array<long long, 3>;  // {k, j, i}
  std::vector<E> elems;
  for (long long k = 0; k < 2; ++k)
    for (long long j = 0; j < 4; ++j)
      for (long long i = 0; i < p; ++i) elems.push_back({k, j, i});
  // A^i R = R A^{i l},  B^j R = R B^-j,  A^i B^j = B^j A^{(-1)^j i},  R^2 = B^2 central.
  auto mul = [p, lm](const E& x, const E& y) {
    long long k = x[0] + y[0];
    long long j = (y[0] ? -x[1] : x[1]);
    long long i = y[0] ? x[2] * lm : x[2];
    j += y[1];
    if (y[1] % 2) i = -i;
    i += y[2];
    if (k >= 2) {
      k -= 2;
      j += 2;
    }
    return E{k, detail::mod(j, 4), detail::mod(i, p)};
  };
  auto word = [](const E& x) {
    return detail::join_terms({detail::term("R", x[0]), detail::term("B", x[1]), detail::term("A", x[2])});
  };
  return detail::tabulate(elems, mul, word, Family{FamilyKind::TypeII, p, l});
}

/// Exponents (j, i) of the normal form B^j A^i in groups built by
/// build_generalized_quaternion or build_zm.
struct MetacyclicForm {
  long long b = 0;
  long long a = 0;
};

inline long long metacyclic_modulus(const FiniteGroup& g) {
  switch (g.family().kind) {
    case FamilyKind::GeneralizedQuaternion: return 1LL << (g.family().a - 1);
    case FamilyKind::ZM: return g.family().a;
    default: throw GroupError("group has no B^j A^i normal form");
  }
}

inline MetacyclicForm metacyclic_form(const FiniteGroup& g, Element x) {
  const long long m = metacyclic_modulus(g);
  return {static_cast<long long>(x) / m, static_cast<long long>(x) % m};
}

inline Element metacyclic_element(const FiniteGroup& g, long long b, long long a) {
  const long long m = metacyclic_modulus(g);
  const long long nb = static_cast<long long>(g.order()) / m;
  return static_cast<Element>(detail::mod(a, m) + m * detail::mod(b, nb));
}

/// Id of R^k B^j A^i in build_type_ii(p, l).
inline Element type_ii_element(long long p, long long k, long long j, long long i) {
  return static_cast<Element>(detail::mod(i, p) + p * (detail::mod(j, 4) + 4 * detail::mod(k, 2)));
}

}  // namespace genus0
