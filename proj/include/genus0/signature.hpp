#pragma once

#include "genus0/group.hpp"
#include "genus0/rational.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genus0 {

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fuchsian signature (h | n_1, ..., n_r) with periods kept sorted ascending.
class Signature {
 public:
  Signature() = default;
  Signature(unsigned orbit_genus, std::vector<unsigned> periods) : orbit_genus_(orbit_genus), periods_(std::move(periods)) {
    for (unsigned n : periods_)
      if (n < 2) throw SignatureError("periods must be finite integers >= 2");
    std::sort(periods_.begin(), periods_.end());
  }

  unsigned orbit_genus() const { return orbit_genus_; }
  const std::vector<unsigned>& periods() const { return periods_; }
  std::size_t r() const { return periods_.size(); }

  std::size_t count(unsigned n) const { return static_cast<std::size_t>(std::count(periods_.begin(), periods_.end(), n)); }

  auto operator<=>(const Signature&) const = default;

 private:
  unsigned orbit_genus_ = 0;
  std::vector<unsigned> periods_;
};

/// "(0|2,2,3,3)"; an empty period list prints as "(g|-)".
inline std::string to_string(const Signature& s) {
  std::string out = "(" + std::to_string(s.orbit_genus()) + "|";
  if (s.periods().empty()) out += "-";
  for (std::size_t i = 0; i < s.r(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.periods()[i]);
  }
  return out + ")";
}

inline Signature parse_signature(std::string_view text) {
  auto fail = [&](const std::string& why) { return SignatureError("bad signature '" + std::string(text) + "': " + why); };
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw fail("expected (h|n1,...,nr)");
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw fail("missing '|'");
  auto parse_uint = [&](std::string_view tok) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      if (tok == "inf" || tok == "oo") throw fail("infinite periods are not supported");
      throw fail("'" + std::string(tok) + "' is not a nonnegative integer");
    }
    return v;
  };
  const unsigned h = parse_uint(std::string_view(s).substr(1, bar - 1));
  std::string_view rest = std::string_view(s).substr(bar + 1, s.size() - bar - 2);
  std::vector<unsigned> periods;
  if (!rest.empty() && rest != "-") {
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      periods.push_back(parse_uint(rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  try {
    return Signature(h, std::move(periods));
  } catch (const SignatureError& e) {
    throw fail(e.what());
  }
}

/// 2h - 2 + sum(1 - 1/n_j): the negated orbifold Euler characteristic.
inline Rational area_term(const Signature& s) {
  Rational x = make_rational(2 * static_cast<std::int64_t>(s.orbit_genus()) - 2);
  for (unsigned n : s.periods()) x += make_rational(static_cast<std::int64_t>(n) - 1, n);
  return x;
}

class RiemannHurwitzError : public std::domain_error {
 public:
  enum class Kind { NonIntegral, NegativeGenus };
  RiemannHurwitzError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct GenusResult {
  std::optional<long long> genus;
  std::optional<RiemannHurwitzError::Kind> error;
};

/// Solves 2g - 2 = |G| (2h - 2 + sum(1 - 1/n_j)) for g without throwing.
inline GenusResult try_rh_genus(std::size_t group_order, const Signature& sig) {
  const Rational two_g = make_rational(static_cast<std::int64_t>(group_order)) * area_term(sig) + 2;
  const Rational g = two_g / 2;
  if (!is_integral(g)) return {std::nullopt, RiemannHurwitzError::Kind::NonIntegral};
  if (g < 0) return {std::nullopt, RiemannHurwitzError::Kind::NegativeGenus};
  return {to_int64(g), std::nullopt};
}

inline long long rh_genus(std::size_t group_order, const Signature& sig) {
  if (group_order == 0) throw std::invalid_argument("group order must be positive");
  const GenusResult r = try_rh_genus(group_order, sig);
  if (r.error == RiemannHurwitzError::Kind::NonIntegral)
    throw RiemannHurwitzError(*r.error, "signature " + to_string(sig) + " gives a non-integral genus for order " + std::to_string(group_order));
  if (r.error == RiemannHurwitzError::Kind::NegativeGenus)
    throw RiemannHurwitzError(*r.error, "signature " + to_string(sig) + " gives a negative genus for order " + std::to_string(group_order));
  return *r.genus;
}

enum class Geometry { Spherical, Euclidean, Hyperbolic };

inline const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// Sign of the orbifold Euler characteristic 2 - sum(1 - 1/n_j).
inline Geometry geometry_type(const Signature& sig) {
  if (sig.orbit_genus() != 0) throw SignatureError("geometry_type expects orbit genus 0, got " + to_string(sig));
  const Rational x = area_term(sig);
  if (x < 0) return Geometry::Spherical;
  if (x == 0) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

struct SignatureGenus {
  Signature signature;
  long long genus = 0;

  auto operator<=>(const SignatureGenus&) const = default;
};

/// Every (0 | n_1..n_r) with periods drawn from the element orders of G whose
/// Riemann-Hurwitz genus is a nonnegative integer <= max_genus, sorted by
/// genus then signature.
inline std::vector<SignatureGenus> enumerate_signatures(const FiniteGroup& g, long long max_genus) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be nonnegative");
  std::vector<unsigned> periods;
  for (unsigned o : g.order_spectrum())
    if (o > 1) periods.push_back(o);
  const auto order = static_cast<std::int64_t>(g.order());
  // sum(1 - 1/n_j) may not exceed 2 + (2 max_genus - 2)/|G|
  const Rational cap = make_rational(2) + make_rational(2 * max_genus - 2, order);
  std::vector<SignatureGenus> out;
  std::vector<unsigned> current;
  auto visit = [&](auto&& self, std::size_t first, const Rational& sum) -> void {
    Signature sig(0, current);
    const GenusResult res = try_rh_genus(g.order(), sig);
    if (res.genus && *res.genus <= max_genus) out.push_back({std::move(sig), *res.genus});
    for (std::size_t k = first; k < periods.size(); ++k) {
      const Rational next = sum + make_rational(periods[k] - 1, periods[k]);
      // terms grow with n, so larger periods only overshoot further
      if (next > cap) break;
      current.push_back(periods[k]);
      self(self, k, next);
      current.pop_back();
    }
  };
  visit(visit, 0, Rational(0));
  std::sort(out.begin(), out.end(), [](const SignatureGenus& a, const SignatureGenus& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    return a.signature < b.signature;
  });
  return out;
}

}  // namespace genus0
