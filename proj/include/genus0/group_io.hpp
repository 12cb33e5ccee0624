#pragma once

#include "genus0/constructors.hpp"
#include "genus0/group.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genus0 {

class GroupSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Writes "order N" followed by N rows of N space-separated ids.
inline void write_table(std::ostream& os, const FiniteGroup& g) {
  const std::size_t n = g.order();
  os << "order " << n << "\n";
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) os << (j ? " " : "") << g.mul(i, j);
    os << "\n";
  }
}

/// Reads a table written by write_table.  The result is tagged Custom and
/// must pass the associativity check.
inline FiniteGroup read_table(std::istream& is) {
  std::string word;
  long long n = 0;
  if (!(is >> word >> n) || word != "order" || n <= 0) throw GroupSpecError("table file must start with 'order N'");
  if (static_cast<std::size_t>(n) > kMaxOrder) throw GroupSpecError("table order exceeds " + std::to_string(kMaxOrder));
  std::vector<Element> table(static_cast<std::size_t>(n * n));
  for (auto& x : table) {
    long long v = 0;
    if (!(is >> v)) throw GroupSpecError("table file ends early");
    if (v < 0 || v >= n) throw GroupSpecError("table entry " + std::to_string(v) + " out of range");
    x = static_cast<Element>(v);
  }
  if (is >> word) throw GroupSpecError("trailing data after table");
  FiniteGroup g(std::move(table), Family{FamilyKind::Custom, n});
  if (!check_associativity(g)) throw GroupSpecError("table is not associative");
  return g;
}

inline FiniteGroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupSpecError("cannot open table file '" + path + "'");
  return read_table(in);
}

namespace detail {

inline long long parse_int(std::string_view s, std::string_view whole) {
  long long v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw GroupSpecError("bad group spec '" + std::string(whole) + "': '" + std::string(s) + "' is not an integer");
  return v;
}

inline std::vector<long long> parse_args(std::string_view inner, std::string_view whole) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    out.push_back(parse_int(inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace detail

/// Builds a group from the mini-language: C<n>, D<2n>, Q<2^n>, ZM(m,n,r),
/// A4, S4, A5, Istar, TypeII(p,l), or table:<path>.
inline FiniteGroup parse_group(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const std::string_view whole = text;
  auto fail = [&](const std::string& why) { return GroupSpecError("bad group spec '" + std::string(whole) + "': " + why); };
  if (s.empty()) throw fail("empty");
  try {
    if (s.rfind("table:", 0) == 0) return read_table_file(s.substr(6));
    if (s == "A4") return build_polyhedral(PolyhedralKind::A4);
    if (s == "S4") return build_polyhedral(PolyhedralKind::S4);
    if (s == "A5") return build_polyhedral(PolyhedralKind::A5);
    if (s == "Istar" || s == "I*") return build_binary_icosahedral();
    auto call = [&](std::string_view name, std::size_t arity) -> std::vector<long long> {
      if (s.size() < name.size() + 2 || s.back() != ')') throw fail("expected " + std::string(name) + "(...)");
      auto args = detail::parse_args(std::string_view(s).substr(name.size() + 1, s.size() - name.size() - 2), whole);
      if (args.size() != arity) throw fail(std::string(name) + " takes " + std::to_string(arity) + " arguments");
      return args;
    };
    if (s.rfind("ZM(", 0) == 0) {
      const auto a = call("ZM", 3);
      return build_zm(a[0], a[1], a[2]);
    }
    if (s.rfind("TypeII(", 0) == 0) {
      const auto a = call("TypeII", 2);
      return build_type_ii(a[0], a[1]);
    }
    const char head = s.front();
    if (head == 'C' || head == 'D' || head == 'Q') {
      const long long n = detail::parse_int(std::string_view(s).substr(1), whole);
      if (n <= 0) throw fail("order must be positive");
      if (head == 'C') return build_cyclic(n);
      if (head == 'D') {
        if (n % 2 != 0 || n < 4) throw fail("D takes the group order 2n with n >= 2");
        return build_dihedral(n / 2);
      }
      if (!detail::is_power_of_two(n) || n < 8) throw fail("Q takes the group order 2^n with n >= 3");
      long long e = 0;
      while ((1LL << e) < n) ++e;
      return build_generalized_quaternion(e);
    }
  } catch (const GroupSpecError&) {
    throw;
  } catch (const GroupError& e) {
    throw fail(e.what());
  }
  throw fail("unknown family");
}

/// Canonical spec string, parseable by parse_group for built-in families.
inline std::string group_spec(const FiniteGroup& g) { return spec_string(g.family(), g.order()); }

}  // namespace genus0
