#include "genus0/genus0.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace genus0;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string group;
  long long max_genus = 3;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> node_budget;
  std::string output = "text";
  bool dedup = false;
  std::string signature;
  std::string elements;
  bool dump_table = false;
  long long scale = 1;
};

bool json_out(const Config& c) { return c.output == "json"; }

std::string words(const FiniteGroup& g, const std::vector<Element>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + g.word(xs[i]);
  return out + "]";
}

std::string ids(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::vector<Element> parse_elements(const std::string& text, const FiniteGroup& g) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= g.order()) throw std::out_of_range(tok);
      out.push_back(static_cast<Element>(v));
    } catch (const std::logic_error&) {
      throw UsageError("--elements: '" + tok + "' is not an element id of " + group_spec(g));
    }
  }
  return out;
}

Signature require_signature(const Config& c) {
  if (c.signature.empty()) throw UsageError("--signature is required");
  return parse_signature(c.signature);
}

int cmd_info(const Config& c) {
  const FiniteGroup g = parse_group(c.group);
  if (c.dump_table) {
    write_table(std::cout, g);
    return kOk;
  }
  std::vector<std::pair<unsigned, std::size_t>> spectrum;
  for (unsigned o : g.order_spectrum()) spectrum.emplace_back(o, g.elements_of_order(o).size());
  const bool p2 = check_conditions(g, Condition::P2), pq = check_conditions(g, Condition::PQ),
             sylow = check_conditions(g, Condition::Sylow);
  if (json_out(c)) {
    Json orders = Json::object();
    for (auto [o, n] : spectrum) orders[std::to_string(o)] = n;
    std::cout << dump(Json{{"group", group_spec(g)},
                           {"family", describe(g.family())},
                           {"order", g.order()},
                           {"element_orders", orders},
                           {"conjugacy_classes", g.class_count()},
                           {"abelian", g.is_abelian()},
                           {"cyclic", g.is_cyclic()},
                           {"center_order", center(g).count()},
                           {"commutator_order", commutator_subgroup(g).count()},
                           {"p2_condition", p2},
                           {"pq_condition", pq},
                           {"sylow_condition", sylow}});
    return kOk;
  }
  std::cout << "group      " << group_spec(g) << "  (" << describe(g.family()) << ")\n"
            << "order      " << g.order() << "\n"
            << "orders     ";
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    std::cout << (i ? ", " : "") << spectrum[i].first << " x" << spectrum[i].second;
  std::cout << "\nclasses    " << g.class_count() << "\n"
            << "abelian    " << (g.is_abelian() ? "yes" : "no") << "\n"
            << "cyclic     " << (g.is_cyclic() ? "yes" : "no") << "\n"
            << "center     order " << center(g).count() << "\n"
            << "commutator order " << commutator_subgroup(g).count() << "\n"
            << "p^2 cond.  " << (p2 ? "true" : "false") << "\n"
            << "pq cond.   " << (pq ? "true" : "false") << "\n"
            << "Sylow      " << (sylow ? "true" : "false") << "\n";
  return kOk;
}

int cmd_signatures(const Config& c) {
  const FiniteGroup g = parse_group(c.group);
  const auto sigs = enumerate_signatures(g, c.max_genus);
  if (json_out(c)) {
    Json arr = Json::array();
    for (const auto& s : sigs)
      arr.push_back(Json{{"signature", to_string(s.signature)}, {"genus", s.genus}, {"geometry", to_string(geometry_type(s.signature))}});
    std::cout << dump(Json{{"group", group_spec(g)}, {"max_genus", c.max_genus}, {"signatures", arr}});
    return kOk;
  }
  for (const auto& s : sigs) std::cout << to_string(s.signature) << "  g=" << s.genus << "  " << to_string(geometry_type(s.signature)) << "\n";
  return kOk;
}

int cmd_enumerate(const Config& c) {
  const FiniteGroup g = parse_group(c.group);
  const Signature sig = require_signature(c);
  if (g.order() > 64 && !c.cap) throw UsageError("--cap is required for groups of order > 64");
  SearchOptions opts;
  opts.cap = c.cap;
  opts.node_budget = c.node_budget;
  VectorList list = enumerate_vectors(g, sig, opts);
  std::vector<GeneratingVector> vs = c.dedup ? dedup_up_to_conjugation(list.vectors) : list.vectors;
  if (json_out(c)) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(Json{{"elements", v.elements}, {"words", words_json(g, v.elements)}});
    std::cout << dump(Json{{"group", group_spec(g)},
                           {"signature", to_string(sig)},
                           {"dedup", c.dedup},
                           {"count", vs.size()},
                           {"capped", list.stats.capped},
                           {"partial", list.stats.budget_exhausted},
                           {"vectors", arr}});
  } else {
    for (const auto& v : vs) std::cout << ids(v.elements) << "  " << words(g, v.elements) << "\n";
    std::cout << "# " << vs.size() << " vectors" << (c.dedup ? " up to conjugation" : "") << (list.stats.capped ? " (capped)" : "")
              << (list.stats.budget_exhausted ? " (node budget exhausted)" : "") << "\n";
  }
  return list.stats.budget_exhausted ? kBudget : kOk;
}

int cmd_quotient(const Config& c) {
  const FiniteGroup g = parse_group(c.group);
  const Signature sig = require_signature(c);
  GeneratingVector v{g, sig, {}};
  if (!c.elements.empty()) {
    v.elements = parse_elements(c.elements, g);
    if (v.elements.size() != sig.r()) throw UsageError("--elements has " + std::to_string(v.elements.size()) + " entries for " + std::to_string(sig.r()) + " periods");
    const Validation val = validate(v);
    if (!val) {
      std::cerr << "not a generating vector: " << val.reason << "\n";
      return kVerificationFailed;
    }
  } else {
    SearchOptions opts;
    opts.cap = 1;
    opts.node_budget = c.node_budget;
    VectorList list = enumerate_vectors(g, sig, opts);
    if (list.vectors.empty()) {
      std::cerr << "no generating vector for " << to_string(sig) << "\n";
      return list.stats.budget_exhausted ? kBudget : kVerificationFailed;
    }
    v = list.vectors.front();
  }
  std::vector<QuotientReport> reports;
  if (g.order() > 1)
    for (const Subgroup& h : prime_order_subgroups_up_to_conjugacy(g)) reports.push_back(quotient_genus(v, h));
  const bool genus_zero = is_genus_zero_action(v);
  if (json_out(c)) {
    Json arr = Json::array();
    for (const auto& q : reports) arr.push_back(to_json(q));
    std::cout << dump(Json{{"vector", to_json(v)}, {"genus_zero", genus_zero}, {"quotients", arr}});
    return kOk;
  }
  std::cout << "vector " << ids(v.elements) << "  " << words(g, v.elements) << "\n"
            << "genus  " << rh_genus(g.order(), sig) << "\n";
  for (const auto& q : reports)
    std::cout << "  <" << g.word(q.generator) << "> order " << q.prime << ": fixed points " << q.fixed_points << ", M/H genus "
              << q.quotient_genus << ", signature " << to_string(q.gamma_prime_signature) << "\n";
  std::cout << "genus-zero action: " << (genus_zero ? "yes" : "no") << "\n";
  return kOk;
}

void print_checks(const std::vector<TheoremCheck>& checks, const char* indent) {
  for (const auto& t : checks) std::cout << indent << "[" << to_string(t.status) << "] " << t.name << ": " << t.details << "\n";
}

int cmd_classify(const Config& c) {
  const FiniteGroup g = parse_group(c.group);
  if (c.max_genus < 0) throw UsageError("--max-genus must be nonnegative");
  ClassifyOptions opts;
  if (c.node_budget) opts.node_budget = c.node_budget;
  if (c.cap) opts.count_cap = *c.cap;
  const ClassificationReport rep = classify_group(g, c.max_genus, opts);
  if (json_out(c)) {
    std::cout << dump(to_json(rep));
  } else {
    std::cout << "group " << group_spec(g) << " (order " << g.order() << "), genus <= " << c.max_genus << "\n";
    for (const auto& e : rep.admissible)
      std::cout << "  " << to_string(e.signature) << "  g=" << e.genus << "  raw vectors " << e.raw_vector_count
                << (e.count_capped ? "+" : "") << "  witness " << words(g, e.witness) << "\n";
    if (rep.admissible.empty()) std::cout << "  (no genus-zero signature)\n";
    std::cout << "verdict " << to_string(rep.verdict) << (rep.partial() ? " (partial)" : "") << "\n";
    print_checks(rep.theorems, "  ");
  }
  if (rep.partial()) return kBudget;
  return rep.failed() ? kVerificationFailed : kOk;
}

int cmd_verify(const Config& c) {
  ClassifyOptions opts;
  if (c.node_budget) opts.node_budget = c.node_budget;
  const auto results = run_manifest(ManifestScale{c.scale}, opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (json_out(c)) {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    std::cout << dump(Json{{"manifest_version", kManifestVersion}, {"scale", c.scale}, {"passed", ok}, {"verifiers", arr}});
  } else {
    std::cout << "manifest v" << kManifestVersion << ", scale " << c.scale << "\n";
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
      if (!r.passed()) {
        std::vector<TheoremCheck> bad;
        for (const auto& ch : r.checks)
          if (ch.status != Status::Pass) bad.push_back(ch);
        print_checks(bad, "     ");
      }
    }
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-zero actions of finite groups on Riemann surfaces"};
  app.require_subcommand(1);
  Config cfg;

  auto add_group = [&](CLI::App* sub) { sub->add_option("group", cfg.group, "C<n>, D<2n>, Q<2^n>, ZM(m,n,r), A4, S4, A5, Istar, TypeII(p,l), table:<path>")->required(); };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"})); };
  auto add_budget = [&](CLI::App* sub) { sub->add_option("--node-budget", cfg.node_budget, "search nodes per signature before giving up"); };

  CLI::App* info = app.add_subcommand("info", "order, element orders and the p^2/pq/Sylow conditions");
  add_group(info);
  add_output(info);
  info->add_flag("--dump-table", cfg.dump_table, "print the multiplication table in table-file format");

  CLI::App* sigs = app.add_subcommand("signatures", "candidate signatures (0|n1,...,nr) up to a genus bound");
  add_group(sigs);
  add_output(sigs);
  sigs->add_option("--max-genus", cfg.max_genus, "genus bound")->check(CLI::NonNegativeNumber);

  CLI::App* en = app.add_subcommand("enumerate", "generating vectors for one signature");
  add_group(en);
  add_output(en);
  add_budget(en);
  en->add_option("--signature", cfg.signature, "e.g. \"(0|2,3,6)\"")->required();
  en->add_option("--cap", cfg.cap, "stop after this many vectors (required when |G| > 64)");
  en->add_flag("--dedup", cfg.dedup, "one vector per simultaneous-conjugation orbit");

  CLI::App* quo = app.add_subcommand("quotient", "quotient genera M/H for a vector");
  add_group(quo);
  add_output(quo);
  add_budget(quo);
  quo->add_option("--signature", cfg.signature, "e.g. \"(0|2,2,3,3)\"")->required();
  quo->add_option("--elements", cfg.elements, "comma-separated element ids; default is the first vector found");

  CLI::App* cls = app.add_subcommand("classify", "genus-zero signatures with conformance checks");
  add_group(cls);
  add_output(cls);
  add_budget(cls);
  cls->add_option("--max-genus", cfg.max_genus, "genus bound")->check(CLI::NonNegativeNumber);
  cls->add_option("--cap", cfg.cap, "raw vectors counted per signature");

  CLI::App* ver = app.add_subcommand("verify-paper", "run every verifier in the built-in manifest");
  add_output(ver);
  add_budget(ver);
  ver->add_option("--scale", cfg.scale, "multiply the manifest genus bounds")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(cfg);
    if (*sigs) return cmd_signatures(cfg);
    if (*en) return cmd_enumerate(cfg);
    if (*quo) return cmd_quotient(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroupSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}
