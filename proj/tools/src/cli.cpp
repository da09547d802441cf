#include "ringlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ringlab/clean_adequate.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/matred.hpp"
#include "ringlab/range_props.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {
namespace {

using nlohmann::json;

const std::vector<std::string> kProperties = {
    "sr1",   "sr2",      "asr1-right", "asr1-left", "asr1-2sided", "dyadic",
    "clean", "exchange", "lring",      "dprop",     "d-adequate",  "bezout"};

struct CheckArgs {
  std::string ring, property, element, side = "right";
};
struct SnfArgs {
  std::string input;
  bool certify = false;
};
struct ElementArgs {
  std::string kind, ring = "Z";
  std::vector<std::string> values;
};
struct VerifyArgs {
  std::string suite = "all", catalog, report;
};

Side parse_side(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw ConfigError("side must be 'right' or 'left', got '" + s + "'");
}

/// Calls f with the Euclidean domain named by spec.
template <class F>
int with_domain(const RingSpec& spec, F&& f) {
  if (spec.kind() == RingKind::Integer) return f(IntegerDomain{});
  if (spec.kind() == RingKind::PolyOverPrimeField) {
    return f(PolyDomain(static_cast<Poly::Coeff>(spec.param())));
  }
  throw UnsupportedRing("expected Z or F_p[x], got " + spec.to_string());
}

template <class D>
typename D::value_type parse_value(const D& dom, const std::string& text) {
  auto j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) return dom.from_json(j);
  return dom.parse(text);
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw SyntaxError(path + ": " + e.what());
  }
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// ----------------------------------------------------------------- check

PropertyReport check_domain(const RingSpec& spec, const CheckArgs& args) {
  const bool element_level = args.property == "asr1-right" || args.property == "asr1-left";
  if (args.property != "sr1" && !element_level) {
    throw UnsupportedRing("property '" + args.property + "' is only decided for finite rings");
  }
  if (element_level && args.element.empty()) {
    throw ConfigError(args.property + " over " + spec.to_string() + " needs --element");
  }
  PropertyReport rep;
  with_domain(spec, [&](const auto& dom) {
    if (args.property == "sr1") {
      rep = is_stable_range_1(dom);
    } else {
      rep = is_asr1_element(dom, parse_value(dom, args.element), DomainBounds{});
    }
    return 0;
  });
  return rep;
}

PropertyReport check_finite(const RingPtr& ring, const CheckArgs& args) {
  const FiniteRing& fr = *ring->finite();
  std::optional<FiniteRing::Index> a;
  if (!args.element.empty()) a = Elem::parse(ring, std::string_view(args.element)).index();
  const auto& p = args.property;
  if (p == "sr1") return is_stable_range_1(fr);
  if (p == "sr2") return is_stable_range_2(fr);
  if (p == "asr1-right" || p == "asr1-left") {
    const Side side = p == "asr1-right" ? Side::Right : Side::Left;
    return a ? is_asr1_element(fr, *a, side) : is_asr1_ring(fr, side);
  }
  if (p == "asr1-2sided") return is_asr1_two_sided(fr);
  if (p == "dyadic") return is_dyadic_range_1(fr, parse_side(args.side));
  if (p == "clean") return is_clean(fr);
  if (p == "exchange") return is_exchange(fr);
  if (p == "lring") return is_L_ring(fr);
  if (p == "dprop") return has_D_property(fr);
  if (p == "d-adequate") return a ? is_D_adequate_element(fr, *a) : is_D_adequate_ring(fr);
  if (p == "bezout") return is_right_bezout(fr);
  throw ConfigError("unknown property '" + p + "'");
}

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const auto spec = parse_ring_spec(args.ring);
  const PropertyReport rep =
      spec.is_finite() ? check_finite(Ring::make(spec), args) : check_domain(spec, args);
  out << rep.to_json().dump(2) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- snf

int cmd_snf(const SnfArgs& args, std::ostream& out) {
  const json doc = read_json(args.input);
  std::string ring = "Z";
  json rows = doc;
  if (doc.is_object()) {
    for (const auto& [key, _] : doc.items()) {
      if (key != "ring" && key != "rows") throw ConfigError("unknown key '" + key + "' in matrix file");
    }
    if (!doc.contains("rows")) throw ConfigError("matrix file needs a \"rows\" array");
    if (doc.contains("ring")) {
      if (!doc["ring"].is_string()) throw ConfigError("\"ring\" must be a spec string");
      ring = doc["ring"].get<std::string>();
    }
    rows = doc["rows"];
  }
  return with_domain(parse_ring_spec(ring), [&](const auto& dom) {
    const auto cert = smith_normal_form(dom, matrix_from_json(dom, rows));
    json j = to_json(dom, cert);
    int status = kExitOk;
    if (args.certify) {
      const bool ok = verify(dom, cert);
      j["certified"] = ok;
      if (!ok) status = kExitCounterexample;
    }
    out << j.dump(2) << '\n';
    return status;
  });
}

// ------------------------------------------------- witness, adequate, neat

int cmd_witness(const ElementArgs& args, std::ostream& out) {
  if (args.values.size() != 3) throw ConfigError("witness takes exactly three elements a b c");
  return with_domain(parse_ring_spec(args.ring), [&](const auto& dom) {
    const auto a = parse_value(dom, args.values[0]);
    const auto b = parse_value(dom, args.values[1]);
    const auto c = parse_value(dom, args.values[2]);
    const auto w = args.kind == "asr1" ? asr1_witness(dom, a, b, c) : sr2_witness(dom, a, b, c);
    if (!verify(dom, w)) throw CertificateError("witness failed re-verification");
    out << to_json(dom, w).dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_adequate(const ElementArgs& args, std::ostream& out) {
  if (args.values.size() != 2) throw ConfigError("adequate takes exactly two elements a b");
  return with_domain(parse_ring_spec(args.ring), [&](const auto& dom) {
    const auto d =
        adequate_decomposition(dom, parse_value(dom, args.values[0]), parse_value(dom, args.values[1]));
    const bool ok = verify(dom, d);
    const json j = {{"ring", dom.name()},     {"a", dom.to_json(d.a)}, {"b", dom.to_json(d.b)},
                    {"r", dom.to_json(d.r)},  {"s", dom.to_json(d.s)}, {"verified", ok}};
    out << j.dump(2) << '\n';
    return ok ? kExitOk : kExitCounterexample;
  });
}

int cmd_neat(const ElementArgs& args, std::ostream& out) {
  if (args.values.size() != 1) throw ConfigError("neat takes exactly one element");
  return with_domain(parse_ring_spec(args.ring), [&](const auto& dom) {
    out << is_neat_element(dom, parse_value(dom, args.values[0])).to_json().dump(2) << '\n';
    return kExitOk;
  });
}

// ---------------------------------------------------------------- verify

std::vector<Theorem> parse_suites(const std::string& text) {
  if (text == "all") return all_theorems();
  std::vector<Theorem> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const Theorem t = parse_theorem(item);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  if (out.empty()) throw ConfigError("empty --suite");
  return out;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto suites = parse_suites(args.suite);
  SuiteBounds bounds;
  const auto catalog =
      args.catalog.empty() ? default_catalog() : load_catalog(read_json(args.catalog), &bounds);

  SuiteContext context(bounds);
  std::vector<TheoremVerdict> verdicts;
  for (Theorem t : suites) {
    auto v = run_suite(t, catalog, context);
    verdicts.insert(verdicts.end(), std::make_move_iterator(v.begin()),
                    std::make_move_iterator(v.end()));
  }
  const json report = make_report(verdicts, catalog, bounds,
                                  {{"generated_at", utc_now()}, {"tool", "ringlab"}});
  if (args.report.empty()) {
    out << report.dump(2) << '\n';
  } else {
    std::ofstream file(args.report);
    if (!file) throw ConfigError("cannot write '" + args.report + "'");
    file << report.dump(2) << '\n';
    for (const auto& [name, counts] : report["summary"].items()) {
      out << name << ' ' << counts.dump() << '\n';
    }
    out << (report["passed"].get<bool>() ? "passed" : "FAILED") << '\n';
  }
  return any_counterexample(verdicts) ? kExitCounterexample : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ring-theoretic property checker and matrix reduction tool", "ringlab"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide a property of a ring and print a report");
  c->add_option("ring", check.ring, "Ring spec, e.g. Z/6, M2(Z/2), F2[x]/(1,1,1)")->required();
  c->add_option("--property,-p", check.property, "Property to decide")
      ->required()
      ->check(CLI::IsMember(kProperties));
  c->add_option("--element,-e", check.element, "Restrict asr1 or d-adequate to one element");
  c->add_option("--side", check.side, "Side for dyadic range 1 (right|left)")
      ->check(CLI::IsMember({"right", "left"}));

  SnfArgs snf;
  auto* s = app.add_subcommand("snf", "Diagonalize a matrix over Z or F_p[x]");
  s->add_option("--input,-i", snf.input, "JSON file with {\"ring\", \"rows\"} or a bare row array; - for stdin")
      ->required();
  s->add_flag("--certify", snf.certify, "Re-check the transforms and divisibility chain");

  ElementArgs witness;
  auto* w = app.add_subcommand("witness", "Construct a range witness for a triple");
  w->add_option("kind", witness.kind, "asr1 or sr2")->required()->check(CLI::IsMember({"asr1", "sr2"}));
  w->add_option("elements", witness.values, "a b c")->required()->expected(3);
  w->add_option("--ring,-r", witness.ring, "Z or F<p>[x]");

  ElementArgs adequate;
  auto* a = app.add_subcommand("adequate", "Split a as r*s against b");
  a->add_option("elements", adequate.values, "a b")->required()->expected(2);
  a->add_option("--ring,-r", adequate.ring, "Z or F<p>[x]");

  ElementArgs neat;
  auto* n = app.add_subcommand("neat", "Decide whether R/aR is clean");
  n->add_option("element", neat.values, "a")->required()->expected(1);
  n->add_option("--ring,-r", neat.ring, "Z or F<p>[x]");

  VerifyArgs verify_args;
  auto* v = app.add_subcommand("verify", "Run implication suites over a ring catalog");
  v->add_option("--suite", verify_args.suite, "all, or a comma list such as sr1-asr1,radical-quotient");
  v->add_option("--catalog", verify_args.catalog, "Catalog JSON (default: built-in catalog)");
  v->add_option("--report", verify_args.report, "Write the report here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (s->parsed()) return cmd_snf(snf, out);
    if (w->parsed()) return cmd_witness(witness, out);
    if (a->parsed()) return cmd_adequate(adequate, out);
    if (n->parsed()) return cmd_neat(neat, out);
    if (v->parsed()) return cmd_verify(verify_args, out);
  } catch (const CertificateError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const RingError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ringlab
