#include "flagweak/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagweak/chains.hpp"
#include "flagweak/checks.hpp"
#include "flagweak/export.hpp"
#include "flagweak/genfun.hpp"
#include "flagweak/io.hpp"
#include "flagweak/lattice.hpp"
#include "flagweak/order.hpp"
#include "flagweak/presentation.hpp"

namespace flagweak::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int r = 2;
  int n = 2;
  std::string from;
  std::string to;
  std::string format;
  bool signed_notation = false;
  bool json_output = false;
  bool want_diameter = false;
  int jobs = 1;
  std::optional<std::uint64_t> cap;
  std::uint64_t chain_cap = kDefaultChainCap;
  std::string suite;
  std::string kind;
  std::string action;
};

std::uint64_t parse_cap(const std::string& text, const std::string& source) {
  std::uint64_t v = 0;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (ec != std::errc() || ptr != last || v == 0) throw UsageError(source + " must be a positive integer");
  return v;
}

// --cap, then FLAGWEAK_CAP, then the library default.
std::uint64_t element_cap(const Config& c) {
  if (c.cap) return *c.cap;
  if (const char* env = std::getenv("FLAGWEAK_CAP"); env && *env) return parse_cap(env, "FLAGWEAK_CAP");
  return kDefaultElementCap;
}

GroupContext context_of(const Config& c) {
  if (c.r < 1 || c.n < 1) throw UsageError("--r and --n must be positive");
  return GroupContext(c.r, c.n, element_cap(c));
}

Notation notation_of(const Config& c) {
  if (c.signed_notation && c.r != 2) throw UsageError("--signed needs --r 2");
  return c.signed_notation ? Notation::Signed : Notation::General;
}

std::string format_of(const Config& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = c.json_output ? "json" : (c.format.empty() ? fallback : c.format);
  if (std::none_of(allowed.begin(), allowed.end(), [&f](const char* a) { return f == a; }))
    throw UsageError("format '" + f + "' is not available for this command");
  return f;
}

// Endpoints from --from / --to, defaulting to the bottom and top of the group.
std::pair<ColoredPermutation, ColoredPermutation> endpoints(const Config& c, const GroupContext& ctx) {
  return {c.from.empty() ? identity(ctx) : parse_element(ctx, c.from),
          c.to.empty() ? mu0(ctx) : parse_element(ctx, c.to)};
}

std::string signed_int(std::int64_t v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

int cmd_hasse(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  const auto nt = notation_of(c);
  const auto format = format_of(c, "text", {"text", "dot", "json", "csv"});
  const auto diagram = [&] {
    if (c.from.empty() && c.to.empty()) return build_hasse(ctx);
    const auto [g, h] = endpoints(c, ctx);
    return build_interval(g, h);
  }();

  if (format == "dot") {
    out << to_dot(diagram, nt);
  } else if (format == "json") {
    out << to_json(diagram, nt, 2);
  } else if (format == "csv") {
    out << "from,to,gen\n";
    for (const auto& e : diagram.edges())
      out << '"' << format_element(diagram.element(e.from), nt) << "\",\"" << format_element(diagram.element(e.to), nt)
          << "\"," << e.label.to_string() << '\n';
  } else {
    const auto ranks = diagram.rank_sizes();
    out << "nodes=" << diagram.size() << " edges=" << diagram.edges().size() << " ranks=";
    for (std::size_t k = 0; k < ranks.size(); ++k) out << (k ? "," : "") << ranks[k];
    out << '\n';
    int current = -1;
    for (int i = 0; i < diagram.size(); ++i) {
      if (diagram.rank(i) != current) {
        current = diagram.rank(i);
        out << (i ? "\n" : "") << "rank " << current << ":";
      }
      out << ' ' << format_element(diagram.element(i), nt);
    }
    out << '\n';
  }
  return kOk;
}

int cmd_mobius(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  const auto nt = notation_of(c);
  if (c.from.empty() != c.to.empty()) throw UsageError("mobius needs both --from and --to, or neither");

  if (c.from.empty()) {
    const auto format = format_of(c, "csv", {"csv", "json"});
    const auto hasse = build_hasse(ctx);
    if (format == "csv") {
      out << mobius_csv(hasse, nt);
      return kOk;
    }
    const Reachability reach(hasse);
    json rows = json::array();
    for (int a = 0; a < hasse.size(); ++a)
      for (int b = a; b < hasse.size(); ++b)
        if (reach.leq(a, b))
          rows.push_back({{"from", format_element(hasse.element(a), nt)},
                          {"to", format_element(hasse.element(b), nt)},
                          {"mobius", mobius(hasse.element(a), hasse.element(b))},
                          {"class", classify_homotopy(hasse.element(a), hasse.element(b)).to_string()}});
    out << rows.dump(2) << '\n';
    return kOk;
  }

  const auto format = format_of(c, "text", {"text", "json"});
  const auto [g, h] = endpoints(c, ctx);
  const int mu = mobius(g, h);
  const auto cls = classify_homotopy(g, h);
  if (format == "json") {
    out << json{{"from", format_element(g, nt)},
                {"to", format_element(h, nt)},
                {"mobius", mu},
                {"class", cls.to_string()}}
               .dump(2)
        << '\n';
  } else {
    out << signed_int(mu) << '\n';
  }
  return kOk;
}

int cmd_chains(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  const auto format = format_of(c, "text", {"text", "dot", "json"});
  const auto [g, h] = endpoints(c, ctx);
  const auto interval = build_interval(g, h);
  const auto graph = gamma_graph(interval, MoveSet::Auto, c.chain_cap);
  const bool connected = is_connected(graph);
  const auto moves = graph.empirical ? std::string("generic (empirical)") : std::string("T1-T5");

  if (format == "dot") {
    out << to_dot(graph);
    return kOk;
  }
  std::optional<DiameterResult> d;
  if (c.want_diameter) d = diameter(graph, c.jobs);

  if (format == "json") {
    json j{{"chains", graph.vertices.size()}, {"edges", graph.edges.size()}, {"connected", connected},
           {"moves", moves}};
    if (d) {
      j["diameter"] = d->connected ? json(d->value) : json(nullptr);
      j["exact"] = d->exact;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "chains=" << graph.vertices.size() << " connected=" << (connected ? "true" : "false");
  if (d) {
    if (!d->connected)
      out << " diameter=none (disconnected)";
    else
      out << " diameter=" << d->value << (d->exact ? " (exact)" : " (lower bound)");
  }
  out << '\n' << "edges=" << graph.edges.size() << '\n' << "moves=" << moves << '\n';
  return kOk;
}

json coefficients(const UniPoly& p) { return p.coefficients(); }

json terms(const BiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e.first, e.second, c});
  return out;
}

int cmd_genfun(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  const auto format = format_of(c, "text", {"text", "json"});
  json j{{"kind", c.kind}, {"r", ctx.r()}, {"n", ctx.n()}};
  std::string text;
  bool equal = true;

  if (c.kind == "finv") {
    const auto lhs = finv_genfun(ctx, c.jobs);
    const auto rhs = prod_q_int(ctx.r(), ctx.n());
    text = lhs.to_string();
    equal = lhs == rhs;
    j["coefficients"] = coefficients(lhs);
    j["closed_form"] = coefficients(rhs);
  } else if (c.kind == "wdes") {
    const auto lhs = wdes_genfun(ctx, c.jobs);
    const auto rhs = wdes_rhs(ctx.r(), ctx.n());
    text = lhs.to_string();
    equal = lhs == rhs;
    j["coefficients"] = coefficients(lhs);
    j["closed_form"] = coefficients(rhs);
  } else {
    const auto lhs = bivariate_genfun(ctx, c.jobs);
    const auto rhs = bivariate_rhs(ctx.r(), ctx.n());
    text = lhs.to_string();
    equal = lhs == rhs;
    j["terms"] = terms(lhs);
    j["closed_form"] = terms(rhs);
  }
  j["equal"] = equal;

  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
  return equal ? kOk : kCheckFailed;
}

int cmd_present(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  bool ok = true;
  out << std::left << std::setw(10) << "family" << std::setw(11) << "instances" << std::setw(10) << "failures"
      << "status\n";
  auto table = [&](const RelationReport& rep) {
    for (const auto& f : rep.families) {
      out << std::setw(10) << f.id << std::setw(11) << f.instances << std::setw(10) << f.failures
          << (f.failures ? "FAIL" : "pass") << '\n';
    }
    for (const auto& f : rep.failures) {
      out << "  witness " << f.relation << " at";
      for (int i : f.indices) out << ' ' << i;
      out << ": " << f.lhs << " != " << f.rhs << '\n';
    }
    ok = ok && rep.ok();
  };
  table(verify_relations_B(ctx));
  if (ctx.r() == 2 && ctx.n() >= 2) table(verify_relations_A(ctx.n()));

  auto order_line = [&](const std::string& name, std::uint64_t got, std::uint64_t want) {
    out << std::setw(10) << name << "order=" << got << " expected=" << want << ' ' << (got == want ? "pass" : "FAIL")
        << '\n';
    ok = ok && got == want;
  };
  order_line("<S>", closure_order(ctx, all_generators(ctx)), ctx.order());
  if (ctx.r() == 2 && ctx.n() >= 2) order_line("<a_i>", closure_order(ctx, a_generators(ctx)), ctx.order() / 2);
  if (ctx.r() == 2 && ctx.n() >= 3) {
    const bool replay = verify_remark_derivation(ctx.n());
    out << std::setw(10) << "A4-deriv" << (replay ? "pass" : "FAIL") << '\n';
    ok = ok && replay;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_check(const Config& c, std::ostream& out) {
  const auto ctx = context_of(c);
  using Suite = CheckResult (*)(const GroupContext&, int);
  const std::vector<std::pair<std::string, Suite>> suites{
      {"order", check_order},   {"lattice", check_lattice}, {"mobius", check_mobius},
      {"tits", check_tits},     {"genfun", check_genfun},   {"present", check_present},
  };
  bool ok = true;
  for (const auto& [name, fn] : suites) {
    if (c.suite != "all" && c.suite != name) continue;
    const auto res = fn(ctx, c.jobs);
    out << name << ": " << (res.passed ? "pass" : "FAIL") << " (" << res.cases << " cases"
        << (res.note.empty() ? "" : ", " + res.note) << ")\n";
    if (!res.passed) out << "  witness: " << res.witness << '\n';
    ok = ok && res.passed;
  }
  return ok ? kOk : kCheckFailed;
}

void group_options(CLI::App* sub, Config& c) {
  sub->add_option("--r", c.r, "number of colors")->capture_default_str();
  sub->add_option("--n", c.n, "number of letters")->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--cap", c.cap, "element cap (overrides FLAGWEAK_CAP)")->check(CLI::PositiveNumber);
}

void element_options(CLI::App* sub, Config& c) {
  sub->add_option("--from", c.from, "bottom element, e.g. 2^1,1^0 or -2,1");
  sub->add_option("--to", c.to, "top element");
  sub->add_flag("--signed", c.signed_notation, "print elements in signed notation (r = 2)");
}

void output_options(CLI::App* sub, Config& c, const std::string& formats) {
  sub->add_option("--format", c.format, formats);
  sub->add_flag("--json", c.json_output, "same as --format json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Flag weak order on colored permutation groups G(r,n)", "flagweak"};
  app.require_subcommand(1);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of G(r,n) or of an interval");
  group_options(hasse, c);
  element_options(hasse, c);
  output_options(hasse, c, "text|dot|json|csv");

  auto* check = app.add_subcommand("check", "Run oracle-agreement suites");
  check->add_option("suite", c.suite, "lattice|order|mobius|tits|genfun|present|all")
      ->required()
      ->check(CLI::IsMember({"lattice", "order", "mobius", "tits", "genfun", "present", "all"}));
  group_options(check, c);

  auto* mob = app.add_subcommand("mobius", "Moebius function of an interval, or the whole table");
  group_options(mob, c);
  element_options(mob, c);
  output_options(mob, c, "text|json|csv");

  auto* chains = app.add_subcommand("chains", "Maximal chains and their move graph");
  group_options(chains, c);
  element_options(chains, c);
  output_options(chains, c, "text|dot|json");
  chains->add_flag("--diameter", c.want_diameter, "compute the diameter of the chain graph");
  chains->add_option("--chain-cap", c.chain_cap, "maximum number of chains")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("genfun", "Generating functions");
  gen->add_option("kind", c.kind, "finv|wdes|bivariate")
      ->required()
      ->check(CLI::IsMember({"finv", "wdes", "bivariate"}));
  group_options(gen, c);
  output_options(gen, c, "text|json");

  auto* present = app.add_subcommand("present", "Presentation checks");
  present->add_option("action", c.action, "verify")->required()->check(CLI::IsMember({"verify"}));
  group_options(present, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hasse) return cmd_hasse(c, out);
    if (*check) return cmd_check(c, out);
    if (*mob) return cmd_mobius(c, out);
    if (*chains) return cmd_chains(c, out);
    if (*gen) return cmd_genfun(c, out);
    if (*present) return cmd_present(c, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const NotComparable& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace flagweak::cli
