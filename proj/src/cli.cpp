#include "homfib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "homfib/document.hpp"
#include "homfib/error.hpp"

namespace homfib::cli {

namespace {

using document::Json;
using document::Node;

enum class Format { text, json };

struct Context {
  std::string command;
  cohomology::Options options;
  bool timing = false;
  int status = 0;
};

// Extends the Node path with the source name for error messages.
[[noreturn]] void rethrow_with_source(const std::string& source, const InputError& e) {
  throw InputError(source + ": " + e.what());
}

Json fibration_summary(const fibration::CharacterFibration& f) {
  return {{"group", f.group().to_string()},
          {"subgroup", f.subgroup().to_string()},
          {"chi", document::to_json(f.chi())},
          {"descent_order", document::integer_json(f.descent_order())},
          {"effective_chi", document::to_json(f.effective_chi())},
          {"kernel_components", f.kernel_components().to_string()},
          {"fiber_components", document::integer_json(f.fiber_components())},
          {"identity_component_intersection", f.identity_component_intersection().to_string()}};
}

Json poincare_or_miss(const std::function<PoincarePolynomial()>& compute) {
  try {
    return document::to_json(compute());
  } catch (const TableMiss& e) {
    return {{"status", "undecidable_with_table"}, {"reason", e.what()}};
  }
}

Json fibration_spaces(const fibration::CharacterFibration& f, const Context& ctx) {
  const auto& opt = ctx.options;
  Json out;
  out["total"] = poincare_or_miss(
      [&] { return cohomology::space_poincare(f.group(), f.subgroup(), opt); });
  out["fiber"] = poincare_or_miss([&] { return fibration::fiber_poincare(f, opt); });
  out["base"] = document::to_json(PoincarePolynomial::exterior_generator(1));
  if (out["total"].contains("coefficients") && out["fiber"].contains("coefficients")) {
    const auto k = cohomology::kunneth_check(
        cohomology::space_poincare(f.group(), f.subgroup(), opt), fibration::fiber_poincare(f, opt),
        PoincarePolynomial::exterior_generator(1));
    out["kunneth"] = {{"pass", k.pass}};
    if (k.first_failing_degree) out["kunneth"]["first_failing_degree"] = *k.first_failing_degree;
  }
  return out;
}

Json structure_report(const structure::QuasiReductiveDescriptor& q, const Node& doc) {
  Json out;
  out["decomposition"] = document::to_json(structure::isogeny_decomposition(q));
  out["central_torus_rank"] = structure::central_torus(q).rank;
  out["semiabelianization"] = document::to_json(structure::semiabelianization_verdict(q));
  if (auto chi = doc.find("chi")) {
    const auto r = structure::character_surjectivity(q, document::parse_character(*chi));
    Json chain = Json::array();
    for (const auto& s : r.justification)
      chain.push_back({{"rule", rule_name(s.rule)}, {"citation", s.citation}, {"witness", s.witness}});
    out["character_surjectivity"] = {{"restriction", document::to_json(groups::Character{r.restriction})},
                                     {"degree", document::integer_json(r.degree)},
                                     {"justification", chain}};
  }
  return out;
}

const std::initializer_list<const char*> kCommon = {"kind", "name", "description", "expect"};

void allow(const Node& n, std::initializer_list<const char*> extra) {
  std::vector<const char*> keys(kCommon);
  keys.insert(keys.end(), extra);
  for (const auto& [key, _] : n.value().items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) ==
        keys.end())
      n.fail("unknown field '" + key + "'");
  }
}

[[noreturn]] void unsupported(const Node& doc, const std::string& command, const std::string& kind) {
  doc.fail("command '" + command + "' does not accept a document of kind '" + kind + "'");
}

Json process(const Node& doc, Context& ctx);

Json process_body(const Node& doc, const std::string& kind, Context& ctx) {
  const std::string& cmd = ctx.command;
  Json report;
  if (kind == "batch") {
    allow(doc, {"documents"});
    Json reports = Json::array();
    for (const auto& d : doc.at("documents").items()) reports.push_back(process(d, ctx));
    report["reports"] = std::move(reports);
    return report;
  }
  if (kind == "fibration") {
    allow(doc, {"group", "subgroup", "chi"});
    const auto f = document::parse_fibration(doc, ctx.options.max_order);
    report["document"] = document::fibration_document(f);
    report["fibration"] = fibration_summary(f);
    if (cmd == "analyze") {
      report["verdict"] = document::to_json(fibration::analyze(f, ctx.options));
    } else if (cmd == "poincare") {
      report["spaces"] = fibration_spaces(f, ctx);
    } else {
      unsupported(doc, cmd, kind);
    }
    return report;
  }
  if (kind == "converse_spec") {
    allow(doc, {"group", "h_prime_generators", "h_generators", "eta_exponent"});
    const auto spec = document::parse_converse_spec(doc);
    const auto f = [&] {
      try {
        return fibration::build_converse_example(spec.s, spec.h_prime_generators,
                                                 spec.h_generators, spec.eta_exponent,
                                                 ctx.options.max_order);
      } catch (const InputError& e) {
        doc.fail(e.what());
      }
    }();
    report["document"] = document::fibration_document(f);
    report["fibration"] = fibration_summary(f);
    if (cmd == "analyze" || cmd == "converse-example") {
      const auto action = fibration::deck_action(f);
      report["deck_group_order"] = document::integer_json(action.order);
      report["verdict"] = document::to_json(fibration::analyze(f, ctx.options));
    } else if (cmd == "poincare") {
      report["spaces"] = fibration_spaces(f, ctx);
    } else {
      unsupported(doc, cmd, kind);
    }
    return report;
  }
  if (kind == "quasi_reductive") {
    allow(doc, {"affine_part", "abelian_dim", "antiaffine_toral_rank", "embedding",
                "split_abelian_dim", "chi"});
    if (cmd != "decompose" && cmd != "analyze") unsupported(doc, cmd, kind);
    const auto q = document::parse_quasi_reductive(doc);
    try {
      return structure_report(q, doc);
    } catch (const InputError& e) {
      doc.fail(e.what());
    }
  }
  if (kind == "group") {
    allow(doc, {"group", "subgroup"});
    const auto g = document::parse_group(doc.at("group"));
    report["group"] = g.to_string();
    if (cmd == "poincare") {
      if (auto h = doc.find("subgroup")) {
        const auto sub = document::parse_subgroup(*h);
        report["subgroup"] = sub.to_string();
        try {
          report["polynomial"] =
              poincare_or_miss([&] { return cohomology::space_poincare(g, sub, ctx.options); });
        } catch (const InputError& e) {
          h->fail(e.what());
        }
      } else {
        report["polynomial"] = document::to_json(cohomology::group_poincare(g));
      }
    } else if (cmd == "decompose") {
      if (doc.has("subgroup")) doc.at("subgroup").fail("decompose takes a group only");
      return structure_report(structure::QuasiReductiveDescriptor::affine(g), doc);
    } else {
      unsupported(doc, cmd, kind);
    }
    return report;
  }
  doc.at("kind").fail("unknown document kind \"" + kind + "\"");
}

Json process(const Node& doc, Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const std::string kind = doc.at("kind").as_string();
  Json report = {{"command", ctx.command}, {"kind", kind}};
  if (auto name = doc.find("name")) report["name"] = name->as_string();

  Json body = process_body(doc, kind, ctx);
  for (auto& [key, value] : body.items()) report[key] = value;

  if (auto expect = doc.find("expect")) {
    const auto mismatches = document::expectation_mismatches(expect->value(), report);
    report["expectation"] = {{"matched", mismatches.empty()}, {"mismatches", mismatches}};
    if (!mismatches.empty()) ctx.status = 1;
  }
  if (ctx.timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return report;
}

std::string default_command(const std::string& kind) {
  if (kind == "fibration") return "analyze";
  if (kind == "converse_spec") return "converse-example";
  if (kind == "quasi_reductive") return "decompose";
  return "poincare";
}

// Re-reads every emitted fibration document and checks the verdict survives.
std::optional<std::string> round_trip(const Json& report, const Context& ctx) {
  if (!report.contains("verdict") || report.value("kind", "") == "quasi_reductive")
    return std::nullopt;
  if (!report.contains("document")) return std::nullopt;
  const auto reparsed = document::parse_text(report["document"].dump(), "<emitted>");
  const auto f = document::parse_fibration(Node(reparsed, ""), ctx.options.max_order);
  const auto v = document::to_json(fibration::analyze(f, ctx.options));
  if (v != report["verdict"]) return "re-parsed document gives " + v.dump();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// text rendering

bool is_polynomial(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("text") && j.contains("coefficients");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, std::ostream& out, int indent);

void render_entry(const std::string& key, const Json& value, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (key == "input" || key == "document") return;
  if (is_polynomial(value)) {
    out << pad << key << ": " << value["text"].get<std::string>() << "\n";
  } else if (key == "justification") {
    out << pad << "justification:\n";
    for (const auto& s : value) {
      out << pad << "  - " << s["rule"].get<std::string>() << ": " << s["witness"].get<std::string>()
          << "\n"
          << pad << "      (" << s["citation"].get<std::string>() << ")\n";
    }
  } else if (value.is_object()) {
    out << pad << key << ":\n";
    render(value, out, indent + 2);
  } else if (value.is_array() && std::any_of(value.begin(), value.end(),
                                             [](const Json& x) { return x.is_object(); })) {
    out << pad << key << ":\n";
    for (const auto& item : value) {
      render(item, out, indent + 2);
      out << "\n";
    }
  } else if (value.is_array()) {
    std::string s;
    for (const auto& x : value) s += (s.empty() ? "" : ", ") + scalar_text(x);
    out << pad << key << ": [" << s << "]\n";
  } else {
    out << pad << key << ": " << scalar_text(value) << "\n";
  }
}

void render(const Json& j, std::ostream& out, int indent) {
  for (const auto& [key, value] : j.items()) render_entry(key, value, out, indent);
}

void emit(const Json& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.dump(2) << "\n";
  } else {
    render(report, out, 0);
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int selftest(Context& ctx, Format format, std::ostream& out) {
  Json results = Json::array();
  std::size_t passed = 0;
  for (const auto& fx : embedded_fixtures()) {
    Json row = {{"fixture", fx.name}};
    std::vector<std::string> problems;
    try {
      const Json doc = document::parse_text(fx.text, fx.name);
      Context sub = ctx;
      sub.command = default_command(doc.value("kind", ""));
      sub.status = 0;
      const Node node(doc, "");
      if (!node.has("expect")) problems.push_back("fixture has no expectation");
      const Json report = process(node, sub);
      if (report.contains("expectation")) {
        for (const auto& m : report["expectation"]["mismatches"]) problems.push_back(m.get<std::string>());
      }
      if (auto rt = round_trip(report, sub)) problems.push_back(*rt);
      // Byte-identical output on a second run.
      Context again = sub;
      if (process(node, again).dump() != report.dump()) problems.push_back("nondeterministic report");
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    row["pass"] = problems.empty();
    if (!problems.empty()) row["problems"] = problems;
    if (problems.empty()) ++passed;
    results.push_back(std::move(row));
  }
  const std::size_t total = results.size();
  if (format == Format::json) {
    Json report = {{"command", "selftest"}, {"passed", passed}, {"total", total}, {"fixtures", results}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["fixture"].get<std::string>();
      if (r.contains("problems")) {
        for (const auto& p : r["problems"]) out << "\n    " << p.get<std::string>();
      }
      out << "\n";
    }
    out << passed << "/" << total << " fixtures passed\n";
  }
  return passed == total ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decide rational cohomological triviality of character fibrations S/H -> G/H -> "
               "C^*.",
               "homfib"};
  std::string command;
  std::string file;
  std::string format_name = "text";
  std::size_t max_order = weyl::kDefaultMaxOrder;
  std::string table_file;
  bool timing = false;
  app.add_option("command", command, "analyze | poincare | decompose | converse-example | selftest")
      ->required()
      ->check(CLI::IsMember({"analyze", "poincare", "decompose", "converse-example", "selftest"}));
  app.add_option("file", file, "JSON document; stdin when omitted");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", max_order, "Cap on enumerated Weyl group orders")
      ->check(CLI::PositiveNumber);
  app.add_option("--table", table_file,
                 "JSON symmetric_space_table document extending the built-in table");
  app.add_flag("--timing", timing, "Add wall-clock timings to reports");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  Context ctx;
  ctx.command = command;
  ctx.options.max_order = max_order;
  ctx.timing = timing;

  std::optional<cohomology::SymmetricSpaceTable> table;
  try {
    if (!table_file.empty()) {
      std::ifstream f(table_file);
      if (!f) throw InputError(table_file + ": cannot open file");
      const Json doc = document::parse_text(read_all(f), table_file);
      const Node node(doc, "");
      if (node.at("kind").as_string() != "symmetric_space_table")
        node.at("kind").fail("expected kind \"symmetric_space_table\"");
      try {
        table = document::parse_table(node);
      } catch (const InputError& e) {
        rethrow_with_source(table_file, e);
      }
      ctx.options.table = &*table;
    }

    if (command == "selftest") return selftest(ctx, format, out);

    std::string source = file.empty() || file == "-" ? "<stdin>" : file;
    std::string text;
    if (source == "<stdin>") {
      text = read_all(in);
    } else {
      std::ifstream f(file);
      if (!f) throw InputError(file + ": cannot open file");
      text = read_all(f);
    }
    const Json doc = document::parse_text(text, source);
    Json report;
    try {
      const Node node(doc, "");
      report = process(node, ctx);
      report["input"] = doc;
    } catch (const InputError& e) {
      rethrow_with_source(source, e);
    }
    emit(report, format, out);
    return ctx.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace homfib::cli
