#include "ngeta/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "ngeta/error.hpp"
#include "ngeta/families.hpp"
#include "ngeta/generators.hpp"
#include "ngeta/graph6.hpp"
#include "ngeta/laws.hpp"
#include "ngeta/report.hpp"

namespace ngeta {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::usage, what); }

SearchOptions search_options(const CliConfig& c) {
  return SearchOptions{c.workers, c.scan_limit, c.max_counterexamples};
}

void validate(const CliConfig& c) {
  if (c.scan_limit < 1 || c.scan_limit > kDefaultScanLimit) usage("--scan-limit must lie in 1..26");
  if (c.workers < 1) usage("--workers must be at least 1");
}

// Opens the graph6 source: the file named by --input, otherwise `in`.
class Source {
 public:
  Source(const CliConfig& c, std::istream& in) {
    if (c.input.empty() || c.input == "-") {
      stream_ = &in;
    } else {
      file_ = std::make_unique<std::ifstream>(c.input);
      if (!*file_) usage("cannot open '" + c.input + "'");
      stream_ = file_.get();
    }
  }
  std::istream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

void for_each_input(const CliConfig& c, std::istream& in, const std::function<void(const Graph&)>& f) {
  if (!c.target.empty()) {
    f(parse_graph6(c.target));
    return;
  }
  Source source(c, in);
  Graph6Reader reader(source.stream());
  while (auto g = reader.next()) f(*g);
}

void require_format(const CliConfig& c, bool graph6_allowed) {
  if (c.format == OutputFormat::graph6 && !graph6_allowed) usage("--format graph6 applies only to gen");
}

int run_eta(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  if (c.method != "scan" && c.method != "extension" && c.method != "tree") {
    usage("--method must be scan, extension or tree");
  }
  for_each_input(c, in, [&](const Graph& g) {
    Count value = 0;
    if (c.method == "scan") value = eta_subset_scan(g, c.scan_limit).total();
    if (c.method == "extension") value = eta_extension(g, c.scan_limit).total();
    if (c.method == "tree") value = eta_tree_dp(g);
    if (c.format == OutputFormat::json) {
      out << eta_json(g, value).dump() << '\n';
    } else {
      out << eta_tsv(g, value) << '\n';
    }
  });
  return kExitPass;
}

int run_profile(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  for_each_input(c, in, [&](const Graph& g) {
    const EtaProfile p = eta_subset_scan(g, c.scan_limit);
    if (c.format == OutputFormat::json) {
      out << profile_json(g, p).dump() << '\n';
    } else {
      out << profile_tsv(g, p) << '\n';
    }
  });
  return kExitPass;
}

int run_ng(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  for_each_input(c, in, [&](const Graph& g) {
    const NgReport r = ng_report(g, c.scan_limit);
    if (c.format == OutputFormat::json) {
      out << ng_json(g, r).dump() << '\n';
    } else {
      out << ng_tsv(g, r) << '\n';
    }
  });
  return kExitPass;
}

bool names_class(const std::string& spec) {
  const auto name = spec.substr(0, spec.find(':'));
  return name == "labeled" || name == "all_labeled" || name == "trees" || name == "unicyclic" ||
         name == "graph6" || name == "stream";
}

void emit_graph(const CliConfig& c, const Graph& g, std::ostream& out) {
  switch (c.format) {
    case OutputFormat::graph6: out << emit_graph6(g) << '\n'; break;
    case OutputFormat::json: out << graph_json(g).dump() << '\n'; break;
    case OutputFormat::tsv: out << graph_tsv(g) << '\n'; break;
  }
}

int run_gen(CliConfig c, std::istream& in, std::ostream& out) {
  if (c.target.empty()) usage("gen needs a family or class spec");
  if (!c.format_given) c.format = OutputFormat::graph6;
  if (!names_class(c.target)) {
    emit_graph(c, build(FamilySpec::parse(c.target)), out);
    return kExitPass;
  }
  const auto spec = GraphClassSpec::parse(c.target);
  if (spec.kind == ClassKind::trees) {
    // Streamed so large orders need no buffer.
    FreeTreeGenerator trees(spec.order);
    while (auto t = trees.next()) emit_graph(c, *t, out);
    return kExitPass;
  }
  const auto graphs = GraphCollection::from_spec(spec, &in);
  for (std::uint64_t i = 0; i < graphs.size(); ++i) emit_graph(c, graphs.at(i), out);
  return kExitPass;
}

int run_search(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  std::string spec_text = c.target.empty() ? c.class_spec : c.target;
  if (spec_text.empty() && !c.input.empty()) spec_text = "graph6:" + c.input;
  if (spec_text.empty()) usage("search needs a class spec");
  const auto spec = GraphClassSpec::parse(spec_text);
  const ExtremalReport report = search_extremal(spec, search_options(c), &in);
  if (c.format == OutputFormat::json) {
    out << extremal_json(report).dump() << '\n';
  } else {
    out << extremal_tsv(report) << '\n';
  }
  return kExitPass;
}

void print_law(const CliConfig& c, const LawReport& report, std::ostream& out) {
  if (c.format == OutputFormat::json) {
    out << law_json(report).dump() << '\n';
  } else {
    out << law_tsv(report) << '\n';
  }
}

// The collection that replaces the built-in labeled class, if any.
std::optional<GraphCollection> supplied_class(const CliConfig& c, std::istream& in, std::string& name) {
  if (!c.class_spec.empty() && !c.input.empty()) usage("give --class or --input, not both");
  if (!c.class_spec.empty()) {
    const auto spec = GraphClassSpec::parse(c.class_spec);
    name = spec.to_string();
    return GraphCollection::from_spec(spec, &in);
  }
  if (!c.input.empty()) {
    name = "graph6:" + c.input;
    return GraphCollection::from_spec(GraphClassSpec::stream(c.input), &in);
  }
  return std::nullopt;
}

int stream_order(const GraphCollection& graphs) {
  if (graphs.size() == 0) usage("the supplied class is empty");
  return graphs.at(0).order();
}

bool stream_law(const std::string& law) {
  return law == "min-bound" || law == "per-size" || law == "pair-lemma" || law == "vertex-lemma" ||
         law == "twin-edge" || law == "subset-counter" || law == "maximal-properties" || law == "conjecture";
}

int run_check(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  if (c.target.empty()) usage("check needs a law name or 'all'");
  std::string name;
  const auto supplied = supplied_class(c, in, name);
  const GraphCollection* stream = supplied ? &*supplied : nullptr;
  const SearchOptions opts = search_options(c);

  std::optional<int> order = c.order;
  if (!order && stream) order = stream_order(*stream);

  auto run_one = [&](const std::string& law) {
    LawReport report = run_law(law, order.value_or(0), opts, stream_law(law) ? stream : nullptr);
    if (stream && stream_law(law)) report.domain = name;
    return report;
  };

  int status = kExitPass;
  if (c.target == "all") {
    if (!order) usage("check all needs --order");
    for (const auto& law : law_names()) {
      if (!law_applies(law, *order) && !(stream && stream_law(law))) continue;
      const LawReport report = run_one(law);
      print_law(c, report, out);
      if (!report.pass()) status = kExitCounterexample;
    }
    return status;
  }
  if (!order && c.target != "p4-c4" && c.target != "family-minimizers") {
    if (std::find(law_names().begin(), law_names().end(), c.target) == law_names().end()) {
      usage("unknown law '" + c.target + "'");
    }
    usage("check " + c.target + " needs --order");
  }
  const LawReport report = run_one(c.target);
  print_law(c, report, out);
  return report.pass() ? kExitPass : kExitCounterexample;
}

int parse_order(const std::string& text) {
  int n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) usage("bad order '" + text + "'");
  return n;
}

int run_conjecture(const CliConfig& c, std::istream& in, std::ostream& out) {
  require_format(c, false);
  if (c.target.empty()) usage("conjecture needs an order");
  const int n = parse_order(c.target);
  std::string name;
  const auto supplied = supplied_class(c, in, name);
  LawReport report = check_conjecture(n, search_options(c), supplied ? &*supplied : nullptr);
  if (supplied) report.domain = name;
  print_law(c, report, out);
  return report.pass() ? kExitPass : kExitCounterexample;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const std::string& cmd = config.command;
    if (cmd == "eta") return run_eta(config, in, out);
    if (cmd == "profile") return run_profile(config, in, out);
    if (cmd == "ng") return run_ng(config, in, out);
    if (cmd == "gen") return run_gen(config, in, out);
    if (cmd == "search") return run_search(config, in, out);
    if (cmd == "check") return run_check(config, in, out);
    if (cmd == "conjecture") return run_conjecture(config, in, out);
    usage("unknown command '" + cmd + "'");
  } catch (const Error& e) {
    err << "ngeta: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::internal ? kExitCounterexample : kExitUsage;
  } catch (const std::exception& e) {
    err << "ngeta: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string format = "json";

  CLI::App app{"Connected induced subgraph counts and Nordhaus-Gaddum sums of small graphs", "ngeta"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "graph6"}));
  app.add_option("--scan-limit", config.scan_limit, "Largest order for 2^n subset sweeps (<= 26)");
  app.add_option("--workers", config.workers, "Worker threads for search and check");
  app.add_option("--max-counterexamples", config.max_counterexamples, "Counterexamples listed per law");
  app.add_option("--input", config.input, "graph6 file ('-' for standard input)");

  auto graph_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("graph6", config.target, "One graph6 record; otherwise records are read from the input");
    return sub;
  };
  graph_command("eta", "Number of connected induced subgraphs")
      ->add_option("--method", config.method, "scan, extension or tree");
  graph_command("profile", "Connected induced subgraphs by vertex count");
  graph_command("ng", "eta(G), eta(Gbar), their sum and |N(G,Gbar)|");

  app.add_subcommand("gen", "Emit a family member or every graph of a class")
      ->fallthrough()
      ->add_option("spec", config.target, "e.g. double_star:2,3, r:6,2, trees:9, labeled:4")
      ->required();
  auto* search = app.add_subcommand("search", "Extremal sums over a class, with certificates")->fallthrough();
  search->add_option("class", config.target, "labeled:N, trees:N, unicyclic:N or graph6:PATH");
  auto* check = app.add_subcommand("check", "Verify one law, or every law applicable at an order")->fallthrough();
  check->add_option("law", config.target, "Law name or 'all'")->required();
  check->add_option("--order,-n", config.order, "Vertex count");
  check->add_option("--class", config.class_spec, "Class replacing the built-in labeled class");
  app.add_subcommand("conjecture", "Diameter of every maximal graph of order n")
      ->fallthrough()
      ->add_option("n", config.target, "Order")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format_given = app.count("--format") > 0;
  config.format = format == "tsv" ? OutputFormat::tsv : format == "graph6" ? OutputFormat::graph6 : OutputFormat::json;
  return run(config, in, out, err);
}

}  // namespace ngeta
