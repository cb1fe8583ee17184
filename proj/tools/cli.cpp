#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mostar/analytics.hpp"
#include "mostar/constructions.hpp"
#include "mostar/enumeration.hpp"
#include "mostar/error.hpp"
#include "mostar/graph6.hpp"
#include "mostar/invariants.hpp"

namespace mostar::cli {

namespace {

using nlohmann::json;

enum class Format { Tsv, Csv, JsonLines };

int exit_code(Errc code) {
  switch (code) {
    case Errc::NotRealizable:
    case Errc::OddTarget:
      return 3;
    case Errc::Unknown:
      return 4;
    case Errc::OutOfRange:
      return 5;
    case Errc::MalformedRecord:
    case Errc::BadParams:
    case Errc::SelfLoop:
    case Errc::UnknownSuite:
    case Errc::MixedOrder:
    case Errc::EmptyStream:
      return 2;
    default:
      return 1;
  }
}

// Header-plus-rows writer for the delimited formats.
class Table {
 public:
  Table(std::ostream &out, Format format) : out_(out), format_(format) {}

  void header(const std::vector<std::string> &cols) {
    out_ << (format_ == Format::Tsv ? "#" : "");
    row(cols);
  }

  void row(const std::vector<std::string> &cells) {
    const char sep = format_ == Format::Csv ? ',' : '\t';
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << sep;
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ostream &out_;
  Format format_;
};

template <class Range>
std::string joined(const Range &items, char sep = ' ') {
  std::string s;
  for (const auto &x : items) {
    if (!s.empty()) s += sep;
    if constexpr (std::is_convertible_v<decltype(x), std::string>) {
      s += x;
    } else {
      s += std::to_string(x);
    }
  }
  return s.empty() ? "-" : s;
}

std::string b(bool v) { return v ? "1" : "0"; }

struct Options {
  Format format = Format::Tsv;
  unsigned threads = 0;
  std::string out_path;
  int verbosity = 0;
};

// Input is edge-list text when the first meaningful line starts with "n ",
// graph6 records otherwise.
std::vector<Graph> read_graphs(std::istream &in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream probe(text);
  std::string line;
  while (std::getline(probe, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 2, "n ") == 0) {
      std::istringstream edges(text);
      return {read_edge_list(edges)};
    }
    break;
  }
  std::istringstream records(text);
  std::vector<Graph> out;
  for (const auto &r : read_graph6_lines(records)) out.push_back(decode_graph6(r));
  if (out.empty()) throw Error(Errc::MalformedRecord, "no graphs in input");
  return out;
}

class InputSource {
 public:
  InputSource(const std::string &path, std::istream &stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
    } else {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw Error(Errc::MalformedRecord, "cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::istream &get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream *stream_ = nullptr;
};

void emit_compute(std::ostream &out, Format format, const std::vector<Graph> &graphs) {
  Table table(out, format);
  if (format != Format::JsonLines) {
    table.header({"graph", "graph6", "n", "m", "mostar", "wiener", "diameter",
                  "transmissions", "min_degree", "max_degree", "tree", "regular",
                  "chemical", "bipartite", "pendant", "triangle", "two_connected",
                  "two_edge_connected", "bridges", "cut_vertices"});
    table.header({"edge", "graph6", "u", "v", "n_u", "n_v", "eq", "phi"});
  }
  for (const Graph &g : graphs) {
    const auto tr = transmissions(g);
    const auto mo = mostar_index(g, tr);
    const auto profile = structural_profile(g);
    const auto reports = edge_reports(g);
    const std::string g6 = encode_graph6(g);
    std::vector<std::string> bridges;
    for (const Edge &e : profile.bridges) {
      bridges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (format == Format::JsonLines) {
      json edges = json::array();
      for (const auto &r : reports) {
        edges.push_back({{"u", r.u}, {"v", r.v}, {"n_u", r.n_u}, {"n_v", r.n_v},
                         {"eq", r.eq}, {"phi", r.phi}});
      }
      json obj{{"graph6", g6},
               {"n", g.order()},
               {"m", g.size()},
               {"mostar", mo},
               {"wiener", wiener_index(g)},
               {"diameter", *profile.diameter},
               {"transmissions", tr},
               {"degrees", profile.degrees},
               {"tree", profile.is_tree},
               {"regular", profile.is_regular},
               {"chemical", profile.is_chemical},
               {"bipartite", profile.is_bipartite},
               {"pendant", profile.has_pendant_vertex},
               {"triangle", profile.has_triangle},
               {"two_connected", profile.is_two_connected},
               {"two_edge_connected", profile.is_two_edge_connected},
               {"bridges", bridges},
               {"cut_vertices", profile.cut_vertices},
               {"edges", edges}};
      out << obj.dump() << '\n';
      continue;
    }
    table.row({"graph", g6, std::to_string(g.order()), std::to_string(g.size()),
               std::to_string(mo), std::to_string(wiener_index(g)),
               std::to_string(*profile.diameter), joined(tr),
               std::to_string(profile.min_degree), std::to_string(profile.max_degree),
               b(profile.is_tree), b(profile.is_regular), b(profile.is_chemical),
               b(profile.is_bipartite), b(profile.has_pendant_vertex),
               b(profile.has_triangle), b(profile.is_two_connected),
               b(profile.is_two_edge_connected), joined(bridges),
               joined(profile.cut_vertices)});
    for (const auto &r : reports) {
      table.row({"edge", g6, std::to_string(r.u), std::to_string(r.v),
                 std::to_string(r.n_u), std::to_string(r.n_v), std::to_string(r.eq),
                 std::to_string(r.phi)});
    }
  }
}

void emit_witness(std::ostream &out, Format format, const WitnessPlan &plan) {
  const std::string g6 = encode_graph6(plan.graph);
  if (format == Format::JsonLines) {
    json obj{{"p", plan.target},
             {"family", std::string(to_string(plan.family))},
             {"params", plan.params},
             {"graph6", g6},
             {"certified_mo", plan.certified_mo}};
    out << obj.dump() << '\n';
    return;
  }
  Table table(out, format);
  table.header({"p", "family", "params", "graph6", "certified_mo"});
  table.row({std::to_string(plan.target), std::string(to_string(plan.family)),
             joined(plan.params, ','), g6, std::to_string(plan.certified_mo)});
}

void emit_stats(std::ostream &out, Format format, const StatsRow &r) {
  if (format == Format::JsonLines) {
    json obj{{"n", r.order},           {"count", r.count},
             {"min", r.min.value},     {"min_mult", r.min.count},
             {"max", r.max.value},     {"max_mult", r.max.count},
             {"mode", r.mode.value},   {"mode_mult", r.mode.count},
             {"avg_num", r.average.num}, {"avg_den", r.average.den},
             {"avg_3dp", r.average_3dp()}};
    out << obj.dump() << '\n';
    return;
  }
  Table table(out, format);
  table.header({"n", "count", "min", "min_mult", "max", "max_mult", "mode",
                "mode_mult", "avg_num", "avg_den", "avg_3dp"});
  table.row({std::to_string(r.order), std::to_string(r.count),
             std::to_string(r.min.value), std::to_string(r.min.count),
             std::to_string(r.max.value), std::to_string(r.max.count),
             std::to_string(r.mode.value), std::to_string(r.mode.count),
             std::to_string(r.average.num), std::to_string(r.average.den),
             r.average_3dp()});
}

void emit_histogram(std::ostream &out, Format format, const Histogram &h) {
  if (format == Format::JsonLines) {
    for (const auto &[value, count] : h.counts()) {
      out << json{{"value", value}, {"count", count}}.dump() << '\n';
    }
    return;
  }
  Table table(out, format);
  table.header({"value", "count"});
  for (const auto &[value, count] : h.counts()) {
    table.row({std::to_string(value), std::to_string(count)});
  }
}

void emit_table2(std::ostream &out, Format format, const RealizerTable &t) {
  if (format == Format::JsonLines) {
    for (std::int64_t p = 2; p <= t.mo_max; ++p) {
      json counts = json::object();
      for (int n = 3; n <= t.n_max; ++n) counts[std::to_string(n)] = t.at(p, n);
      out << json{{"mo", p}, {"counts", counts}}.dump() << '\n';
    }
    return;
  }
  Table table(out, format);
  std::vector<std::string> cols{"mo"};
  for (int n = 3; n <= t.n_max; ++n) cols.push_back(std::to_string(n));
  table.header(cols);
  for (std::int64_t p = 2; p <= t.mo_max; ++p) {
    std::vector<std::string> cells{std::to_string(p)};
    for (int n = 3; n <= t.n_max; ++n) {
      const auto c = t.at(p, n);
      cells.push_back(c == 0 ? "-" : std::to_string(c));
    }
    table.row(cells);
  }
}

void emit_report(std::ostream &out, Format format, const VerificationReport &r,
                 bool with_header) {
  if (format == Format::JsonLines) {
    for (const auto &c : r.claims) {
      json obj{{"suite", r.suite},
               {"claim", c.id},
               {"kind", c.proved ? "lemma" : "conjecture"},
               {"population", c.population},
               {"counterexamples", c.counterexamples},
               {"first_counterexample",
                c.first_counterexample ? json(*c.first_counterexample) : json(nullptr)}};
      out << obj.dump() << '\n';
    }
    for (const auto &[name, value] : r.observations) {
      out << json{{"suite", r.suite}, {"observation", name}, {"value", value}}.dump()
          << '\n';
    }
    return;
  }
  Table table(out, format);
  if (with_header) {
    table.header({"claim", "suite", "id", "kind", "population", "counterexamples",
                  "first_counterexample"});
    table.header({"observation", "suite", "name", "value"});
  }
  for (const auto &c : r.claims) {
    table.row({"claim", r.suite, c.id, c.proved ? "lemma" : "conjecture",
               std::to_string(c.population), std::to_string(c.counterexamples),
               c.first_counterexample.value_or("-")});
  }
  for (const auto &[name, value] : r.observations) {
    table.row({"observation", r.suite, name, std::to_string(value)});
  }
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  CLI::App app{"Mostar index toolkit: compute, construct, enumerate, aggregate, verify"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::map<std::string, Format> formats{
      {"tsv", Format::Tsv}, {"csv", Format::Csv}, {"jsonl", Format::JsonLines}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", opt.threads, "Worker cap (0 = all cores)");
  app.add_option("-o,--out", opt.out_path, "Write records to this file");
  app.add_flag("-v,--verbose", opt.verbosity, "Report progress on the diagnostic stream");

  // compute
  auto *compute = app.add_subcommand("compute", "Invariants of given graphs");
  std::string compute_in;
  std::string compute_g6;
  std::string compute_edges;
  auto *src = compute->add_option_group("input");
  src->add_option("--in", compute_in, "Edge-list or graph6 file ('-' for stdin)");
  src->add_option("--graph6", compute_g6, "Inline graph6 record");
  src->add_option("--edges", compute_edges, "Inline edge list, ';' separates lines");
  src->require_option(1);

  // witness
  auto *witness_cmd = app.add_subcommand("witness", "Certified graph with Mostar index p");
  std::int64_t target = 0;
  std::vector<int> layered;
  witness_cmd->add_option("p", target, "Target index")->required();
  auto *kind = witness_cmd->add_option_group("family");
  auto *chem = kind->add_flag("--chemical", "Maximum degree at most 4");
  auto *tree = kind->add_flag("--tree", "Tree witness (even p)");
  auto *layer3 = kind->add_flag("--three-layer", "Three-layer construction on 3p vertices");
  auto *cycles = kind->add_flag("--cycle-even", "Cycle-based even witness");
  auto *lay = kind->add_option("--layered-even", layered, "Layered family: <m> <k>")
                  ->expected(2);
  kind->require_option(0, 1);

  // enumerate
  auto *enumerate = app.add_subcommand("enumerate", "Connected graphs of order n as graph6");
  int enum_n = 0;
  enumerate->add_option("--n", enum_n, "Order")->required();

  // stats
  auto *stats = app.add_subcommand("stats", "Table-1 style row for one order");
  int stats_n = 0;
  std::string stats_in;
  bool histogram = false;
  auto *stats_src = stats->add_option_group("input");
  stats_src->add_option("--n", stats_n, "Generate connected graphs of this order");
  stats_src->add_option("--in", stats_in, "graph6 file ('-' for stdin)");
  stats_src->require_option(1);
  stats->add_flag("--histogram", histogram, "Emit value/count lines instead");

  // table2
  auto *table2 = app.add_subcommand("table2", "Counts of graphs by Mostar value and order");
  int t2_n = 0;
  std::int64_t t2_mo = 0;
  table2->add_option("--n-max", t2_n, "Largest order")->required();
  table2->add_option("--mo-max", t2_mo, "Largest Mostar value")->required();

  // verify
  auto *verify = app.add_subcommand("verify", "Run a check suite over small graphs");
  std::string suite;
  int verify_n = 9;
  verify->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify->add_option("--n-max", verify_n, "Largest order");

  // codec
  auto *codec = app.add_subcommand("codec", "Convert between edge lists and graph6");
  bool encode = false;
  bool decode = false;
  auto *dir = codec->add_option_group("direction");
  dir->add_flag("--encode", encode, "Edge list -> graph6");
  dir->add_flag("--decode", decode, "graph6 -> edge list");
  dir->require_option(1);
  std::string codec_in = "-";
  codec->add_option("--in", codec_in, "Input file ('-' for stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "error: cannot write " << opt.out_path << '\n';
      return 1;
    }
  }
  std::ostream &sink = opt.out_path.empty() ? out : file;
  // Records are buffered so a failure never leaves partial output behind.
  std::ostringstream buffer;

  try {
    int status = 0;
    if (*compute) {
      std::vector<Graph> graphs;
      if (!compute_g6.empty()) {
        graphs.push_back(decode_graph6(compute_g6));
      } else if (!compute_edges.empty()) {
        std::string text = compute_edges;
        std::replace(text.begin(), text.end(), ';', '\n');
        std::istringstream s(text);
        graphs.push_back(read_edge_list(s));
      } else {
        InputSource source(compute_in, in);
        graphs = read_graphs(source.get());
      }
      emit_compute(buffer, opt.format, graphs);
    } else if (*witness_cmd) {
      WitnessPlan plan;
      if (*chem) {
        plan = chemical_witness(target);
      } else if (*tree) {
        plan = tree_witness(target);
      } else if (*layer3) {
        if (target < 3 || target > kMaxOrder) {
          throw Error(Errc::BadParams, "three-layer needs 3 <= p");
        }
        plan = three_layer(static_cast<int>(target));
      } else if (*cycles) {
        plan = cycle_even_witness(target);
      } else if (*lay) {
        if (2 * std::int64_t{layered[0]} != target) {
          throw Error(Errc::BadParams, "layered family realises 2m; p must equal 2m");
        }
        plan = layered_even(layered[0], layered[1]);
      } else {
        plan = witness(target);
      }
      emit_witness(buffer, opt.format, plan);
    } else if (*enumerate) {
      write_graph6_stream(buffer, generate_connected(enum_n, opt.threads));
    } else if (*stats) {
      GraphStream stream;
      if (!stats_in.empty()) {
        InputSource source(stats_in, in);
        stream = read_graph6_stream(source.get());
      } else {
        stream = generate_connected(stats_n, opt.threads);
      }
      if (histogram) {
        emit_histogram(buffer, opt.format, mo_histogram(stream, opt.threads));
      } else {
        emit_stats(buffer, opt.format, stats_row(stream, opt.threads));
      }
    } else if (*table2) {
      emit_table2(buffer, opt.format, realizer_table(t2_n, t2_mo, opt.threads));
    } else if (*verify) {
      Census census(opt.threads);
      std::vector<std::string> ids;
      if (suite == "all") {
        ids = suite_ids();
      } else {
        ids.push_back(suite);
      }
      bool first = true;
      for (const auto &id : ids) {
        const auto report = verify_suite(census, id, verify_n);
        emit_report(buffer, opt.format, report, first);
        first = false;
        if (!report.passed()) status = 1;
      }
    } else if (*codec) {
      InputSource source(codec_in, in);
      if (encode) {
        for (const Graph &g : read_graphs(source.get())) buffer << encode_graph6(g) << '\n';
      } else {
        for (const auto &r : read_graph6_lines(source.get())) {
          write_edge_list(buffer, decode_graph6(r));
        }
      }
    }
    if (opt.verbosity > 0) {
      const std::string text = buffer.str();
      err << "records: " << std::count(text.begin(), text.end(), '\n') << '\n';
    }
    sink << buffer.str();
    sink.flush();
    return status;
  } catch (const Error &e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mostar::cli
