#include "gsearch/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <istream>
#include <ostream>

#include "gsearch/canon.hpp"
#include "gsearch/convert.hpp"
#include "gsearch/enumerate.hpp"
#include "gsearch/error.hpp"
#include "gsearch/graph6.hpp"
#include "gsearch/ramsey.hpp"
#include "gsearch/sat.hpp"

namespace gsearch::cli {

namespace {

struct Settings {
  int n = -1;
  std::string from = "graph6";
  std::string to = "graph6";
  std::string fmt = "graph6";
  bool perm = false;
  bool lenient = false;
  bool stats = false;
  int jobs = 0;
  std::string g1;
  std::string g2;
  int geng_n = 0;
  int s = 0;
  int t = 0;
  int ramsey_n = 0;
};

GraphFormat format_arg(const std::string& name) {
  if (auto f = parse_format_name(name)) return *f;
  throw FormatError("unknown graph format '" + name + "' (graph6, adj-matrix, adj-list, edge-list)");
}

const auto kFormatCheck = CLI::Validator(
    [](std::string& s) { return parse_format_name(s) ? std::string() : "unknown graph format '" + s + "'"; },
    "FMT");

std::vector<std::string> nonblank_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

Graph read_graph(int n, GraphFormat fmt, const std::string& text, bool lenient, std::ostream& err) {
  if (fmt != GraphFormat::graph6_atom) return to_graph(n, parse_value(fmt, text));
  std::string_view atom(text);
  if (atom.starts_with(kGraph6Header)) atom.remove_prefix(kGraph6Header.size());
  Graph g = decode_graph6(atom, lenient ? Padding::lenient : Padding::strict);
  if (lenient && graph6_padding_dirty(atom)) err << "warning: nonzero graph6 padding bits in " << atom << '\n';
  if (n >= 0 && g.order() != n) {
    throw SizeMismatchError("graph6 atom encodes " + std::to_string(g.order()) + " vertices, expected " +
                            std::to_string(n));
  }
  return g;
}

void print_stats(std::ostream& err, const std::vector<LevelStats>& levels, bool with_models) {
  err << "n\tcount\tseconds\tcanon_seconds" << (with_models ? "\tmodels" : "") << '\n';
  err << std::fixed << std::setprecision(3);
  for (const auto& l : levels) {
    err << l.n << '\t' << l.count << '\t' << l.seconds << '\t' << l.canon_seconds;
    if (with_models) err << '\t' << l.models;
    err << '\n';
  }
  err << std::defaultfloat;
}

int cmd_convert(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const GraphFormat from = format_arg(s.from);
  const GraphFormat to = format_arg(s.to);
  for (const auto& line : nonblank_lines(in)) {
    out << render_value(from_graph(read_graph(s.n, from, line, s.lenient, err), to)) << '\n';
  }
  return kExitOk;
}

int cmd_canon(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const GraphFormat fmt = format_arg(s.fmt);
  for (const auto& line : nonblank_lines(in)) {
    const CanonicalResult r = densenauty(read_graph(s.n, fmt, line, s.lenient, err));
    out << render_value(from_graph(r.canonic, fmt));
    if (s.perm) out << '\t' << to_string(r.permutation, 1);
    out << '\n';
  }
  return kExitOk;
}

int cmd_iso(const Settings& s, std::ostream& out, std::ostream& err) {
  const GraphFormat fmt = format_arg(s.fmt);
  const Graph g1 = read_graph(s.n, fmt, s.g1, s.lenient, err);
  const Graph g2 = read_graph(s.n, fmt, s.g2, s.lenient, err);
  const auto witness = isomorphic(s.n, g1, g2);
  if (!witness) return kExitData;
  out << to_string(witness->perm, 1) << '\n';
  return kExitOk;
}

int cmd_geng(const Settings& s, std::ostream& out) {
  const auto graphs = all_nonisomorphic(s.geng_n, s.jobs);
  write_graph6_lines(out, graphs);
  return kExitOk;
}

int cmd_shortg(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Graph> graphs;
  for (const auto& line : read_graph6_lines(in)) graphs.push_back(read_graph(-1, GraphFormat::graph6_atom, line, s.lenient, err));
  write_graph6_lines(out, dedup_canonical(graphs, s.jobs));
  return kExitOk;
}

int cmd_ramsey_gt(const Settings& s, std::ostream& out, std::ostream& err) {
  GenerateOptions opts;
  opts.jobs = s.jobs;
  const RamseyResult r = run_ramsey_gt({s.s, s.t, s.ramsey_n}, opts);
  write_graph6_lines(out, r.graphs);
  if (s.stats) print_stats(err, r.levels, false);
  return kExitOk;
}

int cmd_ramsey_cg(const Settings& s, std::ostream& out, std::ostream& err) {
  const RamseyResult r = run_ramsey_cg({s.s, s.t, s.ramsey_n});
  write_graph6_lines(out, r.graphs);
  if (s.stats) print_stats(err, r.levels, true);
  return kExitOk;
}

int cmd_ramsey_cnf(const Settings& s, std::ostream& out) {
  const RamseyEncoding enc = encode_ramsey({s.s, s.t, s.ramsey_n});
  out << "c ramsey s=" << s.s << " t=" << s.t << " n=" << s.ramsey_n << "; edge variables 1.."
      << enc.edges.num_edge_vars() << " in row-major upper-triangle order\n";
  out << sat::to_dimacs(enc.cnf);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph canonization, isomorph-free enumeration and Ramsey graph search"};
  app.name(args.empty() ? "gsearch" : args.front());
  app.require_subcommand(1);
  Settings s;

  auto* convert = app.add_subcommand("convert", "Convert graphs line by line between formats");
  convert->add_option("--n", s.n, "Vertex count")->required()->check(CLI::Range(0, Graph::kMaxVertices));
  convert->add_option("--from", s.from, "Input format")->required()->check(kFormatCheck);
  convert->add_option("--to", s.to, "Output format")->required()->check(kFormatCheck);
  convert->add_flag("--lenient", s.lenient, "Warn instead of failing on nonzero graph6 padding");

  auto* canon = app.add_subcommand("canon", "Print the canonical form of each input graph");
  canon->add_option("--n", s.n, "Vertex count")->required()->check(CLI::Range(0, Graph::kMaxVertices));
  canon->add_option("--fmt", s.fmt, "Input and output format")->check(kFormatCheck);
  canon->add_flag("--perm", s.perm, "Append the canonical permutation (1-based)");
  canon->add_flag("--lenient", s.lenient, "Warn instead of failing on nonzero graph6 padding");

  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism (exit 1 if not isomorphic)");
  iso->add_option("--n", s.n, "Vertex count")->required()->check(CLI::Range(0, Graph::kMaxVertices));
  iso->add_option("--fmt", s.fmt, "Format of both graphs")->check(kFormatCheck);
  iso->add_option("G1", s.g1, "First graph")->required();
  iso->add_option("G2", s.g2, "Second graph")->required();

  auto* geng = app.add_subcommand("geng", "All non-isomorphic graphs on N vertices, as graph6 lines");
  geng->add_option("N", s.geng_n, "Vertex count")->required()->check(CLI::Range(0, Graph::kMaxVertices));
  geng->add_option("--jobs", s.jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  auto* shortg = app.add_subcommand("shortg", "Remove isomorphic duplicates from graph6 lines on stdin");
  shortg->add_option("--jobs", s.jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  shortg->add_flag("--lenient", s.lenient, "Warn instead of failing on nonzero graph6 padding");

  auto* ramsey = app.add_subcommand("ramsey", "Ramsey (S,T;N) graph search");
  ramsey->require_subcommand(1);
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("S", s.s, "Forbidden independent-set size")->required()->check(CLI::PositiveNumber);
    sub->add_option("T", s.t, "Forbidden clique size")->required()->check(CLI::PositiveNumber);
    sub->add_option("N", s.ramsey_n, "Vertex count")->required()->check(CLI::Range(0, Graph::kMaxVertices));
  };
  auto* gt = ramsey->add_subcommand("gt", "Generate, test and reduce");
  add_instance(gt);
  gt->add_flag("--stats", s.stats, "Per-level counts and timings on stderr");
  gt->add_option("--jobs", s.jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  auto* cg = ramsey->add_subcommand("cg", "Constrain, generate and reduce via the built-in SAT solver");
  add_instance(cg);
  cg->add_flag("--stats", s.stats, "Counts and timings on stderr");
  auto* cnf = ramsey->add_subcommand("cnf", "Print the symmetry-broken encoding as DIMACS");
  add_instance(cnf);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("gsearch");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*convert) return cmd_convert(s, in, out, err);
    if (*canon) return cmd_canon(s, in, out, err);
    if (*iso) return cmd_iso(s, out, err);
    if (*geng) return cmd_geng(s, out);
    if (*shortg) return cmd_shortg(s, in, out, err);
    if (*gt) return cmd_ramsey_gt(s, out, err);
    if (*cg) return cmd_ramsey_cg(s, out, err);
    if (*cnf) {
      if (s.ramsey_n < 1) {
        err << app.get_name() << ": ramsey cnf needs N >= 1\n";
        return kExitUsage;
      }
      return cmd_ramsey_cnf(s, out);
    }
  } catch (const Error& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace gsearch::cli
