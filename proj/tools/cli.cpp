#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "smoothorb/classification.hpp"
#include "smoothorb/enumeration.hpp"
#include "smoothorb/error.hpp"
#include "smoothorb/grassmann.hpp"
#include "smoothorb/matroid.hpp"
#include "smoothorb/polytope.hpp"
#include "smoothorb/report.hpp"
#include "smoothorb/text_io.hpp"

namespace smoothorb::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string file;
  std::string format = "text";
  std::string basis;
  int n = 0;
  int shards = 1;
  int shard_index = 0;
  int jobs = 1;
  std::string out_file;
  bool timing = false;
};

OutputFormat output_format(const Settings& s) { return s.format == "json" ? OutputFormat::Json : OutputFormat::Text; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

MatroidText read_matroid_text(const Settings& s) {
  std::ifstream in = open_input(s.file);
  return parse_matroid_text(in);
}

Matroid read_matroid(const Settings& s) {
  MatroidText text = read_matroid_text(s);
  return Matroid::from_bases(text.n, text.k, std::move(text.bases));
}

PointMatrix read_point(const Settings& s) {
  std::ifstream in = open_input(s.file);
  return PointMatrix(parse_matrix_text(in));
}

BasisSet parse_basis_flag(const std::string& text) {
  std::vector<int> elements;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      elements.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--basis expects comma-separated integers, got '" + text + "'");
    }
  }
  try {
    return BasisSet::from_elements(elements);
  } catch (const Error& e) {
    throw UsageError(std::string("--basis: ") + e.what());
  }
}

int emit_verification(const VerificationReport& report, const Settings& s, std::ostream& out) {
  out << render(report, output_format(s), s.timing);
  if (!s.out_file.empty()) {
    std::ofstream file(s.out_file);
    if (!file) throw UsageError("cannot write '" + s.out_file + "'");
    file << to_json(report, s.timing).dump(2) << "\n";
  }
  return report.passed() ? kSuccess : kCounterexample;
}

using Handler = std::function<int(const Settings&, std::ostream&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"matroid check",
       [](const Settings& s, std::ostream& out) {
         const MatroidText text = read_matroid_text(s);
         const ValidationReport report = validate_exchange(text.n, text.k, text.bases);
         out << render(report, output_format(s));
         return report.valid ? kSuccess : kDomainError;
       }},
      {"matroid analyze",
       [](const Settings& s, std::ostream& out) {
         out << render(analyze(read_matroid(s)), output_format(s));
         return kSuccess;
       }},
      {"matroid graph",
       [](const Settings& s, std::ostream& out) {
         const Matroid m = read_matroid(s);
         out << render(vertex_graph(m, parse_basis_flag(s.basis)), output_format(s));
         return kSuccess;
       }},
      {"grass pluecker",
       [](const Settings& s, std::ostream& out) {
         out << render(pluecker(read_point(s)), output_format(s));
         return kSuccess;
       }},
      {"grass moment",
       [](const Settings& s, std::ostream& out) {
         out << render(moment_map(read_point(s)), output_format(s));
         return kSuccess;
       }},
      {"grass smooth",
       [](const Settings& s, std::ostream& out) {
         out << render(smoothness(read_point(s)), output_format(s));
         return kSuccess;
       }},
      {"grass split",
       [](const Settings& s, std::ostream& out) {
         const PointMatrix a = read_point(s);
         const ComponentDecomposition partition = components(support_matroid(pluecker(a)));
         out << render(block_diagonalize(a, partition), partition, output_format(s));
         return kSuccess;
       }},
      {"verify theorem-b",
       [](const Settings& s, std::ostream& out) {
         return emit_verification(verify_theorem_simple_product(s.n, {{s.shards, s.shard_index}, s.jobs}), s, out);
       }},
      {"verify theorem-1-6",
       [](const Settings& s, std::ostream& out) {
         return emit_verification(verify_adjacent_nonsimple(s.n, {{s.shards, s.shard_index}, s.jobs}), s, out);
       }},
      {"verify lemmas",
       [](const Settings& s, std::ostream& out) {
         return emit_verification(verify_vertex_promotion(s.n, {{s.shards, s.shard_index}, s.jobs}), s, out);
       }},
  };
  return table;
}

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Matroid polytope simplicity and torus orbit smoothness"};
  app.name("smoothorb");
  app.require_subcommand(1, 1);

  std::string verb;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    CLI::App* cmd = group->add_subcommand(name, help);
    add_format(cmd, s);
    cmd->callback([&verb, group, name] { verb = group->get_name() + " " + name; });
    return cmd;
  };

  CLI::App* matroid = app.add_subcommand("matroid", "Matroid files: header 'n k', one basis per line");
  matroid->require_subcommand(1, 1);
  leaf(matroid, "check", "Check the basis exchange axiom")->add_option("FILE", s.file)->required();
  leaf(matroid, "analyze", "Dimension, vertex and edge counts, simplicity verdict")
      ->add_option("FILE", s.file)
      ->required();
  CLI::App* graph = leaf(matroid, "graph", "Edge-direction graph at one vertex");
  graph->add_option("FILE", s.file)->required();
  graph->add_option("--basis", s.basis, "Vertex basis, e.g. 1,2")->required();

  CLI::App* grass = app.add_subcommand("grass", "Matrix files: header 'n k', then n rows of k entries");
  grass->require_subcommand(1, 1);
  leaf(grass, "pluecker", "All maximal minors")->add_option("FILE", s.file)->required();
  leaf(grass, "moment", "Moment map image")->add_option("FILE", s.file)->required();
  leaf(grass, "smooth", "Smoothness of the torus orbit closure")->add_option("FILE", s.file)->required();
  leaf(grass, "split", "Block-diagonalize along the connected components")->add_option("FILE", s.file)->required();

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive checks over all matroids with n <= N");
  verify->require_subcommand(1, 1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"theorem-b", "Simple matroid polytopes are products of simplices"},
           {"theorem-1-6", "Simple vertices have an adjacent non-simple vertex"},
           {"lemmas", "Single and double exchange-set vertex criteria"}}) {
    CLI::App* cmd = leaf(verify, name, help);
    cmd->add_option("--n", s.n, "Largest ground set")->required()->check(CLI::Range(1, kMaxExhaustiveN));
    cmd->add_option("--shards", s.shards, "Total number of shards")->check(CLI::PositiveNumber);
    cmd->add_option("--shard-index", s.shard_index, "Shard handled by this run")->check(CLI::NonNegativeNumber);
    cmd->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", s.out_file, "Also write the JSON report to this file");
    cmd->add_flag("--timing", s.timing, "Include elapsed time");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (s.shard_index >= s.shards) throw UsageError("--shard-index must be less than --shards");
    return handlers().at(verb)(s, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const UsageError& e) {
    err << "smoothorb: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "smoothorb: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return is_input_error(e.code()) ? kUsageError : kDomainError;
  }
}

}  // namespace smoothorb::cli
