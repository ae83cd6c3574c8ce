#include "xxl/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Options {
  xxl::RunConfig config;
  std::string mode = "paper";
  std::string format = "human";
  std::string output;
};

void add_common(CLI::App* cmd, Options& opt, std::vector<std::string> formats) {
  cmd->add_option("--alpha", opt.config.alpha, "vertical slope parameter p/q in (0, tan(π/10))")
      ->capture_default_str();
  cmd->add_option("--precision", opt.config.precision, "interval precision in bits")->capture_default_str();
  cmd->add_option("--mode", opt.mode, "edge weights: reference bounds or computed geometry")
      ->check(CLI::IsMember({"paper", "computed"}))
      ->capture_default_str();
  cmd->add_option("--radius", opt.config.radius, "ball radius in the tree of polygons")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("-o,--output", opt.output, "write to a file instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xxl::InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opt.output, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << opt.output << "\n";
    return xxl::exit_input_error;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for the locally CAT(0) complexes of XXL type Artin groups"};
  app.require_subcommand(1);
  Options opt;
  std::string graph_path;
  std::string edge;
  std::string third;
  int m = 0;
  std::string word;
  std::string what;

  auto* check = app.add_subcommand("check", "certify the link condition for a graph");
  check->add_option("graph", graph_path, "graph file")->required();
  add_common(check, opt, {"human", "report"});

  auto* rank1 = app.add_subcommand("rank1", "certify a rank-one loop for a graph");
  rank1->add_option("graph", graph_path, "graph file")->required();
  auto* edge_opt = rank1->add_option("--edge", edge, "edge a,b carrying the loop");
  rank1->add_option("--third", third, "third generator c")->needs(edge_opt);
  edge_opt->needs(rank1->get_option("--third"));
  add_common(rank1, opt, {"human", "report"});

  auto* dihedral = app.add_subcommand("dihedral", "orbit counts, axes and angle table of I2(m)");
  dihedral->add_option("-m", m, "label m >= 5")->required();
  add_common(dihedral, opt, {"human", "report"});

  auto* word_cmd = app.add_subcommand("word", "decide whether a word is trivial in I2(m)");
  word_cmd->add_option("-m", m, "label m >= 5")->required();
  word_cmd->add_option("word", word, "word over a,b (or t,u / a,t)")->required();
  add_common(word_cmd, opt, {"human", "report"});

  auto* export_cmd = app.add_subcommand("export", "draw a ball of T_m, a piece graph or a vertex link");
  export_cmd->add_option("what", what, "tree-ball, piece-graph or link")
      ->required()
      ->check(CLI::IsMember({"tree-ball", "piece-graph", "link"}));
  export_cmd->add_option("graph", graph_path, "graph file (piece-graph)");
  export_cmd->add_option("-m", m, "label m >= 5 (tree-ball, link)");
  add_common(export_cmd, opt, {"dot", "svg"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : xxl::exit_input_error;
  }
  opt.config.mode = opt.mode == "computed" ? xxl::WeightMode::computed : xxl::WeightMode::paper;

  try {
    if (export_cmd->parsed()) {
      if (opt.format == "human") opt.format = "dot";
      std::string graph_text;
      if (what == "piece-graph") {
        if (graph_path.empty()) throw xxl::InputError("piece-graph needs a graph file");
        graph_text = read_file(graph_path);
      }
      const auto result = xxl::cmd_export(what, opt.format, graph_text, m, opt.config);
      if (result.exit_code != 0) {
        std::cerr << "error: " << result.error << "\n";
        return result.exit_code;
      }
      const int status = emit(opt, result.text);
      return status;
    }

    xxl::CommandResult result;
    if (check->parsed()) {
      result = xxl::cmd_check(read_file(graph_path), opt.config);
    } else if (rank1->parsed()) {
      std::optional<xxl::WitnessOverride> w;
      if (!edge.empty()) {
        const auto comma = edge.find(',');
        if (comma == std::string::npos) throw xxl::InputError("--edge expects a,b");
        w = xxl::WitnessOverride{edge.substr(0, comma), edge.substr(comma + 1), third};
      }
      result = xxl::cmd_rank1(read_file(graph_path), opt.config, w);
    } else if (dihedral->parsed()) {
      result = xxl::cmd_dihedral(m, opt.config);
    } else {
      result = xxl::cmd_word(m, word, opt.config);
    }
    const int status = emit(opt, xxl::format_report(result.report, opt.format));
    return status != 0 ? status : result.exit_code;
  } catch (const xxl::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return xxl::exit_input_error;
  }
}
