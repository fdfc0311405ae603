#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankc/hoa.hpp"
#include "rankc/oracle.hpp"
#include "rankc/pipeline.hpp"

namespace {

rankc::Ba load(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    in = &file;
  }
  std::ostringstream buf;
  buf << in->rdbuf();
  return rankc::parse_hoa(buf.str());
}

struct PipelineFlags {
  std::string trub = "trivial";
  std::string propagate;
  bool deelevate = false;
  bool trim = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--trub", trub, "TRUB source: trivial, elevator, general")
        ->check(CLI::IsMember({"trivial", "elevator", "general"}));
    cmd->add_option("--propagate", propagate,
                    "comma-separated analyses: outer,inner");
    cmd->add_flag("--deelevate", deelevate, "deelevate before complementing");
    cmd->add_flag("--trim", trim, "trim the output automaton");
  }

  rankc::PipelineConfig config(const rankc::Ba& input) const {
    rankc::PipelineConfig cfg;
    cfg.deelevate_first = deelevate;
    cfg.post_trim = trim;
    std::stringstream ss(propagate);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "outer")
        cfg.outer = true;
      else if (item == "inner")
        cfg.inner = true;
      else if (!item.empty())
        throw CLI::ValidationError("--propagate",
                                   "unknown analysis '" + item + "'");
    }
    if (trub == "general") {
      cfg.source = rankc::TrubSource::General;
    } else if (trub == "elevator") {
      if (rankc::is_elevator(rankc::preprocess(input, deelevate))) {
        cfg.source = rankc::TrubSource::Elevator;
      } else {
        std::cerr << "warning: not an elevator automaton; "
                     "falling back to general rank rules\n";
        cfg.source = rankc::TrubSource::General;
      }
    }
    return cfg;
  }
};

void print_stats(const rankc::PipelineResult& res, double wall_ms) {
  const rankc::ComplementStats& st = res.comp.stats;
  std::cerr << "waiting_states=" << st.waiting << "\n"
            << "tight_states=" << st.tight << "\n"
            << "total_states=" << st.total << "\n"
            << "transitions=" << st.transitions << "\n"
            << "max_rank=" << st.max_rank << "\n"
            << "chi_max=" << res.chi_max << "\n"
            << "output_states=" << res.comp.automaton.num_states << "\n"
            << "wall_ms=" << wall_ms << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"rank-based Buchi automaton complementation"};
  app.require_subcommand(1);

  std::string file;
  PipelineFlags flags;
  bool stats = false, stats_only = false;

  CLI::App* complement =
      app.add_subcommand("complement", "complement an HOA automaton");
  complement->add_option("file", file, "input HOA file, - for stdin")
      ->required();
  flags.attach(complement);
  complement->add_flag("--stats", stats, "print statistics to stderr");
  complement->add_flag("--stats-only", stats_only,
                       "print statistics only, no HOA output");

  CLI::App* analyze =
      app.add_subcommand("analyze", "component classification and rank bounds");
  analyze->add_option("file", file)->required();

  CLI::App* semidet =
      app.add_subcommand("semidet", "semi-determinize an elevator automaton");
  semidet->add_option("file", file)->required();

  uint32_t n = 8, symbols = 2;
  double td = 1.5, ad = 0.5;
  uint64_t seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "random Tabakov-Vardi automaton");
  gen->add_option("--n", n, "number of states");
  gen->add_option("--symbols", symbols, "alphabet size");
  gen->add_option("--td", td, "transition density");
  gen->add_option("--ad", ad, "acceptance density");
  gen->add_option("--seed", seed, "RNG seed");

  uint32_t max_stem = 3, max_loop = 4;
  CLI::App* check =
      app.add_subcommand("check", "bounded self-check of the complement");
  check->add_option("file", file)->required();
  check->add_option("--stem", max_stem, "maximum stem length");
  check->add_option("--loop", max_loop, "maximum loop length");
  PipelineFlags check_flags;
  check_flags.attach(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (complement->parsed()) {
    rankc::Ba input = load(file);
    auto t0 = std::chrono::steady_clock::now();
    rankc::PipelineResult res =
        rankc::run_pipeline(input, flags.config(input));
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    if (!stats_only) std::cout << rankc::serialize_hoa(res.comp.automaton);
    if (stats || stats_only) print_stats(res, wall_ms);
    return 0;
  }
  if (analyze->parsed()) {
    rankc::Ba input = load(file);
    rankc::Ba pre = rankc::preprocess(input, false);
    bool elevator = rankc::is_elevator(pre);
    rankc::RankAssignment ra = rankc::assign_ranks(pre, !elevator);
    for (uint32_t c : ra.cond.topo_order) {
      std::cout << "{";
      bool first = true;
      ra.cond.components[c].for_each([&](uint32_t q) {
        if (!first) std::cout << ",";
        first = false;
        std::cout << pre.state_name(q);
      });
      std::cout << "}: " << rankc::scc_kind_name(ra.labels[c].kind) << " "
                << ra.labels[c].bound << "\n";
    }
    std::cout << "elevator: " << (elevator ? "true" : "false") << "\n";
    return 0;
  }
  if (semidet->parsed()) {
    rankc::Ba pre = rankc::preprocess(load(file), false);
    if (!rankc::is_elevator(pre))
      throw CLI::ValidationError("semidet", "input is not an elevator automaton");
    std::cout << rankc::serialize_hoa(rankc::semi_determinize_elevator(pre));
    return 0;
  }
  if (gen->parsed()) {
    std::cout << rankc::serialize_hoa(
        rankc::tabakov_vardi(n, symbols, td, ad, seed));
    return 0;
  }
  if (check->parsed()) {
    rankc::Ba input = load(file);
    rankc::PipelineResult res =
        rankc::run_pipeline(input, check_flags.config(input));
    auto cex = rankc::complement_check(res.preprocessed, res.comp.automaton,
                                       max_stem, max_loop);
    if (!cex) {
      std::cout << "ok\n";
      return 0;
    }
    std::cout << "counterexample: stem=[";
    for (size_t i = 0; i < cex->stem.size(); ++i)
      std::cout << (i ? "," : "") << input.symbols[cex->stem[i]];
    std::cout << "] loop=[";
    for (size_t i = 0; i < cex->loop.size(); ++i)
      std::cout << (i ? "," : "") << input.symbols[cex->loop[i]];
    std::cout << "]\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
