// ============================================================================
// ilcheck — command-line front end
// ============================================================================
//
// Subcommands:
//   gen FAMILY ARG                 print a generated principle and its atoms
//   check FILE --schema F A       model-check a frame file (or --formula)
//   frame validate FILE           well-formedness defects of a frame file
//   frame enumerate / count       enumeration of all frames of a given size
//   correspond FAMILY [N]         condition-vs-validity sweep (zero mismatches)
//   separate N M                  search for a frame separating two levels
//   hierarchy                     condition monotonicity / syntactic identity
//
// Exit codes: 0 success/valid/clean, 1 countermodel/mismatch/exhausted
// search/defective frame, 2 usage or runtime error.
// ============================================================================

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "il/conditions.hpp"
#include "il/formula.hpp"
#include "il/frame.hpp"
#include "il/harness.hpp"
#include "il/schemata.hpp"
#include "il/semantics.hpp"
#include "il/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct StrategyFlags {
  bool exhaustive = false;  // documentary; exhaustive is the default
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int budget = 28;
  CLI::Option* samples_opt = nullptr;
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& sf) {
  CLI::Option* ex =
      cmd->add_flag("--exhaustive", sf.exhaustive,
                    "sweep every valuation within the bit budget (default)");
  sf.samples_opt = cmd->add_option(
      "--samples", sf.samples, "check this many pseudo-random valuations");
  cmd->add_option("--seed", sf.seed, "sampling seed (default 0)");
  cmd->add_option("--budget", sf.budget,
                  "exhaustive budget in valuation bits (default 28)");
  ex->excludes(sf.samples_opt);
}

il::Strategy make_strategy(const StrategyFlags& sf) {
  if (sf.samples_opt != nullptr && sf.samples_opt->count() > 0)
    return il::Sampled{sf.samples, sf.seed};
  return il::Exhaustive{sf.budget};
}

il::Frame load_valid_frame(const std::string& path) {
  il::Frame fr = il::parse_frame(read_file(path));
  const auto defects = il::validate(fr);
  if (!defects.empty()) {
    std::string msg = "frame is not well-formed:";
    for (const il::FrameDefect& d : defects) msg += "\n  " + d.str();
    throw std::runtime_error(msg);
  }
  return fr;
}

int emit_report(const il::Report& rep, const std::string& out_path) {
  const std::string text = rep.str();
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
  return rep.mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "principle generators, Veltman-frame model checking, first-order frame "
      "conditions, and correspondence/separation sweeps"};
  app.set_version_flag("--version", std::string(il::kVersion));
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------------
  std::string gen_family, gen_arg;
  CLI::App* gen = app.add_subcommand(
      "gen", "print a generated principle and its variable set");
  gen->add_option("family", gen_family,
                  "slim|slim-x|slim-y|slim-z|slim-tilde|broad|broad-u|fixed")
      ->required();
  gen->add_option("arg", gen_arg, "index (families) or name (fixed)")
      ->required();

  // check --------------------------------------------------------------------
  std::string check_file, check_formula, check_out;
  std::vector<std::string> check_schema;
  StrategyFlags check_sf;
  CLI::App* check =
      app.add_subcommand("check", "model-check a formula on a frame file");
  check->add_option("frame", check_file, "frame text file")->required();
  CLI::Option* schema_opt =
      check->add_option("--schema", check_schema,
                        "schema id, e.g. --schema slim-tilde 0")
          ->expected(2);
  CLI::Option* formula_opt =
      check->add_option("--formula", check_formula, "formula text");
  schema_opt->excludes(formula_opt);
  check->add_option("--out", check_out, "write any countermodel to this file");
  add_strategy_flags(check, check_sf);

  // frame --------------------------------------------------------------------
  CLI::App* frame = app.add_subcommand("frame", "frame file utilities");
  frame->require_subcommand(1);

  std::string fv_file;
  CLI::App* fvalidate =
      frame->add_subcommand("validate", "report well-formedness defects");
  fvalidate->add_option("file", fv_file, "frame text file")->required();

  int fe_size = 3;
  bool fe_dedup = true;
  CLI::App* fenumerate = frame->add_subcommand(
      "enumerate", "print every frame with exactly --size worlds");
  fenumerate->add_option("--size", fe_size, "world count (default 3)");
  fenumerate->add_option(
      "--dedup", fe_dedup,
      "one frame per isomorphism class (default true)");

  int fc_size = 3;
  bool fc_dedup = false;
  CLI::App* fcount = frame->add_subcommand(
      "count", "count frames with exactly --size worlds");
  fcount->add_option("--size", fc_size, "world count (default 3)");
  fcount->add_option("--dedup", fc_dedup,
                     "count isomorphism classes instead (default false)");

  // correspond ----------------------------------------------------------------
  std::string co_family, co_out;
  int co_n = 0, co_size = 4;
  bool co_dedup = true;
  StrategyFlags co_sf;
  CLI::App* correspond = app.add_subcommand(
      "correspond",
      "per frame: condition failure yields a verified refutation, condition "
      "success must leave the principle countermodel-free");
  correspond->add_option("family", co_family, "slim|broad|P|M")->required();
  correspond->add_option("n", co_n, "level (slim/broad only, default 0)");
  correspond->add_option("--size", co_size,
                         "sweep frames of 1..size worlds (default 4)");
  correspond->add_option("--dedup", co_dedup,
                         "one frame per isomorphism class (default true)");
  correspond->add_option("--out", co_out, "also write the report here");
  add_strategy_flags(correspond, co_sf);

  // separate -----------------------------------------------------------------
  int sep_n = 0, sep_m = 0, sep_max = 7;
  std::string sep_out;
  CLI::App* separate = app.add_subcommand(
      "separate",
      "find the first frame where condition level N holds and level M fails");
  separate->add_option("n", sep_n, "level that must hold")->required();
  separate->add_option("m", sep_m, "level that must fail")->required();
  separate->add_option("--max", sep_max, "largest frame size (default 7)");
  separate->add_option("--out", sep_out, "also write the certificate here");

  // hierarchy ------------------------------------------------------------------
  int hi_max = 3, hi_size = 4;
  bool hi_dedup = true, hi_syntactic = false;
  std::string hi_out;
  StrategyFlags hi_sf;
  CLI::App* hierarchy = app.add_subcommand(
      "hierarchy",
      "check that each condition level implies the one below it");
  hierarchy->add_option("--max", hi_max, "highest level checked (default 3)");
  hierarchy->add_option("--size", hi_size,
                        "sweep frames of 1..size worlds (default 4)");
  hierarchy->add_option("--dedup", hi_dedup,
                        "one frame per isomorphism class (default true)");
  hierarchy->add_flag(
      "--syntactic", hi_syntactic,
      "instead check the generated-vs-renamed-closed-form identity");
  hierarchy->add_option("--out", hi_out, "also write the report here");
  add_strategy_flags(hierarchy, hi_sf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const il::Fptr f = il::generate(il::SchemaId::parse(gen_family, gen_arg));
      std::cout << il::print(f) << "\n";
      std::cout << "vars:";
      for (const il::VarName& v : il::vars(f)) std::cout << " " << v.str();
      std::cout << "\n";
      return 0;
    }

    if (check->parsed()) {
      const il::Frame fr = load_valid_frame(check_file);
      il::Fptr f;
      if (schema_opt->count() > 0)
        f = il::generate(il::SchemaId::parse(check_schema[0], check_schema[1]));
      else if (formula_opt->count() > 0)
        f = il::parse(check_formula);
      else
        throw std::runtime_error("provide --schema or --formula");
      const il::Verdict v = il::frame_valid(fr, f, make_strategy(check_sf));
      if (const il::Countermodel* cm = il::as_countermodel(v)) {
        il::CountermodelDoc doc;
        doc.frame = fr;
        doc.v = cm->v;
        doc.world = cm->world;
        doc.claim = "refutes " + il::print(f);
        const std::string text = il::serialize_countermodel(doc);
        std::cout << "countermodel at world " << cm->world << "\n" << text;
        if (!check_out.empty()) write_file(check_out, text);
        return 1;
      }
      if (std::holds_alternative<il::Valid>(v)) {
        std::cout << "valid\n";
      } else {
        const auto& sc = std::get<il::SampledClean>(v);
        std::cout << "no countermodel found (samples=" << sc.samples
                  << " seed=" << sc.seed << ")\n";
      }
      return 0;
    }

    if (frame->parsed()) {
      if (fvalidate->parsed()) {
        const il::Frame fr = il::parse_frame(read_file(fv_file));
        const auto defects = il::validate(fr);
        if (defects.empty()) {
          std::cout << "valid\n";
          return 0;
        }
        for (const il::FrameDefect& d : defects)
          std::cout << "defect: " << d.str() << "\n";
        return 1;
      }
      if (fenumerate->parsed()) {
        il::for_each_frame(fe_size, fe_dedup, [](const il::Frame& fr) {
          std::cout << "# frame " << il::frame_hash_hex(fr) << "\n"
                    << il::serialize_frame(fr) << "\n";
          return true;
        });
        return 0;
      }
      // count
      std::cout << il::count_frames(fc_size, fc_dedup) << "\n";
      return 0;
    }

    if (correspond->parsed()) {
      const auto fam = il::parse_correspond_family(co_family);
      if (!fam)
        throw std::runtime_error("family must be one of slim, broad, P, M");
      il::RunConfig cfg;
      cfg.size = co_size;
      cfg.dedup = co_dedup;
      cfg.strategy = make_strategy(co_sf);
      return emit_report(il::run_correspond(*fam, co_n, cfg), co_out);
    }

    if (separate->parsed()) {
      const il::SeparationOutcome out =
          il::run_separate(sep_n, sep_m, sep_max);
      if (out.cert) {
        const std::string text = il::serialize_certificate(*out.cert);
        std::cout << "separating frame found: level " << sep_n
                  << " holds, level " << sep_m << " fails\n"
                  << "worlds=" << out.cert->frame.n
                  << " frames_scanned=" << out.frames_scanned << "\n"
                  << text;
        if (!sep_out.empty()) write_file(sep_out, text);
        return 0;
      }
      std::cerr << "no separating frame with at most " << out.searched_max
                << " worlds (scanned " << out.frames_scanned << " frames)\n";
      return 1;
    }

    // hierarchy
    if (hi_syntactic) return emit_report(il::run_hierarchy_syntactic(hi_max),
                                         hi_out);
    il::RunConfig cfg;
    cfg.size = hi_size;
    cfg.dedup = hi_dedup;
    cfg.strategy = make_strategy(hi_sf);
    return emit_report(il::run_hierarchy(hi_max, cfg), hi_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
