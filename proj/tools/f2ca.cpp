// Command-line front end: evolve, render, jost, census, verify.
//
// Exit codes: 0 pass, 1 failure (a property or internal check failed),
// 2 usage or parse error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "f2ca/f2ca.hpp"

namespace {

using f2ca::CaState;
using f2ca::RuleForm;
using f2ca::Site;

CaState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return f2ca::parse_state(line);
  }
  throw std::runtime_error("no state line in input file: " + path);
}

RuleForm parse_form(const std::string& name) {
  return name == "exact" ? RuleForm::Exact : RuleForm::Mod2;
}

// Manifests are key=value lines mirroring the long option names of one
// subcommand ('#' comments and blank lines allowed). They are expanded into
// arguments ahead of the explicit ones, so explicit flags win.
std::vector<std::string> manifest_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  std::vector<std::string> args;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error("manifest: malformed line " + std::to_string(line_no) +
                               " (want key=value)");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "mod2" || key == "measures") {
      if (value == "true" || value == "1") args.push_back("--" + key);
      else if (value != "false" && value != "0")
        throw std::runtime_error("manifest: flag " + key + " wants true/false");
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

// Rebuilds the argument list with manifest contents inserted right after the
// subcommand token. Unknown manifest keys are rejected by the regular option
// parser afterwards.
std::vector<std::string> expand_manifest(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string manifest_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest" && i + 1 < args.size()) manifest_path = args[i + 1];
    else if (args[i].rfind("--manifest=", 0) == 0) manifest_path = args[i].substr(11);
  }
  if (manifest_path.empty() || args.empty()) return args;
  const std::vector<std::string> extra = manifest_args(manifest_path);
  std::vector<std::string> out;
  out.push_back(args.front());
  out.insert(out.end(), extra.begin(), extra.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

struct EvolveOpts {
  std::string input, output, form = "mod2", manifest;
  Site steps = 0;
};

struct RenderOpts {
  std::string input, glyphs = ".#", manifest;
  Site steps = 0;
};

struct VerifyOpts {
  std::string suite = "all", manifest;
  std::uint64_t seed = 1;
  int cases = 200;
  int max_width = 12;
  int margin = 2;
};

struct CensusOpts {
  std::string manifest;
  int max_width = 0;
};

struct JostOpts {
  std::string input, manifest;
  Site site = 0;
  bool want_mod2 = false;
  bool want_measures = false;
};

int run_evolve(const EvolveOpts& opt) {
  const CaState state = read_state_file(opt.input);
  const f2ca::Trajectory traj = f2ca::evolve(state, opt.steps, parse_form(opt.form));
  std::ostringstream out;
  for (const CaState& s : traj.states) out << f2ca::format_state(s) << '\n';
  if (opt.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
    file << out.str();
  }
  return 0;
}

int run_render(const RenderOpts& opt) {
  if (opt.glyphs.size() != 2)
    throw std::invalid_argument("--glyphs wants exactly two characters");
  const CaState state = read_state_file(opt.input);
  for (const std::string& row :
       f2ca::render_trajectory(f2ca::evolve(state, opt.steps), opt.glyphs))
    std::cout << row << '\n';
  return 0;
}

int run_verify(const VerifyOpts& opt) {
  const std::vector<f2ca::CheckResult> results =
      f2ca::run_suite(opt.suite, opt.seed, opt.cases, opt.max_width, opt.margin);
  bool all_pass = true;
  for (const f2ca::CheckResult& r : results) {
    if (r.pass) {
      std::cout << r.name << ": " << r.cases << " cases, pass";
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << '\n';
    } else {
      all_pass = false;
      std::cout << r.name << ": FAIL after " << r.cases << " cases — " << r.detail;
      if (!r.counterexample.empty()) std::cout << " — counterexample " << r.counterexample;
      std::cout << '\n';
    }
  }
  std::cout << "verify: " << (all_pass ? "PASS" : "FAIL") << " (" << results.size()
            << " properties)" << '\n';
  return all_pass ? 0 : 1;
}

int run_census(const CensusOpts& opt) {
  for (const f2ca::CensusRow& row : f2ca::census(opt.max_width))
    std::cout << f2ca::census_row_line(row) << '\n';
  return 0;
}

int run_jost(const JostOpts& opt) {
  const CaState state = read_state_file(opt.input);
  const f2ca::IntPoly closed = f2ca::jost_closed(state, opt.site);
  if (!state.zero()) {
    const Site m_min = std::min(opt.site, state.lo() - 1);
    if (f2ca::jost_sweep(state, m_min).value(opt.site) != closed)
      throw std::logic_error("closed form disagrees with the sweep at the requested site");
  }
  std::vector<std::string> lines{f2ca::to_string(closed)};
  if (opt.want_mod2)
    lines.push_back(f2ca::jost_mod2_island(state, opt.site).bitstring());
  if (opt.want_measures)
    lines.push_back(f2ca::to_string(f2ca::f_measures(state, opt.site)));
  for (const std::string& line : lines) std::cout << line << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for a binary filter cellular automaton: evolution, "
               "spectral polynomials, defect measures, and conserved quantities"};
  app.require_subcommand(1);

  EvolveOpts evolve_opts;
  CLI::App* evolve = app.add_subcommand("evolve", "Evolve a state, one state line per step");
  evolve->add_option("input,--input", evolve_opts.input, "state file")->required();
  evolve->add_option("--steps", evolve_opts.steps, "number of steps")
      ->required()
      ->check(CLI::Range(Site{0}, Site{1} << 40));
  evolve->add_option("--form", evolve_opts.form, "rule form")
      ->check(CLI::IsMember({"mod2", "exact"}));
  evolve->add_option("--output", evolve_opts.output, "write trajectory here (default stdout)");
  evolve->add_option("--manifest", evolve_opts.manifest, "key=value parameter file");

  RenderOpts render_opts;
  CLI::App* render = app.add_subcommand("render", "Draw a trajectory as a text grid, time downward");
  render->add_option("input,--input", render_opts.input, "state file")->required();
  render->add_option("--steps", render_opts.steps, "number of steps")
      ->required()
      ->check(CLI::Range(Site{0}, Site{1} << 40));
  render->add_option("--glyphs", render_opts.glyphs, "zero and one glyphs (default .#)");
  render->add_option("--manifest", render_opts.manifest, "key=value parameter file");

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", verify_opts.suite, "which suite")
      ->check(CLI::IsMember({"all", "evolution", "jost", "lax", "invariants"}));
  verify->add_option("--seed", verify_opts.seed, "generator seed");
  verify->add_option("--cases", verify_opts.cases, "cases per property")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--max-width", verify_opts.max_width, "maximum island width")
      ->check(CLI::Range(1, 64));
  verify->add_option("--margin", verify_opts.margin, "Lax window margin")
      ->check(CLI::Range(2, 16));
  verify->add_option("--manifest", verify_opts.manifest, "key=value parameter file");

  CensusOpts census_opts;
  CLI::App* census = app.add_subcommand("census", "Orbit table of all islands up to a width");
  census->add_option("--max-width", census_opts.max_width, "maximum island width")
      ->required()
      ->check(CLI::Range(1, 24));
  census->add_option("--manifest", census_opts.manifest, "key=value parameter file");

  JostOpts jost_opts;
  CLI::App* jost = app.add_subcommand("jost", "Print x_m(z) at a site, with optional extras");
  jost->add_option("input,--input", jost_opts.input, "state file")->required();
  jost->add_option("--site", jost_opts.site, "lattice site m")->required();
  jost->add_flag("--mod2", jost_opts.want_mod2, "also print the mod-2 single-island form");
  jost->add_flag("--measures", jost_opts.want_measures, "also print the defect measures");
  jost->add_option("--manifest", jost_opts.manifest, "key=value parameter file");

  for (CLI::App* sub : {evolve, render, verify, census, jost})
    for (CLI::Option* o : sub->get_options())
      o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::vector<std::string> args;
  try {
    args = expand_manifest(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (evolve->parsed()) return run_evolve(evolve_opts);
    if (render->parsed()) return run_render(render_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (census->parsed()) return run_census(census_opts);
    if (jost->parsed()) return run_jost(jost_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
