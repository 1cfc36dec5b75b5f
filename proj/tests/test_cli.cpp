#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(F2CA_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("evolve writes one state line per step") {
  const auto input = write_temp("f2ca_cli_state.txt", "0:1101\n");
  const RunResult r = run_cli("evolve " + input.string() + " --steps 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0:1101\n0:1011\n0:1101\n");

  const RunResult echo = run_cli("evolve " + input.string() + " --steps 0");
  CHECK(echo.exit_code == 0);
  CHECK(echo.output == "0:1101\n");

  const RunResult exact = run_cli("evolve " + input.string() + " --steps 2 --form exact");
  CHECK(exact.output == r.output);

  SECTION("--output writes a trajectory file") {
    const auto out_path = std::filesystem::temp_directory_path() / "f2ca_cli_traj.txt";
    const RunResult w =
        run_cli("evolve " + input.string() + " --steps 1 --output " + out_path.string());
    CHECK(w.exit_code == 0);
    std::ifstream in(out_path);
    std::string a, b;
    std::getline(in, a);
    std::getline(in, b);
    CHECK(a == "0:1101");
    CHECK(b == "0:1011");
  }
}

TEST_CASE("render draws the grid") {
  const auto input = write_temp("f2ca_cli_render.txt", "0:1101\n");
  const RunResult r = run_cli("render " + input.string() + " --steps 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "...##.#...\n...#.##...\n");
  const RunResult binary = run_cli("render " + input.string() + " --steps 0 --glyphs 01");
  CHECK(binary.output == "0001101000\n");
  const RunResult bad = run_cli("render " + input.string() + " --steps 1 --glyphs abc");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("jost prints polynomials, mod-2 forms and measures") {
  const auto input = write_temp("f2ca_cli_jost.txt", "0:101\n");
  const RunResult r = run_cli("jost " + input.string() + " --site -1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 + 2*z + 2*z^2 + z^3\n");

  const RunResult full = run_cli("jost " + input.string() + " --site -1 --mod2 --measures");
  CHECK(full.exit_code == 0);
  CHECK(full.output == "1 + 2*z + 2*z^2 + z^3\n1001\nf1=1 f2=1 f3=0 f4=0\n");

  SECTION("window violations cite the single-island requirement") {
    const RunResult bad = run_cli("jost " + input.string() + " --site -5 --mod2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("single-island") != std::string::npos);
    CHECK(bad.output.find("z^") == std::string::npos);  // nothing half-printed
  }
}

TEST_CASE("census emits the orbit table") {
  const RunResult r = run_cli("census --max-width 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "width=1 pattern=1 period=1 island [0,0]: f2=0 parity=1 xk1=1\n"
        "width=2 pattern=11 period=1 island [0,1]: f2=0 parity=0 xk1=11\n"
        "width=3 pattern=101 period=1 island [0,2]: f2=1 parity=0 xk1=111\n"
        "width=3 pattern=111 period=1 island [0,2]: f2=0 parity=1 xk1=101\n");
  CHECK(run_cli("census --max-width 30").exit_code == 2);
}

TEST_CASE("verify runs property suites deterministically") {
  const RunResult r = run_cli("verify --suite evolution --seed 7 --cases 20 --max-width 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verify: PASS") != std::string::npos);
  const RunResult again = run_cli("verify --suite evolution --seed 7 --cases 20 --max-width 8");
  CHECK(again.output == r.output);
}

TEST_CASE("manifests fill in parameters; explicit flags win") {
  const auto state = write_temp("f2ca_cli_mstate.txt", "0:1101\n");
  const auto manifest = write_temp(
      "f2ca_cli_manifest.txt",
      "# evolve parameters\ninput=" + state.string() + "\nsteps=2\nform=mod2\n");
  const RunResult r = run_cli("evolve --manifest " + manifest.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0:1101\n0:1011\n0:1101\n");

  const RunResult overridden = run_cli("evolve --manifest " + manifest.string() + " --steps 1");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output == "0:1101\n0:1011\n");

  SECTION("unknown keys are rejected") {
    const auto bad = write_temp("f2ca_cli_manifest_bad.txt", "bogus=1\nsteps=1\n");
    const RunResult rb = run_cli("evolve " + state.string() + " --manifest " + bad.string());
    CHECK(rb.exit_code == 2);
  }
}

TEST_CASE("errors land on exit code 2") {
  CHECK(run_cli("evolve /nonexistent/file --steps 1").exit_code == 2);
  const auto garbled = write_temp("f2ca_cli_garbled.txt", "0:10z1\n");
  const RunResult r = run_cli("evolve " + garbled.string() + " --steps 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("byte 4") != std::string::npos);
  CHECK(run_cli("explode").exit_code == 2);
  CHECK(run_cli("evolve").exit_code == 2);
}
