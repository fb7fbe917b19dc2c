// End-to-end checks of the mc binary: output conventions, exit codes, file
// outputs, and byte-stable reruns.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "mc_cli_test";
  fs::create_directories(dir);
  const fs::path out_file = dir / "stdout.txt";
  const std::string command =
      std::string(MC_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::ostringstream text;
  text << in.rdbuf();
  result.output = text.str();
  return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "mc_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const char* kCurves =
    R"({"dimension":1,"curves":[{"id":"p","points":[[0],[2]]},{"id":"q","points":[[0],[4]]}]})";

}  // namespace

TEST_CASE("frechet subcommand") {
  const auto file = write_file("curves.json", kCurves);
  {
    const RunResult r = run("frechet " + file.string() + " p q --mode discrete");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 2) == "2\n");
    CHECK(r.output.find("witness:") != std::string::npos);
  }
  {
    const RunResult r = run("frechet " + file.string() + " p p --mode discrete");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 2) == "0\n");
  }
  {
    const RunResult r =
        run("frechet " + file.string() + " p q --mode continuous --delta 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "true\n");
  }
  // Usage errors: unknown id, missing --delta in continuous mode.
  CHECK(run("frechet " + file.string() + " p nope --mode discrete").exit_code == 1);
  CHECK(run("frechet " + file.string() + " p q --mode continuous").exit_code == 1);
}

TEST_CASE("solve subcommand with a witness file") {
  const auto file = write_file("curves.json", kCurves);
  const auto out = fs::temp_directory_path() / "mc_cli_test" / "mid.json";
  {
    const RunResult r = run("solve " + file.string() +
                            " --variant unordered --delta 2 --ell 2 --out " +
                            out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("feasible") == 0);
    const RunResult v = run("verify " + file.string() + " " + out.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output == "true\n");
  }
  {
    const auto far = write_file(
        "far.json",
        R"({"dimension":1,"curves":[{"id":"p","points":[[0]]},{"id":"q","points":[[10]]}]})");
    const RunResult r =
        run("solve " + far.string() + " --variant unordered --delta 1 --ell 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "infeasible\n");
  }
  // Exactly one of --delta / --optimize.
  CHECK(run("solve " + file.string() + " --variant unordered --ell 2").exit_code == 1);
}

TEST_CASE("reduce round trip through files") {
  const auto scs = write_file("scs.json", R"({"sequences":["AB","BB"],"t":3})");
  const auto enc = fs::temp_directory_path() / "mc_cli_test" / "enc";
  {
    const RunResult r = run("reduce " + scs.string() + " encode --out " + enc.string());
    CHECK(r.exit_code == 0);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(enc)) {
      ++files;
      CHECK(entry.path().extension() == ".json");
    }
    CHECK(files == 4);  // one instance per split of t = 3
  }
  {
    const RunResult r = run("solve " + (enc / "instance_a1_b2.json").string() +
                            " --variant restricted --delta 1 --ell 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("feasible") == 0);
  }
  {
    const RunResult r = run("reduce " + scs.string() + " check --variant unordered");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("scs: true") != std::string::npos);
    CHECK(r.output.find("middle[unordered]: true") != std::string::npos);
  }
  {
    const auto no = write_file("scs_no.json", R"({"sequences":["AB","BA"],"t":2})");
    const RunResult r = run("reduce " + no.string() + " check --variant unordered");
    CHECK(r.output.find("scs: false") != std::string::npos);
    CHECK(r.output.find("middle[unordered]: false") != std::string::npos);
  }
  CHECK(run("scs " + scs.string()).output ==
        "feasible: true\nlength: 3\nwitness: ABB\n");
}

TEST_CASE("outputs are byte-stable across runs") {
  const auto scs = write_file("scs.json", R"({"sequences":["AB","BB"],"t":3})");
  const auto enc1 = fs::temp_directory_path() / "mc_cli_test" / "enc1";
  const auto enc2 = fs::temp_directory_path() / "mc_cli_test" / "enc2";
  CHECK(run("reduce " + scs.string() + " encode --out " + enc1.string()).exit_code == 0);
  CHECK(run("reduce " + scs.string() + " encode --out " + enc2.string()).exit_code == 0);
  for (const auto& entry : fs::directory_iterator(enc1)) {
    CHECK(slurp(entry.path()) == slurp(enc2 / entry.path().filename()));
  }

  const auto file = write_file("curves.json", kCurves);
  const RunResult a = run("approx " + file.string() + " --ell 1 --eps 0.5");
  const RunResult b = run("approx " + file.string() + " --ell 1 --eps 0.5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("csv import and plotting") {
  const auto csv = write_file("tracks.csv", "id,x\np,0\np,2\nq,1\n");
  const RunResult r = run("frechet " + csv.string() + " p q --mode discrete");
  CHECK(r.exit_code == 0);
  CHECK(r.output.substr(0, 2) == "1\n");

  const auto svg = fs::temp_directory_path() / "mc_cli_test" / "plot.svg";
  CHECK(run("plot " + csv.string() + " --svg " + svg.string()).exit_code == 0);
  const std::string content = slurp(svg);
  CHECK(content.find("<svg") == 0);
  CHECK(content.find("polyline") != std::string::npos);
}

TEST_CASE("resource cap maps to exit code 2") {
  const auto scs = write_file("scs.json", R"({"sequences":["AB","BB"],"t":3})");
  const auto enc = fs::temp_directory_path() / "mc_cli_test" / "enc_cap";
  run("reduce " + scs.string() + " encode --out " + enc.string());
  const fs::path instance = enc / "instance_a1_b2.json";
  const std::string cmd = "MC_MAX_CANDIDATES=2 " + std::string(MC_CLI_PATH) +
                          " solve " + instance.string() +
                          " --variant restricted --delta 1 --ell 7 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);
}
