#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifdef _WIN32
#error "the command line tests assume a POSIX shell"
#endif
#include <sys/wait.h>

namespace {

std::string require_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v) {
    const std::string msg =
        std::string("environment variable ") + name + " is not set; run through ctest";
    FAIL(msg);
  }
  return v ? v : "";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

/// Runs the installed binary with `args`, feeding `input` on stdin.
CliResult run_cli(const std::string& args, const std::string& input = "") {
  static int serial = 0;
  const std::string tag = "cli_tmp_" + std::to_string(serial++);
  const std::string in_path = tag + ".in", out_path = tag + ".out", err_path = tag + ".err";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << input;
  }
  const std::string cmd = "\"" + require_env("ALTDIAM_CLI") + "\" " + args + " < " + in_path +
                          " > " + out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string fixture(const std::string& name) { return require_env("ALTDIAM_FIXTURES") + "/" + name; }

std::string write_temp(const std::string& content, const std::string& suffix) {
  static int serial = 0;
  const std::string path = "cli_fix_" + std::to_string(serial++) + suffix;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("version and usage") {
  CHECK(run_cli("--version").status == 0);
  CHECK(run_cli("--version").out == "altdiam 1.0.0\n");
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("").status == 2);                    // a subcommand is required
  CHECK(run_cli("decompose-linear -").status == 2);  // --split is required
  CHECK(run_cli("decompose --order zzz -").status == 2);
}

TEST_CASE("decompose reads files and stdin") {
  const auto from_file = run_cli("decompose --order rlr " + fixture("identity22.txt"));
  CHECK(from_file.status == 0);
  CHECK(from_file.out.find("order RLR") != std::string::npos);

  const auto from_stdin = run_cli("decompose -", slurp(fixture("identity22.txt")));
  CHECK(from_stdin.status == 0);
  CHECK(from_stdin.out == from_file.out);

  const auto missing = run_cli("decompose /no/such/file");
  CHECK(missing.status == 1);
  CHECK(missing.err.find("error: ") != std::string::npos);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("decompose output verifies against its own input") {
  for (const char* order : {"rlr", "lrl"}) {
    const auto decomp =
        run_cli(std::string("decompose --order ") + order + " --json " + fixture("rev22.txt"));
    REQUIRE(decomp.status == 0);
    const std::string decomp_path = write_temp(decomp.out, ".json");
    const auto verify = run_cli("verify " + decomp_path + " " + fixture("rev22.txt"));
    CHECK(verify.status == 0);
    CHECK(verify.out == "OK\n");
    const auto verify_json =
        run_cli("verify --json " + decomp_path + " " + fixture("rev22.txt"));
    CHECK(verify_json.status == 0);
    CHECK(nlohmann::json::parse(verify_json.out)["ok"] == true);
    std::remove(decomp_path.c_str());
  }
}

TEST_CASE("verify reports the first failing cell") {
  const auto decomp = run_cli("decompose --json " + fixture("identity22.txt"));
  REQUIRE(decomp.status == 0);
  const std::string decomp_path = write_temp(decomp.out, ".json");

  const auto bad = run_cli("verify " + decomp_path + " " + fixture("rev22.txt"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("mismatch: ") != std::string::npos);

  const auto bad_json = run_cli("verify --json " + decomp_path + " " + fixture("rev22.txt"));
  CHECK(bad_json.status == 1);
  const auto doc = nlohmann::json::parse(bad_json.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["failing_cell"].is_array());
  std::remove(decomp_path.c_str());
}

TEST_CASE("decomposition json is byte stable across runs") {
  const std::string args = "decompose --json " + fixture("rev22.txt");
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("census output") {
  const auto human = run_cli("census 2 2");
  CHECK(human.status == 0);
  CHECK(human.out.find("collapse at level 3") != std::string::npos);
  CHECK(human.out.find("intersection LR ^ RL: 12") != std::string::npos);

  const auto js = run_cli("census 2 2 --json");
  REQUIRE(js.status == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["sizes"]["LR"] == 16);
  CHECK(doc["sizes"]["LRL"] == 24);
  CHECK(doc["total"] == 24);
  CHECK(doc["collapse_level"] == 3);

  // identical bytes for every thread count and across runs
  const auto t1 = run_cli("census 2 3 --json --threads 1");
  const auto t2 = run_cli("census 2 3 --json --threads 2");
  const auto t5 = run_cli("census 2 3 --json --threads 5");
  CHECK(t1.status == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out == t5.out);
  CHECK(run_cli("census 2 3 --json --threads 2").out == t2.out);

  const auto csv = run_cli("census 2 2 --csv");
  CHECK(csv.status == 0);
  CHECK(csv.out == "word,size\n1,1\nL,4\nR,4\nLR,16\nRL,16\nLRL,24\nRLR,24\n");

  CHECK(run_cli("census 2 2 --json --csv").status == 2);  // mutually exclusive
  CHECK(run_cli("census 4 4").status == 1);               // 16 cells is over the cap
}

TEST_CASE("classify places a permutation in the word lattice") {
  // the 180-degree rotation factors as one row pass plus one column pass
  const auto rot = run_cli("classify " + fixture("rev22.txt"));
  CHECK(rot.status == 0);
  CHECK(rot.out.find("kind: Neither") != std::string::npos);
  CHECK(rot.out.find("in LR: yes") != std::string::npos);
  CHECK(rot.out.find("in RL: yes") != std::string::npos);
  CHECK(rot.out.find("in LRL: yes") != std::string::npos);

  // the transpose needs all three stages
  const auto tr = run_cli("classify " + fixture("transpose22.txt"));
  CHECK(tr.status == 0);
  CHECK(tr.out.find("kind: Neither") != std::string::npos);
  CHECK(tr.out.find("in LR: no") != std::string::npos);
  CHECK(tr.out.find("in RL: no") != std::string::npos);
  CHECK(tr.out.find("in LRL: yes") != std::string::npos);
  CHECK(tr.out.find("in RLR: yes") != std::string::npos);

  const auto id = run_cli("classify " + fixture("identity22.txt"));
  CHECK(id.status == 0);
  CHECK(id.out.find("kind: Both") != std::string::npos);

  const auto mat = run_cli("classify --split 1,1 " + fixture("swap_f2.txt"));
  CHECK(mat.status == 0);
  CHECK(mat.out.find("kind: Neither") != std::string::npos);
}

TEST_CASE("decompose-linear emits the frozen triple for the binary swap") {
  const auto res = run_cli("decompose-linear --split 1,1 --json " + fixture("swap_f2.txt"));
  REQUIRE(res.status == 0);
  const auto doc = nlohmann::json::parse(res.out);
  REQUIRE(doc["stages"].size() == 3);
  CHECK(doc["stages"][0]["kind"] == "L");
  CHECK(doc["stages"][1]["kind"] == "R");
  CHECK(doc["stages"][2]["kind"] == "L");
  CHECK(doc["stages"][0]["rows"] == nlohmann::json::parse("[[1,1],[0,1]]"));
  CHECK(doc["stages"][1]["rows"] == nlohmann::json::parse("[[1,0],[1,1]]"));
  CHECK(doc["stages"][2]["rows"] == nlohmann::json::parse("[[1,1],[0,1]]"));

  // the decomposition round trips through verify
  const std::string decomp_path = write_temp(res.out, ".json");
  const auto verify = run_cli("verify " + decomp_path + " " + fixture("swap_f2.txt"));
  CHECK(verify.status == 0);
  CHECK(verify.out == "OK\n");
  std::remove(decomp_path.c_str());
}

TEST_CASE("decompose-multi and decompose-sparse work through stdin") {
  const std::string multi = "2 2 2\n" // cyclic shift of the 8 cells
      "0 0 0 -> 0 0 1\n0 0 1 -> 0 1 0\n0 1 0 -> 0 1 1\n0 1 1 -> 1 0 0\n"
      "1 0 0 -> 1 0 1\n1 0 1 -> 1 1 0\n1 1 0 -> 1 1 1\n1 1 1 -> 0 0 0\n";
  const auto m = run_cli("decompose-multi --json -", multi);
  REQUIRE(m.status == 0);
  const auto mdoc = nlohmann::json::parse(m.out);
  CHECK(mdoc["stages"].size() == 5);

  const std::string multi_path = write_temp(multi, ".txt");
  const std::string mdecomp_path = write_temp(m.out, ".json");
  const auto mverify = run_cli("verify " + mdecomp_path + " " + multi_path);
  CHECK(mverify.status == 0);
  CHECK(mverify.out == "OK\n");
  std::remove(multi_path.c_str());
  std::remove(mdecomp_path.c_str());

  const auto s = run_cli("decompose-sparse --json -", slurp(fixture("sparse_swap.txt")));
  REQUIRE(s.status == 0);
  const auto sdoc = nlohmann::json::parse(s.out);
  CHECK(sdoc["m"] == 2);
  CHECK(sdoc["n"] == 2);

  const std::string sdecomp_path = write_temp(s.out, ".json");
  const auto sverify = run_cli("verify " + sdecomp_path + " " + fixture("sparse_swap.txt"));
  CHECK(sverify.status == 0);
  std::remove(sdecomp_path.c_str());
}

TEST_CASE("lower-bound reports coverage") {
  const auto missing = run_cli("lower-bound --dims 2,2 --schedule 1,2 --json");
  REQUIRE(missing.status == 0);
  const auto doc = nlohmann::json::parse(missing.out);
  CHECK(doc["covered"] == false);
  CHECK(doc["product_size"] == 16);
  CHECK(doc["universe"] == 24);
  CHECK(doc["witness"].is_array());

  const auto human = run_cli("lower-bound --dims 2,2,2 --schedule 3,2,1,2,3");
  CHECK(human.status == 0);
  CHECK(human.out.find("covered: yes") != std::string::npos);

  CHECK(run_cli("lower-bound --dims 2,x --schedule 1").status == 2);
  CHECK(run_cli("lower-bound --dims 2,2").status == 2);  // --schedule is required
}

TEST_CASE("poset subcommand") {
  const auto dia = run_cli("poset --diamond --json");
  REQUIRE(dia.status == 0);
  const auto doc = nlohmann::json::parse(dia.out);
  CHECK(doc["size"] == 4);
  CHECK(doc["poset_automorphisms"] == 2);
  CHECK(doc["product_automorphisms"] == 24);
  CHECK(doc["flip_in_closure"] == false);

  const auto anti = run_cli("poset --antichain 2");
  CHECK(anti.status == 0);
  CHECK(anti.out.find("flip generated: yes") != std::string::npos);

  const auto chain = run_cli("poset " + fixture("chain2.txt"));
  CHECK(chain.status == 0);
  CHECK(chain.out.find("flip generated: no") != std::string::npos);

  CHECK(run_cli("poset").status == 2);
  CHECK(run_cli("poset --chain 1 --diamond").status == 2);  // sources are exclusive
}
