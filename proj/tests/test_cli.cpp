#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "decomp/cli.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/generate.hpp"
#include "decomp/rotation_graph.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = decomp::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "decomp_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream f(p);
  f << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen prints or writes a parseable instance") {
  const auto r = run({"gen", "cycle", "5"});
  CHECK(r.code == 0);
  CHECK(decomp::parse_rotation_graph(r.out) == decomp::gen_cycle(5));

  const fs::path out = tmp_file("gen_out.rot", "");
  const auto w = run({"gen", "prism", "4", "--out", out.string()});
  CHECK(w.code == 0);
  CHECK(decomp::parse_rotation_graph(slurp(out)) == decomp::gen_prism(4));

  CHECK(run({"gen", "cycle", "2"}).code == 2);
  CHECK(run({"gen", "moebius", "3"}).code == 2);
  CHECK(run({"gen", "cycle"}).code == 2);
}

TEST_CASE("analyze reports the embedding and memberships") {
  const fs::path c5 = tmp_file("c5.rot", decomp::serialize_rotation_graph(decomp::gen_cycle(5)));
  const auto r = run({"analyze", c5.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices 5, edges 5, faces 2, characteristic 2") != std::string::npos);
  CHECK(r.out.find("no-chord-5") != std::string::npos);

  const auto j = run({"analyze", c5.string(), "--json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("v") == 1);
  CHECK(parsed.at("command") == "analyze");
  const std::string digest = parsed.at("input_digest");
  CHECK(digest.size() == 16);
  CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(parsed.at("result").at("embedding").at("characteristic") == 2);

  // byte-for-byte deterministic
  CHECK(run({"analyze", c5.string(), "--json"}).out == j.out);
}

TEST_CASE("analyze rejects malformed input with exit 2") {
  const fs::path bad = tmp_file("bad.rot", "ROTSYS 1\n2 1\n0: 1\n1: 2\n");
  const auto r = run({"analyze", bad.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"analyze", "/nonexistent/nowhere.rot"}).code == 2);
}

TEST_CASE("decompose picks the oracle or a reduction strategy") {
  const fs::path c5 = tmp_file("c5.rot", decomp::serialize_rotation_graph(decomp::gen_cycle(5)));
  const auto r = run({"decompose", c5.string(), "--d", "2", "--h", "1"});
  CHECK(r.code == 0);
  const auto dec = decomp::parse_decomposition(r.out);
  CHECK(dec.d == 2);
  CHECK_FALSE(decomp::verify(decomp::gen_cycle(5), dec).has_value());

  CHECK(run({"decompose", c5.string(), "--method", "reduce:T1"}).code == 0);
  CHECK(run({"decompose", c5.string(), "--method", "reduce:T1", "--d", "2", "--h", "1"}).code == 0);
  CHECK(run({"decompose", c5.string(), "--method", "reduce:T1", "--d", "3", "--h", "1"}).code == 2);
  CHECK(run({"decompose", c5.string(), "--method", "dowsing"}).code == 2);
  CHECK(run({"decompose", c5.string()}).code == 2);  // oracle needs --d/--h
}

TEST_CASE("decompose distinguishes nonexistence from irreducibility") {
  const fs::path k5 = tmp_file("k5.rot", decomp::serialize_rotation_graph(decomp::gen_complete(5)));
  const auto no = run({"decompose", k5.string(), "--d", "1", "--h", "1"});
  CHECK(no.code == 1);
  CHECK(no.err.find("no (1,1)-decomposition exists") != std::string::npos);

  const fs::path t44 =
      tmp_file("t44.rot", decomp::serialize_rotation_graph(decomp::gen_toroidal_grid(4, 4)));
  const auto irr = run({"decompose", t44.string(), "--method", "reduce:T1"});
  CHECK(irr.code == 3);
  CHECK(irr.err.find("diagnostic: no reducible configuration") != std::string::npos);
  CHECK(irr.err.find("outside the theorem's graph class") != std::string::npos);
}

TEST_CASE("decompose writes the result and the trace separately") {
  const fs::path grid =
      tmp_file("grid.rot", decomp::serialize_rotation_graph(decomp::gen_planar_grid(5, 6)));
  const fs::path out = fs::temp_directory_path() / "decomp_cli_tests" / "grid.dec";
  const auto r = run({"decompose", grid.string(), "--method", "reduce:T0", "--trace",
                      "--out", out.string()});
  CHECK(r.code == 0);
  const auto trace = nlohmann::json::parse(r.out);
  CHECK(trace.at("result").at("status") == "decomposed");
  CHECK(trace.at("result").at("steps").size() > 0);
  CHECK(trace.at("result").at("steps").at(0).contains("lemma"));
  const auto dec = decomp::parse_decomposition(slurp(out));
  CHECK_FALSE(decomp::verify(decomp::gen_planar_grid(5, 6), dec).has_value());

  CHECK(run({"decompose", grid.string(), "--method", "reduce:T0", "--trace"}).code == 2);
}

TEST_CASE("verify reports validity through the exit code") {
  const fs::path c5 = tmp_file("c5.rot", decomp::serialize_rotation_graph(decomp::gen_cycle(5)));
  const fs::path good = tmp_file("good.dec", "DECOMP 1\n2 1\nH:\nD: 0>1 0>4 1>2 2>3 3>4\n");
  const auto ok = run({"verify", c5.string(), good.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid (2,1)-decomposition") != std::string::npos);

  const fs::path cyc = tmp_file("cyc.dec", "DECOMP 1\n2 0\nH:\nD: 0>1 1>2 2>3 3>4 4>0\n");
  const auto bad = run({"verify", c5.string(), cyc.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("directed cycle") != std::string::npos);

  const auto j = run({"verify", c5.string(), cyc.string(), "--json"});
  CHECK(j.code == 1);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("result").at("ok") == false);
  CHECK(parsed.at("result").at("violation").at("kind") == "directed_cycle");

  const fs::path mangled = tmp_file("mangled.dec", "DECOMP 1\n2 1\nH: 0+1\nD:\n");
  CHECK(run({"verify", c5.string(), mangled.string()}).code == 2);
}

TEST_CASE("discharge audits a ruleset") {
  const fs::path hex =
      tmp_file("hex.rot", decomp::serialize_rotation_graph(decomp::gen_hex_grid(2, 2)));
  const auto r = run({"discharge", hex.string(), "--ruleset", "T1_1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conserved") != std::string::npos);
  CHECK(r.out.find("in class: yes") != std::string::npos);
  CHECK(r.out.find("explained by L5a") != std::string::npos);

  const auto j = run({"discharge", hex.string(), "--ruleset", "T1_1", "--json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("result").at("conservation_ok") == true);
  CHECK(parsed.at("result").at("ruleset") == "T1_1");

  CHECK(run({"discharge", hex.string(), "--ruleset", "T9_9"}).code == 2);
  CHECK(run({"discharge", hex.string()}).code == 2);  // ruleset is required
}

TEST_CASE("the oracle edge budget is tunable through the environment") {
  const fs::path prism =
      tmp_file("prism.rot", decomp::serialize_rotation_graph(decomp::gen_prism(4)));
  CHECK(run({"decompose", prism.string(), "--d", "2", "--h", "1"}).code == 0);

  setenv("DECOMP_ORACLE_EDGE_BUDGET", "5", 1);
  CHECK(run({"decompose", prism.string(), "--d", "2", "--h", "1"}).code == 2);
  setenv("DECOMP_ORACLE_EDGE_BUDGET", "not-a-number", 1);
  CHECK(run({"decompose", prism.string(), "--d", "2", "--h", "1"}).code == 2);
  unsetenv("DECOMP_ORACLE_EDGE_BUDGET");
  CHECK(run({"decompose", prism.string(), "--d", "2", "--h", "1"}).code == 0);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"decompose", "--help"}).code == 0);
  CHECK(run({"analyze"}).code == 2);  // missing path
}
