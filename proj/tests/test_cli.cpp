#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "pi2/covering.hpp"
#include "pi2/io.hpp"

using namespace pi2;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json result() const { return json().at("result"); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "pi2_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<Vertex> mod_map(int n, int m) {
  std::vector<Vertex> f(n);
  for (int i = 0; i < n; ++i) f[i] = i % m;
  return f;
}

}  // namespace

TEST_CASE("documented examples") {
  auto k4 = scratch("k4.g", io::write_graph(complete_graph(4)));
  auto h1 = run({"h1", "--graph", k4});
  CHECK(h1.code == 0);
  CHECK(h1.result() == Json::parse(R"({"free_rank":0,"torsion":[2]})"));
  auto report = h1.json();
  CHECK(report["schema"] == "pi2-report/1");
  CHECK(report["command"] == "h1");
  CHECK(report["inputs"]["graph"]["sha256"].get<std::string>().size() == 64);

  auto c5 = scratch("c5.g", io::write_graph(cycle_graph(5)));
  auto ob = run({"obstruction", "--graph", c5, "--via", "h1"});
  CHECK(ob.code == 0);
  CHECK(ob.result()["verdict"] == "no-obstruction");

  GraphMap bad(cycle_graph(8), cycle_graph(4), mod_map(8, 4));
  auto bad_path = scratch("bad.m", io::write_bundle(bad));
  auto cc = run({"check-cover", "--map", bad_path});
  CHECK(cc.code == 0);
  CHECK(cc.result()["verdict"] == false);
  CHECK(cc.result().contains("counterexample"));
}

TEST_CASE("exit codes") {
  auto missing = run({"h1", "--graph", "/nonexistent/graph.g"});
  CHECK(missing.code == 1);
  CHECK(missing.json()["error"]["kind"] == "domain");
  CHECK(!missing.json().contains("result"));

  auto malformed = run({"h1", "--graph", scratch("bad.g", "V 2\nE 0 7\n")});
  CHECK(malformed.code == 1);
  CHECK(malformed.json()["error"]["message"].get<std::string>().find("line 2") !=
        std::string::npos);

  auto budget = run({"oracle", "--graph", "named:K4", "--max-len", "12", "--budget", "10"});
  CHECK(budget.code == 1);
  CHECK(budget.json()["error"]["kind"] == "budget");

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"h1"}).code == 2);
  CHECK(run({"obstruction", "--graph", "named:C5", "--via", "magic"}).code == 2);
  CHECK(run({"chromatic", "--graph", "named:C5", "--max-k", "three"}).code == 2);
  CHECK(run({"h1", "--graph", "named:C5", "--threads", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"h1", "--graph", "named:K4", "--base", "0"}).code == 2);

  // Vertex arguments out of range are domain errors.
  CHECK(run({"present", "--graph", "named:K4", "--base", "9"}).code == 1);
  CHECK(run({"obstruction", "--graph", "named:C6", "--via", "nbhd"}).code == 1);
}

TEST_CASE("determinism") {
  std::vector<std::vector<std::string>> commands{
      {"present", "--graph", "named:K4"},
      {"oracle", "--graph", "named:C5", "--max-len", "10"},
      {"derived-cover", "--graph", "named:K4", "--quotient", "parity"},
      {"hom-poset", "--t", "named:K2", "--g", "named:K3", "--elements", "--homology"},
      {"nbhd", "--graph", "named:petersen"}};
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("round trips") {
  for (std::string spec : {"K5", "C7", "petersen", "Q3", "G(2,2;0)", "K2xC5"}) {
    auto r = run({"named", "--graph", "named:" + spec});
    REQUIRE(r.code == 0);
    auto text = r.result()["graph"].get<std::string>();
    CHECK(io::parse_graph(text) == named_graph(spec));
    CHECK(io::write_graph(io::parse_graph(text)) == text);
  }
  auto r = run({"derived-cover", "--graph", "named:K4", "--quotient", "parity"});
  REQUIRE(r.code == 0);
  auto bundle = r.result()["bundle"].get<std::string>();
  GraphMap p = io::parse_map(bundle);
  CHECK(io::write_bundle(p) == bundle);
  CHECK(is_two_covering(p));
  CHECK(r.result()["vertex_count"] == 8);
  CHECK(r.result()["two_covering"] == true);
}

TEST_CASE("every subcommand") {
  auto k2k4 = second_projection(complete_graph(2), complete_graph(4));
  auto cover = scratch("k2k4.m", io::write_bundle(k2k4));
  auto only_map = scratch("k2k4_plain.m", io::write_map(k2k4));
  auto src = scratch("k2k4_src.g", io::write_graph(k2k4.source()));
  auto tgt = scratch("k4_tgt.g", io::write_graph(k2k4.target()));
  auto loops = scratch("tri.l", io::write_loops({{0, 1, 2, 0}, {0, 1, 0}}));

  auto cc = run({"check-cover", "--map", only_map, "--source", src, "--target", tgt});
  CHECK(cc.code == 0);
  CHECK(cc.result()["verdict"] == true);

  auto mono = run({"monodromy", "--map", cover, "--loops", loops});
  REQUIRE(mono.code == 0);
  CHECK(mono.result()["permutations"] == Json::parse("[[1,0],[0,1]]"));
  CHECK(mono.result()["transitive"] == true);

  auto star = run({"check-star", "--map", cover, "--vertex", "0"});
  REQUIRE(star.code == 0);
  CHECK(star.result()["holds"] == true);
  CHECK(star.result()["star_count"] == 2);

  auto nh = run({"nbhd-h1", "--graph", "named:K4"});
  REQUIRE(nh.code == 0);
  CHECK(nh.result()["component_h1"] == Json::parse(R"({"free_rank":0,"torsion":[]})"));

  auto ev = run({"even-part", "--graph", "named:C5"});
  REQUIRE(ev.code == 0);
  CHECK(ev.result()["abelianization"] == Json::parse(R"({"free_rank":1,"torsion":[]})"));
  auto pr = run({"present", "--graph", "named:K4", "--simplify"});
  REQUIRE(pr.code == 0);
  CHECK(pr.result()["abelianization"] == Json::parse(R"({"free_rank":0,"torsion":[2]})"));

  auto orc = run({"oracle", "--graph", "named:C5", "--max-len", "10"});
  REQUIRE(orc.code == 0);
  CHECK(orc.result()["classes"].size() == 5);
  CHECK(orc.result()["stable"] == true);

  auto chi = run({"chromatic", "--graph", "named:petersen"});
  REQUIRE(chi.code == 0);
  CHECK(chi.result()["chromatic_number"] == 3);

  auto q3 = hypercube(3);
  std::vector<Vertex> antipodal(8);
  for (int v = 0; v < 8; ++v) antipodal[v] = v ^ 7;
  auto q3_path = scratch("q3.g", io::write_graph(q3));
  auto tau = scratch("q3_tau.m", io::write_map(GraphMap(q3, q3, antipodal)));
  auto inv = run({"involution-check", "--graph", q3_path, "--tau", tau});
  REQUIRE(inv.code == 0);
  CHECK(inv.result()["parity"] == "odd");
  CHECK(inv.result()["violations"] == 0);
  CHECK(inv.result()["exhaustive"] == true);

  // Wedge of two 5-cycles at vertex 0.
  Graph wedge(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
  auto wedge_path = scratch("wedge.g", io::write_graph(wedge));
  auto k1 = scratch("k1.s", io::write_subgraph(
                                 Subgraph(wedge, {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
  auto k2 = scratch("k2.s", io::write_subgraph(
                                 Subgraph(wedge, {0, 5, 6, 7, 8}, {{0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}})));
  auto mv = run({"mv-check", "--graph", wedge_path, "--k1", k1, "--k2", k2});
  REQUIRE(mv.code == 0);
  CHECK(mv.result()["passed"] == true);
  auto mv2 = run({"mv-check", "--graph", wedge_path, "--pieces", k1 + "," + k2});
  CHECK(mv2.result() == mv.result());
  auto vk = run({"van-kampen", "--graph", wedge_path, "--pieces", k1 + "," + k2});
  REQUIRE(vk.code == 0);
  CHECK(vk.result()["hypotheses_hold"] == true);
  CHECK(vk.result()["abelianization"] == Json::parse(R"({"free_rank":2,"torsion":[]})"));

  auto hp = run({"hom-poset", "--t", "named:K2", "--g", "named:K3", "--homology"});
  REQUIRE(hp.code == 0);
  CHECK(hp.result()["size"] == 12);
  CHECK(hp.result()["h1"] == Json::parse(R"({"free_rank":1,"torsion":[]})"));

  auto nb = run({"nbhd", "--graph", "named:C5"});
  REQUIRE(nb.code == 0);
  CHECK(nb.result()["facets"].size() == 5);
}
