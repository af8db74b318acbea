#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "tautcalc/commands.hpp"
#include "tautcalc/report.hpp"
#include "tautcalc/taut_ring.hpp"

using namespace tautcalc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tautcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report JSON round trip and witness invariant") {
  Report r;
  r.command = "demo";
  r.context = Json{{"n", 4}};
  r.entries.push_back(Entry::check("a", "anchor-a", true, "unused", Json{{"x", "1/2"}}));
  r.entries.push_back(Entry::check("b", "anchor-b", false, "h1 - h2"));
  r.entries.push_back(Entry::skipped("c", "anchor-c", "not applicable"));
  CHECK_FALSE(r.entries[0].witness.has_value());
  CHECK(r.entries[1].witness == "h1 - h2");
  CHECK(r.exit_code() == 1);
  auto j = r.to_json();
  CHECK(Report::from_json(j) == r);
  CHECK(Report::from_json(Json::parse(j.dump())) == r);

  Json broken = j;
  broken["entries"][1].erase("witness");
  CHECK_THROWS_AS(Report::from_json(broken), std::invalid_argument);
  Json extra = j;
  extra["entries"][0]["witness"] = "x";
  CHECK_THROWS_AS(Report::from_json(extra), std::invalid_argument);
  Json bad_status = j;
  bad_status["entries"][0]["status"] = "maybe";
  CHECK_THROWS_AS(Report::from_json(bad_status), std::invalid_argument);
  CHECK_THROWS_AS(Report::from_json(Json::object()), std::invalid_argument);

  auto md = r.to_markdown();
  CHECK(md.find("| b | anchor-b | fail | h1 - h2 |") != std::string::npos);
  CHECK(md.find("Overall: fail") != std::string::npos);
}

TEST_CASE("command exit codes") {
  CHECK(run({"mck", "--n", "4", "--d", "3"}).code == 0);
  CHECK(run({"verify-mck", "--n", "1", "--d", "3"}).code == 0);
  CHECK(run({"fano", "--n-min", "2", "--n-max", "10"}).code == 0);
  CHECK(run({"chern", "--max-i", "12", "--m", "1", "4", "5"}).code == 0);
  CHECK(run({"star", "check", "--ambient-dim", "5", "--degree", "3", "--r", "4", "--mode", "collinear"}).code == 0);
  CHECK(run({"star", "check", "--ambient-dim", "5", "--degree", "3", "--r", "5", "--mode", "collinear"}).code == 1);
  CHECK(run({"star", "check", "--ambient-dim", "1", "--degree", "3", "--mode", "user", "--points", "1,0;0,1;1,1;1,2"}).code == 0);
  CHECK(run({"taut-table", "--n", "1", "--d", "3", "--m", "2"}).code == 0);

  // usage errors
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"mck", "--n", "4"}).code == 2);
  CHECK(run({"mck", "--n", "0", "--d", "3"}).code == 2);
  CHECK(run({"mck", "--n", "4", "--d", "3", "--unknown"}).code == 2);
  CHECK(run({"gram", "--parity", "odd", "--b", "3", "--k", "2"}).code == 2);
  CHECK(run({"gram", "--parity", "sideways", "--b", "3", "--k", "2"}).code == 2);
  CHECK(run({"--format", "yaml", "mck", "--n", "4", "--d", "3"}).code == 2);
  CHECK(run({"star", "check", "--ambient-dim", "1", "--degree", "3", "--mode", "user"}).code == 2);
  CHECK(run({"star", "check", "--ambient-dim", "1", "--degree", "3", "--mode", "user", "--points", "1,0;2,0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resource guards") {
  auto r = run({"taut", "--n", "2", "--d", "3", "--m", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--force") != std::string::npos);
  CHECK(run({"gram", "--parity", "even", "--b", "1", "--k", "5"}).code == 2);
  CHECK_THROWS_AS(cmd_gram(0, 1, 6, Limits{}), UsageError);
}

TEST_CASE("gram command") {
  auto r = run({"gram", "--parity", "even", "--b", "1", "--k", "2"});
  CHECK(r.code == 0);
  auto rep = Report::from_json(Json::parse(r.out));
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.name == "kernel equals relation orbit") {
      found = true;
      CHECK(e.data["kernel_dim"] == 2);
      CHECK(e.status == Status::Pass);
    }
  CHECK(found);
}

TEST_CASE("CLI output round-trips and is canonical") {
  auto a = run({"fano", "--n-min", "3", "--n-max", "5"});
  auto rep = Report::from_json(Json::parse(a.out));
  CHECK(rep.to_json().dump(2) + "\n" == a.out);
  for (std::size_t i = 1; i < rep.entries.size(); ++i) CHECK(rep.entries[i - 1].name <= rep.entries[i].name);
  for (const auto& e : rep.entries) CHECK_FALSE(e.anchor.empty());
  CHECK(run({"fano", "--n-min", "3", "--n-max", "5"}).out == a.out);
}

TEST_CASE("output format from the environment") {
  setenv("TAUTCALC_FORMAT", "markdown", 1);
  auto md = run({"mck", "--n", "2", "--d", "3"});
  CHECK(md.out.rfind("## mck", 0) == 0);
  auto js = run({"--format", "json", "mck", "--n", "2", "--d", "3"});
  CHECK(js.out.rfind("{", 0) == 0);
  unsetenv("TAUTCALC_FORMAT");
  CHECK(run({"mck", "--n", "2", "--d", "3"}).out.rfind("{", 0) == 0);
}

TEST_CASE("taut table for the cubic fourfold") {
  auto r = cmd_taut_table(4, 3, 2);
  CHECK(r.passed());
  CHECK(r.entries.size() == 9);
  auto r3 = cmd_taut_table(4, 3, 3);
  CHECK(r3.passed());
  auto top = cmd_taut_table(1, 3, 2);
  CHECK(top.entries.back().data["basis_size"] == 1);
  // at and above the relation threshold ranks are reported, not judged
  auto quadric = cmd_taut_table(2, 2, 4);
  CHECK(quadric.entries.front().status == Status::Skipped);
}
