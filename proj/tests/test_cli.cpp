#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"

using mirror::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

double field(const std::string& line, int column) {
  std::istringstream in(line);
  std::string tok;
  for (int i = 0; i <= column; ++i) in >> tok;
  return std::stod(tok);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mirrorspec-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli totals: table rows") {
  const Result r = call({"totals", "--kinds", "gauss,lorentz", "--v", "0.2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[1].rfind("Gauss", 0) == 0);
  CHECK(field(ls[1], 3) == doctest::Approx(0.288419).epsilon(2e-6));
  CHECK(field(ls[1], 5) == doctest::Approx(0.191703).epsilon(2e-6));
  CHECK(field(ls[2], 3) == doctest::Approx(0.296296).epsilon(2e-6));
}

TEST_CASE("cli totals: Jinc max-speed prints a warning") {
  const Result r = call({"totals", "--kinds", "jinc", "--mode", "max-speed"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(field(lines(r.out)[1], 3) == doctest::Approx(0.34761).epsilon(1e-4));
  const Result table = call({"totals", "--kinds", "jinc", "--mode", "paper-table"});
  CHECK(table.err.empty());
  CHECK(field(lines(table.out)[1], 3) == doctest::Approx(0.059173).epsilon(1e-5));
}

TEST_CASE("cli totals: quadrature route carries error estimates") {
  const Result r = call({"totals", "--kinds", "lorentz", "--route", "quadrature", "--json"});
  REQUIRE(r.code == 0);
  const json row = json::parse(r.out)["outputs"]["rows"][0];
  CHECK(row["n_over_v2"].get<double>() == doctest::Approx(8.0 / 27.0).epsilon(1e-9));
  CHECK(row["e_over_hkv2"].get<double>() == doctest::Approx(8.0 / 27.0).epsilon(1e-9));
  CHECK(row["n_error"].get<double>() >= 0.0);
  CHECK(row["e_error"].get<double>() < 1e-6);
}

TEST_CASE("cli totals: all kinds within a minute") {
  const auto t0 = std::chrono::steady_clock::now();
  const Result r = call({"totals", "--kinds", "all", "--route", "quadrature"});
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 10);
  CHECK(s < 60.0);
}

TEST_CASE("cli spectrum: Sinc cutoff rows") {
  const Result r = call({"spectrum", "--kind", "sinc", "--v", "0.2", "--pmax", "2", "--points", "5"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "p_over_kappa,N_p");
  CHECK(ls[3] == "1,0");
  CHECK(ls[4] == "1.5,0");
  CHECK(ls[5] == "2,0");
  CHECK(ls[2] != "0.5,0");
}

TEST_CASE("cli spectrum: Gauss value at p = kappa and FD below BE") {
  const Result g = call({"spectrum", "--kind", "gauss", "--pmax", "1", "--points", "2",
                         "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["N_p"][1].get<double>() == doctest::Approx(0.006166).epsilon(1e-3));

  const Result be = call({"spectrum", "--kind", "be", "--format", "json"});
  const Result fd = call({"spectrum", "--kind", "fd", "--format", "json"});
  const auto nb = json::parse(be.out)["N_p"].get<std::vector<double>>();
  const auto nf = json::parse(fd.out)["N_p"].get<std::vector<double>>();
  REQUIRE(nb.size() == nf.size());
  for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nf[i] < nb[i]);
}

TEST_CASE("cli spectrum: identical invocations give identical bytes") {
  const std::vector<std::string> args{"spectrum", "--kind", "be", "--route", "quadrature",
                                      "--points", "9", "--scaled"};
  const Result a = call(args);
  const Result b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out)[0] == "p_over_kappa,N_p,N_p_times_v_minus2");
}

TEST_CASE("cli spectrum: file output and I/O errors") {
  const auto dir = scratch_dir("spectrum");
  const auto path = (dir / "s.csv").string();
  CHECK(call({"spectrum", "--kind", "lorentz", "--out", path}).code == 0);
  std::ifstream in(path);
  std::string head;
  std::getline(in, head);
  CHECK(head == "p_over_kappa,N_p");
  const Result bad = call({"spectrum", "--out", (dir / "missing" / "s.csv").string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("missing") != std::string::npos);
}

TEST_CASE("cli crosscheck: listed kinds agree") {
  for (const char* kind : {"lorentz", "gauss", "quadlorentz"}) {
    CAPTURE(kind);
    const Result r = call({"crosscheck", "--kind", kind, "--v", "0.1", "--json"});
    REQUIRE(r.code == 0);
    const json o = json::parse(r.out)["outputs"];
    CHECK(o["passed"].get<bool>());
    CHECK(o["max_deviation"].get<double>() < 1e-6);
  }
  const json l = json::parse(call({"crosscheck", "--kind", "lorentz", "--v", "0.1", "--json"}).out);
  for (const auto& [name, e] : l["outputs"]["energy"].items()) {
    CHECK(e.get<double>() == doctest::Approx(0.296296).epsilon(2e-6));
  }
  const json g = json::parse(call({"crosscheck", "--kind", "gauss", "--v", "0.1", "--json"}).out);
  CHECK(g["outputs"]["energy"]["time_power"].get<double>() ==
        doctest::Approx(0.191703).epsilon(2e-6));
  const json q =
      json::parse(call({"crosscheck", "--kind", "quadlorentz", "--v", "0.1", "--json"}).out);
  CHECK(q["outputs"]["energy"]["parseval_larmor"].get<double>() ==
        doctest::Approx(0.564566).epsilon(2e-6));
}

TEST_CASE("cli crosscheck: an impossible threshold fails and names the pair") {
  const Result r = call({"crosscheck", "--kind", "sech", "--threshold", "1e-300"});
  CHECK(r.code == 1);
  CHECK(r.err.find(" vs ") != std::string::npos);
}

TEST_CASE("cli phase: one curve per kind") {
  const Result r = call({"phase", "--kind", "gauss,lorentz,sech", "--v", "0.5,0.4,0.3",
                         "--points", "3"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "kind,v,t,z,zdot");
  CHECK(ls[2].rfind("Gauss,0.5,0,", 0) == 0);
  CHECK(ls[8].rfind("Sech,0.3,0,0.6,", 0) == 0);
}

TEST_CASE("cli record and rerun reproduce outputs") {
  const auto dir = scratch_dir("record");
  for (std::vector<std::string> args :
       {std::vector<std::string>{"totals", "--kinds", "sech,be", "--v", "0.3"},
        std::vector<std::string>{"spectrum", "--kind", "jinc", "--route", "quadrature",
                                 "--points", "7"},
        std::vector<std::string>{"phase", "--kind", "fd", "--v", "0.1"}}) {
    CAPTURE(args[0]);
    args.insert(args.end(), {"--record", dir.string()});
    REQUIRE(call(args).code == 0);
  }
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++seen;
    std::ifstream in(entry.path());
    const json rec = json::parse(in);
    CHECK(rec.contains("timestamp"));
    CHECK(rec["tool_version"] == mirror::cli::kToolVersion);
    const Result r = call({"rerun", entry.path().string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("bit-exactly") != std::string::npos);
  }
  CHECK(seen == 3);

  // A tampered record is detected.
  const auto first = *std::filesystem::directory_iterator(dir);
  std::ifstream in(first.path());
  json rec = json::parse(in);
  in.close();
  rec["outputs"]["tampered"] = 1;
  std::ofstream(first.path()) << rec.dump();
  CHECK(call({"rerun", first.path().string()}).code == 1);
}

TEST_CASE("cli exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"totals", "--v", "1.2"}).code == 2);
  CHECK(call({"totals", "--kinds", "parabola"}).code == 2);
  CHECK(call({"spectrum", "--points", "1"}).code == 2);
  CHECK(call({"spectrum", "--format", "xml"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"rerun", "/nonexistent/record.json"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli MIRRORSPEC_TOL sets the quadrature tolerance") {
  ::setenv("MIRRORSPEC_TOL", "1e-7", 1);
  const json a = json::parse(call({"totals", "--kinds", "gauss", "--json"}).out);
  ::unsetenv("MIRRORSPEC_TOL");
  const json b = json::parse(call({"totals", "--kinds", "gauss", "--json"}).out);
  CHECK(a["quadrature"]["rel_tol"].get<double>() == 1e-7);
  CHECK(b["quadrature"]["rel_tol"].get<double>() == 1e-10);
}
