#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LOCALTEMP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using Table = std::vector<std::map<std::string, std::string>>;

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

Table parse_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> header;
  Table rows;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto cells = split(line);
    REQUIRE(cells.size() == header.size());
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  return rows;
}

double num(const std::string& s) { return std::stod(s); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("localtemp_cli_test_" + name);
}

}  // namespace

TEST_CASE("nmin") {
  auto r = run("nmin harmonic --t-over-theta 10 --alpha 10 --delta 0.01");
  CHECK(r.code == 0);
  CHECK(r.out.find("n_min: 1951\n") != std::string::npos);
  CHECK(r.out.find("binding: linearity\n") != std::string::npos);

  r = run("nmin harmonic --t-over-theta 0.1 --format csv");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("n_min") == "1541");
  CHECK(rows[0].at("binding") == "cond_const");

  r = run("nmin harmonic --temp-kelvin 64.5 --theta 645 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0].at("n_min") == 1541);

  r = run("nmin ising --K 0.1 --L 0.1 --t-over-b 100 --alpha 10 --delta 0.01");
  CHECK(r.code == 0);
  CHECK(r.out.find("n_min: 1\n") != std::string::npos);

  r = run("nmin ising --jx 10 --jy -10 --t-over-b 1 --format csv");
  REQUIRE(r.code == 0);
  CHECK(parse_csv(r.out)[0].at("n_linearity") == "2501");

  CHECK(run("nmin ising --K 2 --L 3 --t-over-b 1").code == 3);
  CHECK(run("nmin harmonic --t-over-theta 1 --alpha 0.5").code == 1);
  CHECK(run("nmin harmonic --t-over-theta -1").code == 1);
  CHECK(run("nmin harmonic").code == 1);
  CHECK(run("nmin ising --K 0 --L 1 --t-over-b 1 --B 0").code == 1);
  CHECK(run("nosuchcommand").code == 1);
}

TEST_CASE("sweep") {
  const std::string args = "sweep harmonic --tmin 1e-4 --tmax 1e2 --points 100 --log";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = parse_csv(a.out);
  REQUIRE(rows.size() == 100);
  CHECK(num(rows.front().at("t_ratio")) == doctest::Approx(1e-4));
  CHECK(num(rows.back().at("t_ratio")) == doctest::Approx(1e2));
  CHECK(rows.front().at("binding") == "cond_const");
  CHECK(rows.back().at("binding") == "linearity");
  const double ratio = num(rows[1].at("t_ratio")) / num(rows[0].at("t_ratio"));
  CHECK(num(rows[51].at("t_ratio")) / num(rows[50].at("t_ratio")) == doctest::Approx(ratio));

  const auto lin = parse_csv(run("sweep harmonic --tmin 1 --tmax 3 --points 5").out);
  REQUIRE(lin.size() == 5);
  CHECK(num(lin[1].at("t_ratio")) == doctest::Approx(1.5));

  const auto ising = parse_csv(run("sweep ising --K 10 --L 10 --tmin 1e-2 --tmax 1e2 --points 20 --log").out);
  REQUIRE(ising.size() == 20);
  for (auto row : ising) CHECK(row.at("n_linearity") == "1");

  const auto len = parse_csv(run("sweep harmonic --tmin 0.01 --tmax 1 --points 3 --a0 2.5").out);
  REQUIRE(len.size() == 3);
  CHECK(num(len[2].at("l_min_m")) == doctest::Approx(1556 * 2.5e-10));

  const auto js = nlohmann::json::parse(run(args + " --format json").out);
  CHECK(js.size() == 100);
  CHECK(run("sweep harmonic --tmin 2 --tmax 1 --points 5").code == 1);
  CHECK(run("sweep harmonic --tmin 1 --tmax 2 --points 0").code == 1);
}

TEST_CASE("figures") {
  auto curves = [](const Table& rows) {
    std::map<std::string, std::vector<std::map<std::string, std::string>>> by;
    for (const auto& row : rows) by[row.at("curve") + "|" + row.at("parameter")].push_back(row);
    return by;
  };
  for (const char* id : {"fig3", "fig4", "fig5", "fig6"}) {
    CAPTURE(id);
    const auto r = run(std::string("figure ") + id);
    REQUIRE(r.code == 0);
    for (const auto& [key, rows] : curves(parse_csv(r.out))) CHECK(rows.size() == 200);
  }
  const auto fig5 = curves(parse_csv(run("figure fig5").out));
  CHECK(fig5.size() == 4);
  const auto fig4 = curves(parse_csv(run("figure fig4").out));
  CHECK(fig4.size() == 2);

  const auto fig3 = curves(parse_csv(run("figure fig3").out));
  for (const auto& [key, rows] : fig3) {
    if (key.rfind("linearity", 0) == 0) CHECK(num(rows.back().at("bound")) == doctest::Approx(2000.0).epsilon(0.01));
  }

  // fig6, K = 10: log-log slope -3 at low temperature.
  const auto fig6 = curves(parse_csv(run("figure fig6").out));
  bool found = false;
  for (const auto& [key, rows] : fig6) {
    if (key != "cond_const|K=10 L=0") continue;
    found = true;
    const auto& lo = rows[40];
    const auto& hi = rows[60];
    const double slope = std::log(num(hi.at("bound")) / num(lo.at("bound"))) /
                         std::log(num(hi.at("t_ratio")) / num(lo.at("t_ratio")));
    CHECK(num(lo.at("t_ratio")) < 1e-2);
    CHECK(slope == doctest::Approx(-3.0).epsilon(0.03));
  }
  CHECK(found);
  CHECK(run("figure fig9").code == 1);
}

TEST_CASE("materials") {
  auto r = run("materials --name silicon --temp-kelvin 1 --format csv");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(num(rows[0].at("l_min_m")) > 0.05);
  CHECK(num(rows[0].at("l_min_m")) < 0.2);

  r = run("materials --name iron --temp-kelvin 5000");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("note:") != std::string::npos);
  r = run("materials --name carbon --temp-kelvin 270 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0].at("n_min") == 875);
  CHECK(j[0].contains("note"));
  CHECK(j[0].at("l_min_m").get<double>() == doctest::Approx(1.3e-7).epsilon(0.05));

  // Export, then read back through --file.
  const auto path = temp_path("materials.json");
  REQUIRE(run("materials --format json --out " + path.string()).code == 0);
  std::ifstream in(path);
  const auto exported = nlohmann::json::parse(in);
  CHECK(exported.size() == 3);
  r = run("materials --file " + path.string() + " --name silicon --temp-kelvin 1 --format csv");
  CHECK(r.code == 0);
  CHECK(parse_csv(r.out)[0].at("l_min_m") == rows[0].at("l_min_m"));

  r = run(std::string("materials --file ") + LOCALTEMP_DATA_DIR + "/materials.json --format json");
  CHECK(nlohmann::json::parse(r.out) == exported);

  std::ofstream(temp_path("bad.json")) << "[{\"name\": \"x\"}";
  CHECK(run("materials --file " + temp_path("bad.json").string()).code == 1);
  std::ofstream(temp_path("neg.json")) << R"([{"name": "x", "theta_kelvin": -1, "a0_angstrom": 1}])";
  CHECK(run("materials --file " + temp_path("neg.json").string()).code == 1);
  CHECK(run("materials --name unobtainium --temp-kelvin 1").code == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(temp_path("bad.json"));
  std::filesystem::remove(temp_path("neg.json"));
}

TEST_CASE("oracle") {
  auto r = run("oracle spectrum --sites 2 --K 0.5 --L 0 --boundary open");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(num(rows[0].at("max_deviation")) < 1e-10);

  r = run("oracle spectrum --sites 2 --K 0 --L 1");
  REQUIRE(r.code == 0);
  CHECK(num(parse_csv(r.out)[0].at("max_deviation")) == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));

  r = run("oracle moments --sites 8 --groups 4 --K 0.3 --L 0");
  REQUIRE(r.code == 0);
  rows = parse_csv(r.out);
  CHECK(num(rows[0].at("max_abs_eps")) <= 1e-10);
  CHECK(num(rows[0].at("max_variance_error")) <= 1e-10);

  r = run("oracle gaussian --sites 8 --groups 4 --min-groups 2 --K 0.3 --format json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 3);
  r = run("oracle rho --sites 6 --groups 3 --K 0.1");
  CHECK(r.code == 0);

  CHECK(run("oracle spectrum --sites 15").code == 1);
  CHECK(run("oracle moments --sites 5 --groups 2").code == 1);
  CHECK(run("oracle moments --sites 4 --groups 2 --boundary sideways").code == 1);
}

TEST_CASE("output file") {
  const auto path = temp_path("sweep.csv");
  REQUIRE(run("sweep harmonic --tmin 1 --tmax 2 --points 4 --out " + path.string()).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("sweep harmonic --tmin 1 --tmax 2 --points 4").out);
  std::filesystem::remove(path);
}
