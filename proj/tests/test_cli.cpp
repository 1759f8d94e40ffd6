#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "threshold_spectra/cli.hpp"
#include "threshold_spectra/json_io.hpp"

namespace ts = threshold_spectra;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ts::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Sets an environment variable for the lifetime of the guard.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~EnvGuard() { ::unsetenv(name_); }
  EnvGuard(const EnvGuard&) = delete;
  EnvGuard& operator=(const EnvGuard&) = delete;

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("analyze the worked example") {
  const auto r = run({"analyze", "001101010111"});
  CHECK(r.code == ts::kExitOk);
  CHECK(r.err.empty());
  const auto j = ts::Json::parse(r.out);
  const double expected[] = {2.46158, 3.50373, 4.49073, 5.68371, 7, 7, 7.84337, 8.68471, 9.49912, 10, 10, 17.83303};
  REQUIRE(j.at("spectrum").at("values").size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(std::abs(j.at("spectrum").at("values")[i].get<double>() - expected[i]) <= 1e-4);
  }
  CHECK(j.at("spectrum").at("provenance")[4] == "direct:1");
  CHECK(j.at("spectrum").at("provenance")[11] == "condensed");
  CHECK(j.at("reports").size() == 4);
  CHECK(j.at("pass") == true);

  // run-length input gives the same document
  CHECK(run({"analyze", "0^2,1^2,0,1,0,1,0,1^3"}).out == r.out);
  CHECK(run({"analyze", "--t11", "001101010111"}).out != r.out);
}

TEST_CASE("analyze input handling") {
  CHECK(run({"analyze", "1^5"}).code == ts::kExitOk);
  const auto bad = run({"analyze", "0x1"});
  CHECK(bad.code == ts::kExitInputError);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position 2") != std::string::npos);
  CHECK(run({"analyze"}).code == ts::kExitInputError);
  CHECK(run({}).code == ts::kExitInputError);
  CHECK(run({"analyze", "--tol", "-1", "01"}).code == ts::kExitInputError);
  CHECK(run({"--help"}).code == ts::kExitOk);
}

TEST_CASE("verify") {
  const auto two = run({"verify", "--max-n", "2"});
  CHECK(two.code == ts::kExitOk);
  CHECK(ts::Json::parse(two.out).at("graphs") == 2);

  const auto twelve = run({"verify", "--max-n", "12", "--jobs", "4"});
  CHECK(twelve.code == ts::kExitOk);
  const auto j = ts::Json::parse(twelve.out);
  CHECK(j.at("graphs") == 4094);
  CHECK(j.at("pass") == true);
  CHECK(run({"verify", "--max-n", "12", "--jobs", "1"}).out == twelve.out);

  const auto csv = run({"verify", "--max-n", "3", "--csv", "--checks", "brouwer"});
  CHECK(csv.code == ts::kExitOk);
  CHECK(csv.out.rfind("n,sequence,kbar,E,k_min_slack,min_slack,pass\n2,00,", 0) == 0);

  CHECK(run({"verify", "--max-n", "3", "--csv", "--json"}).code == ts::kExitInputError);
  CHECK(run({"verify", "--max-n", "3", "--checks", "t10"}).code == ts::kExitInputError);
  CHECK(run({"verify", "--max-n", "3", "--jobs", "0"}).code == ts::kExitInputError);
}

TEST_CASE("verify cap") {
  const auto big = run({"verify", "--max-n", "100"});
  CHECK(big.code == ts::kExitInputError);
  CHECK(big.err.find(ts::kSweepCapVariable) != std::string::npos);
  CHECK(run({"verify", "--max-n", "1"}).code == ts::kExitInputError);
  CHECK(run({"verify", "--max-n", "17"}).code == ts::kExitInputError);
  {
    EnvGuard guard(ts::kSweepCapVariable, "4");
    CHECK(run({"verify", "--max-n", "5"}).code == ts::kExitInputError);
    CHECK(run({"verify", "--max-n", "4"}).code == ts::kExitOk);
  }
  {
    EnvGuard guard(ts::kSweepCapVariable, "lots");
    CHECK(run({"verify", "--max-n", "3"}).code == ts::kExitInputError);
  }
  {
    EnvGuard guard(ts::kSweepCapVariable, "41");
    CHECK(run({"verify", "--max-n", "3"}).code == ts::kExitInputError);
  }
}

TEST_CASE("ferrers") {
  CHECK(run({"ferrers", "0111"}).out == "b1 | ###\nb1 | ###\nb1 | ###\nb1 | ###\n");
  CHECK(run({"ferrers", "1"}).out == "b1 |\n");
  const auto ex = run({"ferrers", "001101010111"});
  CHECK(ex.code == ts::kExitOk);
  CHECK(ex.out.rfind("b8 | ###########\n", 0) == 0);
  CHECK(run({"ferrers", ""}).code == ts::kExitInputError);
}

TEST_CASE("complement") {
  CHECK(run({"complement", "001101010111"}).out == "110010101000\n");
  CHECK(run({"complement", "110010101000"}).out == "001101010111\n");
  const auto j = ts::Json::parse(run({"complement", "--json", "1^4"}).out);
  CHECK(j.at("sequence") == "0000");
  CHECK(j.at("edges") == 0);
}

TEST_CASE("spectrum") {
  const auto csv = run({"spectrum", "--csv", "0001"});
  CHECK(csv.code == ts::kExitOk);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,value,provenance");
  std::getline(in, line);
  CHECK(line.rfind("1,", 0) == 0);
  CHECK(line.find(",condensed") != std::string::npos);
  std::getline(in, line);
  CHECK(line == "2,1,direct:1");
  std::getline(in, line);
  CHECK(line == "3,1,direct:1");
  std::getline(in, line);
  CHECK(line == "4,4,condensed");

  const auto dense = ts::Json::parse(run({"spectrum", "--dense", "0001"}).out);
  for (const auto& tag : dense.at("provenance")) CHECK(tag == "dense");
  CHECK(std::abs(dense.at("values")[3].get<double>() - 4.0) < 1e-10);

  CHECK(run({"spectrum", "--csv", "--json", "01"}).code == ts::kExitInputError);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", "--t11", "0001100101"}, {"verify", "--max-n", "9", "--jobs", "3"},
        {"verify", "--max-n", "6", "--csv"}, {"spectrum", "--csv", "001101010111"}, {"ferrers", "110011101"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
