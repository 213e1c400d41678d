#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pathhom/cli.hpp"

using pathhom::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("counting subcommands print the value") {
  CHECK(invoke({"hom", "--n", "3", "--k", "3", "--method", "dp"}).out == "6\n");
  CHECK(invoke({"epispectrum", "--n", "4", "--method", "brute"}).out == "1,2,1\n");
  CHECK(invoke({"lk", "--n", "10", "--k", "4", "--method", "closed"}).out == "18\n");
  CHECK(invoke({"homj", "--n", "3", "--k", "3", "--j", "2"}).out == "2\n");
  CHECK(invoke({"hom1", "--n", "5", "--k", "3", "--method", "lattice"}).out == "4\n");
  CHECK(invoke({"end", "--n", "5"}).out == "42\n");
  CHECK(invoke({"epi", "--n", "4", "--k", "3", "--method", "brute"}).out == "4\n");
  CHECK(invoke({"lattice", "--e", "3", "--nn", "3", "--t", "0", "--s", "2"}).out == "4\n");
  CHECK(invoke({"lattice", "--e", "9", "--nn", "5", "--method", "free"}).out == "2002\n");
}

TEST_CASE("every method of a subcommand gives the same value") {
  for (const char* m : {"closed", "dp", "enum"}) {
    CHECK(invoke({"hom", "--n", "9", "--k", "5", "--method", m}).out ==
          invoke({"hom", "--n", "9", "--k", "5", "--method", "dp"}).out);
  }
  for (const char* m : {"closed", "hom", "hom-dp", "telescope", "brute"}) {
    CHECK(invoke({"lk", "--n", "12", "--k", "5", "--method", m}).out == "66\n");
  }
}

TEST_CASE("lk defaults to the binomial form only where it is established") {
  auto below = invoke({"lk", "--n", "5", "--k", "3", "--format", "json"});
  REQUIRE(below.code == 0);
  auto j = nlohmann::json::parse(below.out);
  CHECK(j["method"] == "hom");
  CHECK(j["value"] == "4");

  auto above = nlohmann::json::parse(invoke({"lk", "--n", "6", "--k", "3", "--format", "json"}).out);
  CHECK(above["method"] == "closed");

  auto refused = invoke({"lk", "--n", "5", "--k", "3", "--method", "closed"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("n >= 2k") != std::string::npos);
}

TEST_CASE("formats carry identical values") {
  const std::vector<std::string> base{"hom", "--n", "70", "--k", "40"};
  auto with = [&](const char* f) {
    auto args = base;
    args.insert(args.end(), {"--format", f});
    return invoke(args).out;
  };
  const std::string plain = with("plain");
  const std::string value = plain.substr(0, plain.size() - 1);
  CHECK(value.find_first_not_of("0123456789") == std::string::npos);
  CHECK(value.size() > 20);

  auto j = nlohmann::json::parse(with("json"));
  CHECK(j["op"] == "hom");
  CHECK(j["params"]["n"] == 70);
  CHECK(j["params"]["k"] == 40);
  CHECK(j["method"] == "closed");
  CHECK(j["value"] == value);
  CHECK(j["elapsed_ns"].is_number_integer());

  const std::string csv = with("csv");
  CHECK(csv.rfind("op,n,k,j,method,value,elapsed_ns\nhom,70,40,,closed," + value + ",", 0) == 0);
}

TEST_CASE("epispectrum is quoted in CSV") {
  auto csv = invoke({"epispectrum", "--n", "4", "--format", "csv"}).out;
  CHECK(csv.find("epispectrum,4,,,formula,\"1,2,1\",") != std::string::npos);
}

TEST_CASE("structural subcommands") {
  CHECK(invoke({"encode", "--images", "1,2,3,2,3,4,5,4,3,4,5,6,5,6,5", "--k", "11"}).out ==
        "EENEEENNEEENEN\n");
  CHECK(invoke({"decode", "--word", "EN", "--k", "3"}).out == "1,2,1\n");
  CHECK(invoke({"decode", "--word", "", "--k", "4"}).out == "1\n");
  CHECK(invoke({"arrange", "--partition", "{1,3,5,9}{2,4,10}{6,8}{7}{11}"}).out ==
        "{7}{6,8}{1,3,5,9}{2,4,10}{11}\n{11}{2,4,10}{1,3,5,9}{6,8}{7}\n");

  auto rejected = invoke({"arrange", "--partition", "{1,2}{3}"});
  CHECK(rejected.code == 0);
  CHECK(rejected.out == "invalid\n");
  CHECK(rejected.err.find("adjacent") != std::string::npos);

  CHECK(invoke({"decode", "--word", "NE", "--k", "3"}).code == 2);
  CHECK(invoke({"encode", "--images", "2,1"}).code == 2);
  CHECK(invoke({"decode", "--word", "EXN", "--k", "3"}).code == 2);
}

TEST_CASE("usage and domain errors exit with 2") {
  auto unknown = invoke({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"hom", "--n", "3"}).code == 2);
  CHECK(invoke({"hom", "--n", "3", "--k", "3", "--bogus"}).code == 2);
  CHECK(invoke({"hom", "--n", "3", "--k", "3", "--method", "magic"}).code == 2);
  CHECK(invoke({"hom", "--n", "3", "--k", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({"homj", "--n", "3", "--k", "3", "--j", "4"}).code == 2);
  CHECK(invoke({"epispectrum", "--n", "15", "--method", "brute"}).code == 2);
  CHECK(invoke({"epispectrum", "--n", "15", "--method", "brute", "--limit-enum", "15"}).code == 0);
  CHECK(invoke({"hom", "--n", "17", "--k", "3", "--method", "enum"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto tiny = invoke({"verify", "--max-n", "2", "--max-k", "2"});
  CHECK(tiny.code == 0);
  CHECK(tiny.out.find("all suites passed") != std::string::npos);

  auto full = invoke({"verify", "--max-n", "12", "--max-k", "12"});
  CHECK(full.code == 0);
  CHECK(full.out.find("FAIL") == std::string::npos);
  CHECK(full.out.find("k=5  n=10") != std::string::npos);

  auto json = invoke({"verify", "--max-n", "6", "--max-k", "6", "--format", "json"});
  CHECK(json.code == 0);
  std::istringstream lines(json.out);
  int suites = 0;
  for (std::string line; std::getline(lines, line);) {
    auto j = nlohmann::json::parse(line);
    if (j["op"] == "verify") {
      ++suites;
      CHECK(j["value"] == "0");
    }
  }
  CHECK(suites >= 10);
}

TEST_CASE("bench") {
  auto cell = invoke({"bench", "--n", "3", "--k", "3", "--ops", "hom"});
  CHECK(cell.code == 0);
  CHECK(cell.out.find("hom,3,3,,closed,6,") != std::string::npos);
  CHECK(cell.out.find("hom,3,3,,dp,6,") != std::string::npos);
  CHECK(cell.out.find("hom,3,3,,enum,6,") != std::string::npos);

  auto empty = invoke({"bench", "--n", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "op,n,k,j,method,value,elapsed_ns\n");

  auto big = invoke({"bench", "--n", "64,128,256", "--k", "n"});
  CHECK(big.code == 0);
  CHECK(big.err.empty());
  std::istringstream lines(big.out);
  std::string header;
  std::getline(lines, header);
  std::map<std::string, std::set<std::string>> values;
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) {
      fields.push_back(f);
    }
    values[fields[0] + "/" + fields[1] + "/" + fields[2]].insert(fields[5]);
  }
  CHECK(values.size() == 6);  // hom and epi on three diagonal cells; lk needs k < n
  for (const auto& [cell_key, vs] : values) {
    CHECK_MESSAGE(vs.size() == 1, cell_key);
  }

  CHECK(invoke({"bench", "--n", "3", "--ops", "nope"}).code == 2);
}

TEST_CASE("records are deterministic apart from timing") {
  auto strip = [](std::string s) { return s.substr(0, s.rfind(',')); };
  auto a = invoke({"epi", "--n", "9", "--k", "4", "--format", "csv"}).out;
  auto b = invoke({"epi", "--n", "9", "--k", "4", "--format", "csv"}).out;
  CHECK(strip(a) == strip(b));
}
