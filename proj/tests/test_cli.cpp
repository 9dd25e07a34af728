#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = archpi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bounds command") {
  const Result r96 = run({"bounds", "--doublings", "5", "--digits", "8"});
  CHECK(r96.code == 0);
  CHECK(contains(r96.out, "3.14103195"));
  CHECK(contains(r96.out, "3.14271460"));

  const Result r6 = run({"bounds", "-k", "1", "-d", "8"});
  CHECK(contains(r6.out, "c_n  3.00000000"));
  CHECK(contains(r6.out, "3.46410161"));

  const Result deep = run({"bounds", "-k", "13", "-d", "12"});
  CHECK(contains(deep.out, "3.141592645034"));
  CHECK(contains(deep.out, "3.141592670702"));

  const Result csv = run({"bounds", "-k", "5", "-d", "8", "--format", "csv"});
  CHECK(csv.out == "n,c_lo,c_hi,C_lo,C_hi\n96,3.14103195,3.14103196,3.14271459,3.14271460\n");

  const auto doc = nlohmann::json::parse(run({"bounds", "-k", "5", "--format", "json"}).out);
  CHECK(doc["results"]["n"] == 96);
  CHECK(doc["results"]["C_n"]["hi"] == "3.14271460");
}

TEST_CASE("table command") {
  const Result r = run({"table", "--max-doublings", "5", "--digits", "8"});
  CHECK(r.code == 0);
  CHECK(split(r.out, '\n').size() == 7);
  for (const char* v : {"2.59807621", "5.19615242", "3.10582854", "3.21539031", "3.13262861", "3.15965994",
                        "3.13935020", "3.14608622", "3.14103195", "3.14271460"}) {
    CHECK(contains(r.out, v));
  }
  CHECK(contains(r.out, "48·√(2−√(2+√(2+√3)))/√(2+√(2+√(2+√3)))"));

  const Result single = run({"table", "-K", "0"});
  CHECK(split(single.out, '\n').size() == 2);
  CHECK(contains(single.out, "3√3/2"));
}

TEST_CASE("table output is deterministic and consistent across formats") {
  const std::vector<std::string> base = {"table", "-K", "5", "-d", "8"};
  CHECK(run(base).out == run(base).out);

  auto with = [&](const char* fmt) {
    auto args = base;
    args.insert(args.end(), {"--format", fmt});
    return run(args).out;
  };
  const std::string text = with("text");
  const std::string csv = with("csv");
  const auto doc = nlohmann::json::parse(with("json"));
  CHECK(csv == with("csv"));

  const auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 7);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    REQUIRE(f.size() == 9);
    const auto& row = doc["results"][i - 1];
    CHECK(row["n"].get<std::uint64_t>() == std::stoull(f[0]));
    CHECK(row["c_form"] == f[1]);
    CHECK(row["c_n"]["approx"] == f[2]);
    CHECK(row["c_n"]["lo"] == f[3]);
    CHECK(row["c_n"]["hi"] == f[4]);
    CHECK(row["C_form"] == f[5]);
    CHECK(row["C_n"]["approx"] == f[6]);
    CHECK(row["C_n"]["lo"] == f[7]);
    CHECK(row["C_n"]["hi"] == f[8]);
    const auto text_line = split(text, '\n')[i];
    for (const auto& field : f) CHECK(contains(text_line, field));
  }
}

TEST_CASE("cf command") {
  const Result v = run({"cf", "--value", "3.14"});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "[3;7,7]"));
  CHECK(contains(v.out, "3/1"));
  CHECK(contains(v.out, "22/7"));
  CHECK(contains(v.out, "157/50"));

  const Result b = run({"cf", "--from-bound", "lower", "--doublings", "5", "--digits", "8"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "[3;7,11,25,1,25,1,27,13]"));
  CHECK(contains(b.out, "245/78             Below"));

  const Result z = run({"cf", "--value", "3.14159267"});
  CHECK(contains(z.out, "333/106"));
  CHECK(contains(z.out, "355/113"));

  CHECK(run({"cf", "--value", "3.1x4"}).code == 2);
  CHECK(run({"cf", "--value", "0"}).code == 2);
  CHECK(run({"cf"}).code == 2);
  CHECK(run({"cf", "--value", "3.14", "--from-bound", "lower"}).code == 2);
  CHECK(run({"cf", "--from-bound", "sideways"}).code == 2);
}

TEST_CASE("approx command") {
  const Result r = run({"approx", "--doublings", "5", "--digits", "8", "--den-cap", "100"});
  CHECK(r.code == 0);
  CHECK(split(r.out, '\n')[0] == "245/78 < pi < 22/7");
  CHECK(split(run({"approx", "-k", "5", "-d", "8", "-m", "7"}).out, '\n')[0] == "3/1 < pi < 22/7");
  CHECK(contains(run({"approx", "-k", "13", "-d", "8", "-m", "200"}).out, "< pi < 355/113"));

  const Result none = run({"approx", "-k", "5", "-d", "8", "-m", "1"});
  CHECK(none.code == 4);
  CHECK(contains(none.err, "no convergent"));
  CHECK(run({"approx", "-m", "zero"}).code == 2);
}

TEST_CASE("series command") {
  const Result r = run({"series", "--series", "leibniz", "--terms", "3", "--digits", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "3.46666667"));
  CHECK(contains(r.out, "52/15"));
  const Result all = run({"series", "-s", "all", "-N", "2", "--format", "csv"});
  CHECK(split(all.out, '\n').size() == 11);
  CHECK(run({"series", "-s", "machin"}).code == 2);
  CHECK(run({"series", "-s", "leibniz", "-N", "0"}).code == 2);
}

TEST_CASE("export-fig3 command") {
  const Result r = run({"export-fig3", "--max-doublings", "5", "--digits", "8"});
  CHECK(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 11);
  CHECK(lines[0] == "n,c_n,c_n_hi,C_n,C_n_hi");
  CHECK(lines[6] == "96,3.14103195,3.14103196,3.14271459,3.14271460");
  CHECK(lines[7].rfind("22/7,", 0) == 0);
  CHECK(lines[8].rfind("223/71,", 0) == 0);
  CHECK(lines[9].rfind("245/78,", 0) == 0);
  CHECK(lines[10].rfind("pi_ref,3.14159265,", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bounds", "--digits", "0"}).code == 2);
  CHECK(run({"bounds", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--max-precision", "20", "bounds", "-k", "13", "-d", "12"}).code == 3);
  CHECK(run({"bounds", "-k", "13", "-d", "12", "--max-precision", "20"}).code == 3);
}
