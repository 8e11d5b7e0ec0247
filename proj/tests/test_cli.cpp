#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "quadnorm/catalog.hpp"
#include "quadnorm/cli.hpp"
#include "quadnorm/qmap_format.hpp"

using namespace quadnorm;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto path = std::filesystem::temp_directory_path() / ("quadnorm-test-" + name);
    std::ofstream(path) << text;
    return path.string();
  }

  bool has_line(std::string const& text, std::string const& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (l == line) {
        return true;
      }
    }
    return false;
  }

  std::string const freecomm_text = "alphabet a b c\n"
                                    "map b a -> a b\n"
                                    "map c a -> a c\n"
                                    "map c b -> b c\n"
                                    "default identity\n";
}  // namespace

TEST_CASE("parse_qmap") {
  auto F = parse_qmap(freecomm_text);
  CHECK(F == sort_map({"a", "b", "c"}));
  auto G = parse_qmap("# sign\nalphabet 0 +1 -1\nneutral 0\n"
                      "map 0 +1 -> +1 0\nmap 0 -1 -> -1 0   # comment\n"
                      "map +1 -1 -> 0 0\nmap -1 +1 -> 0 0\ndefault identity\n");
  CHECK(G == load("sign").map);
}

TEST_CASE("parse_qmap errors carry the line") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      parse_qmap(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("alphabet a b\nmap a b -> a c\ndefault identity\n") == 2);
  CHECK(line_of("alphabet\n") == 1);
  CHECK(line_of("alphabet a b\nmap a b -> b b\nmap a b -> a a\ndefault identity\n") == 3);
  CHECK(line_of("alphabet a b\nmap a b -> b b\n") > 0);
  CHECK(line_of("alphabet a e\nneutral e\nneutral a\ndefault identity\n") == 3);
  CHECK(line_of("map a b -> b b\nalphabet a b\n") == 1);
  CHECK(line_of("alphabet a b\nmap a b b b\ndefault identity\n") == 2);
  CHECK(line_of("alphabet a a\n") == 1);
  CHECK(line_of("alphabet a b\nfrobnicate\n") == 2);
}

TEST_CASE("to_qmap round trip") {
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    auto const& F       = load(name).map;
    auto        printed = to_qmap(F);
    CHECK(parse_qmap(printed) == F);
    CHECK(to_qmap(parse_qmap(printed)) == printed);
  }
}

TEST_CASE("report header") {
  auto r = run({"class", "catalog:free-x"});
  CHECK(r.out.rfind(std::string(report_header) + "\n", 0) == 0);
}

TEST_CASE("class command") {
  auto r = run({"class", "catalog:ab5"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "CLASS left=5 right=4"));
  auto f = run({"class", temp_file("fc.qmap", freecomm_text)});
  CHECK(has_line(f.out, "CLASS left=3 right=3"));
  CHECK(has_line(f.out, "WITNESS left=b b a"));
  CHECK(has_line(f.out, "WITNESS right=b a a"));
}

TEST_CASE("normalize command") {
  auto path = temp_file("fc.qmap", freecomm_text);
  auto r    = run({"normalize", path, "c b a"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "a b c"));
  auto t = run({"normalize", path, "c b a", "--strategy", "left_alt", "--trace"});
  CHECK(has_line(t.out, "TRACE 1 2 1"));
  CHECK(run({"normalize", path, "c b a", "--strategy", "sideways"}).code == 2);
}

TEST_CASE("check command") {
  auto r = run({"check", "catalog:sign", "--stable212"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "CHECK stable212 FAIL witness=+1 -1 -1"));
  auto a = run({"check", "catalog:sign", "--all"});
  CHECK(a.code == 1);
  CHECK(has_line(a.out, "CHECK domino FAIL witness=+1 -1 -1"));
  CHECK(has_line(a.out, "CHECK weak-domino PASS"));
  CHECK(has_line(a.out, "CHECK local-factorability PASS"));
  auto ok = run({"check", "catalog:freecomm-abc", "--idempotent", "--neutral", "--domino"});
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "CHECK domino PASS"));
  auto h = run({"check", "catalog:ab5", "--weak-domino"});
  CHECK(h.code == 1);
  CHECK(has_line(h.out, "CHECK weak-domino FAIL witness=a b1 a"));
}

TEST_CASE("rules and rewrite commands") {
  auto r = run({"rules", "catalog:sign", "--mod-e"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "+1 -1 -> ^"));
  CHECK(has_line(r.out, "-1 +1 -> ^"));
  auto t = run({"rewrite", "catalog:ab5", "a b1 a", "--trace"});
  CHECK(t.code == 0);
  CHECK(has_line(t.out, "a b1 a @2 -> a b2 a"));
  CHECK(has_line(t.out, "FINAL a b5 a steps=4 outcome=irreducible"));
  auto s = run({"rewrite", "catalog:sign", "+1 -1 -1"});
  CHECK(has_line(s.out, "FINAL -1 steps=1 outcome=irreducible"));
}

TEST_CASE("monoid command") {
  auto r = run({"monoid", "catalog:sign", "--max-len", "2", "--elements"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "ELEMENTS count=5 max-len=2 route=n_phi"));
  CHECK(has_line(r.out, "ELEMENT -1 -1"));
  auto s = run({"monoid", "catalog:sign", "--max-len", "3", "--check-stronger"});
  CHECK(s.code == 1);
  CHECK(has_line(s.out, "CHECK stronger-assumption FAIL witness=+1 -1 -1"));
  CHECK(run({"monoid", "catalog:sign"}).code == 2);
}

TEST_CASE("catalog command") {
  auto r = run({"catalog", "sign"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "neutral 0"));
  for (auto const& n : catalog_names()) {
    auto a = run({"catalog", n, "--run"});
    CAPTURE(n);
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
  }
  CHECK(run({"catalog", "nope"}).code == 2);
}

TEST_CASE("search command") {
  auto r = run({"search", "--letters", "1", "--neutral"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "SEARCH mode=exhaustive letters=1 candidates=3 matches=3"));
  auto s = run({"search", "--letters", "2", "--neutral", "--require", "weak-domino", "--forbid", "domino"});
  CHECK(s.code == 0);
  CHECK(s.out.find("weak-domino=PASS") != std::string::npos);
  CHECK(s.out.find(" domino=FAIL") != std::string::npos);
  auto a = run({"search", "--letters", "3", "--neutral", "--count", "5", "--seed", "3"});
  auto b = run({"search", "--letters", "3", "--neutral", "--count", "5", "--seed", "3"});
  CHECK(a.out == b.out);
  CHECK(has_line(a.out, "SEARCH mode=random letters=3 candidates=5 matches=5"));
  CHECK(run({"search", "--letters", "2", "--require", "shiny"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"class", "/nonexistent/file.qmap"}).code == 2);
  auto bad = run({"class", temp_file("bad.qmap", "alphabet a b\nmap a b -> a c\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(run({"normalize", temp_file("fc.qmap", freecomm_text), "a z"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
