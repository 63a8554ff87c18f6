#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "twoslice/cli/commands.hpp"
#include "twoslice/fixtures.hpp"

using namespace twoslice;
using namespace twoslice::cli;

namespace {

std::string read_file(const std::string& rel) {
  std::ifstream in(std::string(TWOSLICE_SOURCE_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("fixture files parse and resolve") {
  auto spec = parse_spec(read_file("fixtures/two.cat"));
  CHECK(spec.categories.count("TWOD") == 1);
  CHECK(spec.functors.count("COLLAPSE") == 1);
  CHECK(spec.nats.count("A01") == 1);

  auto wf = parse_spec(read_file("fixtures/wfix.cat"));
  CHECK(wf.markings.count("WFIXD") == 1);
  CHECK(wf.raw_cocones.count("K1") == 1);

  auto opf = parse_spec(read_file("fixtures/opf.cat"));
  CHECK(opf.opfibrations.count("OPFD") == 1);
  CHECK(cob::validate_split_opfibration(opf.opfibrations.at("OPFD")).ok);
}

TEST_CASE("print after parse is a fixpoint") {
  for (const auto& rel : {"fixtures/two.cat", "fixtures/wfix.cat", "fixtures/opf.cat"}) {
    auto spec = parse_spec(read_file(rel));
    auto printed = print_spec(spec);
    auto spec2 = parse_spec(printed);
    CHECK(print_spec(spec2) == printed);
  }
}

TEST_CASE("unresolved and duplicate names are rejected with positions") {
  CHECK_THROWS_WITH_AS(parse_spec("nat N : NOPE => NOPE2 { at x = y }"),
                       doctest::Contains("UnresolvedName"), core::ValidationError);
  CHECK_THROWS_WITH_AS(parse_spec("category C { objects x id x = idx mor idx : x -> x }\n"
                                  "category C { objects y id y = idy mor idy : y -> y }"),
                       doctest::Contains("DuplicateName"), core::ValidationError);
  try {
    parse_spec("category C {\n  objects x\n  mor broken x -> x\n}");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("a malformed opfibration block is rejected") {
  auto text = read_file("fixtures/opf.cat");
  auto pos = text.find("lift e0 a = k");
  REQUIRE(pos != std::string::npos);
  auto broken = text.substr(0, pos) + "lift e0 a = kp" + text.substr(pos + 13);
  CHECK_THROWS_AS(parse_spec(broken), core::ValidationError);
}

TEST_CASE("reports are deterministic and match the golden files") {
  struct Case {
    std::string golden;
    std::string command;
    std::string specfile;
    std::map<std::string, std::string> args;
  };
  std::vector<Case> cases = {
      {"fixtures/golden/groth_wfix.json", "groth", "", {{"marking", "WFIX"}}},
      {"fixtures/golden/laxslice_c2cat.json", "laxslice", "",
       {{"ambient", "C2CAT"}, {"object", "B"}}},
      {"fixtures/golden/decide_k1.json", "decide-colimit", "fixtures/wfix.cat",
       {{"cocone", "K1"}}},
      {"fixtures/golden/dom_adjunction_two.json", "dom-adjunction", "",
       {{"ambient", "TWO"}, {"object", "1"}}},
      {"fixtures/golden/cob_check_opfd.json", "change-of-base", "fixtures/opf.cat",
       {{"opfibration", "OPFD"}, {"action", "check"}, {"probe-f", "FB0"}, {"probe-h", "HE1"}}},
  };
  for (const auto& c : cases) {
    CommandOptions opts;
    opts.args = c.args;
    SpecFile spec;
    if (!c.specfile.empty()) {
      opts.spec_name = c.specfile;
      opts.spec_text = read_file(c.specfile);
      spec = parse_spec(opts.spec_text);
    }
    auto rep1 = run_command(c.command, spec, opts);
    auto rep2 = run_command(c.command, spec, opts);
    auto text1 = report::emit_report(rep1, "json");
    CHECK(text1 == report::emit_report(rep2, "json"));
    auto golden = read_file(c.golden);
    INFO(c.golden);
    CHECK(text1 == golden);
  }
}

TEST_CASE("failing checks carry witnesses; empty check lists are valid JSON") {
  report::Report r;
  r.command = "demo";
  auto j = r.to_json();
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  r.add("bad", false, {"the witness"});
  auto j2 = r.to_json();
  CHECK(j2["witnesses"].size() == 1);
  // non-universal cocone: decide-colimit reports a witness
  auto wf = parse_spec(read_file("fixtures/wfix.cat"));
  CommandOptions opts;
  opts.args = {{"cocone", "K2"}};
  auto rep = run_command("decide-colimit", wf, opts);
  CHECK_FALSE(rep.all_pass());
  bool has_witness = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.witnesses.empty()) has_witness = true;
  CHECK(has_witness);
}

TEST_CASE("remaining commands run end to end") {
  auto adj_spec = parse_spec(read_file("fixtures/adj.cat"));
  {
    CommandOptions opts;
    opts.args = {{"adjunction", "IDTWO"}};
    auto rep = run_command("check-adjunction", adj_spec, opts);
    CHECK(rep.all_pass());
    bool strict_flag = false;
    for (const auto& c : rep.checks)
      if (c.name == "strict" && c.pass) strict_flag = true;
    CHECK(strict_flag);
  }
  {
    CommandOptions opts;
    opts.args = {{"diagram", "D1"}};
    auto rep = run_command("preserve", adj_spec, opts);
    CHECK(rep.all_pass());
  }
  {
    CommandOptions opts;
    opts.args = {{"all", "1"}};
    auto rep = run_command("validate", adj_spec, opts);
    CHECK(rep.all_pass());
  }
  auto wf = parse_spec(read_file("fixtures/wfix.cat"));
  {
    CommandOptions opts;
    opts.args = {{"cocone", "K1"}, {"object", "B"}};
    auto rep = run_command("lift-cocone", wf, opts);
    CHECK(rep.all_pass());
  }
  {
    CommandOptions opts;
    opts.args = {{"dim", "1"}, {"category", "TRI"}, {"object", "2"}};
    auto rep = run_command("check-colim-fibration", SpecFile{}, opts);
    CHECK(rep.all_pass());
  }
  {
    CommandOptions opts;
    opts.args = {{"dim", "2"}, {"ambient", "C2CAT"}, {"object", "B"}};
    auto rep = run_command("check-colim-fibration", SpecFile{}, opts);
    CHECK(rep.all_pass());
  }
  auto opf = parse_spec(read_file("fixtures/opf.cat"));
  {
    CommandOptions opts;
    opts.args = {{"opfibration", "OPFD"}, {"action", "tau-star"}, {"functor", "FB0"}};
    auto rep = run_command("change-of-base", opf, opts);
    CHECK(rep.all_pass());
  }
  {
    CommandOptions opts;
    opts.args = {{"opfibration", "OPFD"}, {"action", "tau-lower-star"}, {"functor", "HE1"}};
    auto rep = run_command("change-of-base", opf, opts);
    CHECK(rep.all_pass());
    REQUIRE(!rep.certificates.empty());
    CHECK(rep.certificates[0]["objects"].size() == 1);  // single pair over 0
  }
}
