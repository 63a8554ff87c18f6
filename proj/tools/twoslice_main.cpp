#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twoslice/cli/commands.hpp"

using namespace twoslice;

namespace {

int run(const std::string& command, const std::string& spec_path, const std::string& out_path,
        const std::string& format, std::size_t size_limit, bool timings,
        const std::map<std::string, std::string>& args) {
  cli::CommandOptions opts;
  opts.args = args;
  opts.size_limit = size_limit;
  cli::SpecFile spec;
  try {
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "cannot open spec file " << spec_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      opts.spec_name = spec_path;
      opts.spec_text = buf.str();
      spec = cli::parse_spec(opts.spec_text);
    }
    auto t0 = std::chrono::steady_clock::now();
    auto report = cli::run_command(command, spec, opts);
    auto t1 = std::chrono::steady_clock::now();
    report.with_timing = timings;
    report.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    auto text = report::emit_report(report, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      out << text;
    }
    return report.all_pass() ? 0 : 1;
  } catch (const core::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twoslice: exhaustive verification of 2-dimensional slice category theory on finite data"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string spec_path, out_path, format = "json";
  std::size_t size_limit = two::kDefaultSizeLimit;
  bool timings = false;
  if (const char* env = std::getenv("TWOSLICE_SIZE_LIMIT"))
    size_limit = std::strtoull(env, nullptr, 10);
  app.add_option("--spec", spec_path, "input DSL file");
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--size-limit", size_limit, "bound on hom enumerations");
  app.add_flag("--timings", timings, "include wall-clock timing in the report");

  std::map<std::string, std::map<std::string, std::string>> args;
  auto add = [&](const std::string& name, const std::string& desc,
                 const std::vector<std::pair<std::string, std::string>>& flags) {
    auto* sub = app.add_subcommand(name, desc);
    for (const auto& [flag, fdesc] : flags) sub->add_option("--" + flag, args[name][flag], fdesc);
    return sub;
  };

  auto* validate = add("validate", "validate every block of the spec", {});
  bool validate_all = false;
  validate->add_flag("--all", validate_all, "also validate the built-in fixture catalog");

  add("groth", "the grothendieck construction of a marking", {{"marking", "marking name"}});
  add("laxslice", "realize a lax slice and compare with the representable construction",
      {{"ambient", "2-category"}, {"object", "slice object"}});
  add("decide-colimit", "exhaustive universality oracle for a cocone",
      {{"ambient", "2-category"}, {"cocone", "cocone block"}});
  add("lift-cocone", "lift a universal cocone along dom at every object over the apex",
      {{"cocone", "cocone block"}, {"object", "slice base object"}});
  add("check-colim-fibration", "colim-fibration checks for the slice domain functor",
      {{"dim", "1 or 2"},
       {"category", "dim 1: category"},
       {"ambient", "dim 2: 2-category"},
       {"object", "slice object"}});
  add("check-adjunction", "validate a bespoke lax adjunction block",
      {{"adjunction", "adjunction block"}});
  add("dom-adjunction", "dom -| M x - with classification flags",
      {{"ambient", "2-category"}, {"object", "M"}});
  add("change-of-base", "pullback along a split opfibration: tau-star, tau-lower-star, check",
      {{"opfibration", "opfibration block"},
       {"action", "tau-star | tau-lower-star | check"},
       {"functor", "argument functor"},
       {"probe-f", "comma-separated functors into the base"},
       {"probe-h", "comma-separated functors into the total"}});
  add("preserve", "dom preserves universal cocones of a diagram in the slice",
      {{"diagram", "diagram block"}});

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : app.get_subcommands()) {
    auto cmd_args = args[sub->get_name()];
    if (sub->get_name() == "validate" && validate_all) cmd_args["all"] = "1";
    for (auto it = cmd_args.begin(); it != cmd_args.end();) {
      if (it->second.empty())
        it = cmd_args.erase(it);
      else
        ++it;
    }
    return run(sub->get_name(), spec_path, out_path, format, size_limit, timings, cmd_args);
  }
  return 2;
}
