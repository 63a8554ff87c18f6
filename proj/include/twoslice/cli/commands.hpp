#pragma once

#include <map>

#include "twoslice/cli/dsl.hpp"
#include "twoslice/report.hpp"
#include "twoslice/slice/oracle.hpp"

namespace twoslice::cli {

struct CommandOptions {
  std::string spec_name;  // displayed input name
  std::string spec_text;  // raw content, hashed into the report
  std::map<std::string, std::string> args;
  std::size_t size_limit = two::kDefaultSizeLimit;

  std::string arg(const std::string& key, const std::string& fallback = "") const {
    auto it = args.find(key);
    return it == args.end() ? fallback : it->second;
  }
};

// A cocone block realized over the Grothendieck construction of its shape.
struct RealizedCocone {
  std::shared_ptr<groth::GrothResult> shape;
  Cat2Ptr ambient;
  slice::OplaxCocone<two::Fin2Model> cocone;
};

RealizedCocone realize_cocone(const SpecFile& spec, const CoconeDef& def);

// Dispatches one CLI command; throws ValidationError for input errors.
report::Report run_command(const std::string& command, const SpecFile& spec,
                           const CommandOptions& opts);

}  // namespace twoslice::cli
