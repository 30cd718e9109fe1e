#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zipper/literal.hpp"

namespace zipper::cli {

  enum class OutputFormat { text, records };

  enum ExitStatus : int {
    exit_ok               = 0,
    exit_domain_error     = 1,
    exit_property_failure = 2,
  };

  struct RunConfig {
    std::size_t   alphabet = 2;
    // A path to an automaton file, or one of the builtins trivial|symmetric.
    std::string   hstruct = "trivial";
    std::uint64_t seed    = 0;
    OutputFormat  format  = OutputFormat::text;

    std::string              command;
    std::vector<std::string> args;

    // Command options.
    bool        list = false;
    std::string gens;
    std::size_t radius    = 0;
    std::size_t threshold = 0;
    std::size_t count     = 1;
    std::size_t depth     = 5;
    std::string group     = "F";
  };

  // Builds the structure named by config.hstruct. Throws zipper::Error.
  GroupPtr load_structure(RunConfig const& config);

  // x0, x1 (F), c (T) and pi0 (V) for d = 2 with trivial H.
  NamedElements builtin_fixtures(GroupPtr const& group);

  // An element argument: a literal, "id", a name from the --gens file, or
  // a builtin fixture name when the structure is Thompson's V.
  CanonicalElement resolve_element(GroupPtr const&  group,
                                   RunConfig const& config,
                                   std::string const& arg);

  // Runs one command. Returns 0 on success, 1 on domain errors (diagnostic
  // on err), 2 when a property check fails.
  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

}  // namespace zipper::cli
