#include <iostream>

#include <CLI11.hpp>

#include "zipper/cli.hpp"

namespace {
  using zipper::cli::RunConfig;

  CLI::App* add(CLI::App&          app,
                RunConfig&         config,
                std::string const& name,
                std::string const& description,
                std::size_t        arity) {
    auto* sub = app.add_subcommand(name, description);
    if (arity > 0) {
      sub->add_option("args", config.args, "element literals or names")
          ->expected(static_cast<int>(arity))
          ->required();
    }
    sub->callback([&config, name] { config.command = name; });
    return sub;
  }
}  // namespace

int main(int argc, char** argv) {
  RunConfig   config;
  std::string format = "text";

  CLI::App app{"Zipper actions of Thompson-like groups V_d(H)"};
  app.require_subcommand(1);
  app.add_option("--alphabet", config.alphabet, "alphabet size d")
      ->check(CLI::Range(2, 256));
  app.add_option("--hstruct",
                 config.hstruct,
                 "automaton file, or builtin trivial|symmetric");
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--format", format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--gens", config.gens, "generator file providing names");

  auto* hstruct = app.add_subcommand("hstruct", "self-similar group tools");
  hstruct->add_option("args", config.args, "validate [PATH|trivial|symmetric]")
      ->required();
  hstruct->callback([&] { config.command = "hstruct"; });

  add(app, config, "canon", "canonical form of an element", 1);
  add(app, config, "compose", "g after h", 2);
  add(app, config, "inverse", "inverse element", 1);
  add(app, config, "apply", "apply an element to a point prefix(period)", 2);
  add(app, config, "maxpart", "maximum partition", 1);
  add(app, config, "member", "membership in F or T", 1)
      ->add_option("--group", config.group, "F|T")
      ->check(CLI::IsMember({"F", "T"}));
  add(app, config, "zipper-length", "|gZ symdiff Z|", 1);
  add(app, config, "symdiff", "signed classes of gZ symdiff Z", 1);
  add(app, config, "cocycle-check", "defect of the 1-cocycle identity", 2);
  add(app, config, "walls", "walls separating g1 Z and g2 Z", 2)
      ->add_flag("--list", config.list, "list the separating walls");
  auto* audit = add(app, config, "audit", "Cayley-ball properness audit", 0);
  audit->add_option("--gens", config.gens, "generator file")->required();
  audit->add_option("--radius", config.radius, "Cayley radius")->required();
  audit->add_option("--threshold", config.threshold, "zipper length bound")
      ->required();
  add(app, config, "nowalls", "classes separated by infinitely many gZ", 0)
      ->add_option("--count", config.count, "number of witnesses");
  add(app, config, "walls2zipper", "zipper action from a space with walls", 1);
  auto* random = add(app, config, "random", "random canonical elements", 0);
  random->add_option("--count", config.count, "how many");
  random->add_option("--depth", config.depth, "maximum leaf depth");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : zipper::cli::exit_domain_error;
  }
  config.format = format == "records" ? zipper::cli::OutputFormat::records
                                      : zipper::cli::OutputFormat::text;
  return zipper::cli::run(config, std::cout, std::cerr);
}
