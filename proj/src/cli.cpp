#include "zipper/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "zipper/error.hpp"
#include "zipper/random.hpp"

namespace zipper::cli {

  using Record = nlohmann::ordered_json;

  namespace {
    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error(ErrorKind::parse, "cannot read `" + path + "`");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    class Emitter {
     public:
      Emitter(OutputFormat format, std::ostream& out)
          : _format(format), _out(out) {}

      // Emits either the record (one JSON object per line) or the text line.
      void emit(Record const& record, std::string const& text) {
        if (_format == OutputFormat::records) {
          _out << record.dump() << "\n";
        } else if (!text.empty()) {
          _out << text << "\n";
        }
      }

     private:
      OutputFormat  _format;
      std::ostream& _out;
    };

    void need_args(RunConfig const& config, std::size_t n) {
      if (config.args.size() != n) {
        throw Error(ErrorKind::parse,
                    "`" + config.command + "` takes " + std::to_string(n)
                        + " argument(s), got "
                        + std::to_string(config.args.size()));
      }
    }

    Record witnesses_json(Violation const& v) {
      Record list = Record::array();
      for (auto const& w : v.witnesses) {
        list.push_back(w);
      }
      return list;
    }
  }  // namespace

  GroupPtr load_structure(RunConfig const& config) {
    if (config.hstruct == "trivial") {
      return SelfSimilarGroup::trivial(config.alphabet);
    } else if (config.hstruct == "symmetric") {
      return SelfSimilarGroup::symmetric(config.alphabet);
    }
    return SelfSimilarGroup::make(parse_automaton(read_file(config.hstruct)));
  }

  NamedElements builtin_fixtures(GroupPtr const& group) {
    if (group->degree() != 2 || group->order() != 1) {
      return {};
    }
    // The standard generators of F, T and V in tree-pair form.
    return parse_generators(group,
                            "x0  00->0;01->10;1->11\n"
                            "x1  0->0;100->10;101->110;11->111\n"
                            "c   0->11;10->0;11->10\n"
                            "pi0 0->10;10->0;11->11\n");
  }

  CanonicalElement resolve_element(GroupPtr const&    group,
                                   RunConfig const&   config,
                                   std::string const& arg) {
    if (!config.gens.empty()) {
      for (auto& [name, g] : parse_generators(group, read_file(config.gens))) {
        if (name == arg) {
          return g;
        }
      }
    }
    for (auto& [name, g] : builtin_fixtures(group)) {
      if (name == arg) {
        return g;
      }
    }
    return parse_element(group, arg);
  }

  namespace {
    int run_command(RunConfig const& config, Emitter& emit) {
      std::string const& cmd = config.command;

      if (cmd == "hstruct") {
        if (config.args.empty() || config.args[0] != "validate"
            || config.args.size() > 2) {
          throw Error(ErrorKind::parse,
                      "usage: hstruct validate [PATH|trivial|symmetric]");
        }
        RunConfig source = config;
        if (config.args.size() == 2) {
          source.hstruct = config.args[1];
        }
        GroupTables tables;
        if (source.hstruct == "trivial" || source.hstruct == "symmetric") {
          tables = load_structure(source)->tables();
        } else {
          tables = parse_automaton(read_file(source.hstruct));
        }
        auto const violations = validate(tables);
        for (auto const& v : violations) {
          emit.emit(Record{{"command", cmd},
                           {"axiom", v.axiom},
                           {"witnesses", witnesses_json(v)}},
                    "violation: " + to_string(v));
        }
        emit.emit(Record{{"command", cmd},
                         {"alphabet", tables.alphabet_size},
                         {"elements", tables.order},
                         {"violations", violations.size()}},
                  violations.empty() ? "ok" : "");
        return violations.empty() ? exit_ok : exit_property_failure;
      }

      auto const group    = load_structure(config);
      auto const alphabet = group->alphabet();
      auto       element  = [&](std::size_t i) {
        return resolve_element(group, config, config.args.at(i));
      };

      if (cmd == "canon") {
        need_args(config, 1);
        auto const g = format_element(element(0));
        emit.emit(Record{{"command", cmd}, {"element", g}}, g);
      } else if (cmd == "compose") {
        need_args(config, 2);
        auto const g = element(0), h = element(1);
        auto const r = format_element(compose(g, h));
        emit.emit(Record{{"command", cmd},
                         {"left", format_element(g)},
                         {"right", format_element(h)},
                         {"result", r}},
                  r);
      } else if (cmd == "inverse") {
        need_args(config, 1);
        auto const g = element(0);
        auto const r = format_element(invert(g));
        emit.emit(Record{{"command", cmd},
                         {"element", format_element(g)},
                         {"result", r}},
                  r);
      } else if (cmd == "apply") {
        need_args(config, 2);
        auto const g = element(0);
        auto const x = parse_point(alphabet, config.args[1]);
        auto const r = format_point(alphabet, apply(g, x));
        emit.emit(Record{{"command", cmd},
                         {"element", format_element(g)},
                         {"point", format_point(alphabet, x)},
                         {"result", r}},
                  r);
      } else if (cmd == "maxpart") {
        need_args(config, 1);
        auto const g     = element(0);
        Record     words = Record::array();
        std::string text;
        for (auto const& w : max_partition(g)) {
          words.push_back(format_word(alphabet, w));
          text += (text.empty() ? "" : " ") + format_word(alphabet, w);
        }
        emit.emit(Record{{"command", cmd},
                         {"element", format_element(g)},
                         {"partition", words},
                         {"size", words.size()}},
                  text);
      } else if (cmd == "member") {
        need_args(config, 1);
        auto const g = element(0);
        bool       member;
        if (config.group == "F") {
          member = is_in_F(g);
        } else if (config.group == "T") {
          member = is_in_T(g);
        } else {
          throw Error(ErrorKind::parse, "--group must be F or T");
        }
        emit.emit(Record{{"command", cmd},
                         {"group", config.group},
                         {"element", format_element(g)},
                         {"member", member}},
                  member ? "true" : "false");
      } else if (cmd == "zipper-length") {
        need_args(config, 1);
        auto const        g = element(0);
        std::size_t const n = zipper_length(g);
        emit.emit(Record{{"command", cmd},
                         {"element", format_element(g)},
                         {"length", n},
                         {"leaves", g.rows().size()}},
                  std::to_string(n));
      } else if (cmd == "symdiff") {
        need_args(config, 1);
        auto const  g       = element(0);
        auto const  support = symdiff(g);
        bool        verified = true;
        std::size_t positive = 0;
        for (auto const& [e, sign] : support) {
          bool const in_z  = z_member(e);
          bool const in_gz = gz_member(g, e);
          verified = verified && (sign > 0 ? in_gz && !in_z : in_z && !in_gz);
          positive += sign > 0 ? 1 : 0;
          emit.emit(Record{{"command", cmd},
                           {"sign", sign},
                           {"class", format_eclass(e)}},
                    (sign > 0 ? "+1 " : "-1 ") + format_eclass(e));
        }
        emit.emit(Record{{"command", cmd},
                         {"element", format_element(g)},
                         {"size", support.size()},
                         {"positive", positive},
                         {"negative", support.size() - positive},
                         {"verified", verified}},
                  "size " + std::to_string(support.size())
                      + (verified ? " (verified)" : " (MEMBERSHIP MISMATCH)"));
        return verified ? exit_ok : exit_property_failure;
      } else if (cmd == "cocycle-check") {
        need_args(config, 2);
        auto const        g1 = element(0), g2 = element(1);
        std::size_t const defect = cocycle_identity_defect(g1, g2);
        emit.emit(Record{{"command", cmd},
                         {"g1", format_element(g1)},
                         {"g2", format_element(g2)},
                         {"defect", defect}},
                  "defect " + std::to_string(defect));
        return defect == 0 ? exit_ok : exit_property_failure;
      } else if (cmd == "walls") {
        need_args(config, 2);
        auto const        g1 = element(0), g2 = element(1);
        std::size_t const n  = wall_separation(g1, g2);
        bool              ok = true;
        if (config.list) {
          WallSystem  walls(group);
          auto const  p    = walls.add_point(g1);
          auto const  q    = walls.add_point(g2);
          auto const  list = walls.separating_walls(p, q);
          ok               = list.size() == n;
          for (auto const& x : list) {
            emit.emit(Record{{"command", cmd},
                             {"wall", format_eclass(x)},
                             {"g1_side", walls.in_positive_half(x, p) ? "+" : "-"}},
                      "wall " + format_eclass(x));
          }
        }
        emit.emit(Record{{"command", cmd},
                         {"g1", format_element(g1)},
                         {"g2", format_element(g2)},
                         {"separation", n}},
                  std::to_string(n));
        return ok ? exit_ok : exit_property_failure;
      } else if (cmd == "audit") {
        need_args(config, 0);
        if (config.gens.empty()) {
          throw Error(ErrorKind::parse, "audit needs --gens FILE");
        }
        std::vector<CanonicalElement> gens;
        for (auto& [name, g] : parse_generators(group, read_file(config.gens))) {
          gens.push_back(std::move(g));
        }
        auto const report
            = properness_audit(group, gens, config.radius, config.threshold);
        for (auto const& row : report.rows) {
          emit.emit(Record{{"command", cmd},
                           {"radius", row.radius},
                           {"ball_size", row.ball_size},
                           {"count", row.count}},
                    "radius " + std::to_string(row.radius) + ": ball "
                        + std::to_string(row.ball_size) + ", count "
                        + std::to_string(row.count));
        }
        emit.emit(Record{{"command", cmd},
                         {"threshold", config.threshold},
                         {"stabilized", report.stabilized}},
                  std::string("stabilized: ")
                      + (report.stabilized ? "yes" : "no"));
      } else if (cmd == "nowalls") {
        need_args(config, 0);
        auto const report = nowalls_demo(group, config.count);
        emit.emit(Record{{"command", cmd},
                         {"f1", format_eclass(report.f1_class)},
                         {"f2", format_eclass(report.f2_class)}},
                  "[f1,B1] = " + format_eclass(report.f1_class)
                      + "  [f2,B2] = " + format_eclass(report.f2_class));
        for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
          auto const& g = report.witnesses[i];
          emit.emit(Record{{"command", cmd},
                           {"witness", format_element(g)},
                           {"separated", static_cast<bool>(report.checks[i])}},
                    "witness " + format_element(g)
                        + (report.checks[i] ? "  ok" : "  FAILED"));
        }
        std::string const vz
            = report.vz_witness ? format_element(*report.vz_witness) : "";
        emit.emit(Record{{"command", cmd},
                         {"vz_witness", vz},
                         {"ok", report.all_ok()}},
                  "[f2,B2] in hZ for h = " + (vz.empty() ? "(none)" : vz));
        return report.all_ok() ? exit_ok : exit_property_failure;
      } else if (cmd == "walls2zipper") {
        need_args(config, 1);
        auto const report
            = walls_to_zipper(parse_wall_space(read_file(config.args[0])));
        for (auto const& c : report.checks) {
          Record r{{"command", cmd},
                   {"element", c.name},
                   {"image", c.image},
                   {"symdiff", c.symdiff_size},
                   {"separating_walls", c.separating_walls}};
          r["equivariant"] = c.equivariant ? Record(*c.equivariant) : Record();
          r["ok"]          = c.ok;
          emit.emit(r,
                    c.name + ": |Z_gp symdiff Z_p| = "
                        + std::to_string(c.symdiff_size) + ", 2 d(p,gp) = "
                        + std::to_string(2 * c.separating_walls)
                        + (c.ok ? "  ok" : "  FAILED"));
        }
        emit.emit(Record{{"command", cmd},
                         {"half_spaces", report.half_spaces},
                         {"zipper", report.zipper_size},
                         {"ok", report.all_ok()}},
                  report.all_ok() ? "all checks pass" : "some checks FAILED");
        return report.all_ok() ? exit_ok : exit_property_failure;
      } else if (cmd == "random") {
        need_args(config, 0);
        Rng                  rng(config.seed);
        RandomElementOptions options;
        options.max_depth = config.depth;
        for (std::size_t i = 0; i < config.count; ++i) {
          auto const g = format_element(random_element(rng, group, options));
          emit.emit(Record{{"command", cmd}, {"element", g}}, g);
        }
      } else {
        throw Error(ErrorKind::parse, "unknown command `" + cmd + "`");
      }
      return exit_ok;
    }
  }  // namespace

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    Emitter emit(config.format, out);
    try {
      return run_command(config, emit);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_domain_error;
    }
  }

}  // namespace zipper::cli
