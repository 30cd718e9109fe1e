// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "zipper/literal.hpp"
#include "zipper/random.hpp"

using namespace zipper;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string summary;
    std::string failure;

    void require(bool condition, std::string const& what) {
      if (!condition && ok) {
        ok      = false;
        failure = what;
      }
    }
  };

  std::vector<std::pair<std::string, GroupPtr>> configurations() {
    return {{"d=2 trivial", SelfSimilarGroup::trivial(2)},
            {"d=2 Sigma_2", SelfSimilarGroup::symmetric(2)},
            {"d=3 trivial", SelfSimilarGroup::trivial(3)},
            {"d=3 Sigma_3", SelfSimilarGroup::symmetric(3)}};
  }

  std::string read_file(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::set<Word> as_set(PrefixCode const& c) {
    return {c.begin(), c.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Algebra suite
  ////////////////////////////////////////////////////////////////////////

  Outcome algebra_suite() {
    Outcome     out;
    std::size_t elements = 0, points = 0;
    for (auto const& [name, h] : configurations()) {
      Rng        rng(1001);
      auto const id = identity_element(h);
      auto       previous = id, before = id;
      for (int i = 0; i < 1000 && out.ok; ++i) {
        auto const t = random_table(rng, h);
        auto const g = reduce(t);
        ++elements;
        out.require(compose(g, invert(g)) == id, name + ": g g^-1 != 1");
        out.require(compose(invert(g), g) == id, name + ": g^-1 g != 1");
        out.require(compose(g, id) == g && compose(id, g) == g,
                    name + ": identity not neutral");
        out.require(compose(compose(g, previous), before)
                        == compose(g, compose(previous, before)),
                    name + ": associativity");
        out.require(invert(invert(g)) == g, name + ": invert not involutive");

        // Confluence: expand the unreduced table at random rows, reduce.
        auto expanded = t;
        auto const steps = 1 + rng() % 6;
        for (std::size_t s = 0; s < steps; ++s) {
          auto const& rows = expanded.rows();
          if (oracle::max_source_depth(expanded) > 7) {
            break;
          }
          expanded = expand_at(expanded, rows[rng() % rows.size()].source);
        }
        out.require(reduce(expanded) == g, name + ": reduce not confluent");

        auto const gp = compose(g, previous);
        for (int j = 0; j < 50; ++j) {
          auto const x = random_point(rng, h->alphabet());
          ++points;
          out.require(apply(gp, x) == apply(g, apply(previous, x)),
                      name + ": apply is not a homomorphism");
          out.require(apply(expanded, x) == apply(g, x) && apply(t, x) == apply(g, x),
                      name + ": apply changes under expand/reduce");
        }
        before   = previous;
        previous = g;
      }
    }
    out.summary = std::to_string(elements) + " elements, " + std::to_string(points)
                  + " point evaluations";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. symdiff against membership enumeration
  ////////////////////////////////////////////////////////////////////////

  Outcome symdiff_oracle() {
    Outcome     out;
    std::size_t elements = 0, classes = 0;
    for (auto const& [name, h] : configurations()) {
      Rng rng(2002);
      for (int i = 0; i < 50 && out.ok; ++i) {
        auto const g     = random_element(rng, h);
        auto const fast  = symdiff(g);
        auto const brute = oracle::brute_symdiff(g);
        ++elements;
        classes += brute.size();
        out.require(fast == brute,
                    name + ": symdiff differs from enumeration for "
                        + format_element(g));
      }
    }
    out.summary = std::to_string(elements) + " elements, " + std::to_string(classes)
                  + " signed classes matched";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Zipper length identities
  ////////////////////////////////////////////////////////////////////////

  Outcome length_identities() {
    Outcome     out;
    std::size_t checked = 0;
    auto const  v  = SelfSimilarGroup::trivial(2);
    auto const  x0 = parse_element(v, "00->0;01->10;1->11");
    // Hand count: proper prefixes of {00,01,1} and {0,10,11}.
    out.require(zipper_length(x0) == 4, "l(x0) != 4");
    out.require(oracle::brute_symdiff(x0).size() == 4, "oracle l(x0) != 4");
    for (auto const& [name, h] : configurations()) {
      Rng               rng(3003);
      std::size_t const d = h->degree();
      for (int i = 0; i < 500 && out.ok; ++i) {
        auto const        g = random_element(rng, h);
        auto const        k = random_element(rng, h);
        std::size_t const l = zipper_length(g);
        std::size_t const n = max_partition(g).size();
        ++checked;
        out.require(l == zipper_length(invert(g)), name + ": l(g) != l(g^-1)");
        out.require(zipper_length(compose(g, k)) <= l + zipper_length(k),
                    name + ": subadditivity");
        out.require(2 * (n - 1) % (d - 1) == 0 && l == 2 * (n - 1) / (d - 1),
                    name + ": closed form");
        out.require(l == symdiff(g).size(), name + ": l != |symdiff|");
      }
    }
    out.summary = "l(x0) = 4; " + std::to_string(checked) + " elements";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Cocycle identity
  ////////////////////////////////////////////////////////////////////////

  Outcome cocycle_identity() {
    Outcome     out;
    std::size_t pairs = 0, defect = 0;
    for (auto const& [name, h] : configurations()) {
      Rng rng(4004);
      for (int i = 0; i < 500; ++i) {
        auto const g1 = random_element(rng, h);
        auto const g2 = random_element(rng, h);
        ++pairs;
        std::size_t const d = cocycle_identity_defect(g1, g2);
        defect += d;
        out.require(d == 0, name + ": nonzero defect");
      }
    }
    out.summary = std::to_string(pairs) + " pairs, total defect " + std::to_string(defect);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Finiteness lemmas
  ////////////////////////////////////////////////////////////////////////

  // An element up to equality of maps: images of all words one level below
  // the deepest row, plus one more level so germs are pinned down.
  using Fingerprint = std::vector<Word>;

  struct Semantic {
    std::set<Word> plus, minus;
  };

  // All tables with the given source and target codes.
  void for_each_table(GroupPtr const&                     h,
                      PrefixCode const&                   p,
                      PrefixCode const&                   q,
                      std::function<void(SimTable const&)> visit) {
    std::size_t const n = p.size();
    if (q.size() != n) {
      return;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<ElementId> germs(n, 0);
      while (true) {
        std::vector<Row> rows;
        for (std::size_t i = 0; i < n; ++i) {
          rows.push_back({p.words()[i], q.words()[perm[i]], germs[i]});
        }
        visit(SimTable(h, TableKind::group_element, Word(), rows));
        std::size_t i = 0;
        while (i < n && ++germs[i] == h->order()) {
          germs[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Semantic semantic_partitions(SimTable const& t, std::size_t depth) {
    auto const& h = t.structure().tables();
    return {oracle::max_partition(oracle::evaluator(t), h, depth, depth + 2),
            oracle::max_partition(oracle::evaluator(oracle::swap_columns(t)),
                                  h,
                                  depth,
                                  depth + 2)};
  }

  bool coarser(std::set<Word> const& partition, PrefixCode const& fine) {
    return std::all_of(fine.begin(), fine.end(), [&](Word const& w) {
      return std::any_of(partition.begin(), partition.end(), [&](Word const& b) {
        return b.is_prefix_of(w);
      });
    });
  }

  Outcome finiteness() {
    Outcome     out;
    std::size_t gamma_sets = 0, ref_sets = 0, members = 0;
    for (auto const& [name, h] : configurations()) {
      auto const  alphabet = h->alphabet();
      std::size_t const depth = 2;
      auto const  codes    = complete_codes(alphabet, depth, 3);
      std::size_t const fp_depth = depth + 2;

      // Brute force: every table on codes with <= 3 leaves, grouped by the
      // map it defines and its semantic maximum partitions.
      std::map<std::pair<std::set<Word>, std::set<Word>>, std::set<Fingerprint>> brute;
      for (auto const& p : codes) {
        for (auto const& q : codes) {
          for_each_table(h, p, q, [&](SimTable const& t) {
            auto const s = semantic_partitions(t, depth);
            brute[{s.plus, s.minus}].insert(oracle::fingerprint(t, fp_depth));
          });
        }
      }
      for (auto const& p : codes) {
        for (auto const& q : codes) {
          auto const            gamma = enumerate_gamma(h, p, q);
          std::set<Fingerprint> fast;
          for (auto const& g : gamma) {
            fast.insert(oracle::fingerprint(g.table(), fp_depth));
          }
          ++gamma_sets;
          members += gamma.size();
          auto const it = brute.find({as_set(p), as_set(q)});
          auto const expected = it == brute.end() ? std::set<Fingerprint>() : it->second;
          out.require(fast.size() == gamma.size() && fast == expected,
                      name + ": Gamma mismatch");
        }
      }
    }

    // Gamma_ref for codes of depth <= 3, against a filter over all tables
    // whose codes are coarsenings.
    for (auto const& [name, h] : configurations()) {
      if (h->degree() != 2) {
        continue;
      }
      std::size_t const max_leaves = h->order() == 1 ? 5 : 4;
      auto const        alphabet   = h->alphabet();
      auto const        codes      = complete_codes(alphabet, 3, max_leaves);
      for (auto const& p : codes) {
        for (auto const& q : codes) {
          if (p.size() != q.size() || !out.ok) {
            continue;
          }
          std::set<Fingerprint> expected;
          for (auto const& pp : coarsenings(alphabet, p)) {
            for (auto const& qq : coarsenings(alphabet, q)) {
              for_each_table(h, pp, qq, [&](SimTable const& t) {
                auto const s = semantic_partitions(t, 3);
                if (coarser(s.plus, p) && coarser(s.minus, q)) {
                  expected.insert(oracle::fingerprint(t, 5));
                }
              });
            }
          }
          auto const            ref = enumerate_gamma_ref(h, p, q);
          std::set<Fingerprint> fast;
          for (auto const& g : ref) {
            fast.insert(oracle::fingerprint(g.table(), 5));
          }
          ++ref_sets;
          out.require(fast.size() == ref.size() && fast == expected,
                      name + ": Gamma_ref mismatch");
        }
      }
    }
    out.summary = std::to_string(gamma_sets) + " Gamma sets (" + std::to_string(members)
                  + " members), " + std::to_string(ref_sets) + " Gamma_ref sets";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Properness audit
  ////////////////////////////////////////////////////////////////////////

  Outcome audit() {
    Outcome    out;
    auto const v = SelfSimilarGroup::trivial(2);
    std::vector<CanonicalElement> gens;
    for (auto& [name, g] :
         parse_generators(v, read_file(ZIPPER_FIXTURES_DIR "/v.gens"))) {
      gens.push_back(g);
    }
    out.require(gens.size() == 4, "v.gens should list four generators");
    auto const r = properness_audit(v, gens, 6, 4);
    out.require(r.rows.size() == 7, "radius rows");
    std::string counts;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      counts += (i ? "," : "") + std::to_string(r.rows[i].count);
      if (i > 0) {
        out.require(r.rows[i].count >= r.rows[i - 1].count, "count decreased");
      }
    }
    out.require(r.rows[4].count == r.rows[5].count && r.rows[5].count == r.rows[6].count,
                "count not stable over radii 4..6");
    out.require(r.stabilized, "stabilized flag");

    // The stable count is all of {l <= 4}: elements with at most 3 leaves.
    std::size_t total = 0;
    for (auto const& p : complete_codes(v->alphabet(), 2, 3)) {
      for (auto const& q : complete_codes(v->alphabet(), 2, 3)) {
        total += enumerate_gamma(v, p, q).size();
      }
    }
    out.require(r.rows[6].count == total, "stable count is not |{l <= 4}|");

    auto const zero = properness_audit(v, gens, 6, 0);
    for (auto const& row : zero.rows) {
      out.require(row.count == 1, "threshold 0 should leave only the identity");
    }
    out.summary = "counts " + counts + " of " + std::to_string(total)
                  + "; ball at radius 6: " + std::to_string(r.rows[6].ball_size);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Walls
  ////////////////////////////////////////////////////////////////////////

  Outcome walls() {
    Outcome    out;
    auto const report = walls_to_zipper(integer_line_model(10, 5));
    out.require(report.checks.size() == 11, "eleven translations");
    for (auto const& c : report.checks) {
      long long const shift = std::stoll(c.name.substr(1));
      // Walls {<= i} with 0 <= i < shift (or shift <= i < 0).
      out.require(c.separating_walls == static_cast<std::size_t>(std::llabs(shift)),
                  c.name + ": separating walls");
      out.require(c.symdiff_size == 2 * static_cast<std::size_t>(std::llabs(shift)),
                  c.name + ": |Z_gp symdiff Z_p| != 2|g|");
      out.require(c.ok, c.name + ": report");
    }
    std::size_t sampled = 0;
    for (auto const& [name, h] : configurations()) {
      Rng rng(7007);
      for (int i = 0; i < 50; ++i) {
        auto const g = random_element(rng, h);
        auto const id = identity_element(h);
        ++sampled;
        WallSystem ws(h);
        auto const p = ws.add_point(id);
        auto const q = ws.add_point(g);
        std::size_t const n = wall_separation(id, g);
        out.require(n == zipper_length(g), name + ": separation != l(g)");
        out.require(n == oracle::brute_symdiff(g).size(), name + ": oracle separation");
        out.require(ws.separating_walls(p, q).size() == n, name + ": wall listing");
      }
    }
    out.summary = "Z model |g| <= 5 exact; " + std::to_string(sampled) + " random g";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. NoWalls
  ////////////////////////////////////////////////////////////////////////

  // Whether h restricted to the ball B is x -> w.x for some w (trivial H),
  // tested on all words below B of length `len`.
  bool is_ball_similarity(oracle::Eval const& h, Word const& ball, std::size_t len) {
    std::optional<Word> w;
    for (auto const& u : words_of_length(Alphabet(2), len)) {
      auto const img = h(ball.concat(u));
      if (!img || img->size() < len) {
        return false;
      }
      Word const head = img->prefix(img->size() - len);
      if (img->suffix_from(head.size()) != u || (w && *w != head)) {
        return false;
      }
      w = head;
    }
    return true;
  }

  Outcome nowalls() {
    Outcome    out;
    auto const v = SelfSimilarGroup::trivial(2);
    auto const report = nowalls_demo(v, 12);
    out.require(report.witnesses.size() == 12, "witness count");
    std::set<CanonicalElement> const distinct(report.witnesses.begin(),
                                              report.witnesses.end());
    out.require(distinct.size() == report.witnesses.size(), "witnesses not distinct");
    out.require(report.all_ok(), "library report");

    SimTable const f2(v, TableKind::embedding, Word{1},
                      {{{1, 0}, {1, 0}, 0}, {{1, 1}, {1, 1, 1}, 0}});
    oracle::Eval const f1 = [](Word const& u) -> std::optional<Word> {
      return Word{0}.concat(u.suffix_from(1));
    };
    auto const after = [](SimTable const& g, oracle::Eval const& f) {
      return oracle::Eval([g, f](Word const& u) -> std::optional<Word> {
        auto const a = f(u);
        return a ? oracle::eval(g, *a) : std::nullopt;
      });
    };
    for (auto const& g : report.witnesses) {
      auto const inverse = oracle::swap_columns(g.table());
      // g is a local isometry equal to the identity on the ball 0.
      bool fixes = true;
      for (auto const& u : words_of_length(Alphabet(2), 6)) {
        fixes = fixes && oracle::eval(g.table(), Word{0}.concat(u)) == Word{0}.concat(u);
      }
      out.require(fixes, "witness does not fix the ball 0");
      out.require(is_ball_similarity(after(inverse, f1), Word{0}, 7),
                  "[f1,B1] not in gZ for " + format_element(g));
      out.require(!is_ball_similarity(after(inverse, oracle::evaluator(f2)), Word{1}, 7),
                  "[f2,B2] in gZ for " + format_element(g));
    }
    out.require(report.vz_witness.has_value(), "no h with [f2,B2] in hZ");
    if (report.vz_witness) {
      auto const inverse = oracle::swap_columns(report.vz_witness->table());
      out.require(is_ball_similarity(after(inverse, oracle::evaluator(f2)), Word{1}, 7),
                  "oracle rejects the VZ witness");
    }
    out.summary = std::to_string(report.witnesses.size()) + " witnesses; h = "
                  + (report.vz_witness ? format_element(*report.vz_witness) : "-");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Structure validation
  ////////////////////////////////////////////////////////////////////////

  Outcome structures() {
    Outcome out;
    for (std::size_t d : {2, 3, 4}) {
      out.require(validate(SelfSimilarGroup::symmetric(d)->tables()).empty(),
                  "symmetric(" + std::to_string(d) + ") rejected");
    }
    std::set<std::string> const known{"range", "group-identity", "group-inverse",
                                      "associativity", "action-identity",
                                      "restriction-identity", "action-permutation",
                                      "action-homomorphism", "restriction-cocycle",
                                      "faithfulness"};
    auto const base = SelfSimilarGroup::symmetric(2)->tables();
    Rng        rng(9009);
    std::set<std::pair<int, std::size_t>> distinct;
    std::map<std::string, std::size_t>    axioms;
    for (int i = 0; i < 50; ++i) {
      auto              t     = base;
      int const         which = static_cast<int>(rng() % 2);
      std::size_t const entry = rng() % t.act.size();
      if (which == 0) {
        t.act[entry] = static_cast<Letter>(1 - t.act[entry]);
      } else {
        t.res[entry] = 1 - t.res[entry];
      }
      distinct.insert({which, entry});
      auto const violations = validate(t);
      out.require(!violations.empty(), "mutation accepted");
      for (auto const& v : violations) {
        out.require(known.contains(v.axiom), "unnamed axiom " + v.axiom);
        ++axioms[v.axiom];
      }
    }
    std::string names;
    for (auto const& [axiom, n] : axioms) {
      names += (names.empty() ? "" : ", ") + axiom;
    }
    out.summary = "50 mutations (" + std::to_string(distinct.size())
                  + " distinct) rejected: " + names;
    return out;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"algebra suite", algebra_suite},
      {"symdiff oracle equivalence", symdiff_oracle},
      {"zipper length identities", length_identities},
      {"cocycle identity", cocycle_identity},
      {"finiteness of Gamma and Gamma_ref", finiteness},
      {"properness audit", audit},
      {"walls round trip", walls},
      {"NoWalls reproduction", nowalls},
      {"structure validation", structures}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = criteria[i].second();
    } catch (std::exception const& e) {
      out.ok      = false;
      out.failure = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    all = all && out.ok;
    std::printf("%s %zu %s: %s (%.1fs)\n",
                out.ok ? "PASS" : "FAIL",
                i + 1,
                criteria[i].first.c_str(),
                out.ok ? out.summary.c_str() : out.failure.c_str(),
                seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
