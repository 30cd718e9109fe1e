#include "zipper/zipper.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "zipper/error.hpp"

namespace zipper {

  ////////////////////////////////////////////////////////////////////////
  // Classes in E
  ////////////////////////////////////////////////////////////////////////

  EClassRep canonical_from_domain_x(SimTable const& f) {
    if (!f.domain().empty()) {
      throw Error(ErrorKind::invalid_class,
                  "class representatives are defined on the whole space");
    }
    SimTable const as_embedding(
        f.group(), TableKind::embedding, Word(), f.rows());
    auto const& h       = f.structure();
    auto const  reduced = reduce(as_embedding);
    auto        best    = reduced;
    for (ElementId s = 1; s < h.order(); ++s) {
      auto twisted = reduce(
          compose_tables(reduced.table(), SimTable::global(f.group(), s)));
      if (twisted < best) {
        best = std::move(twisted);
      }
    }
    return EClassRep(best.table());
  }

  EClassRep canonical_eclass(SimTable const& f, Word const& ball) {
    if (f.domain() != ball) {
      throw Error(ErrorKind::invalid_class,
                  "the table is not defined on the given ball");
    }
    if (auto v = validate_table(f); !v.empty()) {
      throw Error(ErrorKind::invalid_class,
                  "not a local similarity embedding: " + v.front().kind);
    }
    // Precompose with the canonical similarity X -> ball, x -> ball.x.
    std::vector<Row> rows;
    rows.reserve(f.size());
    for (auto const& r : f.rows()) {
      rows.push_back({r.source.suffix_from(ball.size()), r.target, r.germ});
    }
    return canonical_from_domain_x(
        SimTable(f.group(), TableKind::embedding, Word(), std::move(rows)));
  }

  EClassRep ball_class(GroupPtr const& group, Word const& ball) {
    return canonical_from_domain_x(SimTable::ball_inclusion(group, ball));
  }

  EClassRep restriction_class(CanonicalElement const& g, Word const& ball) {
    return canonical_from_domain_x(
        compose_tables(g.table(), SimTable::ball_inclusion(g.group(), ball)));
  }

  bool z_member(EClassRep const& e) {
    // A reduced domain-X embedding is a single similarity onto a ball
    // exactly when it has one row.
    return e.rows().size() == 1;
  }

  EClassRep act_on_eclass(CanonicalElement const& g, EClassRep const& e) {
    return canonical_from_domain_x(compose_tables(g.table(), e.table()));
  }

  bool gz_member(CanonicalElement const& g, EClassRep const& e) {
    return z_member(act_on_eclass(invert(g), e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Symmetric difference and cocycle
  ////////////////////////////////////////////////////////////////////////

  SignedSupport symdiff(CanonicalElement const& g) {
    SignedSupport out;
    // Z \ gZ: balls properly containing maximum regions of g^-1, which are
    // the target balls of g.
    PrefixCode const inverse_partition(g.table().targets());
    for (auto const& ball : proper_prefixes(inverse_partition)) {
      out.emplace(ball_class(g.group(), ball), -1);
    }
    // gZ \ Z: images g[incl_B, B] of balls properly containing maximum
    // regions of g.
    for (auto const& ball : proper_prefixes(max_partition(g))) {
      out.emplace(restriction_class(g, ball), +1);
    }
    return out;
  }

  std::size_t zipper_length(CanonicalElement const& g) {
    return proper_prefix_count(max_partition(g))
           + proper_prefix_count(PrefixCode(g.table().targets()));
  }

  std::size_t cocycle_identity_defect(CanonicalElement const& g1,
                                      CanonicalElement const& g2) {
    auto const pi12    = cocycle(compose(g1, g2));
    auto const pi1     = cocycle(g1);
    auto const pi2     = cocycle(g2);
    auto const g1_inv  = invert(g1);
    auto       value   = [](SignedSupport const& f, EClassRep const& e) {
      auto it = f.find(e);
      return it == f.end() ? 0 : it->second;
    };
    std::set<EClassRep> candidates;
    for (auto const& [e, s] : pi12) {
      candidates.insert(e);
    }
    for (auto const& [e, s] : pi1) {
      candidates.insert(e);
    }
    for (auto const& [e, s] : pi2) {
      candidates.insert(act_on_eclass(g1, e));
    }
    std::size_t defect = 0;
    for (auto const& e : candidates) {
      // rho(g1) pi(g2) evaluated as e -> pi(g2)(g1^-1 e).
      int const rhs = value(pi2, act_on_eclass(g1_inv, e)) + value(pi1, e);
      if (value(pi12, e) != rhs) {
        ++defect;
      }
    }
    return defect;
  }

  CanonicalElement coset_representative(CanonicalElement const& g) {
    auto const& h    = g.table().structure();
    auto        best = g;
    for (ElementId s = 1; s < h.order(); ++s) {
      auto candidate
          = reduce(compose_tables(g.table(), SimTable::global(g.group(), s)));
      if (candidate < best) {
        best = std::move(candidate);
      }
    }
    return best;
  }

  std::size_t wall_separation(CanonicalElement const& g1,
                              CanonicalElement const& g2) {
    return zipper_length(compose(invert(g1), g2));
  }

  ////////////////////////////////////////////////////////////////////////
  // WallSystem
  ////////////////////////////////////////////////////////////////////////

  WallSystem::WallSystem(GroupPtr group) : _group(std::move(group)) {}

  std::size_t WallSystem::add_point(CanonicalElement const& g) {
    if (!same_structure(g.group(), _group)) {
      throw Error(ErrorKind::incompatible_elements,
                  "point over a different structure");
    }
    auto rep = coset_representative(g);
    auto it  = std::find(_points.begin(), _points.end(), rep);
    if (it != _points.end()) {
      return static_cast<std::size_t>(it - _points.begin());
    }
    _points.push_back(std::move(rep));
    return _points.size() - 1;
  }

  bool WallSystem::in_positive_half(EClassRep const& x,
                                    std::size_t      point) const {
    return gz_member(_points.at(point), x);
  }

  bool WallSystem::is_wall(EClassRep const& x) const {
    bool plus = false, minus = false;
    for (std::size_t i = 0; i < _points.size() && !(plus && minus); ++i) {
      (in_positive_half(x, i) ? plus : minus) = true;
    }
    return plus && minus;
  }

  std::vector<EClassRep> WallSystem::separating_walls(std::size_t p,
                                                      std::size_t q) const {
    auto const& gp = _points.at(p);
    auto const& gq = _points.at(q);
    // g_p Z symdiff g_q Z = g_p (Z symdiff g_p^-1 g_q Z).
    std::set<EClassRep> walls;
    for (auto const& [e, sign] : symdiff(compose(invert(gp), gq))) {
      auto x = act_on_eclass(gp, e);
      if (in_positive_half(x, p) == in_positive_half(x, q)) {
        throw Error(ErrorKind::invalid_class,
                    "class in the symmetric difference does not separate");
      }
      walls.insert(std::move(x));
    }
    return {walls.begin(), walls.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Spaces with walls
  ////////////////////////////////////////////////////////////////////////

  bool ZipperReport::all_ok() const {
    return std::all_of(
        checks.begin(), checks.end(), [](auto const& c) { return c.ok; });
  }

  ZipperReport walls_to_zipper(WallSpace const& space) {
    std::set<long long> const points(space.points.begin(), space.points.end());
    if (points.size() != space.points.size()) {
      throw Error(ErrorKind::invalid_wall, "repeated point label");
    }
    if (!points.contains(space.basepoint)) {
      throw Error(ErrorKind::invalid_wall, "basepoint is not a point");
    }
    // Half-spaces: 2i is the listed side of wall i, 2i + 1 its complement.
    std::vector<std::set<long long>> half;
    for (auto const& wall : space.walls) {
      std::set<long long> side(wall.begin(), wall.end());
      for (auto x : side) {
        if (!points.contains(x)) {
          throw Error(ErrorKind::invalid_wall,
                      "wall mentions unknown point " + std::to_string(x));
        }
      }
      if (side.empty() || side.size() == points.size()) {
        throw Error(ErrorKind::invalid_wall,
                    "a wall needs two nonempty half-spaces");
      }
      std::set<long long> other;
      std::set_difference(points.begin(),
                          points.end(),
                          side.begin(),
                          side.end(),
                          std::inserter(other, other.end()));
      half.push_back(std::move(side));
      half.push_back(std::move(other));
    }

    ZipperReport report;
    report.half_spaces = half.size();
    long long const p  = space.basepoint;
    for (auto const& h : half) {
      report.zipper_size += h.contains(p) ? 1 : 0;
    }

    // A wall up to the order of its sides: the side holding the least point.
    auto wall_key = [&](std::set<long long> const& side) {
      if (side.contains(*points.begin())) {
        return side;
      }
      std::set<long long> other;
      std::set_difference(points.begin(),
                          points.end(),
                          side.begin(),
                          side.end(),
                          std::inserter(other, other.end()));
      return other;
    };
    std::multiset<std::set<long long>> wall_multiset;
    for (std::size_t i = 0; i < half.size(); i += 2) {
      wall_multiset.insert(wall_key(half[i]));
    }

    for (auto const& [name, map] : space.elements) {
      auto it = map.find(p);
      if (it == map.end()) {
        throw Error(ErrorKind::invalid_wall,
                    "element " + name + " does not move the basepoint");
      }
      ZipperCheck check;
      check.name        = name;
      check.image       = it->second;
      long long const q = it->second;
      if (!points.contains(q)) {
        throw Error(ErrorKind::invalid_wall,
                    "element " + name + " leaves the point set");
      }
      for (auto const& h : half) {
        check.symdiff_size += h.contains(p) != h.contains(q) ? 1 : 0;
      }
      for (std::size_t i = 0; i < half.size(); i += 2) {
        check.separating_walls += half[i].contains(p) != half[i].contains(q);
      }

      bool total = map.size() == points.size();
      std::set<long long> image;
      for (auto const& [from, to] : map) {
        total = total && points.contains(from) && points.contains(to);
        image.insert(to);
      }
      if (total && image.size() == points.size()) {
        auto move = [&](std::set<long long> const& side) {
          std::set<long long> out;
          for (auto x : side) {
            out.insert(map.at(x));
          }
          return out;
        };
        std::multiset<std::set<long long>> moved_walls;
        std::multiset<std::set<long long>> moved_zipper, target_zipper;
        for (std::size_t i = 0; i < half.size(); ++i) {
          auto const moved = move(half[i]);
          if (i % 2 == 0) {
            moved_walls.insert(wall_key(moved));
          }
          if (half[i].contains(p)) {
            moved_zipper.insert(moved);
          }
          if (half[i].contains(q)) {
            target_zipper.insert(half[i]);
          }
        }
        check.equivariant
            = moved_walls == wall_multiset && moved_zipper == target_zipper;
      }
      check.ok = check.symdiff_size == 2 * check.separating_walls
                 && check.equivariant.value_or(true);
      report.checks.push_back(std::move(check));
    }
    return report;
  }

  WallSpace integer_line_model(long long k, long long max_shift) {
    WallSpace space;
    for (long long n = -k; n <= k; ++n) {
      space.points.push_back(n);
    }
    for (long long i = -k; i < k; ++i) {
      std::vector<long long> side;
      for (long long n = -k; n <= i; ++n) {
        side.push_back(n);
      }
      space.walls.push_back(std::move(side));
    }
    space.basepoint = 0;
    for (long long g = -max_shift; g <= max_shift; ++g) {
      std::map<long long, long long> map;
      for (long long n = -k; n <= k; ++n) {
        if (n + g >= -k && n + g <= k) {
          map[n] = n + g;
        }
      }
      space.elements.emplace_back("t" + std::to_string(g), std::move(map));
    }
    return space;
  }

  WallSpace parse_wall_space(std::string const& text) {
    WallSpace          space;
    bool               have_points = false, have_base = false;
    std::istringstream lines(text);
    std::string        line;
    std::size_t        lineno = 0;
    auto               fail   = [&](std::string const& msg) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(lineno) + ": " + msg);
    };
    auto integer = [&](std::string const& s) {
      try {
        std::size_t used = 0;
        long long   v    = std::stoll(s, &used);
        if (used != s.size()) {
          fail("bad integer `" + s + "`");
        }
        return v;
      } catch (std::logic_error const&) {
        fail("bad integer `" + s + "`");
      }
      return 0LL;
    };
    while (std::getline(lines, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream fields(line);
      std::string        key, tok;
      if (!(fields >> key)) {
        continue;
      }
      if (key == "points") {
        while (fields >> tok) {
          space.points.push_back(integer(tok));
        }
        have_points = true;
      } else if (key == "basepoint") {
        if (!(fields >> tok)) {
          fail("missing basepoint");
        }
        space.basepoint = integer(tok);
        have_base       = true;
      } else if (key == "wall") {
        std::vector<long long> side;
        while (fields >> tok) {
          side.push_back(integer(tok));
        }
        space.walls.push_back(std::move(side));
      } else if (key == "element") {
        std::string name;
        if (!(fields >> name)) {
          fail("missing element name");
        }
        std::map<long long, long long> map;
        while (fields >> tok) {
          auto colon = tok.find(':', 1);
          if (colon == std::string::npos) {
            fail("expected from:to, got `" + tok + "`");
          }
          map[integer(tok.substr(0, colon))] = integer(tok.substr(colon + 1));
        }
        space.elements.emplace_back(std::move(name), std::move(map));
      } else {
        fail("unknown record `" + key + "`");
      }
    }
    if (!have_points || !have_base) {
      throw Error(ErrorKind::parse, "missing `points` or `basepoint` record");
    }
    return space;
  }

  ////////////////////////////////////////////////////////////////////////
  // Properness audit
  ////////////////////////////////////////////////////////////////////////

  AuditReport properness_audit(GroupPtr const&                      group,
                               std::vector<CanonicalElement> const& generators,
                               std::size_t                          radius,
                               std::size_t                          threshold) {
    std::vector<CanonicalElement> steps;
    for (auto const& g : generators) {
      if (!same_structure(g.group(), group)) {
        throw Error(ErrorKind::incompatible_elements,
                    "generator over a different structure");
      }
      for (auto const& s : {g, invert(g)}) {
        if (std::find(steps.begin(), steps.end(), s) == steps.end()) {
          steps.push_back(s);
        }
      }
    }
    std::unordered_set<CanonicalElement> seen;
    std::vector<CanonicalElement>        frontier{identity_element(group)};
    seen.insert(frontier.front());
    std::size_t count = zipper_length(frontier.front()) <= threshold ? 1 : 0;

    AuditReport report;
    for (std::size_t j = 0;; ++j) {
      report.rows.push_back({j, seen.size(), count});
      if (j == radius) {
        break;
      }
      std::vector<CanonicalElement> next;
      for (auto const& f : frontier) {
        for (auto const& s : steps) {
          auto g = compose(s, f);
          if (seen.insert(g).second) {
            if (zipper_length(g) <= threshold) {
              ++count;
            }
            next.push_back(std::move(g));
          }
        }
      }
      frontier = std::move(next);
    }
    auto const& r = report.rows;
    report.stabilized = r.size() >= 3 && r[r.size() - 1].count == r[r.size() - 2].count
                        && r[r.size() - 2].count == r[r.size() - 3].count;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // NoWalls
  ////////////////////////////////////////////////////////////////////////

  bool NoWallsReport::all_ok() const {
    return checks.size() == witnesses.size()
           && std::all_of(checks.begin(), checks.end(), [](bool b) { return b; })
           && vz_witness.has_value();
  }

  namespace {
    // Calls visit(h) on elements whose canonical source and target codes
    // have depth <= max_depth and n <= max_leaves leaves, by increasing n,
    // until visit returns true.
    template <typename Visit>
    void for_each_small_element(GroupPtr const& group,
                                std::size_t     max_depth,
                                std::size_t     max_leaves,
                                Visit&&         visit) {
      auto const  codes = complete_codes(group->alphabet(), max_depth, max_leaves);
      std::size_t const m = group->order();
      for (std::size_t n = 1; n <= max_leaves; ++n) {
        for (auto const& plus : codes) {
          if (plus.size() != n) {
            continue;
          }
          for (auto const& minus : codes) {
            if (minus.size() != n) {
              continue;
            }
            std::vector<std::size_t> bijection(n);
            std::iota(bijection.begin(), bijection.end(), 0);
            do {
              std::vector<ElementId> germs(n, 0);
              while (true) {
                std::vector<Row> rows;
                for (std::size_t i = 0; i < n; ++i) {
                  rows.push_back({plus.words()[i],
                                  minus.words()[bijection[i]],
                                  germs[i]});
                }
                auto h = reduce(SimTable(
                    group, TableKind::group_element, Word(), std::move(rows)));
                if (h.rows().size() == n && visit(h)) {
                  return;
                }
                std::size_t i = 0;
                while (i < n && ++germs[i] == m) {
                  germs[i++] = 0;
                }
                if (i == n) {
                  break;
                }
              }
            } while (std::next_permutation(bijection.begin(), bijection.end()));
          }
        }
      }
    }
  }  // namespace

  std::optional<CanonicalElement> find_gz_witness(GroupPtr const&  group,
                                                  EClassRep const& e,
                                                  std::size_t      max_depth,
                                                  std::size_t      max_leaves) {
    std::optional<CanonicalElement> found;
    for_each_small_element(
        group, max_depth, max_leaves, [&](CanonicalElement const& h) {
          if (gz_member(h, e)) {
            found = h;
            return true;
          }
          return false;
        });
    return found;
  }

  ExclusionProbe probe_exclusion(GroupPtr const&  group,
                                 EClassRep const& x,
                                 std::size_t      max_depth,
                                 std::size_t      max_leaves) {
    ExclusionProbe probe;
    for_each_small_element(
        group, max_depth, max_leaves, [&](CanonicalElement const& h) {
          auto& slot = gz_member(h, x) ? probe.inside : probe.outside;
          if (!slot) {
            slot = h;
          }
          return probe.inside && probe.outside;
        });
    return probe;
  }

  NoWallsReport nowalls_demo(GroupPtr const& group, std::size_t count) {
    if (group->degree() != 2 || group->order() != 1) {
      throw Error(ErrorKind::unsupported_structure,
                  "the NoWalls construction lives in Thompson's group V");
    }
    Word const zero{0}, one{1};
    SimTable const f2(group,
                      TableKind::embedding,
                      one,
                      {{Word{1, 0}, Word{1, 0}, identity_id},
                       {Word{1, 1}, Word{1, 1, 1}, identity_id}});
    NoWallsReport report{
        ball_class(group, zero), canonical_eclass(f2, one), {}, {}, {}};

    std::set<CanonicalElement> seen;
    for (std::size_t depth = 0; report.witnesses.size() < count; ++depth) {
      auto const               leaves = words_of_length(group->alphabet(), depth);
      std::vector<std::size_t> perm(leaves.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Row> rows{{zero, zero, identity_id}};
        for (std::size_t i = 0; i < leaves.size(); ++i) {
          rows.push_back(
              {one.concat(leaves[i]), one.concat(leaves[perm[i]]), identity_id});
        }
        auto g = reduce(
            SimTable(group, TableKind::group_element, Word(), std::move(rows)));
        if (seen.insert(g).second) {
          report.checks.push_back(gz_member(g, report.f1_class)
                                  && !gz_member(g, report.f2_class));
          report.witnesses.push_back(std::move(g));
        }
      } while (report.witnesses.size() < count
               && std::next_permutation(perm.begin(), perm.end()));
    }
    report.vz_witness = find_gz_witness(group, report.f2_class, 3, 4);
    return report;
  }

}  // namespace zipper
