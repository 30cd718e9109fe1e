#include "zipper/self_similar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zipper/error.hpp"

namespace zipper {

  std::string to_string(Violation const& v) {
    std::ostringstream out;
    out << v.axiom;
    if (!v.detail.empty()) {
      out << " (" << v.detail << ")";
    }
    for (auto const& w : v.witnesses) {
      out << " [";
      for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i == 0 ? "" : ",") << w[i];
      }
      out << "]";
    }
    return out.str();
  }

  namespace {
    class TableView {
     public:
      explicit TableView(GroupTables const& t) : _t(t) {}
      std::size_t m() const {
        return _t.order;
      }
      std::size_t d() const {
        return _t.alphabet_size;
      }
      std::size_t mul(std::size_t i, std::size_t j) const {
        return _t.mul[i * m() + j];
      }
      std::size_t inv(std::size_t i) const {
        return _t.inv[i];
      }
      std::size_t act(std::size_t i, std::size_t a) const {
        return _t.act[i * d() + a];
      }
      std::size_t res(std::size_t i, std::size_t a) const {
        return _t.res[i * d() + a];
      }

     private:
      GroupTables const& _t;
    };

    class ViolationLog {
     public:
      void add(std::string const& axiom, std::vector<std::size_t> witness) {
        auto it = std::find_if(_list.begin(), _list.end(), [&](auto const& v) {
          return v.axiom == axiom;
        });
        if (it == _list.end()) {
          _list.push_back(Violation{axiom, {}, {}});
          it = _list.end() - 1;
        }
        it->witnesses.push_back(std::move(witness));
      }
      void note(std::string const& axiom, std::string const& detail) {
        _list.push_back(Violation{axiom, {}, detail});
      }
      bool empty() const {
        return _list.empty();
      }
      std::vector<Violation> take() {
        return std::move(_list);
      }

     private:
      std::vector<Violation> _list;
    };

    bool acts_trivially(TableView const&                 t,
                        std::size_t                      element,
                        std::size_t                      depth,
                        std::vector<std::vector<char>>& memo) {
      if (depth == 0) {
        return true;
      }
      char& cached = memo[element][depth];
      if (cached != 0) {
        return cached == 1;
      }
      bool result = true;
      for (std::size_t a = 0; a < t.d() && result; ++a) {
        result = t.act(element, a) == a
                 && acts_trivially(t, t.res(element, a), depth - 1, memo);
      }
      cached = result ? 1 : 2;
      return result;
    }
  }  // namespace

  std::vector<Violation> validate(GroupTables const& tables,
                                  std::size_t        faithful_depth) {
    std::size_t const m = tables.order;
    std::size_t const d = tables.alphabet_size;
    if (d < 2 || m < 1 || tables.mul.size() != m * m || tables.inv.size() != m
        || tables.act.size() != m * d || tables.res.size() != m * d
        || !(tables.names.empty() || tables.names.size() == m)) {
      throw Error(ErrorKind::malformed_structure,
                  "table dimensions do not match alphabet " + std::to_string(d)
                      + " and order " + std::to_string(m));
    }
    TableView const t(tables);
    ViolationLog    log;

    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (t.mul(i, j) >= m) {
          log.add("range", {i, j});
        }
      }
      if (t.inv(i) >= m) {
        log.add("range", {i});
      }
      for (std::size_t a = 0; a < d; ++a) {
        if (t.act(i, a) >= d || t.res(i, a) >= m) {
          log.add("range", {i, a});
        }
      }
    }
    if (!log.empty()) {
      return log.take();
    }

    for (std::size_t i = 0; i < m; ++i) {
      if (t.mul(0, i) != i || t.mul(i, 0) != i) {
        log.add("group-identity", {i});
      }
      if (t.mul(i, t.inv(i)) != 0 || t.mul(t.inv(i), i) != 0) {
        log.add("group-inverse", {i});
      }
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          if (t.mul(t.mul(i, j), k) != t.mul(i, t.mul(j, k))) {
            log.add("associativity", {i, j, k});
          }
        }
      }
    }

    for (std::size_t a = 0; a < d; ++a) {
      if (t.act(0, a) != a) {
        log.add("action-identity", {0, a});
      }
      if (t.res(0, a) != 0) {
        log.add("restriction-identity", {0, a});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<char> hit(d, 0);
      for (std::size_t a = 0; a < d; ++a) {
        hit[t.act(i, a)] = 1;
      }
      if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(d)) {
        log.add("action-permutation", {i});
      }
    }
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t u = 0; u < m; ++u) {
        std::size_t const su = t.mul(s, u);
        for (std::size_t a = 0; a < d; ++a) {
          std::size_t const ua = t.act(u, a);
          if (t.act(su, a) != t.act(s, ua)) {
            log.add("action-homomorphism", {s, u, a});
          }
          if (t.res(su, a) != t.mul(t.res(s, ua), t.res(u, a))) {
            log.add("restriction-cocycle", {s, u, a});
          }
        }
      }
    }
    if (!log.empty()) {
      return log.take();
    }

    std::vector<std::vector<char>> memo(m,
                                        std::vector<char>(faithful_depth + 1));
    for (std::size_t i = 1; i < m; ++i) {
      if (acts_trivially(t, i, faithful_depth, memo)) {
        log.add("faithfulness", {i});
      }
    }
    return log.take();
  }

  ////////////////////////////////////////////////////////////////////////
  // SelfSimilarGroup
  ////////////////////////////////////////////////////////////////////////

  GroupPtr SelfSimilarGroup::make(GroupTables tables,
                                  std::size_t faithful_depth) {
    auto violations = validate(tables, faithful_depth);
    if (!violations.empty()) {
      std::string msg = "self-similar group fails validation:";
      for (auto const& v : violations) {
        msg += " " + to_string(v) + ";";
      }
      throw Error(ErrorKind::malformed_structure, msg);
    }
    return GroupPtr(new SelfSimilarGroup(std::move(tables)));
  }

  GroupPtr SelfSimilarGroup::trivial(std::size_t d) {
    Alphabet const alphabet(d);
    GroupTables    t;
    t.alphabet_size = alphabet.size();
    t.order         = 1;
    t.mul           = {0};
    t.inv           = {0};
    t.res.assign(d, 0);
    for (std::size_t a = 0; a < d; ++a) {
      t.act.push_back(static_cast<Letter>(a));
    }
    t.names = {"id"};
    return make(std::move(t));
  }

  GroupPtr SelfSimilarGroup::symmetric(std::size_t d) {
    Alphabet const alphabet(d);
    if (d > 8) {
      throw Error(ErrorKind::unsupported_structure,
                  "symmetric(d) is limited to d <= 8");
    }
    std::vector<std::vector<Letter>> perms;
    std::vector<Letter>              p(d);
    std::iota(p.begin(), p.end(), Letter{0});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<Letter>, ElementId> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index[perms[i]] = static_cast<ElementId>(i);
    }
    std::size_t const m = perms.size();
    GroupTables       t;
    t.alphabet_size = d;
    t.order         = m;
    t.mul.resize(m * m);
    t.inv.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<Letter> composed(d);
        for (std::size_t a = 0; a < d; ++a) {
          composed[a] = perms[i][perms[j][a]];
        }
        t.mul[i * m + j] = index.at(composed);
      }
      std::vector<Letter> inverse(d);
      for (std::size_t a = 0; a < d; ++a) {
        inverse[perms[i][a]] = static_cast<Letter>(a);
      }
      t.inv[i] = index.at(inverse);
      for (std::size_t a = 0; a < d; ++a) {
        t.act.push_back(perms[i][a]);
        t.res.push_back(static_cast<ElementId>(i));
      }
      std::string name = "p";
      for (std::size_t a = 0; a < d; ++a) {
        name += std::to_string(perms[i][a]);
      }
      t.names.push_back(name);
    }
    return make(std::move(t));
  }

  Word SelfSimilarGroup::act_word(ElementId i, Word const& v) const {
    std::vector<Letter> out;
    out.reserve(v.size());
    for (Letter a : v) {
      out.push_back(act(i, a));
      i = res(i, a);
    }
    return Word(std::move(out));
  }

  ElementId SelfSimilarGroup::restrict(ElementId i, Word const& v) const {
    for (Letter a : v) {
      i = res(i, a);
    }
    return i;
  }

  std::string SelfSimilarGroup::name(ElementId i) const {
    if (!_tables.names.empty() && !_tables.names[i].empty()) {
      return _tables.names[i];
    }
    return std::to_string(i);
  }

  std::optional<ElementId>
  SelfSimilarGroup::find(std::string const& name) const {
    for (std::size_t i = 0; i < _tables.names.size(); ++i) {
      if (_tables.names[i] == name) {
        return static_cast<ElementId>(i);
      }
    }
    if (name == "id") {
      return identity_id;
    }
    if (!name.empty()
        && std::all_of(name.begin(), name.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      auto const i = std::stoull(name);
      if (i < order()) {
        return static_cast<ElementId>(i);
      }
    }
    return std::nullopt;
  }

  bool same_structure(GroupPtr const& a, GroupPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Automaton files
  ////////////////////////////////////////////////////////////////////////

  GroupTables parse_automaton(std::string const& text) {
    GroupTables        t;
    std::istringstream lines(text);
    std::string        line;
    std::size_t        lineno = 0;
    std::vector<char>  seen_mul, seen_inv, seen_act, seen_res;

    auto fail = [&](std::string const& msg) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(lineno) + ": " + msg);
    };
    auto need_header = [&] {
      if (t.alphabet_size == 0 || t.order == 0) {
        fail("`alphabet` and `elements` must precede table records");
      }
      if (t.mul.empty()) {
        std::size_t const m = t.order, d = t.alphabet_size;
        t.mul.assign(m * m, 0);
        t.inv.assign(m, 0);
        t.act.assign(m * d, 0);
        t.res.assign(m * d, 0);
        seen_mul.assign(m * m, 0);
        seen_inv.assign(m, 0);
        seen_act.assign(m * d, 0);
        seen_res.assign(m * d, 0);
      }
    };

    while (std::getline(lines, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream fields(line);
      std::string        key;
      if (!(fields >> key)) {
        continue;
      }
      auto number = [&]() -> std::size_t {
        long long v = -1;
        if (!(fields >> v) || v < 0) {
          fail("expected a nonnegative integer in `" + key + "` record");
        }
        return static_cast<std::size_t>(v);
      };
      auto in_range = [&](std::size_t v, std::size_t bound, char const* what) {
        if (v >= bound) {
          fail(std::string(what) + " " + std::to_string(v) + " out of range");
        }
        return v;
      };
      if (key == "alphabet") {
        t.alphabet_size = number();
        Alphabet{t.alphabet_size};
      } else if (key == "elements") {
        t.order = number();
        if (t.order == 0) {
          fail("a group has at least one element");
        }
      } else if (key == "mul") {
        need_header();
        auto i = in_range(number(), t.order, "element");
        auto j = in_range(number(), t.order, "element");
        t.mul[i * t.order + j] = static_cast<ElementId>(number());
        seen_mul[i * t.order + j] = 1;
      } else if (key == "inv") {
        need_header();
        auto i   = in_range(number(), t.order, "element");
        t.inv[i] = static_cast<ElementId>(number());
        seen_inv[i] = 1;
      } else if (key == "act") {
        need_header();
        auto i = in_range(number(), t.order, "element");
        auto a = in_range(number(), t.alphabet_size, "letter");
        t.act[i * t.alphabet_size + a] = static_cast<Letter>(
            in_range(number(), t.alphabet_size, "letter"));
        seen_act[i * t.alphabet_size + a] = 1;
      } else if (key == "res") {
        need_header();
        auto i = in_range(number(), t.order, "element");
        auto a = in_range(number(), t.alphabet_size, "letter");
        t.res[i * t.alphabet_size + a] = static_cast<ElementId>(number());
        seen_res[i * t.alphabet_size + a] = 1;
      } else if (key == "name") {
        need_header();
        auto        i = in_range(number(), t.order, "element");
        std::string name;
        if (!(fields >> name)) {
          fail("missing name");
        }
        t.names.resize(t.order);
        t.names[i] = name;
      } else {
        fail("unknown record `" + key + "`");
      }
      std::string extra;
      if (fields >> extra) {
        fail("trailing field `" + extra + "`");
      }
    }
    if (t.alphabet_size == 0 || t.order == 0) {
      throw Error(ErrorKind::malformed_structure,
                  "missing `alphabet` or `elements` header");
    }
    need_header();
    auto all = [](std::vector<char> const& v) {
      return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
    };
    if (!all(seen_mul) || !all(seen_inv) || !all(seen_act) || !all(seen_res)) {
      throw Error(ErrorKind::malformed_structure,
                  "incomplete tables: every mul/inv/act/res entry is required");
    }
    return t;
  }

  std::string format_automaton(GroupTables const& t) {
    std::ostringstream out;
    out << "alphabet " << t.alphabet_size << "\n";
    out << "elements " << t.order << "\n";
    for (std::size_t i = 0; i < t.names.size(); ++i) {
      out << "name " << i << " " << t.names[i] << "\n";
    }
    for (std::size_t i = 0; i < t.order; ++i) {
      for (std::size_t j = 0; j < t.order; ++j) {
        out << "mul " << i << " " << j << " " << t.mul[i * t.order + j] << "\n";
      }
    }
    for (std::size_t i = 0; i < t.order; ++i) {
      out << "inv " << i << " " << t.inv[i] << "\n";
    }
    for (std::size_t i = 0; i < t.order; ++i) {
      for (std::size_t a = 0; a < t.alphabet_size; ++a) {
        out << "act " << i << " " << a << " "
            << int(t.act[i * t.alphabet_size + a]) << "\n";
      }
    }
    for (std::size_t i = 0; i < t.order; ++i) {
      for (std::size_t a = 0; a < t.alphabet_size; ++a) {
        out << "res " << i << " " << a << " " << t.res[i * t.alphabet_size + a]
            << "\n";
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Germs and similarities
  ////////////////////////////////////////////////////////////////////////

  Point germ_apply(Germ const& germ, Point const& x) {
    SelfSimilarGroup const& h     = *germ.group;
    ElementId               state = germ.id;
    Word                    out_prefix;
    for (Letter a : x.prefix()) {
      out_prefix.push_back(h.act(state, a));
      state = h.res(state, a);
    }
    // Run whole periods until the state at a period boundary repeats; the
    // output between the two visits is then the output period.
    std::map<ElementId, std::size_t> first_visit;
    std::vector<Word>                blocks;
    while (!first_visit.contains(state)) {
      first_visit[state] = blocks.size();
      Word block;
      for (Letter a : x.period()) {
        block.push_back(h.act(state, a));
        state = h.res(state, a);
      }
      blocks.push_back(std::move(block));
    }
    std::size_t const cycle_start = first_visit[state];
    Word              period;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i < cycle_start) {
        out_prefix = out_prefix.concat(blocks[i]);
      } else {
        period = period.concat(blocks[i]);
      }
    }
    return Point(std::move(out_prefix), std::move(period));
  }

  Germ germ_restrict(Germ const& germ, Word const& v) {
    return Germ{germ.group, germ.group->restrict(germ.id, v)};
  }

  Similarity sim_identity(GroupPtr group, Word ball) {
    return Similarity{ball, ball, Germ{std::move(group), identity_id}};
  }

  Similarity sim_compose(Similarity const& h2, Similarity const& h1) {
    if (!same_structure(h1.germ.group, h2.germ.group)) {
      throw Error(ErrorKind::incompatible_elements,
                  "similarities over different self-similar groups");
    }
    if (h1.target != h2.source) {
      throw Error(ErrorKind::composition_domain,
                  "target ball of the first similarity is not the source "
                  "ball of the second");
    }
    return Similarity{h1.source,
                      h2.target,
                      Germ{h1.germ.group,
                           h1.germ.group->mul(h2.germ.id, h1.germ.id)}};
  }

  Similarity sim_invert(Similarity const& h) {
    return Similarity{
        h.target, h.source, Germ{h.germ.group, h.germ.group->inv(h.germ.id)}};
  }

  Point sim_apply(Similarity const& h, Point const& x) {
    if (!x.has_prefix(h.source)) {
      throw Error(ErrorKind::composition_domain,
                  "point outside the source ball");
    }
    return germ_apply(h.germ, x.drop(h.source.size())).prepend(h.target);
  }

}  // namespace zipper
