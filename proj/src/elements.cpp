#include "zipper/elements.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zipper/error.hpp"

namespace zipper {

  ////////////////////////////////////////////////////////////////////////
  // SimTable
  ////////////////////////////////////////////////////////////////////////

  SimTable::SimTable(GroupPtr         group,
                     TableKind        kind,
                     Word             domain,
                     std::vector<Row> rows)
      : _group(std::move(group)),
        _kind(kind),
        _domain(std::move(domain)),
        _rows(std::move(rows)) {
    if (!_group) {
      throw Error(ErrorKind::malformed_structure, "table without a structure");
    }
    if (_kind == TableKind::group_element && !_domain.empty()) {
      throw Error(ErrorKind::invalid_table,
                  "a group element is defined on the whole space");
    }
  }

  SimTable SimTable::identity(GroupPtr group) {
    return global(std::move(group), identity_id);
  }

  SimTable SimTable::global(GroupPtr group, ElementId sigma) {
    return SimTable(
        std::move(group), TableKind::group_element, Word(), {{{}, {}, sigma}});
  }

  SimTable SimTable::ball_inclusion(GroupPtr group, Word ball) {
    return SimTable(std::move(group),
                    TableKind::embedding,
                    Word(),
                    {{Word(), std::move(ball), identity_id}});
  }

  PrefixCode SimTable::sources() const {
    std::vector<Word> words;
    words.reserve(_rows.size());
    for (auto const& r : _rows) {
      words.push_back(r.source);
    }
    return PrefixCode(std::move(words));
  }

  std::vector<Word> SimTable::targets() const {
    std::vector<Word> words;
    words.reserve(_rows.size());
    for (auto const& r : _rows) {
      words.push_back(r.target);
    }
    return words;
  }

  bool operator==(SimTable const& a, SimTable const& b) {
    return a._kind == b._kind && a._domain == b._domain && a._rows == b._rows
           && same_structure(a._group, b._group);
  }

  std::vector<TableViolation> validate_table(SimTable const& t) {
    std::vector<TableViolation> out;
    auto const&                 h = t.structure();
    if (t.rows().empty()) {
      out.push_back({"empty-table", "a table needs at least one row"});
      return out;
    }
    bool letters_ok = true;
    for (auto const& r : t.rows()) {
      if (r.germ >= h.order()) {
        out.push_back({"germ-out-of-range",
                       "germ id " + std::to_string(r.germ) + " >= "
                           + std::to_string(h.order())});
      }
      for (Word const* w : {&r.source, &r.target}) {
        for (Letter a : *w) {
          if (a >= h.degree()) {
            letters_ok = false;
          }
        }
      }
      if (!t.domain().is_prefix_of(r.source)) {
        out.push_back({"source-outside-domain",
                       "a source word does not extend the domain ball"});
      }
    }
    if (!letters_ok) {
      out.push_back({"malformed-word", "letter outside the alphabet"});
    }
    if (!out.empty()) {
      return out;
    }
    std::vector<Word> sources;
    for (auto const& r : t.rows()) {
      sources.push_back(r.source);
    }
    auto const targets = t.targets();
    if (!is_antichain(sources)) {
      out.push_back({"domain-not-antichain", "two source balls overlap"});
    } else if (!is_complete_below(h.alphabet(), t.domain(), sources)) {
      out.push_back(
          {"incomplete-domain", "source balls do not cover the domain"});
    }
    if (!is_antichain(targets)) {
      out.push_back({"target-not-antichain", "two target balls overlap"});
    } else if (t.kind() == TableKind::group_element
               && !is_complete_below(h.alphabet(), Word(), targets)) {
      out.push_back({"incomplete-range", "target balls do not cover X"});
    }
    return out;
  }

  SimTable expand_at(SimTable const& t, Word const& source) {
    auto const& h  = t.structure();
    auto        it = std::find_if(t.rows().begin(),
                           t.rows().end(),
                           [&](Row const& r) { return r.source == source; });
    if (it == t.rows().end()) {
      throw Error(ErrorKind::no_such_row, "no row with the given source");
    }
    std::vector<Row> rows(t.rows().begin(), it);
    for (std::size_t i = 0; i < h.degree(); ++i) {
      auto const a = static_cast<Letter>(i);
      rows.push_back(
          {it->source.child(a), it->target.child(h.act(it->germ, a)),
           h.res(it->germ, a)});
    }
    rows.insert(rows.end(), it + 1, t.rows().end());
    return SimTable(t.group(), t.kind(), t.domain(), std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  CanonicalElement reduce(SimTable const& t) {
    auto const& h = t.structure();
    std::size_t const d = h.degree();
    struct Image {
      Word      target;
      ElementId germ;
    };
    std::map<Word, Image> rows;
    for (auto const& r : t.rows()) {
      rows.emplace(r.source, Image{r.target, r.germ});
    }
    std::vector<Word> work;
    for (auto const& [source, image] : rows) {
      if (source.size() > t.domain().size()) {
        work.push_back(source.parent());
      }
    }
    std::vector<Image const*> family(d);
    while (!work.empty()) {
      Word const parent = std::move(work.back());
      work.pop_back();
      if (rows.contains(parent)) {
        continue;
      }
      bool complete = true;
      for (std::size_t a = 0; a < d && complete; ++a) {
        auto it = rows.find(parent.child(static_cast<Letter>(a)));
        complete = it != rows.end() && !it->second.target.empty();
        family[a] = complete ? &it->second : nullptr;
      }
      if (!complete) {
        continue;
      }
      Word const target = family[0]->target.parent();
      bool       common = true;
      for (std::size_t a = 1; a < d && common; ++a) {
        auto const& w = family[a]->target;
        common = w.size() == target.size() + 1 && target.is_prefix_of(w);
      }
      if (!common) {
        continue;
      }
      // Search H for the germ whose one-step recursion matches the family.
      std::optional<ElementId> merged;
      for (ElementId s = 0; s < h.order() && !merged; ++s) {
        bool match = true;
        for (std::size_t a = 0; a < d && match; ++a) {
          auto const letter = static_cast<Letter>(a);
          match = family[a]->target.back() == h.act(s, letter)
                  && family[a]->germ == h.res(s, letter);
        }
        if (match) {
          merged = s;
        }
      }
      if (!merged) {
        continue;
      }
      for (std::size_t a = 0; a < d; ++a) {
        rows.erase(parent.child(static_cast<Letter>(a)));
      }
      rows.emplace(parent, Image{target, *merged});
      if (parent.size() > t.domain().size()) {
        work.push_back(parent.parent());
      }
    }
    std::vector<Row> sorted;
    sorted.reserve(rows.size());
    for (auto& [source, image] : rows) {
      sorted.push_back({source, std::move(image.target), image.germ});
    }
    return CanonicalElement(
        SimTable(t.group(), t.kind(), t.domain(), std::move(sorted)));
  }

  CanonicalElement identity_element(GroupPtr group) {
    return reduce(SimTable::identity(std::move(group)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition and inversion
  ////////////////////////////////////////////////////////////////////////

  SimTable compose_tables(SimTable const& left, SimTable const& right) {
    if (!same_structure(left.group(), right.group())) {
      throw Error(ErrorKind::incompatible_elements,
                  "tables over different self-similar groups");
    }
    auto const& h = left.structure();
    // Left rows sorted by source: the only candidate containing a ball w is
    // the last source not exceeding w.
    std::vector<Row const*> by_source;
    by_source.reserve(left.size());
    for (auto const& r : left.rows()) {
      by_source.push_back(&r);
    }
    std::sort(by_source.begin(), by_source.end(), [](auto* a, auto* b) {
      return a->source < b->source;
    });
    auto locate = [&](Word const& w) -> std::ptrdiff_t {
      auto it = std::upper_bound(
          by_source.begin(), by_source.end(), w, [](Word const& x, Row const* r) {
            return x < r->source;
          });
      if (it != by_source.begin() && (*(it - 1))->source.is_prefix_of(w)) {
        return it - 1 - by_source.begin();
      }
      if (it != by_source.end() && w.is_proper_prefix_of((*it)->source)) {
        return -1;  // w must be split further
      }
      return -2;  // outside the left domain
    };

    std::vector<Row> out;
    std::vector<Row> stack;
    for (auto const& r : right.rows()) {
      stack.push_back(r);
      while (!stack.empty()) {
        Row cur = std::move(stack.back());
        stack.pop_back();
        auto const where = locate(cur.target);
        if (where >= 0) {
          Row const& l    = *by_source[where];
          Word const rest = cur.target.suffix_from(l.source.size());
          out.push_back({std::move(cur.source),
                         l.target.concat(h.act_word(l.germ, rest)),
                         h.mul(h.restrict(l.germ, rest), cur.germ)});
        } else if (where == -1) {
          for (std::size_t i = h.degree(); i-- > 0;) {
            auto const a = static_cast<Letter>(i);
            stack.push_back({cur.source.child(a),
                             cur.target.child(h.act(cur.germ, a)),
                             h.res(cur.germ, a)});
          }
        } else {
          throw Error(ErrorKind::composition_domain,
                      "a target ball of the right table leaves the domain "
                      "of the left table");
        }
      }
    }
    TableKind const kind = left.kind() == TableKind::group_element
                                   && right.kind() == TableKind::group_element
                               ? TableKind::group_element
                               : TableKind::embedding;
    return SimTable(left.group(), kind, right.domain(), std::move(out));
  }

  CanonicalElement compose(CanonicalElement const& g,
                           CanonicalElement const& h) {
    if (g.kind() != TableKind::group_element) {
      throw Error(ErrorKind::incompatible_elements,
                  "the left factor must be a group element");
    }
    return reduce(compose_tables(g.table(), h.table()));
  }

  CanonicalElement invert(CanonicalElement const& g) {
    if (g.kind() != TableKind::group_element) {
      throw Error(ErrorKind::not_invertible,
                  "embeddings are not invertible");
    }
    auto const&      h = g.table().structure();
    std::vector<Row> rows;
    rows.reserve(g.rows().size());
    for (auto const& r : g.rows()) {
      rows.push_back({r.target, r.source, h.inv(r.germ)});
    }
    std::sort(rows.begin(), rows.end());
    // Images of maximum regions are the maximum regions of the inverse, so
    // the swapped table is already reduced.
    return CanonicalElement(
        SimTable(g.group(), TableKind::group_element, Word(), std::move(rows)));
  }

  Point apply(SimTable const& t, Point const& x) {
    for (auto const& r : t.rows()) {
      if (x.has_prefix(r.source)) {
        Germ const germ{t.group(), r.germ};
        return germ_apply(germ, x.drop(r.source.size())).prepend(r.target);
      }
    }
    throw Error(ErrorKind::composition_domain, "point outside the domain");
  }

  PrefixCode max_partition(CanonicalElement const& g) {
    return g.table().sources();
  }

  ////////////////////////////////////////////////////////////////////////
  // F and T membership
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::size_t> leaf_permutation(CanonicalElement const& g) {
      auto const& h = g.table().structure();
      if (h.degree() != 2 || h.order() != 1
          || g.kind() != TableKind::group_element) {
        throw Error(ErrorKind::unsupported_structure,
                    "F and T membership needs d = 2 and trivial H");
      }
      // rows() is sorted by source.
      std::vector<Word> targets = g.table().targets();
      std::vector<Word> sorted  = targets;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> perm;
      for (auto const& w : targets) {
        perm.push_back(static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), w) - sorted.begin()));
      }
      return perm;
    }
  }  // namespace

  bool is_in_F(CanonicalElement const& g) {
    auto const perm = leaf_permutation(g);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool is_in_T(CanonicalElement const& g) {
    auto const        perm  = leaf_permutation(g);
    std::size_t const n     = perm.size();
    std::size_t const shift = perm[0];
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] != (i + shift) % n) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finiteness lemmas
  ////////////////////////////////////////////////////////////////////////

  std::vector<CanonicalElement> enumerate_gamma(GroupPtr const&   group,
                                                PrefixCode const& p_plus,
                                                PrefixCode const& p_minus) {
    auto const alphabet = group->alphabet();
    if (!is_complete(alphabet, p_plus) || !is_complete(alphabet, p_minus)) {
      throw Error(ErrorKind::invalid_code, "both codes must be complete");
    }
    std::size_t const n = p_plus.size();
    if (p_minus.size() != n) {
      return {};
    }
    std::size_t const m = group->order();
    std::set<CanonicalElement> found;
    std::vector<std::size_t>   bijection(n);
    std::iota(bijection.begin(), bijection.end(), 0);
    do {
      std::vector<ElementId> germs(n, 0);
      while (true) {
        std::vector<Row> rows;
        rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          rows.push_back({p_plus.words()[i],
                          p_minus.words()[bijection[i]],
                          germs[i]});
        }
        auto g = reduce(
            SimTable(group, TableKind::group_element, Word(), std::move(rows)));
        if (max_partition(g) == p_plus && max_partition(invert(g)) == p_minus) {
          found.insert(std::move(g));
        }
        // Next germ tuple, odometer style.
        std::size_t i = 0;
        while (i < n && ++germs[i] == m) {
          germs[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    } while (std::next_permutation(bijection.begin(), bijection.end()));
    return {found.begin(), found.end()};
  }

  std::vector<CanonicalElement> enumerate_gamma_ref(GroupPtr const&   group,
                                                    PrefixCode const& p_plus,
                                                    PrefixCode const& p_minus) {
    auto const                 alphabet = group->alphabet();
    std::set<CanonicalElement> found;
    auto const                 minus_coarse = coarsenings(alphabet, p_minus);
    for (auto const& q_plus : coarsenings(alphabet, p_plus)) {
      for (auto const& q_minus : minus_coarse) {
        for (auto& g : enumerate_gamma(group, q_plus, q_minus)) {
          found.insert(std::move(g));
        }
      }
    }
    return {found.begin(), found.end()};
  }

}  // namespace zipper

std::size_t std::hash<zipper::SimTable>::operator()(
    zipper::SimTable const& t) const noexcept {
  std::hash<zipper::Word> hw;
  std::size_t             h = static_cast<std::size_t>(t.kind()) + 0x9e3779b9;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(hw(t.domain()));
  for (auto const& r : t.rows()) {
    mix(hw(r.source));
    mix(hw(r.target));
    mix(r.germ);
  }
  return h;
}
