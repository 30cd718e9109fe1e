#pragma once

// Elements of V_d(H) and local similarity embeddings, encoded as tables of
// rows (source, target, germ): the row asserts g(source.x) = target.germ(x).
// Reduction merges complete sibling families back into their parent ball,
// and its fixed point has the maximum partition of g as source code.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "zipper/self_similar.hpp"
#include "zipper/words.hpp"

namespace zipper {

  struct Row {
    Word      source;
    Word      target;
    ElementId germ = identity_id;

    friend bool operator==(Row const&, Row const&) = default;
    friend std::strong_ordering operator<=>(Row const&, Row const&) = default;
  };

  enum class TableKind { group_element, embedding };

  class SimTable {
   public:
    // A group element must have domain = the empty word. An embedding is
    // defined on the ball addressed by `domain`.
    SimTable(GroupPtr         group,
             TableKind        kind,
             Word             domain,
             std::vector<Row> rows);

    static SimTable identity(GroupPtr group);
    // The global germ element x -> sigma(x).
    static SimTable global(GroupPtr group, ElementId sigma);
    // The class representative x -> ball.x of the inclusion of a ball.
    static SimTable ball_inclusion(GroupPtr group, Word ball);

    GroupPtr const& group() const noexcept {
      return _group;
    }
    SelfSimilarGroup const& structure() const noexcept {
      return *_group;
    }
    TableKind kind() const noexcept {
      return _kind;
    }
    Word const& domain() const noexcept {
      return _domain;
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    std::size_t size() const noexcept {
      return _rows.size();
    }

    PrefixCode sources() const;
    std::vector<Word> targets() const;

    // Same rows, kind, domain and structure.
    friend bool operator==(SimTable const& a, SimTable const& b);

   private:
    GroupPtr         _group;
    TableKind        _kind;
    Word             _domain;
    std::vector<Row> _rows;
  };

  struct TableViolation {
    std::string kind;
    std::string detail;
  };

  // Empty iff: sources completely partition the domain ball; for a group
  // element the targets are a complete code, for an embedding an antichain;
  // every germ id and letter is in range.
  std::vector<TableViolation> validate_table(SimTable const& t);

  // Replaces the row with the given source by its d children
  // (va, w.sigma(a), sigma|_a). Throws no_such_row.
  SimTable expand_at(SimTable const& t, Word const& source);

  // A table in reduced form, rows sorted by source. Only reduce() creates
  // these, so canonical equality is plain equality.
  class CanonicalElement {
   public:
    SimTable const& table() const noexcept {
      return _table;
    }
    GroupPtr const& group() const noexcept {
      return _table.group();
    }
    TableKind kind() const noexcept {
      return _table.kind();
    }
    std::vector<Row> const& rows() const noexcept {
      return _table.rows();
    }

    friend bool operator==(CanonicalElement const&, CanonicalElement const&)
        = default;
    friend bool operator<(CanonicalElement const& a,
                          CanonicalElement const& b) {
      return a.rows() < b.rows();
    }

   private:
    friend CanonicalElement reduce(SimTable const&);
    friend CanonicalElement invert(CanonicalElement const&);
    explicit CanonicalElement(SimTable t) : _table(std::move(t)) {}
    SimTable _table;
  };

  // Merges every complete sibling family {(va, w.sigma(a), sigma|_a)} into
  // (v, w, sigma) until none is left. Does not validate.
  CanonicalElement reduce(SimTable const& t);

  CanonicalElement identity_element(GroupPtr group);

  // left after right. `left` needs complete sources over its domain and
  // every target of `right` must lie in that domain; the result has the
  // domain of `right` and is an embedding unless both are group elements.
  // Unreduced; throws incompatible_elements or composition_domain.
  SimTable compose_tables(SimTable const& left, SimTable const& right);

  // g after h (apply h first), reduced. Throws incompatible_elements.
  CanonicalElement compose(CanonicalElement const& g,
                           CanonicalElement const& h);

  // Throws not_invertible on embeddings.
  CanonicalElement invert(CanonicalElement const& g);

  Point apply(SimTable const& t, Point const& x);
  inline Point apply(CanonicalElement const& g, Point const& x) {
    return apply(g.table(), x);
  }

  PrefixCode max_partition(CanonicalElement const& g);

  // Order preserving / cyclically order preserving; d = 2 and trivial H
  // only, otherwise unsupported_structure.
  bool is_in_F(CanonicalElement const& g);
  bool is_in_T(CanonicalElement const& g);

  // Gamma(P+, P-): every element whose maximum partition is P+ and whose
  // inverse has maximum partition P-. Sorted. Throws invalid_code unless
  // both codes are complete.
  std::vector<CanonicalElement> enumerate_gamma(GroupPtr const&   group,
                                                PrefixCode const& p_plus,
                                                PrefixCode const& p_minus);

  // Gamma_ref(P+, P-): the union of Gamma(Q+, Q-) over all coarsenings Q+
  // of P+ and Q- of P-. Sorted.
  std::vector<CanonicalElement> enumerate_gamma_ref(GroupPtr const&   group,
                                                    PrefixCode const& p_plus,
                                                    PrefixCode const& p_minus);

}  // namespace zipper

template <>
struct std::hash<zipper::SimTable> {
  std::size_t operator()(zipper::SimTable const& t) const noexcept;
};

template <>
struct std::hash<zipper::CanonicalElement> {
  std::size_t operator()(zipper::CanonicalElement const& g) const noexcept {
    return std::hash<zipper::SimTable>()(g.table());
  }
};
