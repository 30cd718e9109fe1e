#pragma once

// Finite self-similar groups H given by wreath-recursion tables, and the
// similarities between balls they induce: SIM(vA^omega, wA^omega) is the
// family of maps vx -> w.sigma(x) for sigma in H.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zipper/words.hpp"

namespace zipper {

  using ElementId = std::uint32_t;

  inline constexpr ElementId identity_id = 0;
  inline constexpr std::size_t default_faithful_depth = 8;

  // Raw, unvalidated tables as read from an automaton file. Element 0 is the
  // identity.
  struct GroupTables {
    std::size_t alphabet_size = 0;
    std::size_t order = 0;
    std::vector<ElementId> mul;  // order x order, mul[i * order + j] = ij
    std::vector<ElementId> inv;  // order
    std::vector<Letter> act;     // order x d, act[i * d + a] = i(a)
    std::vector<ElementId> res;  // order x d, res[i * d + a] = i|_a
    std::vector<std::string> names;  // optional, empty or of size order

    friend bool operator==(GroupTables const&, GroupTables const&) = default;
  };

  struct Violation {
    std::string axiom;
    // Each witness is a tuple of element ids and letters, in the order the
    // axiom names them, e.g. (sigma, tau, a).
    std::vector<std::vector<std::size_t>> witnesses;
    std::string detail;
  };

  std::string to_string(Violation const& v);

  // Checks the group axioms, the action and wreath-recursion laws and
  // faithfulness to the given depth. Faithfulness is only examined once the
  // other axioms hold. Throws malformed_structure on inconsistent dimensions.
  std::vector<Violation>
  validate(GroupTables const& tables,
           std::size_t        faithful_depth = default_faithful_depth);

  class SelfSimilarGroup;
  using GroupPtr = std::shared_ptr<SelfSimilarGroup const>;

  class SelfSimilarGroup {
   public:
    // Validates; throws malformed_structure listing the violations.
    static GroupPtr make(GroupTables tables,
                         std::size_t faithful_depth = default_faithful_depth);
    // H = {1}: the structure of the Higman-Thompson groups.
    static GroupPtr trivial(std::size_t d);
    // The full symmetric group acting letterwise, sigma(a1...an) =
    // sigma(a1)...sigma(an). Elements are the permutations in lexicographic
    // order of their image lists, named "p" followed by the images.
    static GroupPtr symmetric(std::size_t d);

    Alphabet alphabet() const noexcept {
      return Alphabet(_tables.alphabet_size);
    }
    std::size_t degree() const noexcept {
      return _tables.alphabet_size;
    }
    std::size_t order() const noexcept {
      return _tables.order;
    }
    GroupTables const& tables() const noexcept {
      return _tables;
    }

    ElementId mul(ElementId i, ElementId j) const {
      return _tables.mul[i * _tables.order + j];
    }
    ElementId inv(ElementId i) const {
      return _tables.inv[i];
    }
    Letter act(ElementId i, Letter a) const {
      return _tables.act[i * _tables.alphabet_size + a];
    }
    ElementId res(ElementId i, Letter a) const {
      return _tables.res[i * _tables.alphabet_size + a];
    }

    // Image of a finite word: letters pi(state, a), state <- res(state, a).
    Word act_word(ElementId i, Word const& v) const;
    // Iterated restriction i|_v.
    ElementId restrict(ElementId i, Word const& v) const;

    std::string name(ElementId i) const;
    std::optional<ElementId> find(std::string const& name) const;

    friend bool operator==(SelfSimilarGroup const& a,
                           SelfSimilarGroup const& b) {
      return a._tables == b._tables;
    }

   private:
    explicit SelfSimilarGroup(GroupTables tables) : _tables(std::move(tables)) {}
    GroupTables _tables;
  };

  bool same_structure(GroupPtr const& a, GroupPtr const& b);

  // Line-oriented automaton format: `alphabet d`, `elements m`, then
  // `mul i j k`, `inv i j`, `act i a b`, `res i a j` and optional
  // `name i NAME` records; `#` starts a comment. Throws parse or
  // malformed_structure; does not validate the axioms.
  GroupTables parse_automaton(std::string const& text);
  std::string format_automaton(GroupTables const& tables);

  struct Germ {
    GroupPtr  group;
    ElementId id = identity_id;

    friend bool operator==(Germ const& a, Germ const& b) {
      return a.id == b.id && same_structure(a.group, b.group);
    }
  };

  Point germ_apply(Germ const& germ, Point const& x);
  Germ germ_restrict(Germ const& germ, Word const& v);

  // The map source.x -> target.germ(x).
  struct Similarity {
    Word source;
    Word target;
    Germ germ;

    friend bool operator==(Similarity const&, Similarity const&) = default;
  };

  Similarity sim_identity(GroupPtr group, Word ball);
  // h2 after h1; throws composition_domain unless h1's target ball is h2's
  // source ball.
  Similarity sim_compose(Similarity const& h2, Similarity const& h1);
  Similarity sim_invert(Similarity const& h);
  Point sim_apply(Similarity const& h, Point const& x);

}  // namespace zipper
