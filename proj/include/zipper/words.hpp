#pragma once

// Finite words over A = {0, ..., d-1}, the balls they address in the end
// space A^omega, eventually periodic points, prefix codes and clopen sets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace zipper {

  using Letter = std::uint8_t;

  class Alphabet {
   public:
    // Throws malformed_word unless 2 <= d <= 256.
    explicit Alphabet(std::size_t d);

    std::size_t size() const noexcept {
      return _size;
    }

    bool contains(std::size_t letter) const noexcept {
      return letter < _size;
    }

    friend bool operator==(Alphabet, Alphabet) = default;

   private:
    std::size_t _size;
  };

  // A word v addresses the closed ball vA^omega; the empty word addresses the
  // whole space. The ordering is lexicographic with a prefix sorting before
  // its extensions, which is the tie-break used by every canonical form.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    Letter back() const {
      return _letters.back();
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    void push_back(Letter a) {
      _letters.push_back(a);
    }
    void pop_back() {
      _letters.pop_back();
    }

    Word child(Letter a) const;
    // The word with its last letter removed; requires a nonempty word.
    Word parent() const;
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t n) const;
    Word concat(Word const& other) const;

    bool is_prefix_of(Word const& other) const noexcept;
    bool is_proper_prefix_of(Word const& other) const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const&, Word const&)
        = default;

   private:
    std::vector<Letter> _letters;
  };

  // Throws malformed_word if some letter is outside the alphabet.
  void check_word(Alphabet alphabet, Word const& word);

  // All d^n words of length n, in lexicographic order.
  std::vector<Word> words_of_length(Alphabet alphabet, std::size_t n);

  enum class BallRelation { proper, equal, none, reverse };

  // Relation of the ball addressed by `outer` to the one addressed by
  // `inner`: proper when outer strictly contains inner, reverse when inner
  // strictly contains outer.
  BallRelation ball_contains(Word const& outer, Word const& inner);
  BallRelation ball_contains(Alphabet  alphabet,
                             Word const& outer,
                             Word const& inner);

  // An eventually periodic infinite word prefix . period^omega, always held
  // in canonical form: primitive period, shortest possible prefix.
  class EventuallyPeriodicPoint {
   public:
    EventuallyPeriodicPoint(Word prefix, Word period);

    Word const& prefix() const noexcept {
      return _prefix;
    }
    Word const& period() const noexcept {
      return _period;
    }

    Letter letter_at(std::size_t t) const;
    // The first n letters.
    Word take(std::size_t n) const;
    // The point with the first n letters removed.
    EventuallyPeriodicPoint drop(std::size_t n) const;
    EventuallyPeriodicPoint prepend(Word const& w) const;
    bool has_prefix(Word const& w) const;

    friend bool operator==(EventuallyPeriodicPoint const&,
                           EventuallyPeriodicPoint const&)
        = default;
    friend std::strong_ordering
    operator<=>(EventuallyPeriodicPoint const&,
                EventuallyPeriodicPoint const&)
        = default;

   private:
    Word _prefix;
    Word _period;
  };

  using Point = EventuallyPeriodicPoint;

  // Length t0 of the longest common prefix of x and y, so that the end-space
  // distance is e^{-t0}; std::nullopt stands for t0 = infinity (x == y).
  std::optional<std::size_t> distance_exponent(Point const& x, Point const& y);

  // A finite antichain of words, stored sorted.
  class PrefixCode {
   public:
    PrefixCode() = default;
    // Throws invalid_code if the words are not pairwise prefix-incomparable.
    explicit PrefixCode(std::vector<Word> words);

    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _words.size();
    }
    bool empty() const noexcept {
      return _words.empty();
    }
    auto begin() const noexcept {
      return _words.begin();
    }
    auto end() const noexcept {
      return _words.end();
    }
    std::size_t max_depth() const noexcept;

    // The unique word of the code that is a prefix of w, if any.
    std::optional<Word> prefix_of(Word const& w) const;
    std::optional<Word> prefix_of(Point const& x) const;

    friend bool operator==(PrefixCode const&, PrefixCode const&) = default;
    friend auto operator<=>(PrefixCode const&, PrefixCode const&) = default;

   private:
    std::vector<Word> _words;
  };

  bool is_antichain(std::span<Word const> words);

  // True iff every infinite word has a prefix in the code, i.e. every
  // internal node of its prefix tree has all d children.
  bool is_complete(Alphabet alphabet, PrefixCode const& code);

  // Completeness of the code relative to the ball at `root`: every word
  // extends root and every infinite word in rootA^omega has a prefix in it.
  bool is_complete_below(Alphabet          alphabet,
                         Word const&       root,
                         std::span<Word const> words);

  // The distinct proper prefixes of the code's words.
  std::set<Word> proper_prefixes(PrefixCode const& code);
  // Throws invalid_code on an empty code.
  std::size_t proper_prefix_count(PrefixCode const& code);

  // True iff every ball of `fine` lies in some ball of `coarse`.
  bool refines(PrefixCode const& fine, PrefixCode const& coarse);

  // Every complete code of depth at most max_depth with at most max_leaves
  // words, sorted.
  std::vector<PrefixCode> complete_codes(Alphabet    alphabet,
                                         std::size_t max_depth,
                                         std::size_t max_leaves);

  // Every complete code refined by the given complete code, sorted.
  std::vector<PrefixCode> coarsenings(Alphabet alphabet, PrefixCode const& code);

  // A finite union of balls in normal form: no ball nested in another and no
  // complete family of d siblings.
  class ClopenSet {
   public:
    PrefixCode const& balls() const noexcept {
      return _balls;
    }
    bool contains(Point const& x) const;
    bool contains_ball(Word const& w) const;

    friend bool operator==(ClopenSet const&, ClopenSet const&) = default;

   private:
    friend ClopenSet clopen_normalize(Alphabet, std::vector<Word>);
    explicit ClopenSet(PrefixCode balls) : _balls(std::move(balls)) {}
    PrefixCode _balls;
  };

  ClopenSet clopen_normalize(Alphabet alphabet, std::vector<Word> words);

}  // namespace zipper

template <>
struct std::hash<zipper::Word> {
  std::size_t operator()(zipper::Word const& w) const noexcept;
};
