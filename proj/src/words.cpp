#include "zipper/words.hpp"

#include <algorithm>
#include <numeric>

#include "zipper/error.hpp"

namespace zipper {

  std::string_view to_string(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::malformed_word:
        return "malformed-word";
      case ErrorKind::invalid_code:
        return "invalid-code";
      case ErrorKind::malformed_structure:
        return "malformed-structure";
      case ErrorKind::composition_domain:
        return "composition-domain";
      case ErrorKind::no_such_row:
        return "no-such-row";
      case ErrorKind::not_invertible:
        return "not-invertible";
      case ErrorKind::unsupported_structure:
        return "unsupported-structure";
      case ErrorKind::incompatible_elements:
        return "incompatible-elements";
      case ErrorKind::invalid_table:
        return "invalid-table";
      case ErrorKind::invalid_class:
        return "invalid-class";
      case ErrorKind::invalid_wall:
        return "invalid-wall";
      case ErrorKind::parse:
        return "parse-error";
    }
    return "error";
  }

  Alphabet::Alphabet(std::size_t d) : _size(d) {
    if (d < 2 || d > 256) {
      throw Error(ErrorKind::malformed_word,
                  "alphabet size must lie in [2, 256], got "
                      + std::to_string(d));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::child(Letter a) const {
    Word result = *this;
    result._letters.push_back(a);
    return result;
  }

  Word Word::parent() const {
    Word result = *this;
    result._letters.pop_back();
    return result;
  }

  Word Word::prefix(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(_letters.begin(), _letters.begin() + n));
  }

  Word Word::suffix_from(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(_letters.begin() + n, _letters.end()));
  }

  Word Word::concat(Word const& other) const {
    Word result = *this;
    result._letters.insert(
        result._letters.end(), other._letters.begin(), other._letters.end());
    return result;
  }

  bool Word::is_prefix_of(Word const& other) const noexcept {
    return size() <= other.size()
           && std::equal(_letters.begin(), _letters.end(), other.begin());
  }

  bool Word::is_proper_prefix_of(Word const& other) const noexcept {
    return size() < other.size() && is_prefix_of(other);
  }

  void check_word(Alphabet alphabet, Word const& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!alphabet.contains(word[i])) {
        throw Error(ErrorKind::malformed_word,
                    "letter " + std::to_string(word[i]) + " at position "
                        + std::to_string(i) + " is not below "
                        + std::to_string(alphabet.size()));
      }
    }
  }

  std::vector<Word> words_of_length(Alphabet alphabet, std::size_t n) {
    std::vector<Word> result{Word()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      next.reserve(result.size() * alphabet.size());
      for (auto const& w : result) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
          next.push_back(w.child(static_cast<Letter>(a)));
        }
      }
      result = std::move(next);
    }
    return result;
  }

  BallRelation ball_contains(Word const& outer, Word const& inner) {
    if (outer == inner) {
      return BallRelation::equal;
    } else if (outer.is_prefix_of(inner)) {
      return BallRelation::proper;
    } else if (inner.is_prefix_of(outer)) {
      return BallRelation::reverse;
    }
    return BallRelation::none;
  }

  BallRelation ball_contains(Alphabet    alphabet,
                             Word const& outer,
                             Word const& inner) {
    check_word(alphabet, outer);
    check_word(alphabet, inner);
    return ball_contains(outer, inner);
  }

  ////////////////////////////////////////////////////////////////////////
  // EventuallyPeriodicPoint
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t primitive_root_length(Word const& w) {
      std::size_t const n = w.size();
      for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) {
          ok = w[i] == w[i - p];
        }
        if (ok) {
          return p;
        }
      }
      return n;
    }
  }  // namespace

  EventuallyPeriodicPoint::EventuallyPeriodicPoint(Word prefix, Word period)
      : _prefix(std::move(prefix)), _period(std::move(period)) {
    if (_period.empty()) {
      throw Error(ErrorKind::malformed_word, "period must be nonempty");
    }
    _period = _period.prefix(primitive_root_length(_period));
    // Absorb the tail of the prefix into the period by rotation.
    while (!_prefix.empty() && _prefix.back() == _period.back()) {
      std::vector<Letter> rotated;
      rotated.reserve(_period.size());
      rotated.push_back(_period.back());
      rotated.insert(rotated.end(), _period.begin(), _period.end() - 1);
      _period = Word(std::move(rotated));
      _prefix.pop_back();
    }
  }

  Letter EventuallyPeriodicPoint::letter_at(std::size_t t) const {
    if (t < _prefix.size()) {
      return _prefix[t];
    }
    return _period[(t - _prefix.size()) % _period.size()];
  }

  Word EventuallyPeriodicPoint::take(std::size_t n) const {
    std::vector<Letter> letters(n);
    for (std::size_t t = 0; t < n; ++t) {
      letters[t] = letter_at(t);
    }
    return Word(std::move(letters));
  }

  EventuallyPeriodicPoint EventuallyPeriodicPoint::drop(std::size_t n) const {
    if (n <= _prefix.size()) {
      return {_prefix.suffix_from(n), _period};
    }
    std::size_t const shift = (n - _prefix.size()) % _period.size();
    return {Word(), _period.suffix_from(shift).concat(_period.prefix(shift))};
  }

  EventuallyPeriodicPoint
  EventuallyPeriodicPoint::prepend(Word const& w) const {
    return {w.concat(_prefix), _period};
  }

  bool EventuallyPeriodicPoint::has_prefix(Word const& w) const {
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (letter_at(t) != w[t]) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> distance_exponent(Point const& x, Point const& y) {
    // Past both prefixes the pair of period positions cycles with period
    // lcm(|period x|, |period y|); no disagreement by then means x == y.
    std::size_t const bound
        = std::max(x.prefix().size(), y.prefix().size())
          + std::lcm(x.period().size(), y.period().size());
    for (std::size_t t = 0; t < bound; ++t) {
      if (x.letter_at(t) != y.letter_at(t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // PrefixCode
  ////////////////////////////////////////////////////////////////////////

  bool is_antichain(std::span<Word const> words) {
    std::vector<Word> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    // In prefix-first lexicographic order a word is immediately followed by
    // its extensions, so only neighbours need comparing.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i - 1].is_prefix_of(sorted[i])) {
        return false;
      }
    }
    return true;
  }

  PrefixCode::PrefixCode(std::vector<Word> words) : _words(std::move(words)) {
    if (!is_antichain(_words)) {
      throw Error(ErrorKind::invalid_code,
                  "words are not pairwise prefix-incomparable");
    }
    std::sort(_words.begin(), _words.end());
  }

  std::size_t PrefixCode::max_depth() const noexcept {
    std::size_t result = 0;
    for (auto const& w : _words) {
      result = std::max(result, w.size());
    }
    return result;
  }

  std::optional<Word> PrefixCode::prefix_of(Word const& w) const {
    // The only candidate is the largest code word not exceeding w.
    auto it = std::upper_bound(_words.begin(), _words.end(), w);
    if (it == _words.begin()) {
      return std::nullopt;
    }
    --it;
    if (it->is_prefix_of(w)) {
      return *it;
    }
    return std::nullopt;
  }

  std::optional<Word> PrefixCode::prefix_of(Point const& x) const {
    return prefix_of(x.take(max_depth()));
  }

  bool is_complete_below(Alphabet              alphabet,
                         Word const&           root,
                         std::span<Word const> words) {
    if (words.empty()) {
      return false;
    }
    std::set<Word> leaves;
    std::set<Word> internal;
    for (auto const& w : words) {
      if (!root.is_prefix_of(w)) {
        return false;
      }
      leaves.insert(w);
      for (std::size_t n = root.size(); n < w.size(); ++n) {
        internal.insert(w.prefix(n));
      }
    }
    for (auto const& v : internal) {
      if (leaves.contains(v)) {
        return false;
      }
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        Word const c = v.child(static_cast<Letter>(a));
        if (!leaves.contains(c) && !internal.contains(c)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_complete(Alphabet alphabet, PrefixCode const& code) {
    return is_complete_below(alphabet, Word(), code.words());
  }

  std::set<Word> proper_prefixes(PrefixCode const& code) {
    std::set<Word> result;
    for (auto const& w : code) {
      for (std::size_t n = 0; n < w.size(); ++n) {
        result.insert(w.prefix(n));
      }
    }
    return result;
  }

  std::size_t proper_prefix_count(PrefixCode const& code) {
    if (code.empty()) {
      throw Error(ErrorKind::invalid_code, "empty prefix code");
    }
    return proper_prefixes(code).size();
  }

  bool refines(PrefixCode const& fine, PrefixCode const& coarse) {
    return std::all_of(fine.begin(), fine.end(), [&](Word const& w) {
      return coarse.prefix_of(w).has_value();
    });
  }

  namespace {
    // All complete codes of the subtree at v, as lists of words.
    void codes_below(Alphabet                        alphabet,
                     Word const&                     v,
                     std::size_t                     max_depth,
                     std::size_t                     max_leaves,
                     std::vector<std::vector<Word>>& out) {
      out.push_back({v});
      if (v.size() >= max_depth || max_leaves < alphabet.size()) {
        return;
      }
      // Combine the children's codes, bounded by the leaf budget.
      std::vector<std::vector<std::vector<Word>>> per_child(alphabet.size());
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        codes_below(alphabet,
                    v.child(static_cast<Letter>(a)),
                    max_depth,
                    max_leaves - (alphabet.size() - 1),
                    per_child[a]);
      }
      std::vector<std::vector<Word>> partial{{}};
      for (auto const& options : per_child) {
        std::vector<std::vector<Word>> next;
        for (auto const& prefix : partial) {
          for (auto const& option : options) {
            if (prefix.size() + option.size() > max_leaves) {
              continue;
            }
            auto combined = prefix;
            combined.insert(combined.end(), option.begin(), option.end());
            next.push_back(std::move(combined));
          }
        }
        partial = std::move(next);
      }
      for (auto& code : partial) {
        out.push_back(std::move(code));
      }
    }

    void coarsenings_below(Alphabet                        alphabet,
                           Word const&                     v,
                           std::set<Word> const&           leaves,
                           std::set<Word> const&           internal,
                           std::vector<std::vector<Word>>& out) {
      out.push_back({v});
      if (!internal.contains(v)) {
        return;
      }
      std::vector<std::vector<Word>> partial{{}};
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        std::vector<std::vector<Word>> options;
        coarsenings_below(
            alphabet, v.child(static_cast<Letter>(a)), leaves, internal, options);
        std::vector<std::vector<Word>> next;
        for (auto const& prefix : partial) {
          for (auto const& option : options) {
            auto combined = prefix;
            combined.insert(combined.end(), option.begin(), option.end());
            next.push_back(std::move(combined));
          }
        }
        partial = std::move(next);
      }
      for (auto& code : partial) {
        out.push_back(std::move(code));
      }
    }
  }  // namespace

  std::vector<PrefixCode> complete_codes(Alphabet    alphabet,
                                         std::size_t max_depth,
                                         std::size_t max_leaves) {
    std::vector<std::vector<Word>> raw;
    if (max_leaves >= 1) {
      codes_below(alphabet, Word(), max_depth, max_leaves, raw);
    }
    std::vector<PrefixCode> result;
    result.reserve(raw.size());
    for (auto& words : raw) {
      result.emplace_back(std::move(words));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<PrefixCode> coarsenings(Alphabet alphabet, PrefixCode const& code) {
    if (!is_complete(alphabet, code)) {
      throw Error(ErrorKind::invalid_code, "coarsenings need a complete code");
    }
    std::set<Word> const leaves(code.begin(), code.end());
    std::set<Word> const internal = proper_prefixes(code);
    std::vector<std::vector<Word>> raw;
    coarsenings_below(alphabet, Word(), leaves, internal, raw);
    std::vector<PrefixCode> result;
    result.reserve(raw.size());
    for (auto& words : raw) {
      result.emplace_back(std::move(words));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // ClopenSet
  ////////////////////////////////////////////////////////////////////////

  bool ClopenSet::contains(Point const& x) const {
    return _balls.prefix_of(x).has_value();
  }

  bool ClopenSet::contains_ball(Word const& w) const {
    return _balls.prefix_of(w).has_value();
  }

  ClopenSet clopen_normalize(Alphabet alphabet, std::vector<Word> words) {
    for (auto const& w : words) {
      check_word(alphabet, w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // Drop balls nested in an earlier one; sorted order puts a word right
    // before its extensions.
    std::set<Word> balls;
    Word const*    last_kept = nullptr;
    for (auto const& w : words) {
      if (last_kept != nullptr && last_kept->is_prefix_of(w)) {
        continue;
      }
      last_kept = &*balls.insert(w).first;
    }
    // Merge complete sibling families bottom-up until none remain.
    std::vector<Word> work;
    for (auto const& w : balls) {
      if (!w.empty()) {
        work.push_back(w.parent());
      }
    }
    while (!work.empty()) {
      Word const p = std::move(work.back());
      work.pop_back();
      bool complete = true;
      for (std::size_t a = 0; a < alphabet.size() && complete; ++a) {
        complete = balls.contains(p.child(static_cast<Letter>(a)));
      }
      if (!complete) {
        continue;
      }
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        balls.erase(p.child(static_cast<Letter>(a)));
      }
      balls.insert(p);
      if (!p.empty()) {
        work.push_back(p.parent());
      }
    }
    return ClopenSet(PrefixCode(std::vector<Word>(balls.begin(), balls.end())));
  }

}  // namespace zipper

std::size_t std::hash<zipper::Word>::operator()(
    zipper::Word const& w) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (auto a : w) {
    h = (h ^ a) * 1099511628211ULL;
  }
  return h;
}
