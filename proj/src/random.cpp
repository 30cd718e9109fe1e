#include "zipper/random.hpp"

#include <algorithm>
#include <numeric>

namespace zipper {

  namespace {
    std::size_t uniform(Rng& rng, std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }

    // Returns the leaves and the number of splits actually performed.
    std::pair<std::vector<Word>, std::size_t> split_leaves(Rng&        rng,
                                                           Alphabet    alphabet,
                                                           std::size_t splits,
                                                           std::size_t max_depth) {
      std::vector<Word> leaves{Word()};
      std::size_t       done = 0;
      for (; done < splits; ++done) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < leaves.size(); ++i) {
          if (leaves[i].size() < max_depth) {
            open.push_back(i);
          }
        }
        if (open.empty()) {
          break;
        }
        std::size_t const i    = open[uniform(rng, open.size())];
        Word const        leaf = leaves[i];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
          leaves.push_back(leaf.child(static_cast<Letter>(a)));
        }
      }
      return {std::move(leaves), done};
    }
  }  // namespace

  PrefixCode random_complete_code(Rng&        rng,
                                  Alphabet    alphabet,
                                  std::size_t splits,
                                  std::size_t max_depth) {
    return PrefixCode(split_leaves(rng, alphabet, splits, max_depth).first);
  }

  SimTable random_table(Rng&                        rng,
                        GroupPtr const&             group,
                        RandomElementOptions const& options) {
    auto const  alphabet = group->alphabet();
    std::size_t splits   = 0;
    std::bernoulli_distribution more(options.split_probability);
    while (more(rng)) {
      ++splits;
    }
    auto [sources, done] = split_leaves(rng, alphabet, splits, options.max_depth);
    auto targets = split_leaves(rng, alphabet, done, options.max_depth).first;
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<Row> rows;
    rows.reserve(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
      rows.push_back({std::move(sources[i]),
                      std::move(targets[i]),
                      static_cast<ElementId>(uniform(rng, group->order()))});
    }
    return SimTable(group, TableKind::group_element, Word(), std::move(rows));
  }

  Word random_word(Rng& rng, Alphabet alphabet, std::size_t length) {
    std::vector<Letter> letters(length);
    for (auto& a : letters) {
      a = static_cast<Letter>(uniform(rng, alphabet.size()));
    }
    return Word(std::move(letters));
  }

  Point random_point(Rng&        rng,
                     Alphabet    alphabet,
                     std::size_t max_prefix,
                     std::size_t max_period) {
    auto prefix = random_word(rng, alphabet, uniform(rng, max_prefix + 1));
    auto period = random_word(rng, alphabet, 1 + uniform(rng, max_period));
    return Point(std::move(prefix), std::move(period));
  }

}  // namespace zipper
