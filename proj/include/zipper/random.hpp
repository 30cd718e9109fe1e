#pragma once

#include <cstddef>
#include <random>

#include "zipper/elements.hpp"

namespace zipper {

  using Rng = std::mt19937_64;

  struct RandomElementOptions {
    std::size_t max_depth = 5;
    // Probability of one more leaf split; the number of splits is geometric.
    double split_probability = 0.75;
  };

  // A complete code obtained from {e} by `splits` splits of random leaves
  // shallower than max_depth (fewer if the tree fills up).
  PrefixCode random_complete_code(Rng&        rng,
                                  Alphabet    alphabet,
                                  std::size_t splits,
                                  std::size_t max_depth);

  // Random source and target codes with the same number of splits, a random
  // leaf bijection and random germs; returned unreduced.
  SimTable random_table(Rng&                        rng,
                        GroupPtr const&             group,
                        RandomElementOptions const& options = {});

  inline CanonicalElement random_element(Rng&                        rng,
                                         GroupPtr const&             group,
                                         RandomElementOptions const& options
                                         = {}) {
    return reduce(random_table(rng, group, options));
  }

  // Prefix of length 0..max_prefix, period of length 1..max_period.
  Point random_point(Rng&        rng,
                     Alphabet    alphabet,
                     std::size_t max_prefix = 6,
                     std::size_t max_period = 4);

  Word random_word(Rng& rng, Alphabet alphabet, std::size_t length);

}  // namespace zipper
