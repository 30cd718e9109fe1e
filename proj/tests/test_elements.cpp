#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "zipper/error.hpp"
#include "zipper/literal.hpp"
#include "zipper/random.hpp"

using namespace zipper;

namespace {
  GroupPtr const V  = SelfSimilarGroup::trivial(2);
  GroupPtr const S2 = SelfSimilarGroup::symmetric(2);

  SimTable table(GroupPtr const& h, char const* s) {
    return parse_table(h, s);
  }
  CanonicalElement elt(GroupPtr const& h, char const* s) {
    return parse_element(h, s);
  }
  PrefixCode code(std::initializer_list<char const*> words) {
    std::vector<Word> v;
    for (auto s : words) {
      v.push_back(parse_word(Alphabet(2), s));
    }
    return PrefixCode(v);
  }
  std::set<Word> as_set(PrefixCode const& c) {
    return {c.begin(), c.end()};
  }
  std::vector<std::string> kinds(SimTable const& t) {
    std::vector<std::string> out;
    for (auto const& v : validate_table(t)) {
      out.push_back(v.kind);
    }
    return out;
  }

  auto const x0 = "00->0;01->10;1->11";
  auto const x1 = "0->0;100->10;101->110;11->111";
}  // namespace

TEST_CASE("validate_table") {
  CHECK(validate_table(SimTable::identity(V)).empty());
  CHECK(kinds(table(V, "0->0")) == std::vector<std::string>{"incomplete-domain",
                                                             "incomplete-range"});
  auto const k = kinds(table(V, "0->0;1->0"));
  CHECK(std::find(k.begin(), k.end(), "target-not-antichain") != k.end());
  CHECK(kinds(table(S2, "e->e:p10")).empty());
  CHECK_FALSE(kinds(SimTable(S2, TableKind::group_element, Word(), {{{}, {}, 7}})).empty());
  // Embeddings: antichain targets suffice.
  SimTable const f(V, TableKind::embedding, Word{1}, {{{1, 0}, {1, 0}}, {{1, 1}, {1, 1, 1}}});
  CHECK(validate_table(f).empty());
  SimTable const g(V, TableKind::embedding, Word{1}, {{{0}, {0}}, {{1}, {1}}});
  CHECK(kinds(g) == std::vector<std::string>{"source-outside-domain"});
}

TEST_CASE("parse_table errors carry positions") {
  try {
    parse_table(V, "00->0;01-10");
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_table(V, "0->0:nosuch;1->1"), Error);
  try {
    parse_element(V, "0->0");
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::invalid_table);
    CHECK(std::string(e.what()).find("incomplete-domain") != std::string::npos);
  }
}

TEST_CASE("expand_at") {
  auto const e = expand_at(SimTable::identity(V), Word{});
  CHECK(e.rows() == std::vector<Row>{{{0}, {0}, 0}, {{1}, {1}, 0}});
  auto const s = expand_at(SimTable::global(S2, 1), Word{});
  CHECK(s.rows() == std::vector<Row>{{{0}, {1}, 1}, {{1}, {0}, 1}});
  try {
    expand_at(s, Word{1, 1});
    FAIL("accepted");
  } catch (Error const& err) {
    CHECK(err.kind() == ErrorKind::no_such_row);
  }
  auto const g = elt(V, x0);
  CHECK(reduce(expand_at(g.table(), Word{1})) == g);
}

TEST_CASE("reduce") {
  CHECK(reduce(table(V, "0->0;1->1")) == identity_element(V));
  CHECK(reduce(table(V, x0)).table() == table(V, x0));
  CHECK(reduce(table(S2, "0->1:p10;1->0:p10")).table() == SimTable::global(S2, 1));
  // Oracle: no region of x0 strictly contains one of its rows.
  CHECK(oracle::max_partition(table(V, x0)) == as_set(code({"00", "01", "1"})));
}

TEST_CASE("compose and invert") {
  auto const g  = elt(V, x0);
  auto const id = identity_element(V);
  CHECK(compose(g, id) == g);
  CHECK(compose(id, g) == g);
  CHECK(compose(g, invert(g)) == id);
  CHECK(invert(id) == id);
  CHECK(invert(g).table() == table(V, "0->00;10->01;11->1"));
  CHECK(oracle::swap_columns(table(V, x0)) == table(V, "0->00;10->01;11->1"));

  // x0 after x0, evaluated word by word on all depth-4 words.
  auto const      t = table(V, x0);
  oracle::Eval const twice = [&](Word const& u) -> std::optional<Word> {
    auto const a = oracle::eval(t, u);
    return a ? oracle::eval(t, *a) : std::nullopt;
  };
  auto const semantic = oracle::max_partition(twice, V->tables(), 3, 5);
  REQUIRE(semantic == as_set(code({"000", "001", "01", "1"})));
  CHECK(as_set(max_partition(compose(g, g))) == semantic);

  CHECK_THROWS_AS(compose(g, identity_element(S2)), Error);
  try {
    compose(g, identity_element(SelfSimilarGroup::trivial(3)));
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::incompatible_elements);
  }
}

TEST_CASE("invert rejects embeddings") {
  auto const f = reduce(SimTable::ball_inclusion(V, Word{0}));
  try {
    invert(f);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_invertible);
  }
}

TEST_CASE("apply") {
  Alphabet const a(2);
  auto const     g = elt(V, x0);
  auto const     p = [&](char const* s) { return parse_point(a, s); };
  CHECK(apply(g, p("00(0)")) == p("0(0)"));
  CHECK(apply(g, p("1(1)")) == p("11(1)"));
  CHECK(apply(identity_element(V), p("01(10)")) == p("01(10)"));
  CHECK(apply(elt(S2, "e->e:p10"), p("01(10)")) == p("10(01)"));
}

TEST_CASE("max_partition") {
  CHECK(max_partition(identity_element(V)) == code({"e"}));
  CHECK(max_partition(elt(V, x0)) == code({"00", "01", "1"}));
  CHECK(max_partition(elt(S2, "e->e:p10")) == code({"e"}));
  CHECK(max_partition(elt(V, x1)) == code({"0", "100", "101", "11"}));
}

TEST_CASE("is_in_F and is_in_T") {
  auto const id = identity_element(V);
  CHECK(is_in_F(id));
  CHECK(is_in_T(id));
  CHECK(is_in_F(elt(V, x0)));
  CHECK(is_in_F(elt(V, x1)));
  auto const c = elt(V, "00->01;01->1;1->00");
  CHECK_FALSE(is_in_F(c));
  CHECK(is_in_T(c));
  auto const pi0 = elt(V, "0->10;10->0;11->11");
  CHECK_FALSE(is_in_T(pi0));
  CHECK_THROWS_AS(is_in_F(identity_element(S2)), Error);
}

TEST_CASE("enumerate_gamma") {
  auto const e = code({"e"});
  auto const g = enumerate_gamma(V, e, e);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == identity_element(V));

  auto const split = code({"0", "1"});
  auto const swap  = enumerate_gamma(V, split, split);
  REQUIRE(swap.size() == 1);
  CHECK(swap[0].table() == table(V, "0->1;1->0"));

  auto const s2 = enumerate_gamma(S2, e, e);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == identity_element(S2));
  CHECK(s2[1].table() == SimTable::global(S2, 1));

  CHECK(enumerate_gamma(V, e, split).empty());
  CHECK_THROWS_AS(enumerate_gamma(V, code({"0"}), code({"0"})), Error);
}

TEST_CASE("enumerate_gamma_ref is the union over coarsenings") {
  for (auto const& h : {V, S2}) {
    auto const p = code({"00", "01", "1"});
    auto const q = code({"0", "10", "11"});
    std::set<CanonicalElement> brute;
    for (auto const& pp : coarsenings(Alphabet(2), p)) {
      for (auto const& qq : coarsenings(Alphabet(2), q)) {
        for (auto const& g : enumerate_gamma(h, pp, qq)) {
          brute.insert(g);
        }
      }
    }
    auto const ref = enumerate_gamma_ref(h, p, q);
    CHECK(std::vector(brute.begin(), brute.end()) == ref);
    // Gamma({e},{e}) has |H| members. Gamma({0,1},{0,1}): 2 bijections x
    // |H|^2 germ pairs, less the |H| that merge to the root. Gamma(p, q): 6
    // bijections x |H|^3, less the |H| x |H| merging 00,01 onto 10,11.
    CHECK(ref.size() == (h == V ? 1u + 1u + 5u : 2u + 6u + 44u));
  }
}

TEST_CASE("image of the maximum partition is the maximum partition of the inverse") {
  Rng rng(31);
  for (auto const& h : {V, S2, SelfSimilarGroup::symmetric(3)}) {
    for (int i = 0; i < 200; ++i) {
      auto const      g = random_element(rng, h);
      std::set<Word> images;
      for (auto const& r : g.rows()) {
        images.insert(r.target);
      }
      CHECK(images == as_set(max_partition(invert(g))));
      if (h->degree() == 2) {
        CHECK(as_set(max_partition(g)) == oracle::max_partition(g.table()));
      }
    }
  }
}

TEST_CASE("group laws and confluence on random elements") {
  Rng rng(7);
  for (auto const& h : {V, S2, SelfSimilarGroup::trivial(3), SelfSimilarGroup::symmetric(3)}) {
    auto const id = identity_element(h);
    for (int i = 0; i < 100; ++i) {
      auto const g = random_element(rng, h);
      auto const k = random_element(rng, h);
      auto const l = random_element(rng, h);
      CHECK(compose(compose(g, k), l) == compose(g, compose(k, l)));
      CHECK(compose(g, invert(g)) == id);
      CHECK(compose(invert(g), g) == id);
      CHECK(invert(invert(g)) == g);
      CHECK(parse_element(h, format_element(g)) == g);

      auto t = g.table();
      for (int j = 0; j < 4; ++j) {
        auto const& rows = t.rows();
        t = expand_at(t, rows[rng() % rows.size()].source);
      }
      CHECK(reduce(t) == g);

      for (int j = 0; j < 10; ++j) {
        auto const x = random_point(rng, h->alphabet());
        CHECK(apply(compose(g, k), x) == apply(g, apply(k, x)));
        CHECK(apply(t, x) == apply(g, x));
      }
    }
  }
}

TEST_CASE("canonical forms hash consistently") {
  Rng rng(2);
  std::hash<CanonicalElement> hash;
  for (int i = 0; i < 50; ++i) {
    auto const g = random_element(rng, S2);
    auto       t = expand_at(g.table(), g.rows().front().source);
    CHECK(hash(reduce(t)) == hash(g));
  }
}
