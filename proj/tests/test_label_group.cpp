#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "twistbt/label_group.hpp"

using namespace twistbt;
using namespace twistbt::testing;

namespace {

std::string fmt(const LabelGroup& g, const Word& w) { return g.format_word(g.normalize(w)); }

LabelGroupPtr sym2_free1() { return make_product_kernel(make_symmetric(2, {"s"}), KernelFactor{}, {"t"}); }

// Independent orbit count on S^m: explicit permutation images, closure by
// repeated application of generators.
std::size_t brute_force_orbits(const std::vector<std::vector<std::size_t>>& gens, std::size_t n, std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  std::vector<int> seen(total, 0);
  std::size_t orbits = 0;
  auto decode = [&](std::size_t code) {
    std::vector<std::size_t> t(m);
    for (std::size_t i = 0; i < m; ++i) {
      t[i] = code % n;
      code /= n;
    }
    return t;
  };
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t code = 0;
    for (std::size_t i = m; i-- > 0;) code = code * n + t[i];
    return code;
  };
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      auto t = decode(stack.back());
      stack.pop_back();
      for (const auto& p : gens) {
        std::vector<std::size_t> u(m);
        for (std::size_t i = 0; i < m; ++i) u[i] = p[t[i]];
        std::size_t code = encode(u);
        if (!seen[code]) {
          seen[code] = 1;
          stack.push_back(code);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("normalize examples") {
  auto trivial = make_trivial(2, {"a"});
  CHECK(trivial->normalize(trivial->parse_word("a a^-1")).empty());

  auto c3 = make_cyclic_rotation(3);
  CHECK(c3->normalize(c3->parse_word("r r r")).empty());

  auto pk = sym2_free1();
  CHECK(fmt(*pk, pk->parse_word("t s t s^-1")) == "t t");
}

TEST_CASE("multiply and inverse examples") {
  auto c4 = make_cyclic_rotation(4);
  CHECK(c4->multiply(Word{}, c4->parse_word("r")) == c4->parse_word("r"));
  CHECK(c4->multiply(c4->parse_word("r r"), c4->parse_word("r r")).empty());

  auto pk = sym2_free1();
  CHECK(pk->multiply(pk->parse_word("t"), pk->parse_word("t^-1")).empty());

  auto free2 = make_product_kernel(make_trivial(1), KernelFactor{KernelFactor::Kind::free, 2, {}, {}}, {"a", "b"});
  CHECK(free2->format_word(free2->inverse(free2->parse_word("a b"))) == "b^-1 a^-1");
  CHECK(free2->inverse(Word{}).empty());

  auto c3 = make_cyclic_rotation(3);
  CHECK(fmt(*c3, c3->inverse(c3->parse_word("r"))) == "r r");
}

TEST_CASE("action examples") {
  auto c3 = make_cyclic_rotation(3);
  CHECK(c3->act(Word{}, Color{1}) == Color{1});
  CHECK(c3->act(c3->parse_word("r"), Color{2}) == Color{0});

  auto z = make_translation();
  CHECK(z->act(z->parse_word("t"), Color{5}) == Color{6});
  CHECK(z->act_inverse(z->parse_word("t t"), Color{5}) == Color{3});
}

TEST_CASE("kernel membership examples") {
  auto pk = sym2_free1();
  CHECK(pk->acts_trivially(Word{}));
  CHECK(pk->acts_trivially(pk->parse_word("t")));
  CHECK_FALSE(pk->acts_trivially(pk->parse_word("s")));
  auto c3 = make_cyclic_rotation(3);
  CHECK_FALSE(c3->acts_trivially(c3->parse_word("r")));
  auto z = make_translation();
  CHECK(z->acts_trivially(z->parse_word("t t^-1")));
  CHECK_FALSE(z->acts_trivially(z->parse_word("t")));
}

TEST_CASE("errors") {
  auto c3 = make_cyclic_rotation(3);
  CHECK_THROWS_AS(c3->normalize(Word{Letter{5, 1}}), Error);
  CHECK_THROWS_AS(c3->act(Word{}, Color{3}), Error);
  CHECK_THROWS_AS(c3->parse_word("q"), Error);
  auto z = make_translation();
  CHECK_THROWS_AS(analyze_finite_action(*z, 1), Error);
  CHECK_THROWS_AS(analyze_finite_action(*c3, 4), Error);
}

TEST_CASE("word text round trip") {
  auto pk = sym2_free1();
  const Word w = pk->parse_word("s t^-1 t^-1 s");
  CHECK(pk->parse_word(pk->format_word(w)) == w);
  CHECK(pk->parse_word("t^3") == pk->parse_word("t t t"));
  CHECK(pk->parse_word("1").empty());
}

TEST_CASE("finite kernel factor and free abelian factor") {
  // Z/2 x Z/2 Cayley table with identity 0.
  KernelFactor klein{KernelFactor::Kind::finite, 0, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {1, 2}};
  auto g = make_product_kernel(make_cyclic_rotation(3), klein, {"u", "v"});
  CHECK(g->normalize(g->parse_word("u v u v")).empty());
  CHECK(g->equal(g->parse_word("u v"), g->parse_word("v u")));
  CHECK(g->acts_trivially(g->parse_word("u v")));
  CHECK(enumerate_group(*g).size() == 12);

  auto ab = make_product_kernel(make_trivial(1), KernelFactor{KernelFactor::Kind::free_abelian, 2, {}, {}}, {"x", "y"});
  CHECK(ab->equal(ab->parse_word("x y x^-1"), ab->parse_word("y")));
  CHECK_FALSE(ab->equal(ab->parse_word("x y"), ab->parse_word("y")));
}

TEST_CASE("analyzer examples match brute force") {
  SUBCASE("sym(3), n = 2") {
    auto r = analyze_finite_action(*make_symmetric(3), 2);
    CHECK(r.group_order == 6);
    CHECK(r.orbit_counts == std::vector<std::size_t>{1, 2});
    CHECK(r.orbit_counts[1] == brute_force_orbits({{1, 0, 2}, {1, 2, 0}}, 3, 2));
    CHECK(r.kernel_order == 1);
    CHECK(r.finiteness_clauses_hold);
  }
  SUBCASE("cyclic_rotation(4), n = 2") {
    auto r = analyze_finite_action(*make_cyclic_rotation(4), 2);
    CHECK(r.orbit_counts == std::vector<std::size_t>{1, 4});
    CHECK(r.orbit_counts[1] == brute_force_orbits({{1, 2, 3, 0}}, 4, 2));
  }
  SUBCASE("trivial group on 2 points, n = 1") {
    auto g = make_trivial(2, {"a"});
    auto r = analyze_finite_action(*g, 1);
    CHECK(r.orbit_counts == std::vector<std::size_t>{2});
    CHECK(r.kernel_order == r.group_order);
  }
  SUBCASE("sym(3), n = 3 against brute force") {
    auto r = analyze_finite_action(*make_symmetric(3), 3);
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(r.orbit_counts[m - 1] == brute_force_orbits({{1, 0, 2}, {1, 2, 0}}, 3, m));
    }
    // Pointwise stabilizer orders by enumeration; orbit sizes via the
    // setwise stabilizer and orbit-stabilizer.
    auto g = make_symmetric(3);
    const auto elements = enumerate_group(*g);
    for (const auto& st : r.stabilizers) {
      std::size_t pointwise = 0, setwise = 0;
      for (const Word& e : elements) {
        bool fixes = true;
        std::set<Color> image;
        for (Color c : st.subset) {
          fixes = fixes && g->act(e, c) == c;
          image.insert(g->act(e, c));
        }
        pointwise += fixes ? 1 : 0;
        setwise += image == std::set<Color>(st.subset.begin(), st.subset.end()) ? 1 : 0;
      }
      CHECK(st.stabilizer_order == pointwise);
      CHECK(st.orbit_size * setwise == r.group_order);
    }
  }
}

TEST_CASE("property: action axioms, normal forms, kernel closure") {
  Rng rng(11);
  for (const auto& g : standard_oracles()) {
    CAPTURE(g->kind());
    for (int trial = 0; trial < 100; ++trial) {
      const Word a = random_word(*g, rng, 5);
      const Word b = random_word(*g, rng, 5);
      const Color s = random_color(*g, rng);
      CHECK(g->act(g->multiply(a, b), s) == g->act(a, g->act(b, s)));
      CHECK(g->act(Word{}, s) == s);
      CHECK(g->act_inverse(a, g->act(a, s)) == s);
      const Word n = g->normalize(a);
      CHECK(g->normalize(n) == n);
      CHECK(g->multiply(a, g->inverse(n)).empty());
      // Kernel closure under products and conjugation.
      Word k1 = g->multiply(a, g->inverse(a));
      if (!g->acts_trivially(a)) continue;
      CHECK(g->acts_trivially(g->multiply(a, k1)));
      CHECK(g->acts_trivially(g->multiply(g->multiply(b, a), g->inverse(b))));
    }
  }
}

TEST_CASE("acts_trivially agrees with exhaustive color check on finite S") {
  Rng rng(12);
  for (const auto& g : standard_oracles()) {
    if (!g->color_count()) continue;
    for (int trial = 0; trial < 100; ++trial) {
      const Word a = random_word(*g, rng, 5);
      bool fixes_all = true;
      for (Color s : g->colors()) fixes_all = fixes_all && g->act(a, s) == s;
      CHECK(g->acts_trivially(a) == fixes_all);
    }
  }
}
