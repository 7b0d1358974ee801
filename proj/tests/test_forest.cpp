#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "twistbt/forest.hpp"

using namespace twistbt;
using namespace twistbt::testing;

namespace {

const Color r{0}, b{1}, g{2};

Tree x(Color s) { return Tree::simple_split(s); }

Brick brick(std::map<Color, std::string> m) { return Brick(std::move(m)); }

// Independent leaf computation for a composite: concatenate each leaf of
// `after` onto the corresponding leaf of `before`.
std::vector<LeafAddress> composite_leaves(const Forest& after, const Forest& before) {
  std::vector<LeafAddress> out;
  const auto outer = before.leaves();
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (const Brick& inner : after.tree(i).leaves()) out.push_back(LeafAddress{outer[i].root, outer[i].brick.concat(inner)});
  }
  return out;
}

bool pairwise_incompatible(const std::vector<Brick>& bricks) {
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    for (std::size_t j = i + 1; j < bricks.size(); ++j) {
      if (!bricks[i].disjoint(bricks[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("split_brick examples") {
  auto [a0, a1] = split_brick(Brick{}, r);
  CHECK(a0 == brick({{r, "0"}}));
  CHECK(a1 == brick({{r, "1"}}));
  auto [c0, c1] = split_brick(brick({{r, "1"}}), b);
  CHECK(c0 == brick({{r, "1"}, {b, "0"}}));
  CHECK(c1 == brick({{r, "1"}, {b, "1"}}));
  auto [d0, d1] = split_brick(brick({{r, "1"}}), r);
  CHECK(d0 == brick({{r, "10"}}));
  CHECK(d1 == brick({{r, "11"}}));
}

TEST_CASE("tree_leaves examples") {
  CHECK(tree_leaves(Tree::leaf()) == std::vector<Brick>{Brick{}});
  CHECK(tree_leaves(x(r)) == std::vector<Brick>{brick({{r, "0"}}), brick({{r, "1"}})});

  // (x_g + 1 + x_r + 1) o (x_b + x_b) o x_r
  const Forest stage1 = Forest::single(x(r));
  const Forest stage2({x(b), x(b)});
  const Forest stage3({x(g), Tree::leaf(), x(r), Tree::leaf()});
  const Forest mf = compose_forests(stage3, compose_forests(stage2, stage1));
  const auto leaves = tree_leaves(mf.tree(0));
  REQUIRE(leaves.size() == 6);
  CHECK(leaves[3] == brick({{r, "10"}, {b, "0"}}));
  CHECK(leaves[3].bits(g).empty());
  CHECK(measures_sum_to_one(leaves));
}

TEST_CASE("compose_forests examples") {
  const Tree t = Tree::split(r, x(b), Tree::leaf());
  CHECK(compose_forests(Forest::identity(3), Forest::single(t)) == Forest::single(t));
  const Forest cross = compose_forests(Forest({x(b), x(b)}), Forest::single(x(r)));
  CHECK(cross.tree(0).leaves() == std::vector<Brick>{brick({{r, "0"}, {b, "0"}}), brick({{r, "0"}, {b, "1"}}),
                                                      brick({{r, "1"}, {b, "0"}}), brick({{r, "1"}, {b, "1"}})});
  const Forest sum = direct_sum(Forest::single(x(r)), Forest::single(Tree::leaf()));
  CHECK(sum.domain_arity() == 2);
  CHECK(sum.range_arity() == 3);
  CHECK_THROWS_AS(compose_forests(Forest::identity(3), Forest::single(x(r))), Error);
}

TEST_CASE("common_refinement examples") {
  SUBCASE("equal inputs") {
    auto ref = common_refinement(x(r), x(r));
    CHECK(ref.left == Forest::identity(2));
    CHECK(ref.right == Forest::identity(2));
    CHECK(ref.matching.is_identity());
  }
  SUBCASE("cross relation") {
    auto ref = common_refinement(x(r), x(b));
    CHECK(ref.left == Forest({x(b), x(b)}));
    CHECK(ref.right == Forest({x(r), x(r)}));
    CHECK(ref.matching == Permutation::from_one_based(std::vector<std::size_t>{1, 3, 2, 4}));
  }
  SUBCASE("trivial first tree") {
    const Tree other = Tree::split(b, x(r), Tree::leaf());
    auto ref = common_refinement(Tree::leaf(), other);
    CHECK(ref.left == Forest::single(other));
    CHECK(ref.right == Forest::identity(3));
    CHECK(ref.matching.is_identity());
  }
}

TEST_CASE("tree_for_brick examples") {
  auto [t0, i0] = tree_for_brick(Brick{});
  CHECK(t0.is_leaf());
  CHECK(i0 == 0);

  auto [t1, i1] = tree_for_brick(brick({{r, "1"}, {b, "0"}}));
  CHECK(t1 == Tree::split(r, Tree::leaf(), x(b)));
  CHECK(i1 == 1);  // the middle leaf of three

  const Color s{0};
  auto [t2, i2] = tree_for_brick(brick({{s, "01"}}));
  CHECK(t2 == Tree::split(s, x(s), Tree::leaf()));
  CHECK(i2 == 1);
}

TEST_CASE("varsigma") {
  // The first leaf of (1 2) is doubled: the 3-cycle 1 -> 2 -> 3 -> 1.
  const Permutation p = varsigma(Permutation::from_one_based(std::vector<std::size_t>{2, 1}), 0);
  CHECK(p == Permutation::from_one_based(std::vector<std::size_t>{2, 3, 1}));
  CHECK(varsigma(Permutation::identity(3), 1).is_identity());
}

TEST_CASE("tree_from_partition and separating_tree") {
  const Tree t = Tree::split(b, Tree::split(r, x(g), Tree::leaf()), x(r));
  auto leaves = t.leaves();
  std::reverse(leaves.begin(), leaves.end());
  const Tree canon = tree_from_partition(leaves);
  auto canon_leaves = canon.leaves();
  auto sorted = t.leaves();
  std::sort(sorted.begin(), sorted.end());
  std::sort(canon_leaves.begin(), canon_leaves.end());
  CHECK(canon_leaves == sorted);
  // Not arboreal: the pinwheel-free but incomplete set {r0} alone.
  CHECK_THROWS_AS(tree_from_partition({brick({{r, "0"}})}), Error);

  const std::vector<Brick> u{brick({{r, "1"}, {b, "0"}}), brick({{r, "00"}})};
  const Tree sep = separating_tree(u);
  for (const Brick& leaf : sep.leaves()) {
    int inside = 0;
    for (const Brick& piece : u) {
      if (piece.contains(leaf)) ++inside;
      else CHECK(piece.disjoint(leaf));
    }
    CHECK(inside <= 1);
  }
}

TEST_CASE("tree_for_two_bricks") {
  const Brick a = brick({{r, "01"}, {b, "1"}});
  const Brick c = brick({{r, "1"}, {g, "00"}});
  auto two = tree_for_two_bricks(a, c);
  const auto leaves = two.tree.leaves();
  CHECK(leaves.at(two.first) == a);
  CHECK(leaves.at(two.second) == c);
  CHECK_THROWS_AS(tree_for_two_bricks(a, brick({{r, "0"}})), Error);
}

TEST_CASE("property: partition law on random trees") {
  Rng rng(21);
  auto s3 = make_symmetric(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(*s3, rng, 1 + trial % 9);
    const auto leaves = t.leaves();
    CHECK(leaves.size() == t.leaf_count());
    CHECK(measures_sum_to_one(leaves));
    CHECK(pairwise_incompatible(leaves));
  }
}

TEST_CASE("property: composition coherence") {
  Rng rng(22);
  auto s3 = make_symmetric(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Tree> roots;
    const std::size_t m = 1 + trial % 3;
    for (std::size_t i = 0; i < m; ++i) roots.push_back(random_tree(*s3, rng, 1 + (trial + i) % 4));
    const Forest before(roots);
    std::vector<Tree> after;
    for (std::size_t i = 0; i < before.range_arity(); ++i) after.push_back(random_tree(*s3, rng, 1 + (trial * 7 + i) % 3));
    const Forest a(after);
    CHECK(compose_forests(a, before).leaves() == composite_leaves(a, before));
  }
}

TEST_CASE("property: refinement soundness") {
  Rng rng(23);
  auto s3 = make_symmetric(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(*s3, rng, 1 + trial % 7);
    const Tree u = random_tree(*s3, rng, 1 + (trial / 7) % 7);
    const Refinement ref = common_refinement(t, u);
    const auto left = compose_forests(ref.left, Forest::single(t)).leaves();
    const auto right = compose_forests(ref.right, Forest::single(u)).leaves();
    REQUIRE(left.size() == right.size());
    REQUIRE(ref.matching.size() == left.size());
    for (std::size_t j = 0; j < right.size(); ++j) CHECK(left[ref.matching(j)] == right[j]);
    // refine_tree refines both partitions.
    const Tree common = refine_tree(t, u);
    for (const Brick& leaf : common.leaves()) {
      const auto ul = u.leaves();
      CHECK(std::any_of(ul.begin(), ul.end(), [&](const Brick& p) { return p.contains(leaf); }));
    }
  }
}
