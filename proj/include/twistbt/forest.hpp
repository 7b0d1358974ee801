#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistbt/label_group.hpp"

namespace twistbt {

/// A dyadic brick B(psi): a finitely supported map from colors to binary
/// prefixes.  Colors mapped to the empty word are simply absent.
class Brick {
 public:
  Brick() = default;
  explicit Brick(std::map<Color, std::string> bits);

  const std::map<Color, std::string>& entries() const { return bits_; }
  std::string_view bits(Color s) const;
  bool is_whole_space() const { return bits_.empty(); }
  std::size_t total_length() const;

  Brick extended(Color s, char bit) const;
  std::pair<Brick, Brick> split(Color s) const;

  /// True when `inner` is a sub-brick of this brick.
  bool contains(const Brick& inner) const;
  bool disjoint(const Brick& other) const;

  /// Coordinatewise concatenation this(s) . suffix(s).
  Brick concat(const Brick& suffix) const;
  /// Inverse of concat: requires contains(inner).
  Brick strip(const Brick& inner) const;
  /// The brick g.B: the bits at color s move to color g.s.
  Brick moved_by(const LabelGroup& group, const Word& g) const;

  friend auto operator<=>(const Brick&, const Brick&) = default;

 private:
  std::map<Color, std::string> bits_;
};

/// Exact test that the measures 2^-|psi| of the bricks sum to one.
bool measures_sum_to_one(std::span<const Brick> bricks);

/// Binary tree whose internal nodes are labeled by colors.  Immutable; nodes
/// are shared between copies.
class Tree {
 public:
  Tree() = default;  // the trivial tree
  static Tree leaf() { return Tree(); }
  static Tree split(Color s, Tree child0, Tree child1);
  /// The simple split x_s.
  static Tree simple_split(Color s) { return split(s, leaf(), leaf()); }

  bool is_leaf() const { return node_ == nullptr; }
  Color color() const;
  const Tree& child(int i) const;
  std::size_t leaf_count() const;

  /// Leaf addresses, child0 before child1.
  std::vector<Brick> leaves() const;

  Tree split_leaf(std::size_t k, Color s) const;
  /// Graft `subtrees[i]` onto leaf i.
  Tree graft(std::span<const Tree> subtrees) const;
  /// The subtree growing out of the leaf with address `at`; nullopt when no
  /// node of this tree has that address.
  std::optional<Tree> subtree_at(const Brick& at) const;
  /// When leaves k and k+1 are the two children of one node, its color.
  std::optional<Color> cherry_color(std::size_t k) const;
  Tree collapse_cherry(std::size_t k) const;

  std::set<Color> colors() const;
  std::size_t depth() const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Color color;
  Tree child0;
  Tree child1;
  std::size_t leaves;
};

inline std::size_t Tree::leaf_count() const { return node_ ? node_->leaves : 1; }

/// Position of a leaf of a forest: which root it grows from and its brick
/// inside that copy of C^S.
struct LeafAddress {
  std::size_t root = 0;
  Brick brick;

  friend auto operator<=>(const LeafAddress&, const LeafAddress&) = default;
};

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  static Forest identity(std::size_t arity);
  static Forest single(Tree tree) { return Forest(std::vector<Tree>{std::move(tree)}); }

  std::span<const Tree> trees() const { return trees_; }
  const Tree& tree(std::size_t i) const { return trees_.at(i); }
  std::size_t domain_arity() const { return trees_.size(); }
  std::size_t range_arity() const;

  std::vector<LeafAddress> leaves() const;
  /// Root index and index inside that tree of the global leaf k.
  std::pair<std::size_t, std::size_t> locate_leaf(std::size_t k) const;

  Forest split_leaf(std::size_t k, Color s) const;
  std::optional<Color> cherry_color(std::size_t k) const;
  Forest collapse_cherry(std::size_t k) const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

/// Forest direct sum F (+) F'.
Forest direct_sum(const Forest& a, const Forest& b);

/// F o F' (F' applied first): tree i of F is grafted onto leaf i of F'.
Forest compose_forests(const Forest& after, const Forest& before);

/// Permutation of {0..n-1}; `image(i)` is where i is sent.  Text forms use
/// 1-based images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// From 1-based images.
  static Permutation from_one_based(std::span<const std::size_t> images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  std::span<const std::size_t> images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (*this o other)(i) = (*this)(other(i)).
  Permutation after(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// The permutation (sigma)varsigma_k^n on n+1 points: leaf k is doubled on
/// both sides and the two halves keep their order.
Permutation varsigma(const Permutation& sigma, std::size_t k);

/// Split ψ into its halves along color s.
std::pair<Brick, Brick> split_brick(const Brick& psi, Color s);

std::vector<Brick> tree_leaves(const Tree& tree);

struct Refinement {
  Forest left;           // E
  Forest right;          // E'
  Permutation matching;  // sigma with E o T = p_sigma o E' o T'
};

/// Forests E, E' and sigma with E o T = p_sigma o E' o T'.  Follows the
/// inductive proof: peel the root split of T and push it through T' with
/// cross relations.
Refinement common_refinement(const Tree& tree, const Tree& other);

/// A refinement of `tree` whose leaf partition also refines `other`.
Tree refine_tree(const Tree& tree, const Tree& other);

/// A tree with ψ among its leaves, built by splitting color by color in
/// increasing color order, and the index of that leaf.
std::pair<Tree, std::size_t> tree_for_brick(const Brick& psi);

/// The canonical tree whose leaves are exactly `bricks` (as a set),
/// splitting at each node on the least color all bricks share.  Throws if
/// the partition is not arboreal.
Tree tree_from_partition(std::vector<Brick> bricks);

/// A tree each of whose leaves is inside exactly one of the pairwise
/// disjoint `bricks` or disjoint from all of them.
Tree separating_tree(const std::vector<Brick>& bricks);

/// A tree having both disjoint bricks as leaves; returns leaf indices.
struct TwoBrickTree {
  Tree tree;
  std::size_t first = 0;
  std::size_t second = 0;
};
TwoBrickTree tree_for_two_bricks(const Brick& a, const Brick& b);

}  // namespace twistbt
