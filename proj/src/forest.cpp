#include "twistbt/forest.hpp"

#include <algorithm>
#include <numeric>

namespace twistbt {

// ---------------------------------------------------------------------------
// Brick

Brick::Brick(std::map<Color, std::string> bits) {
  for (auto& [s, word] : bits) {
    if (!std::all_of(word.begin(), word.end(), [](char c) { return c == '0' || c == '1'; })) {
      throw Error("brick bits must be binary, got '" + word + "'");
    }
    if (!word.empty()) bits_.emplace(s, std::move(word));
  }
}

std::string_view Brick::bits(Color s) const {
  auto it = bits_.find(s);
  return it == bits_.end() ? std::string_view{} : std::string_view{it->second};
}

std::size_t Brick::total_length() const {
  std::size_t total = 0;
  for (const auto& [s, word] : bits_) total += word.size();
  return total;
}

Brick Brick::extended(Color s, char bit) const {
  Brick out = *this;
  out.bits_[s].push_back(bit);
  return out;
}

std::pair<Brick, Brick> Brick::split(Color s) const { return {extended(s, '0'), extended(s, '1')}; }

bool Brick::contains(const Brick& inner) const {
  return std::all_of(bits_.begin(), bits_.end(), [&](const auto& entry) {
    return inner.bits(entry.first).substr(0, entry.second.size()) == entry.second;
  });
}

bool Brick::disjoint(const Brick& other) const {
  for (const auto& [s, word] : bits_) {
    std::string_view theirs = other.bits(s);
    std::size_t common = std::min(word.size(), theirs.size());
    if (std::string_view(word).substr(0, common) != theirs.substr(0, common)) return true;
  }
  return false;
}

Brick Brick::concat(const Brick& suffix) const {
  Brick out = *this;
  for (const auto& [s, word] : suffix.bits_) out.bits_[s] += word;
  return out;
}

Brick Brick::strip(const Brick& inner) const {
  if (!contains(inner)) throw Error("strip: brick is not contained in the prefix brick");
  std::map<Color, std::string> rest;
  for (const auto& [s, word] : inner.bits_) rest.emplace(s, word.substr(bits(s).size()));
  return Brick(std::move(rest));
}

Brick Brick::moved_by(const LabelGroup& group, const Word& g) const {
  std::map<Color, std::string> moved;
  for (const auto& [s, word] : bits_) moved.emplace(group.act(g, s), word);
  return Brick(std::move(moved));
}

bool measures_sum_to_one(std::span<const Brick> bricks) {
  // Carry counts of 2^-L upward; the sum is 1 exactly when a single unit
  // remains at level 0.
  std::map<std::size_t, std::size_t, std::greater<>> counts;
  for (const Brick& b : bricks) ++counts[b.total_length()];
  while (!counts.empty()) {
    auto [level, count] = *counts.begin();
    counts.erase(counts.begin());
    if (level == 0) return count == 1 && counts.empty();
    if (count % 2 != 0) return false;
    counts[level - 1] += count / 2;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Tree

Tree Tree::split(Color s, Tree child0, Tree child1) {
  std::size_t leaves = child0.leaf_count() + child1.leaf_count();
  return Tree(std::make_shared<const Node>(Node{s, std::move(child0), std::move(child1), leaves}));
}

Color Tree::color() const {
  if (!node_) throw Error("a leaf has no color");
  return node_->color;
}

const Tree& Tree::child(int i) const {
  if (!node_) throw Error("a leaf has no children");
  return i == 0 ? node_->child0 : node_->child1;
}

namespace {

void collect_leaves(const Tree& t, const Brick& prefix, std::vector<Brick>& out) {
  if (t.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  collect_leaves(t.child(0), prefix.extended(t.color(), '0'), out);
  collect_leaves(t.child(1), prefix.extended(t.color(), '1'), out);
}

}  // namespace

std::vector<Brick> Tree::leaves() const {
  std::vector<Brick> out;
  out.reserve(leaf_count());
  collect_leaves(*this, Brick{}, out);
  return out;
}

Tree Tree::split_leaf(std::size_t k, Color s) const {
  if (k >= leaf_count()) throw Error("leaf index out of range");
  if (is_leaf()) return simple_split(s);
  const std::size_t left = node_->child0.leaf_count();
  if (k < left) return split(node_->color, node_->child0.split_leaf(k, s), node_->child1);
  return split(node_->color, node_->child0, node_->child1.split_leaf(k - left, s));
}

Tree Tree::graft(std::span<const Tree> subtrees) const {
  if (subtrees.size() != leaf_count()) throw Error("graft: need one subtree per leaf");
  if (is_leaf()) return subtrees.front();
  const std::size_t left = node_->child0.leaf_count();
  return split(node_->color, node_->child0.graft(subtrees.first(left)), node_->child1.graft(subtrees.subspan(left)));
}

std::optional<Tree> Tree::subtree_at(const Brick& at) const {
  if (at.is_whole_space()) return *this;
  if (is_leaf()) return std::nullopt;
  std::string_view word = at.bits(node_->color);
  if (word.empty()) return std::nullopt;
  std::map<Color, std::string> rest = at.entries();
  rest[node_->color] = std::string(word.substr(1));
  return child(word[0] == '0' ? 0 : 1).subtree_at(Brick(std::move(rest)));
}

std::optional<Color> Tree::cherry_color(std::size_t k) const {
  if (is_leaf() || k + 1 >= leaf_count()) return std::nullopt;
  const Tree& c0 = node_->child0;
  const Tree& c1 = node_->child1;
  if (k == 0 && c0.is_leaf() && c1.is_leaf()) return node_->color;
  const std::size_t left = c0.leaf_count();
  if (k + 1 < left) return c0.cherry_color(k);
  if (k >= left) return c1.cherry_color(k - left);
  return std::nullopt;
}

Tree Tree::collapse_cherry(std::size_t k) const {
  if (!cherry_color(k)) throw Error("leaves are not siblings");
  if (node_->child0.is_leaf() && node_->child1.is_leaf()) return leaf();
  const std::size_t left = node_->child0.leaf_count();
  if (k + 1 < left) return split(node_->color, node_->child0.collapse_cherry(k), node_->child1);
  return split(node_->color, node_->child0, node_->child1.collapse_cherry(k - left));
}

std::set<Color> Tree::colors() const {
  std::set<Color> out;
  if (is_leaf()) return out;
  out.insert(node_->color);
  out.merge(node_->child0.colors());
  out.merge(node_->child1.colors());
  return out;
}

std::size_t Tree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(node_->child0.depth(), node_->child1.depth());
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.node_->color == b.node_->color && a.node_->child0 == b.node_->child0 && a.node_->child1 == b.node_->child1;
}

// ---------------------------------------------------------------------------
// Forest

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw Error("a forest needs at least one tree");
}

Forest Forest::identity(std::size_t arity) { return Forest(std::vector<Tree>(arity)); }

std::size_t Forest::range_arity() const {
  std::size_t total = 0;
  for (const Tree& t : trees_) total += t.leaf_count();
  return total;
}

std::vector<LeafAddress> Forest::leaves() const {
  std::vector<LeafAddress> out;
  for (std::size_t r = 0; r < trees_.size(); ++r) {
    for (Brick& b : trees_[r].leaves()) out.push_back(LeafAddress{r, std::move(b)});
  }
  return out;
}

std::pair<std::size_t, std::size_t> Forest::locate_leaf(std::size_t k) const {
  for (std::size_t r = 0; r < trees_.size(); ++r) {
    if (k < trees_[r].leaf_count()) return {r, k};
    k -= trees_[r].leaf_count();
  }
  throw Error("leaf index out of range");
}

Forest Forest::split_leaf(std::size_t k, Color s) const {
  auto [root, local] = locate_leaf(k);
  Forest out = *this;
  out.trees_[root] = trees_[root].split_leaf(local, s);
  return out;
}

std::optional<Color> Forest::cherry_color(std::size_t k) const {
  if (k + 1 >= range_arity()) return std::nullopt;
  auto [root, local] = locate_leaf(k);
  return trees_[root].cherry_color(local);
}

Forest Forest::collapse_cherry(std::size_t k) const {
  auto [root, local] = locate_leaf(k);
  Forest out = *this;
  out.trees_[root] = trees_[root].collapse_cherry(local);
  return out;
}

Forest direct_sum(const Forest& a, const Forest& b) {
  std::vector<Tree> trees(a.trees().begin(), a.trees().end());
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  return Forest(std::move(trees));
}

Forest compose_forests(const Forest& after, const Forest& before) {
  if (after.domain_arity() != before.range_arity()) {
    throw Error("compose_forests: arity mismatch (" + std::to_string(after.domain_arity()) + " roots vs " +
                std::to_string(before.range_arity()) + " leaves)");
  }
  std::vector<Tree> trees;
  std::size_t next = 0;
  for (const Tree& t : before.trees()) {
    trees.push_back(t.graft(after.trees().subspan(next, t.leaf_count())));
    next += t.leaf_count();
  }
  return Forest(std::move(trees));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("images do not form a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> images) {
  std::vector<std::size_t> zero_based;
  for (std::size_t x : images) {
    if (x == 0) throw Error("permutation images are 1-based");
    zero_based.push_back(x - 1);
  }
  return Permutation(std::move(zero_based));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw Error("permutation sizes differ");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

Permutation varsigma(const Permutation& sigma, std::size_t k) {
  const std::size_t n = sigma.size();
  if (k >= n) throw Error("varsigma: index out of range");
  const std::size_t target = sigma(k);
  std::vector<std::size_t> out(n + 1);
  // Domain k-1/2 and k+1/2 become k and k+1; later points shift up by one.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    const std::size_t v = sigma(i);
    out[i < k ? i : i + 1] = v < target ? v : v + 1;
  }
  out[k] = target;
  out[k + 1] = target + 1;
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Operations

std::pair<Brick, Brick> split_brick(const Brick& psi, Color s) { return psi.split(s); }

std::vector<Brick> tree_leaves(const Tree& tree) { return tree.leaves(); }

namespace {

// The tree T' pushed into the half {s: bit}, with coordinates relative to it.
Tree restrict_to_half(const Tree& t, Color s, int bit) {
  if (t.is_leaf()) return t;
  if (t.color() == s) return t.child(bit);
  return Tree::split(t.color(), restrict_to_half(t.child(0), s, bit), restrict_to_half(t.child(1), s, bit));
}

}  // namespace

Tree refine_tree(const Tree& tree, const Tree& other) {
  if (tree.is_leaf()) return other;
  const Color s = tree.color();
  return Tree::split(s, refine_tree(tree.child(0), restrict_to_half(other, s, 0)),
                     refine_tree(tree.child(1), restrict_to_half(other, s, 1)));
}

Refinement common_refinement(const Tree& tree, const Tree& other) {
  const Tree refined = refine_tree(tree, other);
  const std::vector<Brick> refined_leaves = refined.leaves();

  std::vector<Tree> left;
  for (const Brick& b : tree.leaves()) left.push_back(*refined.subtree_at(b));

  std::vector<Tree> right;
  std::vector<std::size_t> matching;
  std::map<Brick, std::size_t> position;
  for (std::size_t i = 0; i < refined_leaves.size(); ++i) position.emplace(refined_leaves[i], i);
  for (const Brick& outer : other.leaves()) {
    std::vector<Brick> inside;
    for (const Brick& b : refined_leaves) {
      if (outer.contains(b)) inside.push_back(outer.strip(b));
    }
    Tree piece = tree_from_partition(inside);
    for (const Brick& b : piece.leaves()) matching.push_back(position.at(outer.concat(b)));
    right.push_back(std::move(piece));
  }
  return Refinement{Forest(std::move(left)), Forest(std::move(right)), Permutation(std::move(matching))};
}

std::pair<Tree, std::size_t> tree_for_brick(const Brick& psi) {
  std::vector<std::pair<Color, char>> steps;
  for (const auto& [s, word] : psi.entries()) {
    for (char c : word) steps.emplace_back(s, c);
  }
  Tree tree;
  std::size_t index = 0;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->second == '0') {
      tree = Tree::split(it->first, tree, Tree::leaf());
    } else {
      tree = Tree::split(it->first, Tree::leaf(), tree);
      index += 1;
    }
  }
  return {tree, index};
}

Tree tree_from_partition(std::vector<Brick> bricks) {
  if (bricks.empty()) throw Error("tree_from_partition: empty partition");
  if (bricks.size() == 1) {
    if (!bricks.front().is_whole_space()) throw Error("tree_from_partition: bricks do not cover C^S");
    return Tree::leaf();
  }
  std::optional<Color> chosen;
  for (const auto& [s, word] : bricks.front().entries()) {
    if (std::all_of(bricks.begin(), bricks.end(), [s = s](const Brick& b) { return !b.bits(s).empty(); })) {
      chosen = s;
      break;
    }
  }
  if (!chosen) throw Error("tree_from_partition: partition is not arboreal");
  std::vector<Brick> halves[2];
  for (const Brick& b : bricks) {
    std::map<Color, std::string> rest = b.entries();
    std::string& word = rest[*chosen];
    const int bit = word[0] == '0' ? 0 : 1;
    word.erase(0, 1);
    halves[bit].push_back(Brick(std::move(rest)));
  }
  if (halves[0].empty() || halves[1].empty()) throw Error("tree_from_partition: bricks do not cover C^S");
  return Tree::split(*chosen, tree_from_partition(std::move(halves[0])), tree_from_partition(std::move(halves[1])));
}

Tree separating_tree(const std::vector<Brick>& bricks) {
  if (bricks.empty()) return Tree::leaf();
  std::optional<Color> chosen;
  for (const Brick& b : bricks) {
    if (b.is_whole_space()) return Tree::leaf();
    Color first = b.entries().begin()->first;
    if (!chosen || first < *chosen) chosen = first;
  }
  std::vector<Brick> halves[2];
  for (const Brick& b : bricks) {
    std::string_view word = b.bits(*chosen);
    if (word.empty()) {
      halves[0].push_back(b);
      halves[1].push_back(b);
      continue;
    }
    std::map<Color, std::string> rest = b.entries();
    rest[*chosen] = std::string(word.substr(1));
    halves[word[0] == '0' ? 0 : 1].push_back(Brick(std::move(rest)));
  }
  return Tree::split(*chosen, separating_tree(halves[0]), separating_tree(halves[1]));
}

TwoBrickTree tree_for_two_bricks(const Brick& a, const Brick& b) {
  for (const auto& [s, word] : a.entries()) {
    std::string_view other = b.bits(s);
    std::size_t common = std::min(word.size(), other.size());
    std::size_t j = 0;
    while (j < common && word[j] == other[j]) ++j;
    if (j == common) continue;

    auto remainder = [s = s, j](const Brick& x) {
      std::map<Color, std::string> rest = x.entries();
      rest[s] = rest[s].substr(j + 1);
      return Brick(std::move(rest));
    };
    auto [tree_a, index_a] = tree_for_brick(remainder(a));
    auto [tree_b, index_b] = tree_for_brick(remainder(b));
    TwoBrickTree out;
    if (word[j] == '0') {
      out.tree = Tree::split(s, tree_a, tree_b);
      out.first = index_a;
      out.second = tree_a.leaf_count() + index_b;
    } else {
      out.tree = Tree::split(s, tree_b, tree_a);
      out.first = tree_b.leaf_count() + index_a;
      out.second = index_b;
    }
    // Shared prefix p = word[0, j): a chain of splits, leaving the other half bare.
    for (std::size_t i = j; i-- > 0;) {
      if (word[i] == '0') {
        out.tree = Tree::split(s, out.tree, Tree::leaf());
      } else {
        out.tree = Tree::split(s, Tree::leaf(), out.tree);
        out.first += 1;
        out.second += 1;
      }
    }
    return out;
  }
  throw Error("tree_for_two_bricks: bricks are not disjoint");
}

}  // namespace twistbt
