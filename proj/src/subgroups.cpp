#include "twistbt/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace twistbt {

// ---------------------------------------------------------------------------
// Wreath product

namespace {

void add_entry(std::map<Color, long>& v, Color s, long amount) {
  long& slot = v[s];
  slot += amount;
  if (slot == 0) v.erase(s);
}

}  // namespace

WreathElement wreath_multiply(const LabelGroup& group, const WreathElement& a, const WreathElement& b) {
  WreathElement out{a.vector, group.multiply(a.label, b.label)};
  // (g.w)(s) = w(g^-1.s): the entry of w at t lands at g.t.
  for (const auto& [t, value] : b.vector) add_entry(out.vector, group.act(a.label, t), value);
  return out;
}

WreathElement wreath_inverse(const LabelGroup& group, const WreathElement& a) {
  // (v, g)^-1 = (-(g^-1.v), g^-1)
  WreathElement out{{}, group.inverse(a.label)};
  for (const auto& [t, value] : a.vector) add_entry(out.vector, group.act(out.label, t), -value);
  return out;
}

bool wreath_equal(const LabelGroup& group, const WreathElement& a, const WreathElement& b) {
  auto nonzero = [](const std::map<Color, long>& v) {
    std::map<Color, long> out;
    for (const auto& [s, value] : v) {
      if (value != 0) out.emplace(s, value);
    }
    return out;
  };
  return nonzero(a.vector) == nonzero(b.vector) && group.equal(a.label, b.label);
}

// ---------------------------------------------------------------------------
// Conjugacy words

Quadruple ConjugacyWord::evaluate(const Groupoid& sv, const Quadruple& h) const {
  const Quadruple h_inverse = sv.inverse(h);
  Quadruple out = sv.identity();
  for (const ConjugacyTerm& term : terms) {
    out = sv.multiply(out, sv.conjugate(term.inverse ? h_inverse : h, term.conjugator));
  }
  return sv.simplify(out);
}

// ---------------------------------------------------------------------------
// Kernel, deferments

namespace {

Color auxiliary_color(const Groupoid& sv, const Tree* tree = nullptr) {
  const LabelGroup& g = sv.labels();
  if (g.color_count()) return g.colors(1).front();
  if (tree) {
    auto used = tree->colors();
    if (!used.empty()) return *used.begin();
  }
  return Color{0};
}

Quadruple sv_element(const Groupoid& sv, const Tree& minus, std::vector<std::size_t> one_based, const Tree& plus) {
  const std::size_t n = one_based.size();
  return sv.make(Forest::single(minus), Permutation::from_one_based(one_based), std::vector<Word>(n),
                 Forest::single(plus));
}

}  // namespace

bool in_canonical_kernel(const Groupoid& sv, const Quadruple& h) {
  if (!h.is_group_element()) throw Error("in_canonical_kernel needs an element of the group");
  // h acts trivially on C^S exactly when every domain brick is its own
  // image and every twist fixes S pointwise.
  const std::vector<BrickImage> map = sv.brick_map(h);
  return std::all_of(map.begin(), map.end(), [&](const BrickImage& b) {
    return b.domain.brick == b.range.brick && sv.labels().acts_trivially(b.label);
  });
}

Quadruple deferment(const Groupoid& sv, const Brick& psi, const Word& g) {
  auto [tree, index] = tree_for_brick(psi);
  const std::size_t n = tree.leaf_count();
  std::vector<Word> labels(n);
  labels[index] = g;
  return sv.make(Forest::single(tree), Permutation::identity(n), std::move(labels), Forest::single(tree));
}

bool in_full_deferment(const Groupoid& sv, const Quadruple& h, const std::vector<Brick>& u) {
  if (!h.is_group_element()) throw Error("in_full_deferment needs an element of the group");
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!u[i].disjoint(u[j])) throw Error("in_full_deferment: bricks are not pairwise disjoint");
    }
  }
  // Refine the domain so every brick is inside one member of U or outside
  // all of them; since expansion is by the same tree on every leaf, the
  // refined domain is F_+ grafted with separating pieces.
  const Tree target = refine_tree(h.plus.tree(0), separating_tree(u));
  const Quadruple q = sv.expand_domain_along(
      h, [&] {
        std::vector<Tree> pieces;
        for (const Brick& leaf : h.plus.tree(0).leaves()) pieces.push_back(*target.subtree_at(leaf));
        return Forest(std::move(pieces));
      }());
  for (const BrickImage& b : sv.brick_map(q)) {
    const bool inside = std::any_of(u.begin(), u.end(), [&](const Brick& piece) { return piece.contains(b.domain.brick); });
    if (inside) continue;
    if (b.range.brick != b.domain.brick || !sv.labels().normalize(b.label).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generating sets

std::vector<NamedElement> generating_set(const Groupoid& sv) {
  const LabelGroup& group = sv.labels();
  if (!group.color_count()) throw Error("generating_set needs a finite color set");
  const std::vector<Color> colors = group.colors();
  const Tree leaf = Tree::leaf();
  auto x = [](Color c) { return Tree::simple_split(c); };
  auto name = [&](const std::string& base, std::initializer_list<Color> cs) {
    std::string out = base + "(";
    bool first = true;
    for (Color c : cs) {
      if (!first) out += ",";
      out += group.color_name(c);
      first = false;
    }
    return out + ")";
  };

  std::vector<NamedElement> out;
  // x0 and x1 style generators, the cyclic C and the transpositions, all in color s.
  auto v_generators = [&](Color s) {
    const Tree right2 = Tree::split(s, leaf, x(s));                      // {0, 10, 11}
    const Tree left2 = Tree::split(s, x(s), leaf);                       // {00, 01, 1}
    const Tree right3 = Tree::split(s, leaf, Tree::split(s, leaf, x(s)));  // {0, 10, 110, 111}
    const Tree mid3 = Tree::split(s, leaf, Tree::split(s, x(s), leaf));    // {0, 100, 101, 11}
    out.push_back({name("X0", {s}), sv_element(sv, left2, {1, 2, 3}, right2)});
    out.push_back({name("X1", {s}), sv_element(sv, mid3, {1, 2, 3, 4}, right3)});
    return std::pair{right2, right3};
  };

  if (colors.size() == 1) {
    const Color s = colors.front();
    auto [right2, right3] = v_generators(s);
    out.push_back({name("C", {s}), sv_element(sv, right2, {3, 1, 2}, right2)});
    out.push_back({name("P0", {s}), sv_element(sv, right2, {2, 1, 3}, right2)});
    out.push_back({name("P1", {s}), sv_element(sv, right3, {1, 3, 2, 4}, right3)});
  } else {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      for (std::size_t j = i + 1; j < colors.size(); ++j) {
        const Color s = colors[i], t = colors[j];
        auto [right2, right3] = v_generators(s);
        out.push_back({name("Y0", {t}), sv_element(sv, Tree::split(t, x(t), leaf), {1, 2, 3}, Tree::split(t, leaf, x(t)))});
        out.push_back({name("Y1", {s, t}),
                       sv_element(sv, Tree::split(s, leaf, Tree::split(t, x(t), leaf)), {1, 2, 3, 4},
                                  Tree::split(s, leaf, Tree::split(t, leaf, x(t))))});
        out.push_back({name("C0", {s, t}), sv_element(sv, x(t), {1, 2}, x(s))});
        out.push_back({name("C1", {s, t}), sv_element(sv, Tree::split(s, leaf, x(t)), {1, 2, 3}, right2)});
        out.push_back({name("P0", {s, t}), sv_element(sv, right2, {2, 1, 3}, right2)});
        out.push_back({name("P1", {s, t}), sv_element(sv, right3, {1, 3, 2, 4}, right3)});
      }
    }
    // The pair loop repeats the color-s generators for every partner; keep
    // the first copy of each name.
    std::set<std::string> seen;
    out.erase(std::remove_if(out.begin(), out.end(), [&](const NamedElement& e) { return !seen.insert(e.name).second; }),
              out.end());
  }

  const Color s0 = colors.front();
  for (std::size_t a = 0; a < group.generator_count(); ++a) {
    const Word w{Letter{a, 1}};
    if (group.is_identity(w)) continue;
    const std::string& gen = group.generators()[a];
    out.push_back({"iota(" + gen + ")", sv.iota(w)});
    out.push_back({"iota1(" + group.color_name(s0) + "," + gen + ")", sv.iota1(s0, w)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutator decomposition

namespace {

// v = [T, id, (1, k2, ..., kn), T] with n >= 2 written as one commutator.
CommutatorPair v_commutator(const Groupoid& sv, const Tree& t, const std::vector<Word>& labels, Color s) {
  const std::size_t n = labels.size();
  Tree t1 = t;  // leftmost leaf split n-1 times
  for (std::size_t i = 1; i < n; ++i) t1 = t1.split_leaf(0, s);
  Tree t2 = t;  // every non-first leaf split once
  for (std::size_t i = n; i-- > 1;) t2 = t2.split_leaf(i, s);

  std::vector<std::size_t> alpha(2 * n - 1);
  for (std::size_t j = 1; j <= n; ++j) alpha[j - 1] = 2 * j - 1;
  for (std::size_t i = 2; i <= n; ++i) alpha[n + i - 2] = 2 * i - 2;

  std::vector<std::size_t> beta(2 * n - 1, 0);
  for (std::size_t i = 2; i <= n; ++i) beta[2 * i - 2] = n + i - 1;
  std::size_t next = 1;
  for (std::size_t& image : beta) {
    if (image == 0) image = next++;
  }

  const Quadruple a = sv_element(sv, t2, alpha, t1);
  const Quadruple b = sv_element(sv, t1, beta, t2);
  const Quadruple v = sv.make(Forest::single(t), Permutation::identity(n), labels, Forest::single(t));
  return CommutatorPair{sv.simplify(sv.conjugate(v, b)), sv.simplify(sv.conjugate(a, b))};
}

}  // namespace

KernelDecomposition sk_commutator_decomposition(const Groupoid& sv, const Quadruple& h) {
  if (!in_canonical_kernel(sv, h)) throw Error("sk_commutator_decomposition: element is not in the canonical kernel");
  if (sv.equal(h, sv.identity())) {
    return KernelDecomposition{{sv.identity(), sv.identity()}, {sv.identity(), sv.identity()}};
  }
  // Same leaves on both sides, so F_- can be replaced by F_+: [T, id, k, T].
  Quadruple q = sv.with_minus(h, h.plus);
  const Color s = auxiliary_color(sv, &q.plus.tree(0));
  if (q.size() == 1) q = sv.expand(q, 0, s);
  const std::size_t n = q.size();
  const Tree& t = q.plus.tree(0);

  std::vector<Word> first(n), rest = q.labels;
  first[1] = q.labels[0];  // (1, k1, 1, ..., 1), conjugate to (k1, 1, ..., 1)
  rest[0].clear();

  std::vector<std::size_t> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = i + 1;
  std::swap(swap[0], swap[1]);
  const Quadruple p = sv_element(sv, t, swap, t);

  const CommutatorPair w = v_commutator(sv, t, first, s);
  const CommutatorPair u2 = v_commutator(sv, t, rest, s);
  return KernelDecomposition{{sv.simplify(sv.conjugate(w.c, p)), sv.simplify(sv.conjugate(w.d, p))}, u2};
}

// ---------------------------------------------------------------------------
// Normal generation witnesses

namespace {

struct DisplacedBrick {
  Brick from;
  Brick to;
  Word twist;
};

std::vector<Color> search_colors(const Groupoid& sv, const Quadruple& h) {
  const LabelGroup& g = sv.labels();
  if (g.color_count()) return g.colors();
  std::set<Color> base{Color{0}};
  for (const Forest* f : {&h.minus, &h.plus}) base.merge(f->tree(0).colors());
  std::set<Color> out = base;
  for (const Word& label : h.labels) {
    for (Color c : base) {
      out.insert(g.act(label, c));
      out.insert(g.act_inverse(label, c));
    }
  }
  return {out.begin(), out.end()};
}

// Breadth first over sub-bricks psi_i . gamma of the domain bricks.
DisplacedBrick find_displaced_brick(const Groupoid& sv, const Quadruple& h, const WitnessBudget& budget) {
  const std::vector<BrickImage> map = sv.brick_map(h);
  const std::vector<Color> colors = search_colors(sv, h);
  struct Node {
    std::size_t leaf;
    Brick gamma;
    std::size_t next_color;
  };
  std::deque<Node> queue;
  for (std::size_t i = 0; i < map.size(); ++i) queue.push_back(Node{i, Brick{}, 0});
  std::size_t visited = 0;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const BrickImage& b = map[node.leaf];
    Brick from = b.domain.brick.concat(node.gamma);
    Brick to = b.range.brick.concat(node.gamma.moved_by(sv.labels(), b.label));
    const bool halves = from.total_length() == 1 && to.total_length() == 1;
    if (from.disjoint(to) && !halves) return DisplacedBrick{std::move(from), std::move(to), b.label};
    if (++visited > budget.max_candidates) break;
    for (std::size_t c = node.next_color; c < colors.size(); ++c) {
      if (node.gamma.bits(colors[c]).size() >= budget.bits_per_color) continue;
      queue.push_back(Node{node.leaf, node.gamma.extended(colors[c], '0'), c});
      queue.push_back(Node{node.leaf, node.gamma.extended(colors[c], '1'), c});
    }
  }
  throw BudgetExhausted("normal_generation_witness: no displaced brick found after " + std::to_string(visited) +
                        " candidates (" + std::to_string(budget.bits_per_color) + " bits per color)");
}

void pad_tree(TwoBrickTree& t, std::size_t leaves, Color s) {
  while (t.tree.leaf_count() < leaves) {
    std::size_t j = 0;
    while (j == t.first || j == t.second) ++j;
    t.tree = t.tree.split_leaf(j, s);
    if (t.first > j) ++t.first;
    if (t.second > j) ++t.second;
  }
}

// An element of SV carrying brick x onto a and brick y onto b.
Quadruple brick_mover(const Groupoid& sv, const Brick& x, const Brick& y, const Brick& a, const Brick& b) {
  TwoBrickTree domain = tree_for_two_bricks(x, y);
  TwoBrickTree range = tree_for_two_bricks(a, b);
  const Color s = auxiliary_color(sv, &domain.tree);
  const std::size_t n = std::max(domain.tree.leaf_count(), range.tree.leaf_count());
  pad_tree(domain, n, s);
  pad_tree(range, n, s);
  std::vector<std::size_t> images(n, n);
  images[domain.first] = range.first;
  images[domain.second] = range.second;
  std::size_t next = 0;
  for (std::size_t& image : images) {
    if (image != n) continue;
    while (next == range.first || next == range.second) ++next;
    image = next++;
  }
  return sv.make(Forest::single(range.tree), Permutation(std::move(images)), std::vector<Word>(n),
                 Forest::single(domain.tree));
}

}  // namespace

ConjugacyWord normal_generation_witness(const Groupoid& sv, const Quadruple& h, const Brick& psi, const Word& k,
                                        const WitnessBudget& budget) {
  const LabelGroup& group = sv.labels();
  if (!h.is_group_element()) throw Error("normal_generation_witness needs an element of the group");
  if (in_canonical_kernel(sv, h)) throw Error("normal_generation_witness: element lies in the canonical kernel");
  if (!group.acts_trivially(k)) throw Error("normal_generation_witness: label does not act trivially on the colors");
  if (psi.is_whole_space()) throw Error("normal_generation_witness: the brick must be proper");
  if (group.is_identity(k)) return ConjugacyWord{};

  const Quadruple hr = sv.simplify(h);
  const DisplacedBrick found = find_displaced_brick(sv, hr, budget);
  const Brick& b = found.from;
  const Brick& b2 = found.to;

  // W(B', B) = D_B'(k) D_B(k)^-1 = c [h, f] c^-1 with f = D_B(k), c = D_B'(g)^-1.
  const Quadruple f = deferment(sv, b, k);
  const Quadruple c = sv.inverse(deferment(sv, b2, found.twist));
  const Quadruple cf = sv.simplify(sv.multiply(c, f));

  // W(x2, x) = D_x2(k) D_x(k)^-1 for disjoint bricks not covering C^S.
  auto w = [&](const Brick& x2, const Brick& x) {
    const Quadruple u = brick_mover(sv, b, b2, x, x2);
    return std::vector<ConjugacyTerm>{{false, sv.simplify(sv.multiply(u, c))}, {true, sv.simplify(sv.multiply(u, cf))}};
  };

  const auto& [s, bits] = *psi.entries().begin();
  std::string other = bits;
  other.back() = other.back() == '0' ? '1' : '0';
  other.push_back('0');
  const Brick aux({{s, other}});
  auto [a0, a1] = psi.split(s);

  ConjugacyWord out;
  for (auto part : {w(psi, aux), w(aux, a0), w(psi, aux), w(aux, a1)}) {
    out.terms.insert(out.terms.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-retraction and section

WreathElement quasi_retract(const Groupoid& sv, const Quadruple& h, const CantorPoint& kappa) {
  const LabelGroup& group = sv.labels();
  const std::size_t i = sv.domain_leaf(h, kappa);
  const Brick psi = h.plus.leaves()[i].brick;
  const Brick phi = h.minus.leaves()[h.perm(i)].brick;
  const Word& g = h.labels[i];
  WreathElement out{{}, group.normalize(g)};
  for (const auto& [s, word] : phi.entries()) add_entry(out.vector, s, static_cast<long>(word.size()));
  for (const auto& [t, word] : psi.entries()) add_entry(out.vector, group.act(g, t), -static_cast<long>(word.size()));
  return out;
}

Quadruple zeta_generator(const Groupoid& sv, Color s) {
  const Tree leaf = Tree::leaf();
  const Tree x = Tree::simple_split(s);
  return sv_element(sv, Tree::split(s, x, leaf), {1, 2, 3}, Tree::split(s, leaf, x));
}

Quadruple section_zeta(const Groupoid& sv, const WreathElement& w) {
  Quadruple out = sv.identity();
  for (const auto& [s, m] : w.vector) out = sv.multiply(out, sv.power(zeta_generator(sv, s), m));
  return sv.simplify(sv.multiply(out, sv.iota(w.label)));
}

}  // namespace twistbt
