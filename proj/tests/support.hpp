#pragma once

#include <random>
#include <vector>

#include "twistbt/element.hpp"
#include "twistbt/label_group.hpp"

namespace twistbt::testing {

using Rng = std::mt19937_64;

inline Word random_word(const LabelGroup& g, Rng& rng, std::size_t max_length = 4) {
  Word w;
  if (g.generator_count() == 0) return w;
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::size_t> gen(0, g.generator_count() - 1);
  std::bernoulli_distribution sign;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(Letter{gen(rng), sign(rng) ? 1 : -1});
  return w;
}

/// Colors used for random trees: all of a finite S, or a small window of Z.
inline std::vector<Color> palette(const LabelGroup& g) {
  if (g.color_count()) return g.colors();
  return {Color{-1}, Color{0}, Color{1}, Color{2}};
}

inline Color random_color(const LabelGroup& g, Rng& rng) {
  const std::vector<Color> p = palette(g);
  return p[std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng)];
}

inline Tree random_tree(const LabelGroup& g, Rng& rng, std::size_t leaves) {
  Tree t;
  while (t.leaf_count() < leaves) {
    std::uniform_int_distribution<std::size_t> pick(0, t.leaf_count() - 1);
    t = t.split_leaf(pick(rng), random_color(g, rng));
  }
  return t;
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline Quadruple random_element(const Groupoid& sv, Rng& rng, std::size_t max_leaves = 5) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  std::vector<Word> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(random_word(sv.labels(), rng, 3));
  return sv.make(Forest::single(random_tree(sv.labels(), rng, n)), random_permutation(rng, n), std::move(labels),
                 Forest::single(random_tree(sv.labels(), rng, n)));
}

inline CantorPoint random_point(const LabelGroup& g, Rng& rng) {
  std::map<Color, CantorPoint::Coordinate> coords;
  std::uniform_int_distribution<int> bits(0, 1);
  std::uniform_int_distribution<std::size_t> len(0, 5);
  for (Color s : palette(g)) {
    CantorPoint::Coordinate c;
    c.preperiod.clear();
    c.period.clear();
    for (std::size_t i = len(rng); i > 0; --i) c.preperiod.push_back(bits(rng) ? '1' : '0');
    for (std::size_t i = len(rng) + 1; i > 0; --i) c.period.push_back(bits(rng) ? '1' : '0');
    coords.emplace(s, std::move(c));
  }
  return CantorPoint(std::move(coords));
}

/// Random expansion of a representative at a random leaf and color.
inline Quadruple random_expansion(const Groupoid& sv, const Quadruple& q, Rng& rng) {
  std::uniform_int_distribution<std::size_t> leaf(0, q.size() - 1);
  return sv.expand(q, leaf(rng), random_color(sv.labels(), rng));
}

/// The oracle instances every law is checked against.
inline std::vector<LabelGroupPtr> standard_oracles() {
  return {make_trivial(2, {"a"}), make_cyclic_rotation(3), make_symmetric(3),
          make_product_kernel(make_symmetric(2, {"s"}), KernelFactor{}, {"t"}), make_translation()};
}

}  // namespace twistbt::testing

namespace twistbt::testing {

/// Product-kernel oracles together with the index of their first kernel
/// generator.
struct KernelOracle {
  LabelGroupPtr group;
  std::size_t first_kernel_generator;
};

inline std::vector<KernelOracle> kernel_oracles() {
  KernelFactor z2{KernelFactor::Kind::finite, 0, {{0, 1}, {1, 0}}, {}};
  return {
      {make_product_kernel(make_symmetric(2, {"s"}), KernelFactor{}, {"t"}), 1},
      {make_product_kernel(make_cyclic_rotation(3), KernelFactor{KernelFactor::Kind::free, 2, {}, {}}, {"u", "v"}), 1},
      {make_product_kernel(make_symmetric(3), z2, {"z"}), 2},
  };
}

inline Word random_kernel_word(const KernelOracle& o, Rng& rng, std::size_t max_length = 6) {
  const std::size_t gens = o.group->generator_count() - o.first_kernel_generator;
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::uniform_int_distribution<std::size_t> gen(0, gens - 1);
  std::bernoulli_distribution sign;
  Word w;
  for (std::size_t i = len(rng); i > 0; --i) w.push_back(Letter{o.first_kernel_generator + gen(rng), sign(rng) ? 1 : -1});
  return w;
}

inline Quadruple random_kernel_element(const Groupoid& sv, const KernelOracle& o, Rng& rng, std::size_t max_leaves = 8) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  const Tree t = random_tree(sv.labels(), rng, n);
  std::vector<Word> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(random_kernel_word(o, rng));
  return sv.make(Forest::single(t), Permutation::identity(n), std::move(labels), Forest::single(t));
}

inline Brick random_proper_brick(const LabelGroup& g, Rng& rng, std::size_t max_bits = 3) {
  std::map<Color, std::string> bits;
  std::uniform_int_distribution<std::size_t> len(1, max_bits);
  std::bernoulli_distribution bit;
  for (std::size_t i = len(rng); i > 0; --i) bits[random_color(g, rng)].push_back(bit(rng) ? '1' : '0');
  return Brick(std::move(bits));
}

}  // namespace twistbt::testing
