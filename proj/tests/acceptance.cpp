// Acceptance checks: one PASS/FAIL line per criterion, each with a time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "support.hpp"
#include "twistbt/kuznetsov.hpp"
#include "twistbt/subgroups.hpp"

using namespace twistbt;
using namespace twistbt::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Tree x(Color s) { return Tree::simple_split(s); }
Forest single(Tree t) { return Forest::single(std::move(t)); }
Permutation perm(std::vector<std::size_t> one_based) { return Permutation::from_one_based(one_based); }

CantorPoint point(std::map<Color, CantorPoint::Coordinate> c) { return CantorPoint(std::move(c)); }

Outcome worked_examples() {
  Outcome r;
  const Color red{0}, blue{1}, green{2};
  const Tree mf = Tree::split(red, Tree::split(blue, x(green), Tree::leaf()), Tree::split(blue, x(red), Tree::leaf()));
  const auto leaves = tree_leaves(mf);
  r.require(leaves.size() == 6 && leaves[3] == Brick({{red, "10"}, {blue, "0"}}), "fourth leaf of the tree");

  auto group = make_product_kernel(make_trivial(3), KernelFactor{KernelFactor::Kind::free, 4, {}, {}},
                                   {"g1", "g2", "g3", "g4"});
  Groupoid sv(group);
  std::vector<Word> labels;
  for (const char* name : {"g1", "g2", "g3", "g4"}) labels.push_back(group->parse_word(name));
  const Quadruple h = sv.make(single(Tree::split(red, x(blue), x(green))), perm({3, 1, 4, 2}), labels,
                              single(Tree::split(red, Tree::split(blue, x(red), Tree::leaf()), Tree::leaf())));
  const CantorPoint k = point({{red, {"01", "0"}}, {blue, {"0", "0"}}});
  r.require(group->format_word(sv.germinal_twist(h, k)) == "g2", "germinal twist");
  return r;
}

Outcome relations() {
  Outcome r;
  Rng rng(101);
  for (const auto& group : standard_oracles()) {
    Groupoid sv(group);
    const auto colors = palette(*group);
    for (Color s : colors) {
      for (Color t : colors) {
        if (s == t) continue;
        const Quadruple cross = sv.make(single(Tree::split(s, x(t), x(t))), perm({1, 3, 2, 4}), std::vector<Word>(4),
                                        single(Tree::split(t, x(s), x(s))));
        r.require(sv.equal(cross, sv.identity()), "cross relation for " + group->kind());
      }
    }
    for (int i = 0; i < 50; ++i) {
      const Word g = random_word(*group, rng, 5);
      for (Color s : colors) {
        const Quadruple rhs = sv.make(single(x(group->act(g, s))), perm({1, 2}), {g, g}, single(x(s)));
        r.require(sv.equal(sv.iota(g), rhs), "twist relation for " + group->kind());
      }
    }
  }
  return r;
}

Outcome group_laws() {
  Outcome r;
  Rng rng(102);
  for (const auto& group : standard_oracles()) {
    Groupoid sv(group);
    for (int i = 0; i < 200; ++i) {
      const Quadruple a = random_element(sv, rng);
      const Quadruple b = random_element(sv, rng);
      const Quadruple c = random_element(sv, rng);
      const std::string where = " for " + group->kind();
      r.require(sv.equal(sv.multiply(sv.multiply(a, b), c), sv.multiply(a, sv.multiply(b, c))), "associativity" + where);
      r.require(sv.equal(sv.multiply(a, sv.inverse(a)), sv.identity()), "right inverse" + where);
      r.require(sv.equal(sv.multiply(sv.inverse(a), a), sv.identity()), "left inverse" + where);
      r.require(sv.equal(sv.multiply(a, sv.identity()), a) && sv.equal(sv.multiply(sv.identity(), a), a),
                "identity" + where);
    }
  }
  return r;
}

Outcome cocycles() {
  Outcome r;
  Rng rng(103);
  const auto oracles = standard_oracles();
  for (int i = 0; i < 200; ++i) {
    const auto& group = oracles[static_cast<std::size_t>(i) % oracles.size()];
    Groupoid sv(group);
    const Quadruple h = random_element(sv, rng);
    const Quadruple h2 = random_element(sv, rng);
    const CantorPoint k = random_point(*group, rng);
    const Quadruple prod = sv.multiply(h2, h);
    r.require(group->equal(sv.germinal_twist(prod, k),
                           group->multiply(sv.germinal_twist(h2, sv.act(h, k)), sv.germinal_twist(h, k))),
              "twist cocycle for " + group->kind());
    r.require(wreath_equal(*group, quasi_retract(sv, prod, k),
                           wreath_multiply(*group, quasi_retract(sv, h2, sv.act(h, k)), quasi_retract(sv, h, k))),
              "retraction cocycle for " + group->kind());
  }
  for (int i = 0; i < 100; ++i) {
    const auto& group = oracles[static_cast<std::size_t>(i) % oracles.size()];
    Groupoid sv(group);
    WreathElement w{{}, random_word(*group, rng)};
    for (Color c : palette(*group)) w.vector[c] = std::uniform_int_distribution<long>(-3, 3)(rng);
    r.require(wreath_equal(*group, quasi_retract(sv, section_zeta(sv, w), CantorPoint{}), w),
              "section identity for " + group->kind());
  }
  return r;
}

Outcome constructive() {
  Outcome r;
  Rng rng(104);
  const auto oracles = kernel_oracles();
  for (int i = 0; i < 100; ++i) {
    const auto& o = oracles[static_cast<std::size_t>(i) % oracles.size()];
    Groupoid sv(o.group);
    const Quadruple h = random_kernel_element(sv, o, rng, 8);
    const KernelDecomposition d = sk_commutator_decomposition(sv, h);
    const Quadruple back = sv.multiply(sv.commutator(d.first.c, d.first.d), sv.commutator(d.second.c, d.second.d));
    r.require(sv.equal(back, h), "decomposition for " + o.group->kind());
  }
  int done = 0;
  for (int i = 0; done < 25; ++i) {
    const auto& o = oracles[static_cast<std::size_t>(i) % oracles.size()];
    Groupoid sv(o.group);
    const Quadruple h = random_element(sv, rng, 4);
    if (in_canonical_kernel(sv, h)) continue;
    const Brick psi = random_proper_brick(*o.group, rng);
    const Word k = random_kernel_word(o, rng, 4);
    r.require(sv.equal(normal_generation_witness(sv, h, psi, k).evaluate(sv, h), deferment(sv, psi, k)),
              "witness for " + o.group->kind());
    ++done;
  }
  return r;
}

Outcome independence() {
  Outcome r;
  Rng rng(105);
  const auto oracles = standard_oracles();
  for (int i = 0; i < 100; ++i) {
    const auto& group = oracles[static_cast<std::size_t>(i) % oracles.size()];
    Groupoid sv(group);
    const Quadruple h = random_element(sv, rng);
    Quadruple e = h;
    for (int j = 0; j < 5; ++j) e = random_expansion(sv, e, rng);
    const std::string where = " for " + group->kind();
    r.require(sv.equal(e, h), "equal" + where);
    const Quadruple other = random_element(sv, rng);
    r.require(sv.equal(e, other) == sv.equal(h, other), "equal against another element" + where);
    for (int j = 0; j < 5; ++j) {
      const CantorPoint k = random_point(*group, rng);
      r.require(sv.act(e, k) == sv.act(h, k), "act" + where);
      r.require(group->equal(sv.germinal_twist(e, k), sv.germinal_twist(h, k)), "germinal twist" + where);
      r.require(wreath_equal(*group, quasi_retract(sv, e, k), quasi_retract(sv, h, k)), "quasi-retraction" + where);
    }
  }
  return r;
}

// Orbits of G on S^2 by closing under the generators.
std::size_t brute_pair_orbits(const LabelGroup& g) {
  const auto colors = g.colors();
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::size_t orbits = 0;
  for (Color a : colors) {
    for (Color b : colors) {
      if (seen.count({a.value, b.value})) continue;
      ++orbits;
      std::vector<std::pair<Color, Color>> stack{{a, b}};
      seen.insert({a.value, b.value});
      while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        for (std::size_t gen = 0; gen < g.generator_count(); ++gen) {
          const Word w{Letter{gen, 1}};
          const Color p2 = g.act(w, p), q2 = g.act(w, q);
          if (seen.insert({p2.value, q2.value}).second) stack.push_back({p2, q2});
        }
      }
    }
  }
  return orbits;
}

Outcome analyzer() {
  Outcome r;
  auto s3 = make_symmetric(3);
  const ActionReport a = analyze_finite_action(*s3, 2);
  r.require(a.orbit_counts.size() == 2 && a.orbit_counts[1] == 2 && brute_pair_orbits(*s3) == 2, "sym(3) pairs");
  auto c4 = make_cyclic_rotation(4);
  const ActionReport b = analyze_finite_action(*c4, 2);
  r.require(b.orbit_counts.size() == 2 && b.orbit_counts[1] == 4 && brute_pair_orbits(*c4) == 4, "cyclic(4) pairs");
  auto triv = make_trivial(2, {"a"});
  const ActionReport c = analyze_finite_action(*triv, 1);
  std::size_t kernel = 0;
  const auto elements = enumerate_group(*triv);
  for (const Word& w : elements) {
    bool fixes = true;
    for (Color s : triv->colors()) fixes = fixes && triv->act(w, s) == s;
    kernel += fixes ? 1 : 0;
  }
  r.require(c.kernel_order == c.group_order && c.kernel_order == kernel && kernel == elements.size(),
            "trivial action kernel");
  r.require(c.orbit_counts == std::vector<std::size_t>{2}, "trivial action orbits");
  return r;
}

Outcome day_and_night() {
  Outcome r;
  const FinitePresentation c3 = FinitePresentation::parse({"a"}, {"a a a"});
  const Word a3 = c3.parse_word("a a a");
  const Verdict v1 = decide_word(c3, a3);
  r.require(v1.kind == Verdict::Kind::trivial && verify_verdict(c3, a3, v1), "a^3 trivial");
  const Word a = c3.parse_word("a");
  const Verdict v2 = decide_word(c3, a);
  r.require(v2.kind == Verdict::Kind::nontrivial && verify_verdict(c3, a, v2), "a nontrivial");
  const FinitePresentation z2 = FinitePresentation::parse({"a", "b"}, {"a b a^-1 b^-1"});
  const Word rel = z2.parse_word("a b a^-1 b^-1");
  const Verdict v3 = decide_word(z2, rel);
  r.require(v3.kind == Verdict::Kind::trivial && verify_verdict(z2, rel, v3), "commutator relator trivial");
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked examples", 1.0, worked_examples},
      {2, "relation suite", 5.0, relations},
      {3, "group laws", 60.0, group_laws},
      {4, "cocycles and section", 30.0, cocycles},
      {5, "decompositions and witnesses", 120.0, constructive},
      {6, "representative independence", 30.0, independence},
      {7, "action analyzer", 1.0, analyzer},
      {8, "day and night search", 5.0, day_and_night},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit";
    }
    std::printf("%s %d %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
