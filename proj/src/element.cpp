#include "twistbt/element.hpp"

#include <algorithm>
#include <set>

namespace twistbt {

// ---------------------------------------------------------------------------
// CantorPoint

namespace {

bool is_binary(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

CantorPoint::Coordinate normalize_coordinate(CantorPoint::Coordinate c) {
  if (c.period.empty()) throw Error("a periodic part must be non-empty");
  if (!is_binary(c.preperiod) || !is_binary(c.period)) throw Error("point coordinates must be binary");
  const std::size_t n = c.period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c.period[i] == c.period[i - d];
    if (periodic) {
      c.period.resize(d);
      break;
    }
  }
  while (!c.preperiod.empty() && c.preperiod.back() == c.period.back()) {
    c.preperiod.pop_back();
    std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
  }
  return c;
}

}  // namespace

CantorPoint::CantorPoint(std::map<Color, Coordinate> coordinates) {
  for (auto& [s, c] : coordinates) {
    Coordinate n = normalize_coordinate(std::move(c));
    if (n != Coordinate{}) coords_.emplace(s, std::move(n));
  }
}

CantorPoint::Coordinate CantorPoint::coordinate(Color s) const {
  auto it = coords_.find(s);
  return it == coords_.end() ? Coordinate{} : it->second;
}

char CantorPoint::bit(Color s, std::size_t i) const {
  auto it = coords_.find(s);
  if (it == coords_.end()) return '0';
  const Coordinate& c = it->second;
  if (i < c.preperiod.size()) return c.preperiod[i];
  return c.period[(i - c.preperiod.size()) % c.period.size()];
}

bool CantorPoint::in_brick(const Brick& b) const {
  for (const auto& [s, word] : b.entries()) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (bit(s, i) != word[i]) return false;
    }
  }
  return true;
}

CantorPoint CantorPoint::strip(const Brick& b) const {
  if (!in_brick(b)) throw Error("point is not in the brick");
  std::map<Color, Coordinate> out = coords_;
  for (const auto& [s, word] : b.entries()) {
    Coordinate c = coordinate(s);
    const std::size_t n = word.size();
    if (n <= c.preperiod.size()) {
      c.preperiod.erase(0, n);
    } else {
      const std::size_t r = (n - c.preperiod.size()) % c.period.size();
      c.preperiod.clear();
      std::rotate(c.period.begin(), c.period.begin() + static_cast<std::ptrdiff_t>(r), c.period.end());
    }
    out[s] = std::move(c);
  }
  return CantorPoint(std::move(out));
}

CantorPoint CantorPoint::prepend(const Brick& b) const {
  std::map<Color, Coordinate> out = coords_;
  for (const auto& [s, word] : b.entries()) {
    Coordinate c = coordinate(s);
    c.preperiod = word + c.preperiod;
    out[s] = std::move(c);
  }
  return CantorPoint(std::move(out));
}

CantorPoint CantorPoint::moved_by(const LabelGroup& group, const Word& g) const {
  std::map<Color, Coordinate> out;
  for (const auto& [s, c] : coords_) out.emplace(group.act(g, s), c);
  return CantorPoint(std::move(out));
}

// ---------------------------------------------------------------------------
// Groupoid

std::vector<Brick> brick_leaves_in(const std::vector<Brick>& leaves, const Brick& outer) {
  std::vector<Brick> out;
  for (const Brick& b : leaves) {
    if (outer.contains(b)) out.push_back(outer.strip(b));
  }
  return out;
}

Groupoid::Groupoid(LabelGroupPtr group) : group_(std::move(group)) {
  if (!group_) throw Error("a groupoid needs a label group");
}

void Groupoid::validate(const Quadruple& q) const {
  const std::size_t n = q.labels.size();
  if (q.perm.size() != n || q.plus.range_arity() != n || q.minus.range_arity() != n) {
    throw Error("quadruple arity mismatch: " + std::to_string(q.minus.range_arity()) + " range leaves, " +
                std::to_string(q.perm.size()) + "-point permutation, " + std::to_string(n) + " labels, " +
                std::to_string(q.plus.range_arity()) + " domain leaves");
  }
  for (const Forest* f : {&q.minus, &q.plus}) {
    for (const Tree& t : f->trees()) {
      for (Color s : t.colors()) {
        if (!group_->has_color(s)) throw Error("tree uses unknown color " + std::to_string(s.value));
      }
    }
  }
}

void Groupoid::require_group_element(const Quadruple& q, const char* what) const {
  if (!q.is_group_element()) throw Error(std::string(what) + " needs an element of the group (one root on each side)");
}

Quadruple Groupoid::make(Forest minus, Permutation perm, std::vector<Word> labels, Forest plus) const {
  for (Word& g : labels) g = group_->normalize(g);
  Quadruple q{std::move(minus), std::move(perm), std::move(labels), std::move(plus)};
  validate(q);
  return q;
}

Quadruple Groupoid::identity(std::size_t arity) const {
  return Quadruple{Forest::identity(arity), Permutation::identity(arity), std::vector<Word>(arity),
                   Forest::identity(arity)};
}

Quadruple Groupoid::iota(const Word& g) const {
  return make(Forest::identity(1), Permutation::identity(1), {g}, Forest::identity(1));
}

Quadruple Groupoid::iota1(Color s, const Word& g) const {
  const Forest x = Forest::single(Tree::simple_split(s));
  return make(x, Permutation::identity(2), {Word{}, g}, x);
}

Quadruple Groupoid::expand(const Quadruple& q, std::size_t k, Color s) const {
  if (k >= q.size()) throw Error("expand: leaf index out of range");
  if (!group_->has_color(s)) throw Error("expand: unknown color");
  const Word& g = q.labels[k];
  Quadruple out;
  out.plus = q.plus.split_leaf(k, s);
  out.minus = q.minus.split_leaf(q.perm(k), group_->act(g, s));
  out.labels = q.labels;
  out.labels.insert(out.labels.begin() + static_cast<std::ptrdiff_t>(k) + 1, g);
  out.perm = varsigma(q.perm, k);
  return out;
}

Quadruple Groupoid::expand_range(const Quadruple& q, std::size_t j, Color t) const {
  if (j >= q.size()) throw Error("expand: leaf index out of range");
  const std::size_t k = q.perm.inverse()(j);
  return expand(q, k, group_->act_inverse(q.labels[k], t));
}

Quadruple Groupoid::expand_domain_subtree(Quadruple q, std::size_t k, const Tree& t) const {
  if (t.is_leaf()) return q;
  q = expand(q, k, t.color());
  q = expand_domain_subtree(std::move(q), k + 1, t.child(1));
  return expand_domain_subtree(std::move(q), k, t.child(0));
}

Quadruple Groupoid::expand_range_subtree(Quadruple q, std::size_t j, const Tree& t) const {
  if (t.is_leaf()) return q;
  q = expand_range(q, j, t.color());
  q = expand_range_subtree(std::move(q), j + 1, t.child(1));
  return expand_range_subtree(std::move(q), j, t.child(0));
}

Quadruple Groupoid::expand_domain_along(const Quadruple& q, const Forest& e) const {
  if (e.domain_arity() != q.size()) throw Error("expand: forest has the wrong number of roots");
  Quadruple out = q;
  for (std::size_t k = q.size(); k-- > 0;) out = expand_domain_subtree(std::move(out), k, e.tree(k));
  return out;
}

Quadruple Groupoid::expand_range_along(const Quadruple& q, const Forest& e) const {
  if (e.domain_arity() != q.size()) throw Error("expand: forest has the wrong number of roots");
  Quadruple out = q;
  for (std::size_t j = q.size(); j-- > 0;) out = expand_range_subtree(std::move(out), j, e.tree(j));
  return out;
}

namespace {

// position[j] = index in `from` of leaf j of `to`; both must have the same
// leaf addresses.
std::vector<std::size_t> leaf_positions(const Forest& from, const Forest& to) {
  if (from.domain_arity() != to.domain_arity()) throw Error("forests have different numbers of roots");
  std::map<LeafAddress, std::size_t> index;
  const std::vector<LeafAddress> old_leaves = from.leaves();
  for (std::size_t i = 0; i < old_leaves.size(); ++i) index.emplace(old_leaves[i], i);
  std::vector<std::size_t> out;
  for (const LeafAddress& a : to.leaves()) {
    auto it = index.find(a);
    if (it == index.end()) throw Error("forests do not have the same leaves");
    out.push_back(it->second);
  }
  if (out.size() != old_leaves.size()) throw Error("forests do not have the same leaves");
  return out;
}

}  // namespace

Quadruple Groupoid::with_plus(const Quadruple& q, const Forest& plus) const {
  const std::vector<std::size_t> pi = leaf_positions(q.plus, plus);
  Quadruple out;
  out.minus = q.minus;
  out.plus = plus;
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    perm.push_back(q.perm(pi[j]));
    out.labels.push_back(q.labels[pi[j]]);
  }
  out.perm = Permutation(std::move(perm));
  return out;
}

Quadruple Groupoid::with_minus(const Quadruple& q, const Forest& minus) const {
  // Leaf m of the old F_- is leaf rho(m) of the new one.
  const std::vector<std::size_t> pos = leaf_positions(q.minus, minus);
  std::vector<std::size_t> rho(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) rho[pos[j]] = j;
  Quadruple out = q;
  out.minus = minus;
  out.perm = Permutation(std::move(rho)).after(q.perm);
  return out;
}

Quadruple Groupoid::expand_domain_to(const Quadruple& q, const Forest& target) const {
  if (target.domain_arity() != q.plus.domain_arity()) throw Error("forests have different numbers of roots");
  std::vector<Tree> pieces;
  for (const LeafAddress& a : q.plus.leaves()) {
    pieces.push_back(tree_from_partition(brick_leaves_in(target.tree(a.root).leaves(), a.brick)));
  }
  return with_plus(expand_domain_along(q, Forest(std::move(pieces))), target);
}

Quadruple Groupoid::reduce(const Quadruple& q) const {
  Quadruple cur = q;
  for (Word& g : cur.labels) g = group_->normalize(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const std::size_t t = cur.perm(k);
      if (cur.perm(k + 1) != t + 1 || cur.labels[k] != cur.labels[k + 1]) continue;
      auto s = cur.plus.cherry_color(k);
      if (!s) continue;
      auto u = cur.minus.cherry_color(t);
      if (!u || *u != group_->act(cur.labels[k], *s)) continue;

      Quadruple next;
      next.plus = cur.plus.collapse_cherry(k);
      next.minus = cur.minus.collapse_cherry(t);
      next.labels = cur.labels;
      next.labels.erase(next.labels.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      std::vector<std::size_t> perm;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (i == k + 1) continue;
        const std::size_t v = cur.perm(i);
        perm.push_back(v <= t ? v : v - 1);
      }
      next.perm = Permutation(std::move(perm));
      cur = std::move(next);
      changed = true;
      break;
    }
  }
  return cur;
}

Quadruple Groupoid::canonical(const Quadruple& q) const {
  auto canonical_forest = [](const Forest& f) {
    std::vector<Tree> trees;
    for (const Tree& t : f.trees()) trees.push_back(tree_from_partition(t.leaves()));
    return Forest(std::move(trees));
  };
  Quadruple out = with_minus(with_plus(q, canonical_forest(q.plus)), canonical_forest(q.minus));
  for (Word& g : out.labels) g = group_->normalize(g);
  return out;
}

Quadruple Groupoid::simplify(const Quadruple& q) const {
  Quadruple cur = reduce(q);
  while (true) {
    Quadruple next = reduce(canonical(cur));
    if (next.size() >= cur.size()) break;
    cur = std::move(next);
  }
  return canonical(cur);
}

Quadruple Groupoid::multiply(const Quadruple& h, const Quadruple& h2) const {
  if (h.plus.domain_arity() != h2.minus.domain_arity()) {
    throw Error("multiply: domain of the left factor (" + std::to_string(h.plus.domain_arity()) +
                ") differs from range of the right factor (" + std::to_string(h2.minus.domain_arity()) + ")");
  }
  std::vector<Tree> common;
  for (std::size_t r = 0; r < h.plus.domain_arity(); ++r) {
    common.push_back(refine_tree(h.plus.tree(r), h2.minus.tree(r)));
  }
  const Forest u(std::move(common));
  const Quadruple a = expand_domain_to(h, u);

  std::vector<Tree> pieces;
  for (const LeafAddress& leaf : h2.minus.leaves()) {
    pieces.push_back(tree_from_partition(brick_leaves_in(u.tree(leaf.root).leaves(), leaf.brick)));
  }
  const Quadruple b = with_minus(expand_range_along(h2, Forest(std::move(pieces))), u);

  Quadruple out;
  out.minus = a.minus;
  out.plus = b.plus;
  out.perm = a.perm.after(b.perm);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.labels.push_back(group_->multiply(a.labels[b.perm(i)], b.labels[i]));
  }
  return reduce(out);
}

Quadruple Groupoid::inverse(const Quadruple& h) const {
  Quadruple out;
  out.minus = h.plus;
  out.plus = h.minus;
  out.perm = h.perm.inverse();
  for (std::size_t j = 0; j < h.size(); ++j) out.labels.push_back(group_->inverse(h.labels[out.perm(j)]));
  return out;
}

Quadruple Groupoid::power(const Quadruple& h, long n) const {
  if (h.plus.domain_arity() != h.minus.domain_arity()) throw Error("power needs an endomorphism");
  Quadruple base = n < 0 ? inverse(h) : h;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  Quadruple result = identity(h.plus.domain_arity());
  while (e > 0) {
    if (e & 1UL) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Quadruple Groupoid::commutator(const Quadruple& a, const Quadruple& b) const {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

Quadruple Groupoid::conjugate(const Quadruple& a, const Quadruple& b) const {
  return multiply(multiply(b, a), inverse(b));
}

std::pair<Quadruple, Quadruple> Groupoid::common_domain(const Quadruple& a, const Quadruple& b) const {
  std::vector<Tree> common;
  for (std::size_t r = 0; r < a.plus.domain_arity(); ++r) {
    common.push_back(refine_tree(a.plus.tree(r), b.plus.tree(r)));
  }
  const Forest u(std::move(common));
  return {expand_domain_to(a, u), expand_domain_to(b, u)};
}

bool Groupoid::equal(const Quadruple& a, const Quadruple& b) const {
  if (a.plus.domain_arity() != b.plus.domain_arity() || a.minus.domain_arity() != b.minus.domain_arity()) {
    return false;
  }
  auto [x, y] = common_domain(a, b);
  const std::vector<LeafAddress> rx = x.minus.leaves();
  const std::vector<LeafAddress> ry = y.minus.leaves();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (rx[x.perm(k)] != ry[y.perm(k)]) return false;
    if (!group_->equal(x.labels[k], y.labels[k])) return false;
  }
  return true;
}

std::optional<CantorPoint> Groupoid::distinguishing_point(const Quadruple& a, const Quadruple& b) const {
  require_group_element(a, "distinguishing_point");
  require_group_element(b, "distinguishing_point");
  auto [x, y] = common_domain(a, b);
  const std::vector<LeafAddress> dx = x.plus.leaves();
  const std::vector<LeafAddress> rx = x.minus.leaves();
  const std::vector<LeafAddress> ry = y.minus.leaves();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Brick& phi_a = rx[x.perm(k)].brick;
    const Brick& phi_b = ry[y.perm(k)].brick;
    if (phi_a == phi_b && group_->equal(x.labels[k], y.labels[k])) continue;
    // Inside the brick use 0111... on the coordinates that land in the
    // support of either image, so the two images differ after any prefix.
    std::map<Color, CantorPoint::Coordinate> tail;
    for (const Brick* phi : {&phi_a, &phi_b}) {
      for (const auto& [t, word] : phi->entries()) {
        tail[group_->act_inverse(x.labels[k], t)] = CantorPoint::Coordinate{"0", "1"};
      }
    }
    return CantorPoint(std::move(tail)).prepend(dx[k].brick);
  }
  return std::nullopt;
}

std::vector<BrickImage> Groupoid::brick_map(const Quadruple& q) const {
  const std::vector<LeafAddress> domain = q.plus.leaves();
  const std::vector<LeafAddress> range = q.minus.leaves();
  std::vector<BrickImage> out;
  for (std::size_t i = 0; i < q.size(); ++i) out.push_back(BrickImage{domain[i], range[q.perm(i)], q.labels[i]});
  return out;
}

std::size_t Groupoid::domain_leaf(const Quadruple& h, const CantorPoint& kappa) const {
  require_group_element(h, "act");
  const std::vector<LeafAddress> domain = h.plus.leaves();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (kappa.in_brick(domain[i].brick)) return i;
  }
  throw Error("point lies in no domain brick");
}

CantorPoint Groupoid::act(const Quadruple& h, const CantorPoint& kappa) const {
  const std::size_t i = domain_leaf(h, kappa);
  const Brick psi = h.plus.leaves()[i].brick;
  const Brick phi = h.minus.leaves()[h.perm(i)].brick;
  return kappa.strip(psi).moved_by(*group_, h.labels[i]).prepend(phi);
}

Word Groupoid::germinal_twist(const Quadruple& h, const CantorPoint& kappa) const {
  return group_->normalize(h.labels[domain_leaf(h, kappa)]);
}

}  // namespace twistbt
