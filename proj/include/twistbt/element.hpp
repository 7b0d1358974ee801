#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistbt/forest.hpp"
#include "twistbt/label_group.hpp"

namespace twistbt {

/// Representative (F_-, sigma, (g_1..g_n), F_+) of the morphism
/// F_-^{-1} o p_sigma o (g_1 + ... + g_n) o F_+.  Domain leaf i of F_+ is
/// sent to range leaf sigma(i) of F_-; labels are indexed by domain leaves.
struct Quadruple {
  Forest minus;
  Permutation perm;
  std::vector<Word> labels;
  Forest plus;

  std::size_t size() const { return labels.size(); }
  bool is_group_element() const { return minus.domain_arity() == 1 && plus.domain_arity() == 1; }
};

/// A point of C^S with finitely many coordinates different from 000...,
/// each eventually periodic.  Stored in normal form (minimal period, then
/// minimal preperiod), so equality is syntactic.
class CantorPoint {
 public:
  struct Coordinate {
    std::string preperiod;
    std::string period = "0";

    friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
  };

  CantorPoint() = default;  // the basepoint kappa_0
  explicit CantorPoint(std::map<Color, Coordinate> coordinates);

  const std::map<Color, Coordinate>& coordinates() const { return coords_; }
  Coordinate coordinate(Color s) const;
  char bit(Color s, std::size_t i) const;

  bool in_brick(const Brick& b) const;
  /// h_psi^{-1}: drop the prefix bits of b.  Requires in_brick(b).
  CantorPoint strip(const Brick& b) const;
  /// h_psi: prepend the bits of b.
  CantorPoint prepend(const Brick& b) const;
  /// Coordinate permutation by g: (g.kappa)(g.s) = kappa(s).
  CantorPoint moved_by(const LabelGroup& group, const Word& g) const;

  friend auto operator<=>(const CantorPoint&, const CantorPoint&) = default;

 private:
  std::map<Color, Coordinate> coords_;
};

/// One domain brick of a representative together with its image brick and
/// twist.
struct BrickImage {
  LeafAddress domain;
  LeafAddress range;
  Word label;
};

/// Arithmetic in the twisted Brin-Thompson groupoid over a fixed
/// label group.
class Groupoid {
 public:
  explicit Groupoid(LabelGroupPtr group);

  const LabelGroup& labels() const { return *group_; }
  const LabelGroupPtr& label_group() const { return group_; }

  /// Checks the arity invariants and normalizes labels.
  Quadruple make(Forest minus, Permutation perm, std::vector<Word> labels, Forest plus) const;

  Quadruple identity(std::size_t arity = 1) const;
  /// iota_empty(g) = [., id, g, .]
  Quadruple iota(const Word& g) const;
  /// iota_1^s(g) = [x_s, id, (1, g), x_s]
  Quadruple iota1(Color s, const Word& g) const;

  /// k-th expansion with color s (0-based k): leaf k of F_+ splits along s,
  /// leaf sigma(k) of F_- along g_k.s.
  Quadruple expand(const Quadruple& q, std::size_t k, Color s) const;
  /// Expansion that splits range leaf j of F_- along color t.
  Quadruple expand_range(const Quadruple& q, std::size_t j, Color t) const;
  /// Expand until F_+ becomes E o F_+ (one tree of E per leaf of F_+).
  Quadruple expand_domain_along(const Quadruple& q, const Forest& e) const;
  /// Expand until F_- becomes E o F_-.
  Quadruple expand_range_along(const Quadruple& q, const Forest& e) const;

  /// Replace F_+ by a forest with the same leaf addresses, permuting sigma
  /// and the labels to match.
  Quadruple with_plus(const Quadruple& q, const Forest& plus) const;
  Quadruple with_minus(const Quadruple& q, const Forest& minus) const;

  /// Greedy un-expansion; same element, not a canonical form.
  Quadruple reduce(const Quadruple& q) const;
  /// Canonical trees for the leaf sets (see tree_from_partition), labels
  /// normalized.  Same element.
  Quadruple canonical(const Quadruple& q) const;
  /// reduce and canonical until the leaf count stops dropping.
  Quadruple simplify(const Quadruple& q) const;

  /// h o h2 (h2 applied first).
  Quadruple multiply(const Quadruple& h, const Quadruple& h2) const;
  Quadruple inverse(const Quadruple& h) const;
  Quadruple power(const Quadruple& h, long n) const;
  /// [a, b] = a b a^-1 b^-1
  Quadruple commutator(const Quadruple& a, const Quadruple& b) const;
  /// b a b^-1
  Quadruple conjugate(const Quadruple& a, const Quadruple& b) const;

  /// Decides equality in the groupoid: both representatives are expanded
  /// to a common domain partition, then every domain brick must have the
  /// same image brick and the same label in G.
  bool equal(const Quadruple& a, const Quadruple& b) const;
  /// For unequal group elements, a point where act or germinal_twist differ.
  std::optional<CantorPoint> distinguishing_point(const Quadruple& a, const Quadruple& b) const;

  std::vector<BrickImage> brick_map(const Quadruple& q) const;
  /// Index of the domain leaf whose brick contains kappa (group elements).
  std::size_t domain_leaf(const Quadruple& h, const CantorPoint& kappa) const;
  CantorPoint act(const Quadruple& h, const CantorPoint& kappa) const;
  Word germinal_twist(const Quadruple& h, const CantorPoint& kappa) const;

 private:
  void validate(const Quadruple& q) const;
  void require_group_element(const Quadruple& q, const char* what) const;
  Quadruple expand_domain_subtree(Quadruple q, std::size_t k, const Tree& t) const;
  Quadruple expand_range_subtree(Quadruple q, std::size_t j, const Tree& t) const;
  /// Expand b so its domain leaves are exactly the leaves of `target` and
  /// rebuild F_+ as `target`.
  Quadruple expand_domain_to(const Quadruple& q, const Forest& target) const;
  std::pair<Quadruple, Quadruple> common_domain(const Quadruple& a, const Quadruple& b) const;

  LabelGroupPtr group_;
};

std::vector<Brick> brick_leaves_in(const std::vector<Brick>& leaves, const Brick& outer);

}  // namespace twistbt
