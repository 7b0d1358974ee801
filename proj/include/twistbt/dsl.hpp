#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistbt/element.hpp"
#include "twistbt/subgroups.hpp"

namespace twistbt {

/// Syntax error with a 1-based position and the tokens that would have
/// been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// Unresolved syntax: colors and label words are kept as text.
struct TreeSyntax {
  std::string color;  // empty for a leaf
  std::vector<TreeSyntax> children;

  friend bool operator==(const TreeSyntax&, const TreeSyntax&) = default;
};

using BrickSyntax = std::vector<std::pair<std::string, std::string>>;

struct PointSyntax {
  struct Entry {
    std::string color;
    std::string preperiod;
    std::string period;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  friend bool operator==(const PointSyntax&, const PointSyntax&) = default;
};

struct Expr {
  enum class Kind { identity, iota, iota1, defer, quad, product, power, commutator, conj };
  Kind kind = Kind::identity;
  std::string color;                // iota1
  std::string word;                 // iota, iota1, defer; tokens joined by one space
  BrickSyntax brick;                // defer
  TreeSyntax minus;                 // quad
  std::vector<std::size_t> perm;    // quad, 1-based
  std::vector<std::string> labels;  // quad
  TreeSyntax plus;                  // quad
  std::vector<Expr> args;           // product, power, commutator, conj
  long exponent = 0;                // power

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr parse_expression(std::string_view text);
std::string print_expression(const Expr& e);

TreeSyntax parse_tree_syntax(std::string_view text);
BrickSyntax parse_brick_syntax(std::string_view text);
PointSyntax parse_point_syntax(std::string_view text);

/// Resolution against a label group.
Color resolve_color(const LabelGroup& group, const std::string& name);
Tree resolve_tree(const LabelGroup& group, const TreeSyntax& t);
Brick resolve_brick(const LabelGroup& group, const BrickSyntax& b);
CantorPoint resolve_point(const LabelGroup& group, const PointSyntax& p);

/// Evaluates and simplifies.
Quadruple evaluate(const Groupoid& sv, const Expr& e);
Quadruple parse_element(const Groupoid& sv, std::string_view text);
Brick parse_brick(const LabelGroup& group, std::string_view text);
CantorPoint parse_point(const LabelGroup& group, std::string_view text);

std::string format_tree(const LabelGroup& group, const Tree& t);
std::string format_brick(const LabelGroup& group, const Brick& b);
std::string format_point(const LabelGroup& group, const CantorPoint& p);
/// quad(TREE, [PERM], [LABELS], TREE) of the simplified representative.
std::string format_element(const Groupoid& sv, const Quadruple& q);
/// The same representative as a quad literal, without simplifying.
Expr quad_expression(const Groupoid& sv, const Quadruple& q);
std::string format_wreath(const LabelGroup& group, const WreathElement& w);
std::string format_conjugacy_word(const Groupoid& sv, const ConjugacyWord& w);

}  // namespace twistbt
