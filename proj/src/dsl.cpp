#include "twistbt/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace twistbt {

namespace {

std::string describe_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const std::string& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, std::string found)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
            (expected.size() > 1 ? "one of " : "") + describe_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr expression() {
    Expr e = product();
    finish();
    return e;
  }

  TreeSyntax whole_tree() {
    TreeSyntax t = tree();
    finish();
    return t;
  }
  BrickSyntax whole_brick() {
    BrickSyntax b = brick();
    finish();
    return b;
  }
  PointSyntax whole_point() {
    PointSyntax p = point();
    finish();
    return p;
  }

 private:
  void finish() {
    skip_ws();
    if (pos_ < text_.size()) {
      expected_.insert("end of input");
      fail();
    }
  }

  // --- low level ---------------------------------------------------------

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void advance(std::size_t n = 1) {
    pos_ += n;
    expected_.clear();
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    expected_.insert(std::string("'") + c + "'");
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail();
  }

  [[noreturn]] void fail() {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(line, column, expected_, found);
  }

  std::optional<std::string> identifier() {
    if (is_ident_start(peek())) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) ++end;
      std::string id(text_.substr(pos_, end - pos_));
      advance(end - pos_);
      return id;
    }
    expected_.insert("identifier");
    return std::nullopt;
  }

  std::optional<long> signed_int() {
    const char c = peek();
    std::size_t end = pos_;
    if (c == '-' || c == '+') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end == digits) {
      expected_.insert("integer");
      return std::nullopt;
    }
    long value = 0;
    const char* first = text_.data() + pos_ + (c == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) {
      expected_.insert("integer");
      fail();
    }
    advance(end - pos_);
    return value;
  }

  long require_int() {
    auto v = signed_int();
    if (!v) fail();
    return *v;
  }

  std::string color() {
    if (auto id = identifier()) return *id;
    if (auto n = signed_int()) return std::to_string(*n);
    expected_.insert("color");
    fail();
  }

  // Possibly empty run of 0/1, no whitespace skipping after the first bit.
  std::string bits() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && (text_[end] == '0' || text_[end] == '1')) ++end;
    std::string out(text_.substr(pos_, end - pos_));
    if (end > pos_) advance(end - pos_);
    expected_.insert("bits");
    return out;
  }

  // word := token+, token := NAME ("^" INT)? | "1"
  std::string word() {
    std::vector<std::string> tokens;
    while (true) {
      const char c = peek();
      if (c == '1' && (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
        advance();
        tokens.emplace_back("1");
        continue;
      }
      auto id = identifier();
      if (!id) {
        if (tokens.empty()) expected_.insert("'1'");
        break;
      }
      std::string token = *id;
      if (peek() == '^') {
        advance();
        token += "^" + std::to_string(require_int());
      } else {
        expected_.insert("'^'");
      }
      tokens.push_back(std::move(token));
    }
    if (tokens.empty()) {
      expected_.insert("label word");
      fail();
    }
    std::string out;
    for (const std::string& t : tokens) {
      if (!out.empty()) out += ' ';
      out += t;
    }
    return out;
  }

  TreeSyntax tree() {
    if (accept('.')) return {};
    if (!accept('(')) fail();
    TreeSyntax t;
    t.color = color();
    t.children.push_back(tree());
    t.children.push_back(tree());
    expect(')');
    return t;
  }

  BrickSyntax brick() {
    expect('{');
    BrickSyntax b;
    if (accept('}')) return b;
    do {
      std::string c = color();
      expect(':');
      b.emplace_back(std::move(c), bits());
    } while (accept(','));
    expect('}');
    return b;
  }

  PointSyntax point() {
    expect('{');
    PointSyntax p;
    if (accept('}')) return p;
    do {
      PointSyntax::Entry e;
      e.color = color();
      expect(':');
      e.preperiod = bits();
      expect('(');
      e.period = bits();
      if (e.period.empty()) fail();
      expect(')');
      p.entries.push_back(std::move(e));
    } while (accept(','));
    expect('}');
    return p;
  }

  // --- expressions -------------------------------------------------------

  Expr product() {
    Expr first = factor();
    if (peek() != '*') {
      expected_.insert("'*'");
      return first;
    }
    Expr prod;
    prod.kind = Expr::Kind::product;
    prod.args.push_back(std::move(first));
    while (accept('*')) prod.args.push_back(factor());
    return prod;
  }

  Expr factor() {
    Expr b = base();
    if (!accept('^')) return b;
    Expr p;
    p.kind = Expr::Kind::power;
    p.exponent = require_int();
    p.args.push_back(std::move(b));
    return p;
  }

  Expr base() {
    if (accept('[')) {
      Expr c;
      c.kind = Expr::Kind::commutator;
      c.args.push_back(product());
      expect(',');
      c.args.push_back(product());
      expect(']');
      return c;
    }
    if (accept('(')) {
      Expr e = product();
      expect(')');
      return e;
    }
    const std::size_t start = pos_;
    auto name = identifier();
    if (!name) {
      expected_.insert("'id'");
      fail();
    }
    if (*name == "id") return Expr{};
    Expr e;
    if (*name == "iota") {
      e.kind = Expr::Kind::iota;
      expect('(');
      e.word = word();
    } else if (*name == "iota1") {
      e.kind = Expr::Kind::iota1;
      expect('(');
      e.color = color();
      expect(',');
      e.word = word();
    } else if (*name == "defer") {
      e.kind = Expr::Kind::defer;
      expect('(');
      e.brick = brick();
      expect(',');
      e.word = word();
    } else if (*name == "quad") {
      e.kind = Expr::Kind::quad;
      expect('(');
      e.minus = tree();
      expect(',');
      expect('[');
      if (!accept(']')) {
        do {
          const long v = require_int();
          if (v < 1) fail();
          e.perm.push_back(static_cast<std::size_t>(v));
        } while (accept(','));
        expect(']');
      }
      expect(',');
      expect('[');
      if (!accept(']')) {
        do e.labels.push_back(word());
        while (accept(','));
        expect(']');
      }
      expect(',');
      e.plus = tree();
    } else if (*name == "conj") {
      e.kind = Expr::Kind::conj;
      expect('(');
      e.args.push_back(product());
      expect(',');
      e.args.push_back(product());
    } else {
      pos_ = start;
      expected_ = {"'id'", "'iota'", "'iota1'", "'defer'", "'quad'", "'conj'", "'['", "'('"};
      fail();
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
};

void print_tree(std::ostringstream& out, const TreeSyntax& t) {
  if (t.children.empty()) {
    out << '.';
    return;
  }
  out << '(' << t.color << ' ';
  print_tree(out, t.children[0]);
  out << ' ';
  print_tree(out, t.children[1]);
  out << ')';
}

void print_brick(std::ostringstream& out, const BrickSyntax& b) {
  out << '{';
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out << ", ";
    out << b[i].first << ": " << b[i].second;
  }
  out << '}';
}

void print_expr(std::ostringstream& out, const Expr& e) {
  auto wrapped = [&](const Expr& a, bool wrap) {
    if (wrap) out << '(';
    print_expr(out, a);
    if (wrap) out << ')';
  };
  switch (e.kind) {
    case Expr::Kind::identity:
      out << "id";
      return;
    case Expr::Kind::iota:
      out << "iota(" << e.word << ')';
      return;
    case Expr::Kind::iota1:
      out << "iota1(" << e.color << ", " << e.word << ')';
      return;
    case Expr::Kind::defer:
      out << "defer(";
      print_brick(out, e.brick);
      out << ", " << e.word << ')';
      return;
    case Expr::Kind::quad: {
      out << "quad(";
      print_tree(out, e.minus);
      out << ", [";
      for (std::size_t i = 0; i < e.perm.size(); ++i) out << (i ? "," : "") << e.perm[i];
      out << "], [";
      for (std::size_t i = 0; i < e.labels.size(); ++i) out << (i ? ", " : "") << e.labels[i];
      out << "], ";
      print_tree(out, e.plus);
      out << ')';
      return;
    }
    case Expr::Kind::product:
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << " * ";
        wrapped(e.args[i], e.args[i].kind == Expr::Kind::product);
      }
      return;
    case Expr::Kind::power:
      wrapped(e.args[0], e.args[0].kind == Expr::Kind::product || e.args[0].kind == Expr::Kind::power);
      out << " ^ " << e.exponent;
      return;
    case Expr::Kind::commutator:
      out << '[';
      print_expr(out, e.args[0]);
      out << ", ";
      print_expr(out, e.args[1]);
      out << ']';
      return;
    case Expr::Kind::conj:
      out << "conj(";
      print_expr(out, e.args[0]);
      out << ", ";
      print_expr(out, e.args[1]);
      out << ')';
      return;
  }
}

TreeSyntax tree_syntax(const LabelGroup& group, const Tree& t) {
  if (t.is_leaf()) return {};
  return TreeSyntax{group.color_name(t.color()), {tree_syntax(group, t.child(0)), tree_syntax(group, t.child(1))}};
}

Quadruple evaluate_raw(const Groupoid& sv, const Expr& e) {
  const LabelGroup& group = sv.labels();
  switch (e.kind) {
    case Expr::Kind::identity:
      return sv.identity();
    case Expr::Kind::iota:
      return sv.iota(group.parse_word(e.word));
    case Expr::Kind::iota1:
      return sv.iota1(resolve_color(group, e.color), group.parse_word(e.word));
    case Expr::Kind::defer:
      return deferment(sv, resolve_brick(group, e.brick), group.parse_word(e.word));
    case Expr::Kind::quad: {
      std::vector<Word> labels;
      for (const std::string& w : e.labels) labels.push_back(group.parse_word(w));
      for (std::size_t v : e.perm) {
        if (v == 0 || v > e.perm.size()) throw Error("permutation entries must lie in 1.." + std::to_string(e.perm.size()));
      }
      return sv.make(Forest::single(resolve_tree(group, e.minus)), Permutation::from_one_based(e.perm),
                     std::move(labels), Forest::single(resolve_tree(group, e.plus)));
    }
    case Expr::Kind::product: {
      Quadruple acc = evaluate_raw(sv, e.args[0]);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = sv.simplify(sv.multiply(acc, evaluate_raw(sv, e.args[i])));
      return acc;
    }
    case Expr::Kind::power:
      return sv.power(evaluate_raw(sv, e.args[0]), e.exponent);
    case Expr::Kind::commutator:
      return sv.commutator(evaluate_raw(sv, e.args[0]), evaluate_raw(sv, e.args[1]));
    case Expr::Kind::conj:
      return sv.conjugate(evaluate_raw(sv, e.args[0]), evaluate_raw(sv, e.args[1]));
  }
  throw Error("unknown expression");
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).expression(); }

std::string print_expression(const Expr& e) {
  std::ostringstream out;
  print_expr(out, e);
  return out.str();
}

TreeSyntax parse_tree_syntax(std::string_view text) { return Parser(text).whole_tree(); }
BrickSyntax parse_brick_syntax(std::string_view text) { return Parser(text).whole_brick(); }
PointSyntax parse_point_syntax(std::string_view text) { return Parser(text).whole_point(); }

Color resolve_color(const LabelGroup& group, const std::string& name) {
  auto c = group.find_color(name);
  if (!c) throw Error("unknown color '" + name + "'");
  return *c;
}

Tree resolve_tree(const LabelGroup& group, const TreeSyntax& t) {
  if (t.children.empty()) return Tree::leaf();
  return Tree::split(resolve_color(group, t.color), resolve_tree(group, t.children[0]),
                     resolve_tree(group, t.children[1]));
}

Brick resolve_brick(const LabelGroup& group, const BrickSyntax& b) {
  std::map<Color, std::string> bits;
  for (const auto& [name, value] : b) {
    if (!bits.emplace(resolve_color(group, name), value).second) throw Error("color '" + name + "' repeated");
  }
  return Brick(std::move(bits));
}

CantorPoint resolve_point(const LabelGroup& group, const PointSyntax& p) {
  std::map<Color, CantorPoint::Coordinate> coords;
  for (const auto& entry : p.entries) {
    if (!coords.emplace(resolve_color(group, entry.color), CantorPoint::Coordinate{entry.preperiod, entry.period})
             .second) {
      throw Error("color '" + entry.color + "' repeated");
    }
  }
  return CantorPoint(std::move(coords));
}

Quadruple evaluate(const Groupoid& sv, const Expr& e) { return sv.simplify(evaluate_raw(sv, e)); }

Quadruple parse_element(const Groupoid& sv, std::string_view text) { return evaluate(sv, parse_expression(text)); }

Brick parse_brick(const LabelGroup& group, std::string_view text) {
  return resolve_brick(group, parse_brick_syntax(text));
}

CantorPoint parse_point(const LabelGroup& group, std::string_view text) {
  return resolve_point(group, parse_point_syntax(text));
}

std::string format_tree(const LabelGroup& group, const Tree& t) {
  std::ostringstream out;
  print_tree(out, tree_syntax(group, t));
  return out.str();
}

std::string format_brick(const LabelGroup& group, const Brick& b) {
  BrickSyntax syntax;
  for (const auto& [c, bits] : b.entries()) syntax.emplace_back(group.color_name(c), bits);
  std::ostringstream out;
  print_brick(out, syntax);
  return out.str();
}

std::string format_point(const LabelGroup& group, const CantorPoint& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [c, coord] : p.coordinates()) {
    if (!first) out += ", ";
    first = false;
    out += group.color_name(c) + ": " + coord.preperiod + "(" + coord.period + ")";
  }
  return out + "}";
}

Expr quad_expression(const Groupoid& sv, const Quadruple& q) {
  if (!q.is_group_element()) throw Error("only group elements have a quad literal");
  const LabelGroup& group = sv.labels();
  Expr e;
  e.kind = Expr::Kind::quad;
  e.minus = tree_syntax(group, q.minus.tree(0));
  e.plus = tree_syntax(group, q.plus.tree(0));
  for (std::size_t v : q.perm.images()) e.perm.push_back(v + 1);
  for (const Word& w : q.labels) e.labels.push_back(group.format_word(w));
  return e;
}

std::string format_element(const Groupoid& sv, const Quadruple& q) {
  return print_expression(quad_expression(sv, sv.simplify(q)));
}

std::string format_wreath(const LabelGroup& group, const WreathElement& w) {
  std::string out = "({";
  bool first = true;
  for (const auto& [c, v] : w.vector) {
    if (v == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += group.color_name(c) + ": " + std::to_string(v);
  }
  return out + "}, " + group.format_word(group.normalize(w.label)) + ")";
}

std::string format_conjugacy_word(const Groupoid& sv, const ConjugacyWord& w) {
  if (w.terms.empty()) return "id";
  std::string out;
  for (const ConjugacyTerm& t : w.terms) {
    if (!out.empty()) out += " * ";
    out += t.inverse ? "(h^-1)^{" : "h^{";
    out += format_element(sv, t.conjugator) + "}";
  }
  return out;
}

}  // namespace twistbt
