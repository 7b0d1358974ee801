#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistbt {

/// Raised for invalid input to any twistbt operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of the color set S.  Finite sets use indices 0..|S|-1; the
/// translation action on the integers uses the integer itself.
struct Color {
  std::int64_t value = 0;

  friend auto operator<=>(const Color&, const Color&) = default;
};

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the generators of the label group.  The empty word is the
/// identity; whether two words are equal in G is decided by the oracle.
using Word = std::vector<Letter>;

/// Free reduction of a word.
Word free_reduce(const Word& w);

/// Space separated tokens `name`, `name^-1`, `name^k`; `1` is the empty word.
std::string format_word(std::span<const std::string> names, const Word& w);
Word parse_word(std::span<const std::string> names, std::string_view text);

/// A group G together with an action G -> Sym(S).  Implementations are
/// immutable after construction and safe to share between threads.
class LabelGroup {
 public:
  explicit LabelGroup(std::vector<std::string> generator_names);
  virtual ~LabelGroup() = default;

  LabelGroup(const LabelGroup&) = delete;
  LabelGroup& operator=(const LabelGroup&) = delete;

  virtual std::string kind() const = 0;

  std::span<const std::string> generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// Canonical form: two words are equal in G iff their normal forms are
  /// identical.
  Word normalize(const Word& w) const;
  Word multiply(const Word& g, const Word& h) const;
  Word inverse(const Word& g) const;
  bool equal(const Word& g, const Word& h) const;
  bool is_identity(const Word& g) const { return normalize(g).empty(); }

  /// g.s
  Color act(const Word& g, Color s) const;
  /// g^-1.s
  Color act_inverse(const Word& g, Color s) const;
  /// Membership in K = ker(G -> Sym(S)).
  bool acts_trivially(const Word& g) const;

  /// Number of colors, or nullopt when S is infinite.
  virtual std::optional<std::size_t> color_count() const = 0;
  virtual bool has_color(Color s) const = 0;
  /// Every color when S is finite; otherwise the first `limit` colors of
  /// the enumeration 0, 1, -1, 2, -2, ...
  std::vector<Color> colors(std::size_t limit = 64) const;

  /// True when G is known to be finite (so it can be enumerated).
  virtual bool is_finite_group() const { return false; }

  void set_color_names(std::vector<std::string> names);
  std::string color_name(Color s) const;
  std::optional<Color> find_color(std::string_view name) const;

  /// Textual words: space separated tokens `name`, `name^-1`, `name^k`, or
  /// the single token `1` for the identity.
  std::string format_word(const Word& w) const;
  Word parse_word(std::string_view text) const;
  std::optional<std::size_t> find_generator(std::string_view name) const;

 protected:
  virtual Word normalize_checked(const Word& w) const = 0;
  virtual Color act_letter(const Letter& a, Color s) const = 0;
  virtual bool acts_trivially_checked(const Word& g) const = 0;

  void check_word(const Word& w) const;
  void check_color(Color s) const;

 private:
  std::vector<std::string> generators_;
  std::vector<std::string> color_names_;
};

using LabelGroupPtr = std::shared_ptr<const LabelGroup>;

/// Trivial group acting on `points` colors.  Any generator names given
/// all denote the identity.
LabelGroupPtr make_trivial(std::size_t points, std::vector<std::string> generators = {});

/// Z/n acting on {0..n-1} by s -> s+1.  Normal form r^k, 0 <= k < n.
LabelGroupPtr make_cyclic_rotation(std::size_t n, std::string generator = "r");

/// Sym(n) on {0..n-1}, generated by (0 1) and, for n > 2, (0 1 ... n-1).
LabelGroupPtr make_symmetric(std::size_t n, std::vector<std::string> generators = {});

/// The permutation group on {0..degree-1} generated by the given image
/// lists.
LabelGroupPtr make_permutation_group(std::size_t degree,
                                     std::vector<std::vector<std::size_t>> generator_images,
                                     std::vector<std::string> generators, std::string kind = "finite_table");

/// Z acting on Z by translation.
LabelGroupPtr make_translation(std::string generator = "t");

struct KernelFactor {
  enum class Kind { free, free_abelian, finite };
  Kind kind = Kind::free;
  std::size_t rank = 1;
  /// Cayley table of a finite group on {0..m-1} with identity 0.
  std::vector<std::vector<std::size_t>> table;
  /// Elements of the finite group used as generators (default: all non-identity).
  std::vector<std::size_t> generator_elements;
};

/// G = Q x H acting through the base action of Q; H is the kernel factor.
/// Generators are those of `base` followed by those of the kernel factor.
LabelGroupPtr make_product_kernel(LabelGroupPtr base, KernelFactor kernel,
                                  std::vector<std::string> kernel_generators);

/// Lists every element of a finite G (normal forms), breadth first.
std::vector<Word> enumerate_group(const LabelGroup& group, std::size_t limit = 100000);

struct SubsetStabilizer {
  std::vector<Color> subset;  // orbit representative
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;  // pointwise stabilizer
};

struct ActionReport {
  std::size_t group_order = 0;
  std::size_t color_count = 0;
  std::size_t kernel_order = 0;
  std::vector<Word> kernel_generators;
  /// orbit_counts[m-1] = number of orbits of G on S^m.
  std::vector<std::size_t> orbit_counts;
  std::vector<SubsetStabilizer> stabilizers;
  bool finiteness_clauses_hold = false;
  std::string note;
};

/// Combinatorial data for type [A_n], n <= 3, of a finite action.
ActionReport analyze_finite_action(const LabelGroup& group, std::size_t n);

}  // namespace twistbt
