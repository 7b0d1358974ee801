#include "twistbt/label_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace twistbt {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& a : w) {
    if (!out.empty() && out.back().generator == a.generator && out.back().exponent == -a.exponent) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LabelGroup

LabelGroup::LabelGroup(std::vector<std::string> generator_names) : generators_(std::move(generator_names)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::string& name = generators_[i];
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
        !std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw Error("generator name '" + name + "' is not an ASCII identifier");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[j] == name) throw Error("duplicate generator name '" + name + "'");
    }
  }
}

void LabelGroup::check_word(const Word& w) const {
  for (const Letter& a : w) {
    if (a.generator >= generators_.size()) {
      throw Error("unknown generator id " + std::to_string(a.generator) + " for " + kind() + " label group");
    }
    if (a.exponent != 1 && a.exponent != -1) throw Error("letter exponent must be +1 or -1");
  }
}

void LabelGroup::check_color(Color s) const {
  if (!has_color(s)) throw Error("unknown color " + std::to_string(s.value));
}

Word LabelGroup::normalize(const Word& w) const {
  check_word(w);
  return normalize_checked(w);
}

Word LabelGroup::multiply(const Word& g, const Word& h) const {
  Word w = g;
  w.insert(w.end(), h.begin(), h.end());
  return normalize(w);
}

Word LabelGroup::inverse(const Word& g) const {
  check_word(g);
  Word w(g.rbegin(), g.rend());
  for (Letter& a : w) a.exponent = -a.exponent;
  return normalize_checked(w);
}

bool LabelGroup::equal(const Word& g, const Word& h) const { return normalize(g) == normalize(h); }

Color LabelGroup::act(const Word& g, Color s) const {
  check_word(g);
  check_color(s);
  for (auto it = g.rbegin(); it != g.rend(); ++it) s = act_letter(*it, s);
  return s;
}

Color LabelGroup::act_inverse(const Word& g, Color s) const {
  check_word(g);
  check_color(s);
  for (const Letter& a : g) s = act_letter(Letter{a.generator, -a.exponent}, s);
  return s;
}

bool LabelGroup::acts_trivially(const Word& g) const {
  check_word(g);
  return acts_trivially_checked(g);
}

std::vector<Color> LabelGroup::colors(std::size_t limit) const {
  std::vector<Color> out;
  if (auto n = color_count()) {
    for (std::size_t i = 0; i < *n; ++i) out.push_back(Color{static_cast<std::int64_t>(i)});
    return out;
  }
  for (std::int64_t i = 0; out.size() < limit; ++i) {
    if (i == 0) {
      out.push_back(Color{0});
      continue;
    }
    out.push_back(Color{i});
    if (out.size() < limit) out.push_back(Color{-i});
  }
  return out;
}

void LabelGroup::set_color_names(std::vector<std::string> names) {
  auto n = color_count();
  if (!n || names.size() != *n) throw Error("color names require a finite color set of matching size");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty color name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error("duplicate color name '" + names[i] + "'");
  }
  color_names_ = std::move(names);
}

std::string LabelGroup::color_name(Color s) const {
  if (!color_names_.empty() && s.value >= 0 && static_cast<std::size_t>(s.value) < color_names_.size()) {
    return color_names_[static_cast<std::size_t>(s.value)];
  }
  return std::to_string(s.value);
}

std::optional<Color> LabelGroup::find_color(std::string_view name) const {
  for (std::size_t i = 0; i < color_names_.size(); ++i) {
    if (color_names_[i] == name) return Color{static_cast<std::int64_t>(i)};
  }
  std::int64_t value = 0;
  const char* first = name.data();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || name.empty()) return std::nullopt;
  if (!has_color(Color{value})) return std::nullopt;
  return Color{value};
}

std::optional<std::size_t> LabelGroup::find_generator(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::string LabelGroup::format_word(const Word& w) const { return twistbt::format_word(generators_, w); }

Word LabelGroup::parse_word(std::string_view text) const { return twistbt::parse_word(generators_, text); }

std::string format_word(std::span<const std::string> names, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& a : w) {
    if (!out.empty()) out += ' ';
    out += a.generator < names.size() ? names[a.generator] : "?" + std::to_string(a.generator);
    if (a.exponent < 0) out += "^-1";
  }
  return out;
}

Word parse_word(std::span<const std::string> names, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::string name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exponent = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), power);
      if (ec != std::errc() || ptr != exponent.data() + exponent.size() || exponent.empty()) {
        throw Error("bad exponent in word token '" + token + "'");
      }
      if (std::labs(power) > 100000) throw Error("exponent too large in word token '" + token + "'");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("unknown generator '" + name + "'");
    const std::size_t id = static_cast<std::size_t>(it - names.begin());
    for (long i = 0; i < std::labs(power); ++i) w.push_back(Letter{id, power < 0 ? -1 : 1});
  }
  return w;
}

namespace {

// ---------------------------------------------------------------------------
// Finite permutation groups (trivial, cyclic_rotation, sym, finite_table)

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

constexpr std::size_t kMaxFiniteOrder = 1'000'000;

class PermutationGroup final : public LabelGroup {
 public:
  PermutationGroup(std::string kind, std::size_t degree, std::vector<Perm> gens, std::vector<std::string> names)
      : LabelGroup(std::move(names)), kind_(std::move(kind)), degree_(degree), gens_(std::move(gens)) {
    if (degree_ == 0) throw Error("the color set must be non-empty");
    if (gens_.size() != generator_count()) throw Error("generator count does not match generator names");
    for (const Perm& p : gens_) {
      if (p.size() != degree_) throw Error("generator permutation has wrong degree");
      std::vector<bool> seen(degree_, false);
      for (std::size_t x : p) {
        if (x >= degree_ || seen[x]) throw Error("generator images are not a permutation");
        seen[x] = true;
      }
      inverse_gens_.push_back(invert(p));
    }
    enumerate();
  }

  std::string kind() const override { return kind_; }
  std::optional<std::size_t> color_count() const override { return degree_; }
  bool has_color(Color s) const override {
    return s.value >= 0 && static_cast<std::size_t>(s.value) < degree_;
  }
  bool is_finite_group() const override { return true; }

 protected:
  Word normalize_checked(const Word& w) const override {
    auto it = index_.find(perm_of(w));
    return words_[it->second];
  }
  Color act_letter(const Letter& a, Color s) const override {
    const Perm& p = a.exponent > 0 ? gens_[a.generator] : inverse_gens_[a.generator];
    return Color{static_cast<std::int64_t>(p[static_cast<std::size_t>(s.value)])};
  }
  bool acts_trivially_checked(const Word& g) const override { return perm_of(g) == identity_perm(degree_); }

 private:
  Perm perm_of(const Word& w) const {
    Perm p = identity_perm(degree_);
    for (const Letter& a : w) p = compose(p, a.exponent > 0 ? gens_[a.generator] : inverse_gens_[a.generator]);
    return p;
  }

  // Breadth first over positive letters: the stored word of each element is
  // its shortlex-least positive word.
  void enumerate() {
    Perm id = identity_perm(degree_);
    index_.emplace(id, 0);
    perms_.push_back(id);
    words_.push_back({});
    for (std::size_t head = 0; head < perms_.size(); ++head) {
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        Perm next = compose(perms_[head], gens_[g]);
        if (index_.count(next)) continue;
        if (perms_.size() >= kMaxFiniteOrder) throw Error("finite label group too large to enumerate");
        Word w = words_[head];
        w.push_back(Letter{g, 1});
        index_.emplace(next, perms_.size());
        perms_.push_back(std::move(next));
        words_.push_back(std::move(w));
      }
    }
  }

  std::string kind_;
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> inverse_gens_;
  std::map<Perm, std::size_t> index_;
  std::vector<Perm> perms_;
  std::vector<Word> words_;
};

// ---------------------------------------------------------------------------

class Translation final : public LabelGroup {
 public:
  explicit Translation(std::string name) : LabelGroup({std::move(name)}) {}

  std::string kind() const override { return "translation_Z"; }
  std::optional<std::size_t> color_count() const override { return std::nullopt; }
  bool has_color(Color) const override { return true; }

 protected:
  Word normalize_checked(const Word& w) const override {
    long total = 0;
    for (const Letter& a : w) total += a.exponent;
    return Word(static_cast<std::size_t>(std::labs(total)), Letter{0, total < 0 ? -1 : 1});
  }
  Color act_letter(const Letter& a, Color s) const override { return Color{s.value + a.exponent}; }
  bool acts_trivially_checked(const Word& g) const override { return normalize_checked(g).empty(); }
};

// ---------------------------------------------------------------------------
// Kernel factors: normal forms over generator ids 0..count-1.

class KernelNormalizer {
 public:
  virtual ~KernelNormalizer() = default;
  virtual std::size_t generator_count() const = 0;
  virtual Word normalize(const Word& w) const = 0;
  virtual bool finite() const { return false; }
};

class FreeKernel final : public KernelNormalizer {
 public:
  explicit FreeKernel(std::size_t rank) : rank_(rank) {}
  std::size_t generator_count() const override { return rank_; }
  Word normalize(const Word& w) const override { return free_reduce(w); }

 private:
  std::size_t rank_;
};

class FreeAbelianKernel final : public KernelNormalizer {
 public:
  explicit FreeAbelianKernel(std::size_t rank) : rank_(rank) {}
  std::size_t generator_count() const override { return rank_; }
  Word normalize(const Word& w) const override {
    std::vector<long> exponents(rank_, 0);
    for (const Letter& a : w) exponents[a.generator] += a.exponent;
    Word out;
    for (std::size_t g = 0; g < rank_; ++g) {
      for (long i = 0; i < std::labs(exponents[g]); ++i) out.push_back(Letter{g, exponents[g] < 0 ? -1 : 1});
    }
    return out;
  }

 private:
  std::size_t rank_;
};

class FiniteKernel final : public KernelNormalizer {
 public:
  FiniteKernel(std::vector<std::vector<std::size_t>> table, std::vector<std::size_t> gens)
      : table_(std::move(table)), gens_(std::move(gens)) {
    const std::size_t m = table_.size();
    if (m == 0) throw Error("finite kernel table is empty");
    for (const auto& row : table_) {
      if (row.size() != m) throw Error("finite kernel table is not square");
      for (std::size_t x : row)
        if (x >= m) throw Error("finite kernel table entry out of range");
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (table_[0][x] != x || table_[x][0] != x) throw Error("element 0 of the finite kernel table must be the identity");
    }
    if (gens_.empty()) {
      for (std::size_t x = 1; x < m; ++x) gens_.push_back(x);
    }
    inverses_.assign(m, m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (table_[x][y] == 0) inverses_[x] = y;
      }
      if (inverses_[x] == m) throw Error("finite kernel table is not a group table");
    }
    words_.assign(m, Word{});
    std::vector<bool> seen(m, false);
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        std::size_t y = table_[x][gens_[g]];
        if (seen[y]) continue;
        seen[y] = true;
        words_[y] = words_[x];
        words_[y].push_back(Letter{g, 1});
        queue.push_back(y);
      }
    }
  }
  std::size_t generator_count() const override { return gens_.size(); }
  bool finite() const override { return true; }
  Word normalize(const Word& w) const override {
    std::size_t x = 0;
    for (const Letter& a : w) {
      std::size_t g = gens_[a.generator];
      x = table_[x][a.exponent > 0 ? g : inverses_[g]];
    }
    return words_[x];
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> inverses_;
  std::vector<Word> words_;
};

std::vector<std::string> join_names(const LabelGroup& base, const std::vector<std::string>& kernel) {
  std::vector<std::string> names(base.generators().begin(), base.generators().end());
  names.insert(names.end(), kernel.begin(), kernel.end());
  return names;
}

class ProductKernel final : public LabelGroup {
 public:
  ProductKernel(LabelGroupPtr base, std::unique_ptr<KernelNormalizer> kernel, std::vector<std::string> kernel_names)
      : LabelGroup(join_names(*base, kernel_names)), base_(std::move(base)), kernel_(std::move(kernel)) {
    if (kernel_names.size() != kernel_->generator_count()) {
      throw Error("kernel generator names do not match the kernel factor");
    }
  }

  std::string kind() const override { return "product_kernel"; }
  std::optional<std::size_t> color_count() const override { return base_->color_count(); }
  bool has_color(Color s) const override { return base_->has_color(s); }
  bool is_finite_group() const override { return base_->is_finite_group() && kernel_->finite(); }

 protected:
  Word normalize_checked(const Word& w) const override {
    auto [base_part, kernel_part] = split(w);
    Word out = base_->normalize(base_part);
    const std::size_t offset = base_->generator_count();
    for (Letter a : kernel_->normalize(kernel_part)) {
      a.generator += offset;
      out.push_back(a);
    }
    return out;
  }
  Color act_letter(const Letter& a, Color s) const override {
    if (a.generator >= base_->generator_count()) return s;
    return base_->act(Word{a}, s);
  }
  bool acts_trivially_checked(const Word& g) const override { return base_->acts_trivially(split(g).first); }

 private:
  std::pair<Word, Word> split(const Word& w) const {
    Word base_part;
    Word kernel_part;
    const std::size_t offset = base_->generator_count();
    for (const Letter& a : w) {
      if (a.generator < offset) {
        base_part.push_back(a);
      } else {
        kernel_part.push_back(Letter{a.generator - offset, a.exponent});
      }
    }
    return {base_part, kernel_part};
  }

  LabelGroupPtr base_;
  std::unique_ptr<KernelNormalizer> kernel_;
};

std::vector<std::string> default_names(std::size_t count, std::vector<std::string> names,
                                       std::initializer_list<const char*> defaults) {
  if (!names.empty()) {
    if (names.size() != count) {
      throw Error("expected " + std::to_string(count) + " generator names, got " + std::to_string(names.size()));
    }
    return names;
  }
  auto it = defaults.begin();
  for (std::size_t i = 0; i < count; ++i, ++it) names.emplace_back(*it);
  return names;
}

}  // namespace

LabelGroupPtr make_trivial(std::size_t points, std::vector<std::string> generators) {
  std::vector<Perm> gens(generators.size(), identity_perm(points));
  return std::make_shared<PermutationGroup>("trivial", points, std::move(gens), std::move(generators));
}

LabelGroupPtr make_cyclic_rotation(std::size_t n, std::string generator) {
  Perm rotation(n);
  for (std::size_t i = 0; i < n; ++i) rotation[i] = (i + 1) % n;
  return std::make_shared<PermutationGroup>("cyclic_rotation", n, std::vector<Perm>{rotation},
                                            std::vector<std::string>{std::move(generator)});
}

LabelGroupPtr make_symmetric(std::size_t n, std::vector<std::string> generators) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm transposition = identity_perm(n);
    std::swap(transposition[0], transposition[1]);
    gens.push_back(transposition);
  }
  if (n >= 3) {
    Perm cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(cycle);
  }
  auto names = default_names(gens.size(), std::move(generators), {"s", "c"});
  return std::make_shared<PermutationGroup>("sym", n, std::move(gens), std::move(names));
}

LabelGroupPtr make_permutation_group(std::size_t degree, std::vector<std::vector<std::size_t>> generator_images,
                                     std::vector<std::string> generators, std::string kind) {
  return std::make_shared<PermutationGroup>(std::move(kind), degree, std::move(generator_images),
                                            std::move(generators));
}

LabelGroupPtr make_translation(std::string generator) { return std::make_shared<Translation>(std::move(generator)); }

LabelGroupPtr make_product_kernel(LabelGroupPtr base, KernelFactor kernel, std::vector<std::string> kernel_generators) {
  if (!base) throw Error("product_kernel requires a base action");
  std::unique_ptr<KernelNormalizer> normalizer;
  switch (kernel.kind) {
    case KernelFactor::Kind::free:
      normalizer = std::make_unique<FreeKernel>(kernel.rank);
      break;
    case KernelFactor::Kind::free_abelian:
      normalizer = std::make_unique<FreeAbelianKernel>(kernel.rank);
      break;
    case KernelFactor::Kind::finite:
      normalizer = std::make_unique<FiniteKernel>(std::move(kernel.table), std::move(kernel.generator_elements));
      break;
  }
  return std::make_shared<ProductKernel>(std::move(base), std::move(normalizer), std::move(kernel_generators));
}

std::vector<Word> enumerate_group(const LabelGroup& group, std::size_t limit) {
  if (!group.is_finite_group()) throw Error("cannot enumerate an infinite label group");
  std::set<Word> seen{Word{}};
  std::vector<Word> elements{Word{}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < group.generator_count(); ++g) {
      for (int e : {1, -1}) {
        Word next = group.multiply(elements[head], Word{Letter{g, e}});
        if (!seen.insert(next).second) continue;
        if (elements.size() >= limit) throw Error("label group has more than " + std::to_string(limit) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::set<Word> closure(const LabelGroup& group, const std::vector<Word>& gens) {
  std::set<Word> seen{Word{}};
  std::vector<Word> queue{Word{}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Word& g : gens) {
      Word next = group.multiply(queue[head], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

ActionReport analyze_finite_action(const LabelGroup& group, std::size_t n) {
  if (n == 0 || n > 3) throw Error("analyze_finite_action supports 1 <= n <= 3");
  auto count = group.color_count();
  if (!count || !group.is_finite_group()) throw Error("analyze_finite_action: unsupported for infinite G or S");

  ActionReport report;
  const std::size_t degree = *count;
  const std::vector<Word> elements = enumerate_group(group);
  report.group_order = elements.size();
  report.color_count = degree;

  std::vector<Word> kernel;
  for (const Word& g : elements) {
    if (group.acts_trivially(g)) kernel.push_back(g);
  }
  report.kernel_order = kernel.size();
  std::set<Word> generated{Word{}};
  for (const Word& k : kernel) {
    if (generated.count(k)) continue;
    report.kernel_generators.push_back(k);
    generated = closure(group, report.kernel_generators);
  }

  // Image of each color under each generator.
  std::vector<std::vector<std::size_t>> moves;
  for (std::size_t g = 0; g < group.generator_count(); ++g) {
    std::vector<std::size_t> images(degree);
    for (std::size_t s = 0; s < degree; ++s) {
      images[s] = static_cast<std::size_t>(group.act(Word{Letter{g, 1}}, Color{static_cast<std::int64_t>(s)}).value);
    }
    moves.push_back(std::move(images));
  }

  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < m; ++i) tuples *= degree;
    UnionFind orbits(tuples);
    for (const auto& images : moves) {
      for (std::size_t code = 0; code < tuples; ++code) {
        std::size_t rest = code;
        std::size_t image = 0;
        std::size_t place = 1;
        for (std::size_t i = 0; i < m; ++i) {
          image += images[rest % degree] * place;
          rest /= degree;
          place *= degree;
        }
        orbits.unite(code, image);
      }
    }
    std::size_t components = 0;
    for (std::size_t code = 0; code < tuples; ++code) components += orbits.find(code) == code;
    report.orbit_counts.push_back(components);
  }

  // Subsets of size <= n, up to the action.
  std::vector<std::vector<std::size_t>> subsets{{}};
  for (std::size_t size = 1; size <= std::min(n, degree); ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      subsets.push_back(pick);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == degree - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::map<std::vector<std::size_t>, std::size_t> subset_index;
  for (std::size_t i = 0; i < subsets.size(); ++i) subset_index.emplace(subsets[i], i);
  UnionFind subset_orbits(subsets.size());
  for (const auto& images : moves) {
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<std::size_t> moved;
      for (std::size_t s : subsets[i]) moved.push_back(images[s]);
      std::sort(moved.begin(), moved.end());
      subset_orbits.unite(i, subset_index.at(moved));
    }
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subset_orbits.find(i) != i) continue;
    SubsetStabilizer entry;
    for (std::size_t s : subsets[i]) entry.subset.push_back(Color{static_cast<std::int64_t>(s)});
    for (std::size_t j = 0; j < subsets.size(); ++j) entry.orbit_size += subset_orbits.find(j) == i;
    for (const Word& g : elements) {
      bool fixes = std::all_of(entry.subset.begin(), entry.subset.end(),
                               [&](Color s) { return group.act(g, s) == s; });
      entry.stabilizer_order += fixes;
    }
    report.stabilizers.push_back(std::move(entry));
  }

  report.finiteness_clauses_hold = true;
  report.note = "G is finite, so G and every stabilizer are of type F_infinity; the orbit condition holds since S is finite";
  return report;
}

}  // namespace twistbt
