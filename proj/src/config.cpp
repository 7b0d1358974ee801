#include "twistbt/config.hpp"

#include <fstream>
#include <sstream>

namespace twistbt {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& config, const char* key) {
  if (!config.contains(key)) return {};
  return config.at(key).get<std::vector<std::string>>();
}

std::size_t size_field(const json& config, const char* key) {
  if (!config.contains(key)) throw Error(std::string("config: missing field '") + key + "'");
  const long v = config.at(key).get<long>();
  if (v < 0) throw Error(std::string("config: field '") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

KernelFactor load_kernel(const json& config) {
  KernelFactor k;
  const std::string kind = config.value("kind", "free");
  if (kind == "free" || kind == "free_abelian") {
    k.kind = kind == "free" ? KernelFactor::Kind::free : KernelFactor::Kind::free_abelian;
    k.rank = size_field(config, "rank");
  } else if (kind == "finite") {
    k.kind = KernelFactor::Kind::finite;
    k.table = config.at("table").get<std::vector<std::vector<std::size_t>>>();
    if (config.contains("generator_elements")) {
      k.generator_elements = config.at("generator_elements").get<std::vector<std::size_t>>();
    }
  } else {
    throw Error("config: unknown kernel kind '" + kind + "'");
  }
  return k;
}

std::size_t kernel_generator_count(const KernelFactor& k) {
  switch (k.kind) {
    case KernelFactor::Kind::free:
    case KernelFactor::Kind::free_abelian:
      return k.rank;
    case KernelFactor::Kind::finite:
      return k.generator_elements.empty() ? (k.table.empty() ? 0 : k.table.size() - 1) : k.generator_elements.size();
  }
  return 0;
}

LabelGroupPtr load_group_body(const json& config) {
  if (!config.is_object()) throw Error("config: expected an object");
  const std::string kind = config.at("kind").get<std::string>();
  std::vector<std::string> gens = string_list(config, "generators");
  if (kind == "trivial") return make_trivial(size_field(config, "n"), std::move(gens));
  if (kind == "cyclic_rotation") {
    return make_cyclic_rotation(size_field(config, "n"), gens.empty() ? std::string("r") : gens.at(0));
  }
  if (kind == "sym") return make_symmetric(size_field(config, "n"), std::move(gens));
  if (kind == "finite_table") {
    auto images = config.at("table").get<std::vector<std::vector<std::size_t>>>();
    if (gens.empty()) {
      for (std::size_t i = 0; i < images.size(); ++i) gens.push_back("g" + std::to_string(i + 1));
    }
    return make_permutation_group(size_field(config, "n"), std::move(images), std::move(gens));
  }
  if (kind == "translation_Z") return make_translation(gens.empty() ? std::string("t") : gens.at(0));
  if (kind == "product_kernel") {
    LabelGroupPtr base = load_group_body(config.at("base"));
    KernelFactor kernel = load_kernel(config.at("kernel"));
    if (gens.empty()) {
      const std::size_t n = kernel_generator_count(kernel);
      for (std::size_t i = 0; i < n; ++i) gens.push_back("k" + std::to_string(i + 1));
    }
    return make_product_kernel(std::move(base), std::move(kernel), std::move(gens));
  }
  throw Error("config: unknown kind '" + kind + "'");
}

}  // namespace

json read_json_source(const std::string& source) {
  std::size_t first = source.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && source[first] == '{') return json::parse(source);
    std::ifstream in(source);
    if (!in) throw Error("cannot open '" + source + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

LabelGroupPtr load_label_group(const json& config) {
  try {
    LabelGroupPtr group = load_group_body(config);
    if (config.contains("colors")) {
      // freshly built and not shared yet
      std::const_pointer_cast<LabelGroup>(group)->set_color_names(string_list(config, "colors"));
    }
    return group;
  } catch (const json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
}

LabelGroupPtr load_label_group_from(const std::string& source) { return load_label_group(read_json_source(source)); }

FinitePresentation load_presentation(const json& config) {
  try {
    return FinitePresentation::parse(config.at("generators").get<std::vector<std::string>>(),
                                     string_list(config, "relators"));
  } catch (const json::exception& e) {
    throw Error(std::string("presentation: ") + e.what());
  }
}

FinitePresentation load_presentation_from(const std::string& source) {
  return load_presentation(read_json_source(source));
}

}  // namespace twistbt
