#include "ogan/ontology.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ogan {

namespace {
using nlohmann::json;

torch::Tensor onehot(int length, int index, torch::Dtype dtype, const char* what) {
  if (index < 0 || index >= length) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(index) +
                            " out of range [0, " + std::to_string(length) + ")");
  }
  auto v = torch::zeros({length}, torch::TensorOptions().dtype(dtype));
  v[index] = 1.0;
  return v;
}
}  // namespace

int Ontology::parent_of(int sub_index) const {
  if (sub_index < 0 || sub_index >= num_sub()) {
    throw std::out_of_range("sub-category index " + std::to_string(sub_index) +
                            " out of range [0, " + std::to_string(num_sub()) + ")");
  }
  return sub_categories[sub_index].parent;
}

int Ontology::find_sub(const std::string& name) const {
  for (int i = 0; i < num_sub(); ++i) {
    if (sub_categories[i].name == name) return i;
  }
  return -1;
}

int Ontology::find_main(const std::string& name) const {
  for (int i = 0; i < num_main(); ++i) {
    if (main_categories[i] == name) return i;
  }
  return -1;
}

void Ontology::validate() const {
  if (main_categories.empty()) {
    throw std::runtime_error("ontology: main_categories is empty");
  }
  if (sub_categories.empty()) {
    throw std::runtime_error("ontology: sub_categories is empty");
  }
  std::set<std::string> mains;
  for (const auto& name : main_categories) {
    if (!mains.insert(name).second) {
      throw std::runtime_error("ontology: duplicate main-category name '" + name + "'");
    }
  }
  std::set<std::string> subs;
  for (size_t i = 0; i < sub_categories.size(); ++i) {
    const auto& sub = sub_categories[i];
    if (!subs.insert(sub.name).second) {
      throw std::runtime_error("ontology: duplicate sub-category name '" + sub.name + "' (entry " +
                               std::to_string(i) + ")");
    }
    if (sub.parent < 0 || sub.parent >= num_main()) {
      throw std::runtime_error("ontology: sub-category '" + sub.name + "' (entry " +
                               std::to_string(i) + ") references parent index " +
                               std::to_string(sub.parent) + " but there are only " +
                               std::to_string(num_main()) + " main categories");
    }
  }
}

Ontology load_ontology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("ontology: cannot open " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("ontology: parse failure in " + path.string() + ": " + e.what());
  }

  Ontology ontology;
  try {
    if (!doc.is_object() || !doc.contains("main_categories") || !doc.contains("sub_categories")) {
      throw std::runtime_error("expected keys 'main_categories' and 'sub_categories'");
    }
    for (const auto& m : doc.at("main_categories")) {
      ontology.main_categories.push_back(m.get<std::string>());
    }
    for (const auto& s : doc.at("sub_categories")) {
      // Nested hierarchies are out of contract: a sub-category is a leaf.
      if (s.contains("sub_categories") || s.contains("children")) {
        throw std::runtime_error("sub-category '" + s.value("name", std::string("?")) +
                                 "' carries a nested layer; the ontology is exactly two layers");
      }
      SubCategory sub;
      sub.name = s.at("name").get<std::string>();
      sub.parent = s.at("parent").get<int>();
      ontology.sub_categories.push_back(sub);
    }
    ontology.version = doc.value("version", std::string());
  } catch (const json::exception& e) {
    throw std::runtime_error("ontology: malformed document " + path.string() + ": " + e.what());
  }

  ontology.validate();
  return ontology;
}

void save_ontology(const Ontology& ontology, const std::filesystem::path& path) {
  ontology.validate();
  json doc;
  doc["main_categories"] = ontology.main_categories;
  doc["sub_categories"] = json::array();
  for (const auto& sub : ontology.sub_categories) {
    doc["sub_categories"].push_back({{"name", sub.name}, {"parent", sub.parent}});
  }
  if (!ontology.version.empty()) {
    doc["version"] = ontology.version;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("ontology: cannot write " + path.string());
  }
  out << doc.dump(2) << "\n";
}

torch::Tensor encode_sub_onehot(const Ontology& ontology, int sub_index, torch::Dtype dtype) {
  return onehot(ontology.num_sub(), sub_index, dtype, "sub-category");
}

torch::Tensor encode_main_onehot(const Ontology& ontology, int main_index, torch::Dtype dtype) {
  return onehot(ontology.num_main(), main_index, dtype, "main-category");
}

}  // namespace ogan
