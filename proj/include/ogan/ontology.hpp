#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <torch/torch.h>

namespace ogan {

struct SubCategory {
  std::string name;
  int parent;  // index into main_categories
};

// Two-layer category hierarchy. Index order is file order and defines the
// canonical label encoding; instances are immutable after load.
struct Ontology {
  std::vector<std::string> main_categories;
  std::vector<SubCategory> sub_categories;
  std::string version;

  int num_main() const { return static_cast<int>(main_categories.size()); }
  int num_sub() const { return static_cast<int>(sub_categories.size()); }

  // Stored parent index of a sub-category. Throws std::out_of_range.
  int parent_of(int sub_index) const;

  // Index lookup by name, -1 if absent.
  int find_sub(const std::string& name) const;
  int find_main(const std::string& name) const;

  // Checks layer non-emptiness, name uniqueness and parent validity.
  // Throws std::runtime_error with field context on violation.
  void validate() const;
};

Ontology load_ontology(const std::filesystem::path& path);
void save_ontology(const Ontology& ontology, const std::filesystem::path& path);

// One-hot encodings over the canonical index order.
torch::Tensor encode_sub_onehot(const Ontology& ontology, int sub_index,
                                torch::Dtype dtype = torch::kFloat32);
torch::Tensor encode_main_onehot(const Ontology& ontology, int main_index,
                                 torch::Dtype dtype = torch::kFloat32);

}  // namespace ogan
