#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "ogan/ontology.hpp"

namespace ogan {

// Procedural hierarchically-labeled image+text corpus ("ShapeFashion").
// Every main category owns a silhouette family (a region and coarse look of
// the canvas); each sub-category is a distinct shape within its family, so
// the fine label is recoverable from pixels and the two-layer hierarchy is
// visually meaningful.

struct DatasetSpec {
  Ontology ontology;
  int num_examples = 0;
  int resolution = 32;  // square, power of two in {4,8,16,32,64}
  uint64_t seed = 0;
  std::vector<std::pair<std::string, std::array<uint8_t, 3>>> color_palette;
  std::vector<std::pair<std::string, int>> texture_palette;  // name -> pattern id

  static std::vector<std::pair<std::string, std::array<uint8_t, 3>>> default_colors();
  static std::vector<std::pair<std::string, int>> default_textures();

  void validate() const;  // throws on violation, warns on thin sub-category coverage
};

struct LabeledExample {
  torch::Tensor image;  // [3, R, R], values in [-1, 1] (8-bit quantized grid)
  int sub_index = 0;
  std::string text;
};

// Deterministic in (spec, example_seed); the image is quantized exactly as
// the on-disk PNG would be, so rendering and loading agree bit-for-bit.
LabeledExample render_example(const DatasetSpec& spec, uint64_t example_seed,
                              torch::Dtype dtype = torch::kFloat32);

// One of a fixed set of sentence templates; always contains the color,
// texture and sub-category tokens.
std::string template_text(const Ontology& ontology, int sub_index, const std::string& color,
                          const std::string& texture, uint64_t template_seed);

struct ManifestSummary {
  std::filesystem::path manifest_path;
  int num_examples = 0;
  std::vector<int> per_sub_counts;
};

// Writes img/NNNNNN.png plus manifest.jsonl; per-example seed is a stable mix
// of (spec.seed, index) so output is independent of generation order.
ManifestSummary generate_dataset(const DatasetSpec& spec, const std::filesystem::path& out_dir);

struct DatasetRecord {
  std::filesystem::path file;  // resolved against the manifest directory
  int sub = 0;
  int main = 0;
  std::string text;
};

struct Batch {
  torch::Tensor images;       // [B, 3, R, R] in [-1, 1]
  torch::Tensor sub_labels;   // [B] int64
  torch::Tensor main_labels;  // [B] int64
  std::vector<std::string> texts;
  int64_t size() const { return images.size(0); }
};

class Dataset {
 public:
  static Dataset load(const std::filesystem::path& manifest_path);

  const std::vector<DatasetRecord>& records() const { return records_; }
  int64_t size() const { return static_cast<int64_t>(records_.size()); }
  int resolution() const { return resolution_; }

  // Single image as [3, R, R] in [-1, 1]; throws naming the file when missing
  // or corrupt.
  torch::Tensor load_image(int64_t index, torch::Dtype dtype = torch::kFloat32) const;
  Batch load_batch(const std::vector<int64_t>& indices,
                   torch::Dtype dtype = torch::kFloat32) const;

 private:
  std::vector<DatasetRecord> records_;
  int resolution_ = 0;
};

// Seeded shuffled pass over a dataset; the tail batch may be smaller.
class BatchStream {
 public:
  BatchStream(const Dataset& dataset, int64_t batch_size, uint64_t shuffle_seed,
              torch::Dtype dtype = torch::kFloat32);

  std::optional<Batch> next();
  const std::vector<int64_t>& order() const { return order_; }

 private:
  const Dataset& dataset_;
  int64_t batch_size_;
  torch::Dtype dtype_;
  std::vector<int64_t> order_;
  int64_t cursor_ = 0;
};

// Infinite stream for training: re-shuffles at each epoch boundary with a
// seed derived from (shuffle_seed, epoch). Exposes its position so training
// can checkpoint and resume bit-exactly.
class EpochStream {
 public:
  struct State {
    int64_t epoch = 0;
    int64_t cursor = 0;
  };

  EpochStream(const Dataset& dataset, int64_t batch_size, uint64_t shuffle_seed,
              torch::Dtype dtype = torch::kFloat32);

  Batch next();
  State state() const { return state_; }
  void restore(const State& state);
  int64_t epoch() const { return state_.epoch; }

 private:
  void reshuffle();

  const Dataset& dataset_;
  int64_t batch_size_;
  uint64_t shuffle_seed_;
  torch::Dtype dtype_;
  std::vector<int64_t> order_;
  State state_;
};

// Seeded permutation of [0, n) shared by the stream implementations.
std::vector<int64_t> shuffled_indices(int64_t n, uint64_t seed);

}  // namespace ogan
