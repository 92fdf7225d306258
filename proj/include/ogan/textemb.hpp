#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

namespace ogan {

struct TextEmbedding {
  torch::Tensor vector;  // [d_e]
  int token_count = 0;   // tokens that hit the table
};

// Word -> vector table. Either loaded from a GloVe-format text file or a
// deterministic hashed stand-in where each word's vector is drawn from a
// seeded unit Gaussian and scaled to unit L2 norm. Lookups are
// case-normalized. Immutable after construction (the hashed variant
// memoizes under a lock; recomputation is pure).
class WordVectorTable {
 public:
  enum class Source { LoadedFile, HashedDeterministic };

  static WordVectorTable from_entries(int dim, std::map<std::string, std::vector<double>> entries);
  static WordVectorTable hashed(int dim, uint64_t seed);

  int dim() const { return dim_; }
  Source source() const { return source_; }
  size_t size() const { return entries_.size(); }  // loaded entries only

  // nullopt for out-of-vocabulary words (never for the hashed table).
  std::optional<std::vector<double>> lookup(std::string_view word) const;

 private:
  WordVectorTable() = default;

  int dim_ = 0;
  Source source_ = Source::LoadedFile;
  uint64_t hash_seed_ = 0;
  std::map<std::string, std::vector<double>> entries_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::string, std::vector<double>, std::less<>> memo_;

  friend WordVectorTable load_word_vectors(const std::filesystem::path&);
};

WordVectorTable load_word_vectors(const std::filesystem::path& path);
WordVectorTable hashed_table(int dim, uint64_t seed);

// Lowercase, split on non-alphanumeric runs, drop empties.
std::vector<std::string> tokenize(std::string_view text);

// Arithmetic mean of in-vocabulary token vectors; zeros (and a warning) when
// no token hits the table.
TextEmbedding embed_text_average(const WordVectorTable& table, std::string_view text,
                                 torch::Dtype dtype = torch::kFloat32);

// Per-token glovector sequence, truncated at max_len. Returns ([T, d_e], T)
// with T >= 1: an empty or all-OOV text maps to a single all-zeros row.
// Out-of-vocabulary tokens inside a non-empty text are skipped.
std::pair<torch::Tensor, int> embed_text_sequence(const WordVectorTable& table,
                                                  std::string_view text, int max_len,
                                                  torch::Dtype dtype = torch::kFloat32);

}  // namespace ogan
