#include "ogan/textemb.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ogan/log.hpp"
#include "ogan/rng.hpp"

namespace ogan {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<double> hashed_vector(std::string_view word, uint64_t seed, int dim) {
  rng::SplitMix64 stream(rng::hash_bytes(word, seed));
  std::vector<double> v(dim);
  double norm_sq = 0.0;
  for (int i = 0; i < dim; ++i) {
    v[i] = stream.next_gaussian();
    norm_sq += v[i] * v[i];
  }
  double norm = std::sqrt(norm_sq);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  } else {
    v[0] = 1.0;  // all-zero draw is astronomically unlikely; keep unit norm anyway
  }
  return v;
}

}  // namespace

WordVectorTable WordVectorTable::from_entries(int dim,
                                              std::map<std::string, std::vector<double>> entries) {
  if (dim <= 0) {
    throw std::invalid_argument("word vectors: dimension must be positive");
  }
  WordVectorTable table;
  table.dim_ = dim;
  table.source_ = Source::LoadedFile;
  table.entries_ = std::move(entries);
  return table;
}

WordVectorTable WordVectorTable::hashed(int dim, uint64_t seed) {
  if (dim <= 0) {
    throw std::invalid_argument("word vectors: dimension must be positive");
  }
  WordVectorTable table;
  table.dim_ = dim;
  table.source_ = Source::HashedDeterministic;
  table.hash_seed_ = seed;
  return table;
}

std::optional<std::vector<double>> WordVectorTable::lookup(std::string_view word) const {
  std::string key = to_lower(word);
  if (source_ == Source::LoadedFile) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto v = hashed_vector(key, hash_seed_, dim_);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, v);
  }
  return v;
}

WordVectorTable load_word_vectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("word vectors: cannot open " + path.string());
  }
  std::map<std::string, std::vector<double>> entries;
  int dim = -1;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::vector<double> v;
    double x;
    while (ls >> x) v.push_back(x);
    if (v.empty()) {
      throw std::runtime_error("word vectors: line " + std::to_string(line_no) +
                               " has no vector components");
    }
    if (dim == -1) {
      dim = static_cast<int>(v.size());
    } else if (static_cast<int>(v.size()) != dim) {
      throw std::runtime_error("word vectors: dimension mismatch at line " +
                               std::to_string(line_no) + ": expected " + std::to_string(dim) +
                               ", got " + std::to_string(v.size()));
    }
    std::string key = to_lower(word);
    if (!entries.emplace(key, std::move(v)).second) {
      log_warn("word vectors: duplicate entry '", key, "' at line ", line_no,
               "; keeping first occurrence");
    }
  }
  if (entries.empty()) {
    throw std::runtime_error("word vectors: file " + path.string() + " has no entries");
  }
  return WordVectorTable::from_entries(dim, std::move(entries));
}

WordVectorTable hashed_table(int dim, uint64_t seed) {
  return WordVectorTable::hashed(dim, seed);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TextEmbedding embed_text_average(const WordVectorTable& table, std::string_view text,
                                 torch::Dtype dtype) {
  std::vector<double> acc(table.dim(), 0.0);
  int hits = 0;
  for (const auto& token : tokenize(text)) {
    auto v = table.lookup(token);
    if (!v) continue;
    for (int i = 0; i < table.dim(); ++i) acc[i] += (*v)[i];
    ++hits;
  }
  if (hits > 0) {
    for (double& x : acc) x /= hits;
  } else {
    log_warn("text embedding: no in-vocabulary token in \"", std::string(text), "\"");
  }
  TextEmbedding emb;
  emb.token_count = hits;
  emb.vector = torch::from_blob(acc.data(), {table.dim()}, torch::kFloat64).clone().to(dtype);
  return emb;
}

std::pair<torch::Tensor, int> embed_text_sequence(const WordVectorTable& table,
                                                  std::string_view text, int max_len,
                                                  torch::Dtype dtype) {
  if (max_len < 1) {
    throw std::invalid_argument("embed_text_sequence: max_len must be >= 1");
  }
  auto tokens = tokenize(text);
  if (static_cast<int>(tokens.size()) > max_len) tokens.resize(max_len);
  std::vector<std::vector<double>> rows;
  for (const auto& token : tokens) {
    auto v = table.lookup(token);
    if (v) rows.push_back(*v);
  }
  if (rows.empty()) {
    rows.emplace_back(table.dim(), 0.0);  // zero-length sequence convention
  }
  auto out = torch::zeros({static_cast<long>(rows.size()), table.dim()}, torch::kFloat64);
  for (size_t t = 0; t < rows.size(); ++t) {
    out[static_cast<long>(t)] =
        torch::from_blob(rows[t].data(), {table.dim()}, torch::kFloat64).clone();
  }
  return {out.to(dtype), static_cast<int>(rows.size())};
}

}  // namespace ogan
