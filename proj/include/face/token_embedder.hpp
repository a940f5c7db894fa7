#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

namespace face::codebook {

// Source of frozen token embeddings (the E_LLM lookup). Real runs load an
// export from an actual language model; tests and the desk fixture use the
// deterministic stub.
class TokenEmbedder {
 public:
  virtual ~TokenEmbedder() = default;
  virtual int dim() const = 0;
  virtual Eigen::VectorXd embed(const std::string& token) const = 0;
};

// Seeded pseudo-random unit vectors, one per distinct token string.
class StubTokenEmbedder : public TokenEmbedder {
 public:
  StubTokenEmbedder(int dim, uint64_t seed) : dim_(dim), seed_(seed) {}
  int dim() const override { return dim_; }
  Eigen::VectorXd embed(const std::string& token) const override;

 private:
  int dim_;
  uint64_t seed_;
};

struct RawVocab {
  std::vector<std::string> tokens;
  Eigen::MatrixXd embeddings;  // [tokens x d_llm]
};

// vocab_tokens.txt (one token per line) + vocab_embeddings.bin (same binary
// layout as anchors), row-aligned.
RawVocab load_vocab_files(const std::string& tokens_path, const std::string& embeddings_path);
void save_vocab_files(const std::string& tokens_path, const std::string& embeddings_path,
                      const RawVocab& vocab);

// Vocabulary whose tokens are the given words, embedded by `embedder`.
RawVocab make_vocab(const std::vector<std::string>& words, const TokenEmbedder& embedder);

// Embedder backed by a loaded vocabulary; unknown tokens raise
// UnknownTokenError with nearest-match suggestions.
class FileTokenEmbedder : public TokenEmbedder {
 public:
  explicit FileTokenEmbedder(RawVocab vocab);
  int dim() const override { return static_cast<int>(vocab_.embeddings.cols()); }
  Eigen::VectorXd embed(const std::string& token) const override;

 private:
  RawVocab vocab_;
  std::vector<std::pair<std::string, int>> index_;
};

}  // namespace face::codebook
