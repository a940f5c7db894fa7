#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <vector>

#include "face/param.hpp"
#include "face/token_embedder.hpp"

namespace face::codebook {

struct VocabFilter {
  std::vector<std::string> allowlist;  // rank order (most preferred first)
  int min_token_len{2};
  size_t max_tokens{10000};
};

// Keeps tokens that decode to standalone alphabetic words present in the
// allowlist. Returns (display tokens, frozen embedding rows) in source order;
// when more than max_tokens pass, the best allowlist ranks win.
std::pair<std::vector<std::string>, Eigen::MatrixXd> filter_vocabulary(const RawVocab& raw,
                                                                       const VocabFilter& filter);

// Frozen token embeddings plus the trainable projection basis. The frozen
// matrix is never written after construction; only the projection moves.
class Codebook {
 public:
  Codebook(std::vector<std::string> tokens, Eigen::MatrixXd frozen_embeddings, int quant_dim,
           ParameterStore& params, uint64_t init_seed, const std::string& param_name = "codebook.projection");

  int size() const { return static_cast<int>(tokens_.size()); }
  int llm_dim() const { return static_cast<int>(frozen_.cols()); }
  int quant_dim() const { return quant_dim_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const Eigen::MatrixXd& frozen_embeddings() const { return frozen_; }
  uint64_t frozen_hash() const;

  Parameter* projection_param() const { return projection_; }
  const Eigen::MatrixXd& projection() const { return projection_->value; }
  void set_projection(const Eigen::MatrixXd& w);

  // C = C0 * W_c^T, rebuilt lazily after mark_projection_dirty().
  const Eigen::MatrixXd& projected() const;
  const Eigen::VectorXd& projected_sq_norms() const;
  void mark_projection_dirty() { dirty_ = true; }

  // -1 when the token is unknown (exact match first, then lowercase match).
  int token_index(const std::string& token) const;
  std::vector<std::string> nearest_tokens(const std::string& token, int k) const;

 private:
  std::vector<std::string> tokens_;
  Eigen::MatrixXd frozen_;
  int quant_dim_;
  Parameter* projection_;
  std::unordered_map<std::string, int> exact_index_;
  std::unordered_map<std::string, int> lower_index_;
  mutable Eigen::MatrixXd projected_;
  mutable Eigen::VectorXd sq_norms_;
  mutable bool dirty_{true};
};

// Exhaustive argmin_j ||r - c_j||^2 with ties broken to the lowest index.
// The cached-norm form scans |D| scores; sq_norms must match C's rows.
int nearest_codeword_index(const Eigen::VectorXd& r, const Eigen::MatrixXd& codewords,
                           const Eigen::VectorXd& sq_norms);
std::pair<int, Eigen::VectorXd> nearest_codeword(const Eigen::VectorXd& r,
                                                 const Eigen::MatrixXd& codewords);

// Moore-Penrose right inverse W^T (W W^T)^{-1} for a full-row-rank wide
// matrix; falls back to a ridge-regularized solve (eps = 1e-8) with a warning
// when W W^T is singular.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& w);

}  // namespace face::codebook
