#pragma once

#include <Eigen/Core>
#include <functional>
#include <initializer_list>
#include <vector>

namespace face::ad {

class Tape;

// Lightweight handle into a Tape node. Valid only while its Tape is alive.
class Var {
 public:
  Var() = default;
  bool valid() const { return tape_ != nullptr; }
  const Eigen::MatrixXd& value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  double scalar() const;
  Tape* tape() const { return tape_; }
  int id() const { return id_; }

 private:
  friend class Tape;
  Var(Tape* t, int id) : tape_(t), id_(id) {}
  Tape* tape_{nullptr};
  int id_{-1};
};

// Backward function: receives the output gradient and accumulates into parents
// via Tape::accumulate.
using BackwardFn = std::function<void(Tape&, const Eigen::MatrixXd&)>;

// Dynamic tape for reverse-mode differentiation over dense matrices.
// Nodes created from constant() never track gradients, which makes
// stop-gradient semantics structural: a detached value cannot receive one.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Eigen::MatrixXd v);
  Var input(Eigen::MatrixXd v);  // gradient-tracked leaf

  // Generic node; module-specific ops (graph propagation) build on this.
  Var make(Eigen::MatrixXd value, std::initializer_list<Var> parents, BackwardFn bw);
  Var make(Eigen::MatrixXd value, const std::vector<Var>& parents, BackwardFn bw);
  void set_backward(const Var& v, BackwardFn bw);

  void accumulate(const Var& v, const Eigen::MatrixXd& g);
  void backward(const Var& scalar_root);

  const Eigen::MatrixXd& value(const Var& v) const;
  Eigen::MatrixXd grad(const Var& v) const;  // zeros if no gradient reached v
  bool tracked(const Var& v) const;
  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Eigen::MatrixXd value;
    Eigen::MatrixXd grad;  // empty until first accumulation
    BackwardFn backward;
    bool track{false};
  };
  std::vector<Node> nodes_;
};

// ---- primitive ops ----

Var add(Var a, Var b);
Var sub(Var a, Var b);
Var neg(Var a);
Var scale(Var a, double s);
Var cwise_mul(Var a, Var b);
Var matmul(Var a, Var b);
Var transpose(Var a);

Var gather_rows(Var a, std::vector<int> idx);
Var concat_rows(const std::vector<Var>& parts);
// out row m*n+i = parts[i].row(m); parts.size() == n
Var interleave_rows(const std::vector<Var>& parts);
// [M*block x d] -> [M x block*d]; row m = concat of rows m*block .. m*block+block-1
Var rows_to_concat(Var a, int block);
Var slice_cols(Var a, int begin, int count);
Var concat_cols(const std::vector<Var>& parts);
Var tile_rows(Var a, int times);
Var add_row_broadcast(Var a, Var row);                // row: [1 x d]
Var row_scale(Var a, const Eigen::VectorXd& s);       // constant per-row factors
Var block_sum_rows(Var a, int block);                 // [B*block x d] -> [B x d]

Var sum_all(Var a);                                   // [1x1]
Var sum_squares(Var a);                               // [1x1]
Var rowwise_dot(Var a, Var b);                        // [M x 1]
Var trace_mean(Var a);                                // mean of diagonal, [1x1]

Var softplus(Var a);
Var gelu(Var a);
Var softmax_rows(Var a);
Var log_softmax_rows(Var a);
Var l2_normalize_rows(Var a);  // zero-norm rows map to zero with a warning
Var layer_norm(Var x, Var gamma, Var beta, double eps = 1e-5);

// Per-block products over row blocks of size `block`:
//   nt: out block = A_b * B_b^T, A,B: [M*block x d] -> [M*block x block]
//   nn: out block = S_b * V_b,   S: [M*block x block], V: [M*block x d] -> [M*block x d]
Var block_matmul_nt(Var a, Var b, int block);
Var block_matmul_nn(Var s, Var v, int block);

// Value is `quantized`; gradient passes to src unchanged (identity Jacobian).
Var straight_through(Var src, Eigen::MatrixXd quantized);
Var stop_gradient(Var a);

}  // namespace face::ad
