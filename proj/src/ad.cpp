#include "face/ad.hpp"

#include <cmath>

#include "face/error.hpp"
#include "face/log.hpp"

namespace face::ad {

const Eigen::MatrixXd& Var::value() const {
  if (!valid()) throw Error("use of empty Var");
  return tape_->value(*this);
}

double Var::scalar() const {
  const auto& v = value();
  if (v.rows() != 1 || v.cols() != 1) throw ShapeError("Var::scalar on non-1x1 node");
  return v(0, 0);
}

Var Tape::constant(Eigen::MatrixXd v) {
  nodes_.push_back(Node{std::move(v), {}, nullptr, false});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Var Tape::input(Eigen::MatrixXd v) {
  nodes_.push_back(Node{std::move(v), {}, nullptr, true});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Var Tape::make(Eigen::MatrixXd value, std::initializer_list<Var> parents, BackwardFn bw) {
  return make(std::move(value), std::vector<Var>(parents), std::move(bw));
}

Var Tape::make(Eigen::MatrixXd value, const std::vector<Var>& parents, BackwardFn bw) {
  bool track = false;
  for (const Var& p : parents) {
    if (p.tape() != this) throw Error("op mixes Vars from different tapes");
    track = track || nodes_[p.id()].track;
  }
  nodes_.push_back(Node{std::move(value), {}, track ? std::move(bw) : nullptr, track});
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

void Tape::set_backward(const Var& v, BackwardFn bw) {
  if (nodes_[v.id()].track) nodes_[v.id()].backward = std::move(bw);
}

void Tape::accumulate(const Var& v, const Eigen::MatrixXd& g) {
  Node& n = nodes_[v.id()];
  if (!n.track) return;
  if (g.rows() != n.value.rows() || g.cols() != n.value.cols()) {
    throw ShapeError("gradient shape mismatch in accumulate");
  }
  if (n.grad.size() == 0) {
    n.grad = g;
  } else {
    n.grad += g;
  }
}

void Tape::backward(const Var& root) {
  const Node& r = nodes_[root.id()];
  if (r.value.rows() != 1 || r.value.cols() != 1) {
    throw ShapeError("backward root must be a 1x1 scalar node");
  }
  if (!r.track) return;  // nothing differentiable upstream
  accumulate(root, Eigen::MatrixXd::Ones(1, 1));
  for (int i = root.id(); i >= 0; --i) {
    Node& n = nodes_[i];
    if (n.track && n.backward && n.grad.size() != 0) {
      n.backward(*this, n.grad);
    }
  }
}

const Eigen::MatrixXd& Tape::value(const Var& v) const { return nodes_[v.id()].value; }

Eigen::MatrixXd Tape::grad(const Var& v) const {
  const Node& n = nodes_[v.id()];
  if (n.grad.size() == 0) return Eigen::MatrixXd::Zero(n.value.rows(), n.value.cols());
  return n.grad;
}

bool Tape::tracked(const Var& v) const { return nodes_[v.id()].track; }

namespace {

Tape& tape_of(const Var& v) {
  if (!v.valid()) throw Error("op on empty Var");
  return *v.tape();
}

void check_same_shape(const Var& a, const Var& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

Var add(Var a, Var b) {
  check_same_shape(a, b, "add");
  Tape& t = tape_of(a);
  return t.make(a.value() + b.value(), {a, b}, [a, b](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, g);
    tt.accumulate(b, g);
  });
}

Var sub(Var a, Var b) {
  check_same_shape(a, b, "sub");
  Tape& t = tape_of(a);
  return t.make(a.value() - b.value(), {a, b}, [a, b](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, g);
    tt.accumulate(b, -g);
  });
}

Var neg(Var a) {
  Tape& t = tape_of(a);
  return t.make(-a.value(), {a},
                [a](Tape& tt, const Eigen::MatrixXd& g) { tt.accumulate(a, -g); });
}

Var scale(Var a, double s) {
  Tape& t = tape_of(a);
  return t.make(a.value() * s, {a},
                [a, s](Tape& tt, const Eigen::MatrixXd& g) { tt.accumulate(a, g * s); });
}

Var cwise_mul(Var a, Var b) {
  check_same_shape(a, b, "cwise_mul");
  Tape& t = tape_of(a);
  return t.make(a.value().cwiseProduct(b.value()), {a, b},
                [a, b](Tape& tt, const Eigen::MatrixXd& g) {
                  tt.accumulate(a, g.cwiseProduct(b.value()));
                  tt.accumulate(b, g.cwiseProduct(a.value()));
                });
}

Var matmul(Var a, Var b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dims differ");
  Tape& t = tape_of(a);
  return t.make(a.value() * b.value(), {a, b}, [a, b](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, g * b.value().transpose());
    tt.accumulate(b, a.value().transpose() * g);
  });
}

Var transpose(Var a) {
  Tape& t = tape_of(a);
  return t.make(a.value().transpose(), {a},
                [a](Tape& tt, const Eigen::MatrixXd& g) { tt.accumulate(a, g.transpose()); });
}

Var gather_rows(Var a, std::vector<int> idx) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), a.cols());
  for (size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= a.rows()) throw IndexError("gather_rows: index out of range");
    out.row(static_cast<Eigen::Index>(k)) = a.value().row(idx[k]);
  }
  return t.make(std::move(out), {a},
                [a, idx = std::move(idx)](Tape& tt, const Eigen::MatrixXd& g) {
                  Eigen::MatrixXd ga = Eigen::MatrixXd::Zero(a.rows(), a.cols());
                  for (size_t k = 0; k < idx.size(); ++k) {
                    ga.row(idx[k]) += g.row(static_cast<Eigen::Index>(k));
                  }
                  tt.accumulate(a, ga);
                });
}

Var concat_rows(const std::vector<Var>& parts) {
  if (parts.empty()) throw ShapeError("concat_rows: no parts");
  Tape& t = tape_of(parts[0]);
  Eigen::Index rows = 0;
  for (const Var& p : parts) {
    if (p.cols() != parts[0].cols()) throw ShapeError("concat_rows: column mismatch");
    rows += p.rows();
  }
  Eigen::MatrixXd out(rows, parts[0].cols());
  Eigen::Index at = 0;
  for (const Var& p : parts) {
    out.middleRows(at, p.rows()) = p.value();
    at += p.rows();
  }
  return t.make(std::move(out), parts, [parts](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::Index at = 0;
    for (const Var& p : parts) {
      tt.accumulate(p, g.middleRows(at, p.rows()));
      at += p.rows();
    }
  });
}

Var interleave_rows(const std::vector<Var>& parts) {
  if (parts.empty()) throw ShapeError("interleave_rows: no parts");
  Tape& t = tape_of(parts[0]);
  const Eigen::Index m = parts[0].rows();
  const Eigen::Index d = parts[0].cols();
  const Eigen::Index n = static_cast<Eigen::Index>(parts.size());
  for (const Var& p : parts) {
    if (p.rows() != m || p.cols() != d) throw ShapeError("interleave_rows: shape mismatch");
  }
  Eigen::MatrixXd out(m * n, d);
  for (Eigen::Index row = 0; row < m; ++row) {
    for (Eigen::Index i = 0; i < n; ++i) {
      out.row(row * n + i) = parts[static_cast<size_t>(i)].value().row(row);
    }
  }
  return t.make(std::move(out), parts, [parts, m, n](Tape& tt, const Eigen::MatrixXd& g) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Var& p = parts[static_cast<size_t>(i)];
      Eigen::MatrixXd gp(m, p.cols());
      for (Eigen::Index row = 0; row < m; ++row) gp.row(row) = g.row(row * n + i);
      tt.accumulate(p, gp);
    }
  });
}

Var rows_to_concat(Var a, int block) {
  if (block <= 0 || a.rows() % block != 0) throw ShapeError("rows_to_concat: bad block");
  Tape& t = tape_of(a);
  const Eigen::Index m = a.rows() / block;
  const Eigen::Index d = a.cols();
  Eigen::MatrixXd out(m, block * d);
  for (Eigen::Index row = 0; row < m; ++row) {
    for (int i = 0; i < block; ++i) {
      out.block(row, i * d, 1, d) = a.value().row(row * block + i);
    }
  }
  return t.make(std::move(out), {a}, [a, block, m, d](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd ga(a.rows(), d);
    for (Eigen::Index row = 0; row < m; ++row) {
      for (int i = 0; i < block; ++i) {
        ga.row(row * block + i) = g.block(row, i * d, 1, d);
      }
    }
    tt.accumulate(a, ga);
  });
}

Var slice_cols(Var a, int begin, int count) {
  if (begin < 0 || count < 0 || begin + count > a.cols()) throw ShapeError("slice_cols: range");
  Tape& t = tape_of(a);
  return t.make(a.value().middleCols(begin, count), {a},
                [a, begin, count](Tape& tt, const Eigen::MatrixXd& g) {
                  Eigen::MatrixXd ga = Eigen::MatrixXd::Zero(a.rows(), a.cols());
                  ga.middleCols(begin, count) = g;
                  tt.accumulate(a, ga);
                });
}

Var concat_cols(const std::vector<Var>& parts) {
  if (parts.empty()) throw ShapeError("concat_cols: no parts");
  Tape& t = tape_of(parts[0]);
  Eigen::Index cols = 0;
  for (const Var& p : parts) {
    if (p.rows() != parts[0].rows()) throw ShapeError("concat_cols: row mismatch");
    cols += p.cols();
  }
  Eigen::MatrixXd out(parts[0].rows(), cols);
  Eigen::Index at = 0;
  for (const Var& p : parts) {
    out.middleCols(at, p.cols()) = p.value();
    at += p.cols();
  }
  return t.make(std::move(out), parts, [parts](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::Index at = 0;
    for (const Var& p : parts) {
      tt.accumulate(p, g.middleCols(at, p.cols()));
      at += p.cols();
    }
  });
}

Var tile_rows(Var a, int times) {
  if (times <= 0) throw ShapeError("tile_rows: times must be positive");
  Tape& t = tape_of(a);
  const Eigen::Index r = a.rows();
  Eigen::MatrixXd out(r * times, a.cols());
  for (int k = 0; k < times; ++k) out.middleRows(k * r, r) = a.value();
  return t.make(std::move(out), {a}, [a, times, r](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd ga = Eigen::MatrixXd::Zero(r, a.cols());
    for (int k = 0; k < times; ++k) ga += g.middleRows(k * r, r);
    tt.accumulate(a, ga);
  });
}

Var add_row_broadcast(Var a, Var row) {
  if (row.rows() != 1 || row.cols() != a.cols()) throw ShapeError("add_row_broadcast: shape");
  Tape& t = tape_of(a);
  Eigen::MatrixXd out = a.value();
  out.rowwise() += row.value().row(0);
  return t.make(std::move(out), {a, row}, [a, row](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, g);
    tt.accumulate(row, g.colwise().sum());
  });
}

Var row_scale(Var a, const Eigen::VectorXd& s) {
  if (s.size() != a.rows()) throw ShapeError("row_scale: factor count");
  Tape& t = tape_of(a);
  Eigen::MatrixXd out = s.asDiagonal() * a.value();
  return t.make(std::move(out), {a}, [a, s](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, s.asDiagonal() * g);
  });
}

Var block_sum_rows(Var a, int block) {
  if (block <= 0 || a.rows() % block != 0) throw ShapeError("block_sum_rows: bad block");
  Tape& t = tape_of(a);
  const Eigen::Index m = a.rows() / block;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, a.cols());
  for (Eigen::Index b = 0; b < m; ++b) {
    for (int i = 0; i < block; ++i) out.row(b) += a.value().row(b * block + i);
  }
  return t.make(std::move(out), {a}, [a, block, m](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd ga(a.rows(), a.cols());
    for (Eigen::Index b = 0; b < m; ++b) {
      for (int i = 0; i < block; ++i) ga.row(b * block + i) = g.row(b);
    }
    tt.accumulate(a, ga);
  });
}

Var sum_all(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd out(1, 1);
  out(0, 0) = a.value().sum();
  return t.make(std::move(out), {a}, [a](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, Eigen::MatrixXd::Constant(a.rows(), a.cols(), g(0, 0)));
  });
}

Var sum_squares(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd out(1, 1);
  out(0, 0) = a.value().squaredNorm();
  return t.make(std::move(out), {a}, [a](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, 2.0 * g(0, 0) * a.value());
  });
}

Var rowwise_dot(Var a, Var b) {
  check_same_shape(a, b, "rowwise_dot");
  Tape& t = tape_of(a);
  Eigen::MatrixXd out = a.value().cwiseProduct(b.value()).rowwise().sum();
  return t.make(std::move(out), {a, b}, [a, b](Tape& tt, const Eigen::MatrixXd& g) {
    tt.accumulate(a, g.col(0).asDiagonal() * b.value());
    tt.accumulate(b, g.col(0).asDiagonal() * a.value());
  });
}

Var trace_mean(Var a) {
  if (a.rows() != a.cols()) throw ShapeError("trace_mean: matrix not square");
  Tape& t = tape_of(a);
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd out(1, 1);
  out(0, 0) = a.value().trace() / static_cast<double>(n);
  return t.make(std::move(out), {a}, [a, n](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd ga = Eigen::MatrixXd::Zero(n, n);
    ga.diagonal().setConstant(g(0, 0) / static_cast<double>(n));
    tt.accumulate(a, ga);
  });
}

Var softplus(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd out = a.value().unaryExpr([](double x) {
    // log(1 + e^x) computed without overflow for large |x|
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
  });
  return t.make(std::move(out), {a}, [a](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd sig = a.value().unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
    tt.accumulate(a, g.cwiseProduct(sig));
  });
}

Var gelu(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd out = a.value().unaryExpr(
      [](double x) { return 0.5 * x * (1.0 + std::erf(x / std::sqrt(2.0))); });
  return t.make(std::move(out), {a}, [a](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd d = a.value().unaryExpr([](double x) {
      double cdf = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
      double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
      return cdf + x * pdf;
    });
    tt.accumulate(a, g.cwiseProduct(d));
  });
}

Var softmax_rows(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd y(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double mx = a.value().row(r).maxCoeff();
    Eigen::ArrayXd e = (a.value().row(r).array() - mx).exp();
    y.row(r) = (e / e.sum()).matrix();
  }
  Var out = t.make(std::move(y), {a}, nullptr);
  t.set_backward(out, [a, out](Tape& tt, const Eigen::MatrixXd& g) {
    const Eigen::MatrixXd& yv = out.value();
    Eigen::MatrixXd ga(yv.rows(), yv.cols());
    for (Eigen::Index r = 0; r < yv.rows(); ++r) {
      double dot = g.row(r).dot(yv.row(r));
      ga.row(r) = yv.row(r).cwiseProduct(g.row(r).array().matrix() -
                                         Eigen::RowVectorXd::Constant(yv.cols(), dot));
    }
    tt.accumulate(a, ga);
  });
  return out;
}

Var log_softmax_rows(Var a) {
  Tape& t = tape_of(a);
  Eigen::MatrixXd y(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double mx = a.value().row(r).maxCoeff();
    double lse = std::log((a.value().row(r).array() - mx).exp().sum()) + mx;
    y.row(r) = a.value().row(r).array() - lse;
  }
  Var out = t.make(std::move(y), {a}, nullptr);
  t.set_backward(out, [a, out](Tape& tt, const Eigen::MatrixXd& g) {
    const Eigen::MatrixXd& yv = out.value();
    Eigen::MatrixXd ga(yv.rows(), yv.cols());
    for (Eigen::Index r = 0; r < yv.rows(); ++r) {
      double gsum = g.row(r).sum();
      ga.row(r) = g.row(r) - gsum * yv.row(r).array().exp().matrix();
    }
    tt.accumulate(a, ga);
  });
  return out;
}

Var l2_normalize_rows(Var a) {
  Tape& t = tape_of(a);
  constexpr double kTiny = 1e-300;
  Eigen::VectorXd norms(a.rows());
  Eigen::MatrixXd y(a.rows(), a.cols());
  bool warned = false;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double nrm = a.value().row(r).norm();
    norms(r) = nrm;
    if (nrm <= kTiny) {
      y.row(r).setZero();
      if (!warned) {
        log_warn("l2_normalize_rows: zero-norm row, cosine treated as 0");
        warned = true;
      }
    } else {
      y.row(r) = a.value().row(r) / nrm;
    }
  }
  Var out = t.make(std::move(y), {a}, nullptr);
  t.set_backward(out, [a, out, norms](Tape& tt, const Eigen::MatrixXd& g) {
    const Eigen::MatrixXd& yv = out.value();
    Eigen::MatrixXd ga = Eigen::MatrixXd::Zero(yv.rows(), yv.cols());
    for (Eigen::Index r = 0; r < yv.rows(); ++r) {
      if (norms(r) <= kTiny) continue;
      double dot = g.row(r).dot(yv.row(r));
      ga.row(r) = (g.row(r) - dot * yv.row(r)) / norms(r);
    }
    tt.accumulate(a, ga);
  });
  return out;
}

Var layer_norm(Var x, Var gamma, Var beta, double eps) {
  if (gamma.rows() != 1 || gamma.cols() != x.cols()) throw ShapeError("layer_norm: gamma shape");
  if (beta.rows() != 1 || beta.cols() != x.cols()) throw ShapeError("layer_norm: beta shape");
  Tape& t = tape_of(x);
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd xhat(x.rows(), d);
  Eigen::VectorXd inv_std(x.rows());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    double mu = x.value().row(r).mean();
    Eigen::RowVectorXd c = x.value().row(r).array() - mu;
    double var = c.squaredNorm() / static_cast<double>(d);
    double is = 1.0 / std::sqrt(var + eps);
    inv_std(r) = is;
    xhat.row(r) = c * is;
  }
  Eigen::MatrixXd out = (xhat.array().rowwise() * gamma.value().row(0).array()).matrix();
  out.rowwise() += beta.value().row(0);
  return t.make(std::move(out), {x, gamma, beta},
                [x, gamma, beta, xhat, inv_std, d](Tape& tt, const Eigen::MatrixXd& g) {
                  tt.accumulate(gamma, g.cwiseProduct(xhat).colwise().sum());
                  tt.accumulate(beta, g.colwise().sum());
                  Eigen::MatrixXd gx(g.rows(), d);
                  const double dn = static_cast<double>(d);
                  for (Eigen::Index r = 0; r < g.rows(); ++r) {
                    Eigen::RowVectorXd dxhat = g.row(r).cwiseProduct(gamma.value().row(0));
                    double m1 = dxhat.mean();
                    double m2 = dxhat.cwiseProduct(xhat.row(r)).sum() / dn;
                    gx.row(r) = inv_std(r) * (dxhat.array() - m1 - xhat.row(r).array() * m2);
                  }
                  tt.accumulate(x, gx);
                });
}

Var block_matmul_nt(Var a, Var b, int block) {
  check_same_shape(a, b, "block_matmul_nt");
  if (block <= 0 || a.rows() % block != 0) throw ShapeError("block_matmul_nt: bad block");
  Tape& t = tape_of(a);
  const Eigen::Index nb = a.rows() / block;
  Eigen::MatrixXd out(a.rows(), block);
  for (Eigen::Index k = 0; k < nb; ++k) {
    out.middleRows(k * block, block) =
        a.value().middleRows(k * block, block) * b.value().middleRows(k * block, block).transpose();
  }
  return t.make(std::move(out), {a, b}, [a, b, block, nb](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd ga(a.rows(), a.cols());
    Eigen::MatrixXd gb(b.rows(), b.cols());
    for (Eigen::Index k = 0; k < nb; ++k) {
      auto gk = g.middleRows(k * block, block);
      ga.middleRows(k * block, block) = gk * b.value().middleRows(k * block, block);
      gb.middleRows(k * block, block) = gk.transpose() * a.value().middleRows(k * block, block);
    }
    tt.accumulate(a, ga);
    tt.accumulate(b, gb);
  });
}

Var block_matmul_nn(Var s, Var v, int block) {
  if (block <= 0 || s.rows() % block != 0 || s.cols() != block)
    throw ShapeError("block_matmul_nn: bad scores shape");
  if (v.rows() != s.rows()) throw ShapeError("block_matmul_nn: row mismatch");
  Tape& t = tape_of(s);
  const Eigen::Index nb = s.rows() / block;
  Eigen::MatrixXd out(v.rows(), v.cols());
  for (Eigen::Index k = 0; k < nb; ++k) {
    out.middleRows(k * block, block) =
        s.value().middleRows(k * block, block) * v.value().middleRows(k * block, block);
  }
  return t.make(std::move(out), {s, v}, [s, v, block, nb](Tape& tt, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd gs(s.rows(), s.cols());
    Eigen::MatrixXd gv(v.rows(), v.cols());
    for (Eigen::Index k = 0; k < nb; ++k) {
      auto gk = g.middleRows(k * block, block);
      gs.middleRows(k * block, block) = gk * v.value().middleRows(k * block, block).transpose();
      gv.middleRows(k * block, block) = s.value().middleRows(k * block, block).transpose() * gk;
    }
    tt.accumulate(s, gs);
    tt.accumulate(v, gv);
  });
}

Var straight_through(Var src, Eigen::MatrixXd quantized) {
  if (quantized.rows() != src.rows() || quantized.cols() != src.cols()) {
    throw ShapeError("straight_through: shape mismatch");
  }
  Tape& t = tape_of(src);
  return t.make(std::move(quantized), {src},
                [src](Tape& tt, const Eigen::MatrixXd& g) { tt.accumulate(src, g); });
}

Var stop_gradient(Var a) { return tape_of(a).constant(a.value()); }

}  // namespace face::ad
