#include "face/param.hpp"

#include <cmath>

#include "face/error.hpp"

namespace face {

Parameter* ParameterStore::create(const std::string& name, Eigen::MatrixXd init) {
  if (find(name) != nullptr) throw Error("duplicate parameter name: " + name);
  params_.push_back(std::make_unique<Parameter>(name, std::move(init)));
  return params_.back().get();
}

Parameter* ParameterStore::find(const std::string& name) const {
  for (const auto& p : params_) {
    if (p->name == name) return p.get();
  }
  return nullptr;
}

std::vector<Eigen::MatrixXd> ParameterStore::snapshot_values() const {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(params_.size());
  for (const auto& p : params_) out.push_back(p->value);
  return out;
}

void ParameterStore::restore_values(const std::vector<Eigen::MatrixXd>& snapshot) {
  if (snapshot.size() != params_.size()) throw ShapeError("snapshot size mismatch");
  for (size_t i = 0; i < snapshot.size(); ++i) params_[i]->value = snapshot[i];
}

ParamBinder frozen_binder() {
  return [](ad::Tape& t, Parameter* p) { return t.constant(p->value); };
}

ad::Var AdamOptimizer::use(ad::Tape& t, Parameter* p) {
  for (const auto& [q, var] : bound_) {
    if (q == p) throw Error("parameter bound twice in one step: " + p->name);
  }
  ad::Var v = t.input(p->value);
  bound_.emplace_back(p, v);
  return v;
}

ParamBinder AdamOptimizer::binder() {
  return [this](ad::Tape& t, Parameter* p) { return use(t, p); };
}

void AdamOptimizer::step(ad::Tape& t) {
  std::vector<Eigen::MatrixXd> grads;
  grads.reserve(bound_.size());
  double sq_norm = 0.0;
  for (const auto& [p, var] : bound_) {
    grads.push_back(t.grad(var));
    sq_norm += grads.back().squaredNorm();
  }
  double scale = 1.0;
  if (cfg_.clip_norm > 0.0) {
    double norm = std::sqrt(sq_norm);
    if (norm > cfg_.clip_norm) scale = cfg_.clip_norm / norm;
  }
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (size_t i = 0; i < bound_.size(); ++i) {
    Parameter* p = bound_[i].first;
    Eigen::MatrixXd g = grads[i] * scale;
    p->m = cfg_.beta1 * p->m + (1.0 - cfg_.beta1) * g;
    p->v = cfg_.beta2 * p->v + (1.0 - cfg_.beta2) * g.cwiseProduct(g);
    Eigen::MatrixXd mhat = p->m / bc1;
    Eigen::MatrixXd vhat = p->v / bc2;
    p->value.array() -= cfg_.lr * mhat.array() / (vhat.array().sqrt() + cfg_.eps);
  }
  bound_.clear();
}

}  // namespace face
