#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "face/ad.hpp"

namespace face {

// Trainable tensor plus its Adam moments. Moments live here so that
// checkpoint/resume reproduces the optimizer trajectory bit-exactly.
struct Parameter {
  std::string name;
  Eigen::MatrixXd value;
  Eigen::MatrixXd m;
  Eigen::MatrixXd v;

  Parameter(std::string n, Eigen::MatrixXd init)
      : name(std::move(n)),
        value(std::move(init)),
        m(Eigen::MatrixXd::Zero(value.rows(), value.cols())),
        v(Eigen::MatrixXd::Zero(value.rows(), value.cols())) {}
};

class ParameterStore {
 public:
  Parameter* create(const std::string& name, Eigen::MatrixXd init);
  Parameter* find(const std::string& name) const;  // nullptr if absent
  const std::vector<std::unique_ptr<Parameter>>& all() const { return params_; }

  std::vector<Eigen::MatrixXd> snapshot_values() const;
  void restore_values(const std::vector<Eigen::MatrixXd>& snapshot);

 private:
  std::vector<std::unique_ptr<Parameter>> params_;
};

// How a module turns its Parameters into tape nodes. The trainer passes an
// optimizer-backed binder; evaluation passes frozen_binder so no gradients
// are tracked or applied.
using ParamBinder = std::function<ad::Var(ad::Tape&, Parameter*)>;
ParamBinder frozen_binder();

struct AdamConfig {
  double lr{1e-2};
  double beta1{0.9};
  double beta2{0.999};
  double eps{1e-8};
  double clip_norm{5.0};  // global-norm clip; <= 0 disables
};

class AdamOptimizer {
 public:
  explicit AdamOptimizer(AdamConfig cfg) : cfg_(cfg) {}

  // Bind a parameter into the current step's tape. Each parameter may be
  // bound at most once per step.
  ad::Var use(ad::Tape& t, Parameter* p);
  ParamBinder binder();

  // Apply one update from the bound gradients, then clear bindings.
  void step(ad::Tape& t);

  int64_t step_count() const { return t_; }
  void set_step_count(int64_t t) { t_ = t; }
  const AdamConfig& config() const { return cfg_; }
  void set_lr(double lr) { cfg_.lr = lr; }

 private:
  AdamConfig cfg_;
  int64_t t_{0};
  std::vector<std::pair<Parameter*, ad::Var>> bound_;
};

}  // namespace face
