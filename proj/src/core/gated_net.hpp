#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/rng.hpp"

namespace gnop::net {

// Activations. Overflow-safe: softplus switches to x + log(1+e^{-x}) on the
// positive side, sigmoid never exponentiates a positive argument.
double softplus(double x);
double sigmoid(double x);
inline double sigmoid_slope(double s) { return s * (1.0 - s); }  // sigma' from sigma

// Sign-constrained weights enter the network as e^w, clamped at e^20.
// Trainers can ask how often the clamp was active to emit a warning.
constexpr double kWeightExpCap = 20.0;
double weight_exp(double w);
double weight_exp_deriv(double w);  // d(e^w)/dw, zero beyond the cap

// One gated pricing network: a moneyness branch with negative effective
// weights feeding softplus units, a maturity branch with positive effective
// weights feeding sigmoid units, paired by multiplication gates and combined
// with positive output weights. No output bias, so the price decays to zero
// for large moneyness.
class SingleModel {
 public:
  explicit SingleModel(int hidden);

  // Initialization keeps the softplus arguments positive across the
  // moneyness range of interest so gradients start alive.
  static SingleModel random_init(int hidden, Rng& rng);

  int hidden() const { return hidden_; }
  size_t param_count() const { return theta_.size(); }
  std::vector<double>& theta() { return theta_; }
  const std::vector<double>& theta() const { return theta_; }
  std::string param_name(size_t index) const;

  double value(double m, double tau) const;
  double dm(double m, double tau) const;    // <= 0 for all parameters
  double d2m(double m, double tau) const;   // >= 0 for all parameters
  double dtau(double m, double tau) const;  // >= 0 for all parameters

  // grad += upstream * d value / d theta
  void add_value_grad(double m, double tau, double upstream, std::span<double> grad) const;
  // grad += upstream * d (dm) / d theta  (mixed second-order, for hint-style losses)
  void add_dm_grad(double m, double tau, double upstream, std::span<double> grad) const;

  std::span<double> w_money() { return block(0); }
  std::span<double> b_money() { return block(1); }
  std::span<double> w_tau() { return block(2); }
  std::span<double> b_tau() { return block(3); }
  std::span<double> w_out() { return block(4); }

 private:
  std::span<double> block(int b) {
    return {theta_.data() + static_cast<size_t>(b) * static_cast<size_t>(hidden_),
            static_cast<size_t>(hidden_)};
  }

  int hidden_;                 // J
  std::vector<double> theta_;  // [w_money | b_money | w_tau | b_tau | w_out]
};

// Mixture of single models with a softmax gating branch over (m, tau).
// The gating weights are unconstrained, which is what buys expressivity and
// costs the architectural convexity guarantee.
class MultiModel {
 public:
  MultiModel(int hidden, int experts, int gate_hidden);
  static MultiModel random_init(int hidden, int experts, int gate_hidden, Rng& rng);

  int hidden() const { return hidden_; }
  int experts() const { return experts_; }
  int gate_hidden() const { return gate_hidden_; }
  size_t param_count() const { return theta_.size(); }
  std::vector<double>& theta() { return theta_; }
  const std::vector<double>& theta() const { return theta_; }
  std::string param_name(size_t index) const;

  double value(double m, double tau) const;
  double dm(double m, double tau) const;
  double dtau(double m, double tau) const;
  // Central difference of the analytic first derivative; the mixture has no
  // architectural curvature guarantee, so there is no closed form to lose.
  double d2m(double m, double tau, double step = 1e-3) const;

  std::vector<double> gating_weights(double m, double tau) const;
  double expert_value(int i, double m, double tau) const;

  void add_value_grad(double m, double tau, double upstream, std::span<double> grad) const;
  void add_dm_grad(double m, double tau, double upstream, std::span<double> grad) const;

  // Flat layout: expert blocks first, then the gating block
  // [w_in (2 x K_g) | b_hidden (K_g) | w_out (K_g x I) | b_out (I)].
  size_t expert_size() const { return 5 * static_cast<size_t>(hidden_); }
  size_t expert_offset(int i) const { return static_cast<size_t>(i) * expert_size(); }
  size_t gate_offset() const { return expert_offset(experts_); }

 private:
  struct GateEval;
  GateEval gate(double m, double tau) const;
  const double* expert_theta(int i) const { return theta_.data() + expert_offset(i); }

  double gw_in(int input, int k) const;  // input 0: m, 1: tau
  double gb_hidden(int k) const;
  double gw_out(int k, int i) const;
  double gb_out(int i) const;

  int hidden_, experts_, gate_hidden_;
  std::vector<double> theta_;
};

using Model = std::variant<SingleModel, MultiModel>;

double model_value(const Model& model, double m, double tau);
double model_dm(const Model& model, double m, double tau);
double model_d2m(const Model& model, double m, double tau);
double model_dtau(const Model& model, double m, double tau);
size_t model_param_count(const Model& model);
std::vector<double>& model_theta(Model& model);
const std::vector<double>& model_theta(const Model& model);
std::string model_param_name(const Model& model, size_t index);
void model_add_value_grad(const Model& model, double m, double tau, double upstream,
                          std::span<double> grad);

// Checkpoint document: architecture, parameters, seed and whatever metadata
// the trainer wants to record. JSON round-trips are bit-exact.
struct Checkpoint {
  Model model;
  std::uint64_t seed = 0;
  std::string training_meta_json = "{}";

  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);
  std::string to_json() const;
  static Checkpoint from_json(const std::string& text);
};

}  // namespace gnop::net
