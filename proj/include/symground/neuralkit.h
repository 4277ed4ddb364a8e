// Copyright 2026 The SymGround Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Minimal deterministic neural kit: 1-D convolutions over sequences,
// max / k-max pooling, a linear head, weighted cross-entropy, L2 on
// kernels, Adam with a 1cycle schedule, early stopping, and a central
// finite-difference gradient checker. Everything is double precision
// and sequential, so results are bit-reproducible for a fixed seed.

#ifndef SYMGROUND_NEURALKIT_H_
#define SYMGROUND_NEURALKIT_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace symground {

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  bool empty() const { return rows == 0 || cols == 0; }
};

struct Tensor {
  std::string name;
  std::vector<int> shape;
  std::vector<double> value;

  size_t size() const { return value.size(); }
};

// Ordered, named parameter store.
struct ModelParams {
  std::vector<Tensor> tensors;

  Tensor& find(const std::string& name);
  const Tensor& find(const std::string& name) const;
  bool has(const std::string& name) const;
  size_t total_size() const;
  bool all_finite() const;
  // FNV-1a over raw tensor bytes in order; the freeze-audit fingerprint.
  uint64_t checksum() const;
  ModelParams zeros_like() const;
};

enum class Pooling { kMax, kKMax };

struct ConvSpec {
  std::vector<int> filter_sizes = {2, 3, 4, 5, 6};
  int filters_per_size = 1;
  int input_dim = 0;
  Pooling pooling = Pooling::kMax;
  int kmax = 1;  // used when pooling == kKMax

  int pooled_per_map() const { return pooling == Pooling::kKMax ? kmax : 1; }
  int feature_size() const {
    return static_cast<int>(filter_sizes.size()) * filters_per_size *
           pooled_per_map();
  }
  void validate() const;
};

struct TrainConfig {
  std::array<double, 2> class_weights = {0.1, 0.9};  // control, depressed
  double max_lr = 0.01;
  int batch_size = 64;
  int early_stop_patience = 5;
  double l2_weight = 0.01;  // applied to conv kernels only
  int max_epochs = 50;
  uint64_t seed = 0;

  void validate() const;
};

// --- Layer primitives --------------------------------------------------

// Feature maps of one valid 1-D convolution pass with rectifier
// nonlinearity. Sequences shorter than a filter are zero-padded to that
// filter's width, so every map has length max(T - w + 1, 1).
struct ConvMaps {
  // [width_index][filter][t]
  std::vector<std::vector<std::vector<double>>> pre;  // pre-activation
  std::vector<std::vector<std::vector<double>>> act;  // after rectifier
};

ConvMaps conv1d_forward(const Matrix& input, const ConvSpec& spec,
                        const ModelParams& params);

// k largest values of `map` in original sequence order; maps shorter
// than k are left-padded with zeros (index -1).
struct PoolResult {
  std::vector<double> values;
  std::vector<int> indices;
};

PoolResult kmax_pool(const std::vector<double>& map, int k);

struct LossResult {
  double loss = 0.0;
  std::array<double, 2> dlogits = {0.0, 0.0};
};

// loss = -w[label] * log softmax(logits)[label], with the analytic
// gradient w.r.t. the logits.
LossResult weighted_cross_entropy(const std::array<double, 2>& logits,
                                  int label,
                                  const std::array<double, 2>& weights);

// 1cycle schedule: linear warmup over the first 30% of steps from
// max_lr/25 up to max_lr, then cosine decay down to max_lr/1e4.
double onecycle_lr(int step, int total_steps, double max_lr);

// --- CNN classifier over one sequence ----------------------------------

// Parameter tensors for the conv + linear stack: conv_w{w} of shape
// (filters, w, input_dim), conv_b{w} of shape (filters), linear_w of
// shape (2, feature_size), linear_b of shape (2). Seeded uniform
// fan-in initialization.
ModelParams init_cnn_params(const ConvSpec& spec, uint64_t seed);

struct CnnForward {
  std::array<double, 2> logits = {0.0, 0.0};
  std::vector<double> features;  // pooled feature vector, pre-linear
};

CnnForward cnn_forward(const Matrix& input, const ConvSpec& spec,
                       const ModelParams& params);

// Accumulates parameter gradients (tensors aligned with `params`) for
// one example; optionally also the gradient w.r.t. the input rows.
// Returns the data loss.
double cnn_forward_backward(const Matrix& input, int label,
                            const std::array<double, 2>& class_weights,
                            const ConvSpec& spec, const ModelParams& params,
                            ModelParams& grads, Matrix* input_grad = nullptr);

double softmax_positive(const std::array<double, 2>& logits);

// --- Training -----------------------------------------------------------

struct TrainExample {
  Matrix x;    // model input sequence
  Matrix aux;  // side input (per-post embeddings) for composite models
  int label = 0;
};

// Anything the generic training loop can optimize.
class TrainableModel {
 public:
  virtual ~TrainableModel() = default;
  virtual ModelParams& params() = 0;
  virtual const ModelParams& params() const = 0;
  // Data loss of one example, gradients accumulated into `grads`.
  virtual double example_loss_grad(const TrainExample& ex,
                                   const TrainConfig& config,
                                   ModelParams& grads) const = 0;
  virtual double example_loss(const TrainExample& ex,
                              const TrainConfig& config) const = 0;
  // Tensors subject to the L2 penalty (convolution kernels by default).
  virtual bool l2_applies(const std::string& tensor_name) const;
};

// Plain CNN classifier over TrainExample::x.
class CnnClassifierModel : public TrainableModel {
 public:
  CnnClassifierModel(ConvSpec spec, uint64_t init_seed)
      : spec_(std::move(spec)), params_(init_cnn_params(spec_, init_seed)) {}
  CnnClassifierModel(ConvSpec spec, ModelParams params)
      : spec_(std::move(spec)), params_(std::move(params)) {}

  ModelParams& params() override { return params_; }
  const ModelParams& params() const override { return params_; }
  const ConvSpec& spec() const { return spec_; }

  double example_loss_grad(const TrainExample& ex, const TrainConfig& config,
                           ModelParams& grads) const override {
    return cnn_forward_backward(ex.x, ex.label, config.class_weights, spec_,
                                params_, grads);
  }
  double example_loss(const TrainExample& ex,
                      const TrainConfig& config) const override;

  double probability(const Matrix& input) const {
    return softmax_positive(cnn_forward(input, spec_, params_).logits);
  }

 private:
  ConvSpec spec_;
  ModelParams params_;
};

struct EpochStats {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double dev_loss = 0.0;
  double final_lr = 0.0;
};

struct TrainResult {
  std::vector<EpochStats> history;
  int best_epoch = 0;
  int stopped_epoch = 0;
  double best_dev_loss = 0.0;
};

// Adam + 1cycle + early stopping on dev loss. Deterministic for fixed
// (seed, data, config); the model ends up holding the best-dev
// parameters. Raises Error(kRuntime) on non-finite loss.
TrainResult train(TrainableModel& model, const std::vector<TrainExample>& train_set,
                  const std::vector<TrainExample>& dev_set,
                  const TrainConfig& config);

// Central finite differences against the analytic gradient over a
// fixed micro-batch; returns the max relative error. The objective
// matches training: mean data loss plus the L2 term.
double grad_check(TrainableModel& model, const std::vector<TrainExample>& batch,
                  const TrainConfig& config, double eps);

// --- Checkpoints ---------------------------------------------------------

// Binary container: magic, JSON meta (kind, seed, config echo, tensor
// names + shapes), then raw little-endian float64 payload. Round-trips
// bit-exactly.
struct Checkpoint {
  std::string kind;
  uint64_t seed = 0;
  std::string config_json;  // echo of the producing configuration
  ModelParams params;
};

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace symground

#endif  // SYMGROUND_NEURALKIT_H_
