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

#include "symground/neuralkit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "symground/common.h"

static_assert(std::endian::native == std::endian::little,
              "checkpoint payload assumes a little-endian host");

namespace symground {

namespace {

using nlohmann::ordered_json;

std::string conv_kernel_name(int width) { return str_cat("conv_w", width); }
std::string conv_bias_name(int width) { return str_cat("conv_b", width); }

struct CnnCache {
  ConvMaps maps;
  // [width_index][filter] pooled values/indices
  std::vector<std::vector<PoolResult>> pools;
  std::vector<double> features;
  std::array<double, 2> logits = {0.0, 0.0};
};

CnnCache run_cnn(const Matrix& input, const ConvSpec& spec,
                 const ModelParams& params) {
  CnnCache cache;
  cache.maps = conv1d_forward(input, spec, params);

  const int k = spec.pooled_per_map();
  cache.pools.resize(spec.filter_sizes.size());
  for (size_t wi = 0; wi < spec.filter_sizes.size(); ++wi) {
    cache.pools[wi].resize(spec.filters_per_size);
    for (int f = 0; f < spec.filters_per_size; ++f) {
      cache.pools[wi][f] = kmax_pool(cache.maps.act[wi][f], k);
      for (double v : cache.pools[wi][f].values) cache.features.push_back(v);
    }
  }

  const Tensor& lw = params.find("linear_w");
  const Tensor& lb = params.find("linear_b");
  const int feat = static_cast<int>(cache.features.size());
  for (int o = 0; o < 2; ++o) {
    double acc = lb.value[o];
    for (int i = 0; i < feat; ++i) {
      acc += lw.value[static_cast<size_t>(o) * feat + i] * cache.features[i];
    }
    cache.logits[o] = acc;
  }
  return cache;
}

}  // namespace

Tensor& ModelParams::find(const std::string& name) {
  for (auto& t : tensors) {
    if (t.name == name) return t;
  }
  fail_runtime("no parameter tensor named \"", name, "\"");
}

const Tensor& ModelParams::find(const std::string& name) const {
  for (const auto& t : tensors) {
    if (t.name == name) return t;
  }
  fail_runtime("no parameter tensor named \"", name, "\"");
}

bool ModelParams::has(const std::string& name) const {
  for (const auto& t : tensors) {
    if (t.name == name) return true;
  }
  return false;
}

size_t ModelParams::total_size() const {
  size_t total = 0;
  for (const auto& t : tensors) total += t.size();
  return total;
}

bool ModelParams::all_finite() const {
  for (const auto& t : tensors) {
    for (double v : t.value) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

uint64_t ModelParams::checksum() const {
  uint64_t h = 0xCBF29CE484222325ull;
  auto mix = [&h](const void* data, size_t size) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < size; ++i) {
      h ^= p[i];
      h *= 0x100000001B3ull;
    }
  };
  for (const auto& t : tensors) {
    mix(t.name.data(), t.name.size());
    mix(t.value.data(), t.value.size() * sizeof(double));
  }
  return h;
}

ModelParams ModelParams::zeros_like() const {
  ModelParams out;
  out.tensors.reserve(tensors.size());
  for (const auto& t : tensors) {
    Tensor z;
    z.name = t.name;
    z.shape = t.shape;
    z.value.assign(t.value.size(), 0.0);
    out.tensors.push_back(std::move(z));
  }
  return out;
}

void ConvSpec::validate() const {
  if (filter_sizes.empty()) fail_input("conv spec needs at least one filter size");
  for (int w : filter_sizes) {
    if (w < 1) fail_input("conv filter width must be >= 1, got ", w);
  }
  if (filters_per_size < 1) fail_input("filters_per_size must be >= 1");
  if (input_dim < 1) fail_input("conv input_dim must be >= 1");
  if (pooling == Pooling::kKMax && kmax < 1) fail_input("k-max pooling needs k >= 1");
}

void TrainConfig::validate() const {
  if (class_weights[0] <= 0 || class_weights[1] <= 0)
    fail_input("class weights must be positive");
  if (max_lr <= 0) fail_input("max_lr must be positive");
  if (batch_size < 1) fail_input("batch_size must be >= 1");
  if (early_stop_patience < 1) fail_input("early_stop_patience must be >= 1");
  if (l2_weight < 0) fail_input("l2_weight must be non-negative");
  if (max_epochs < 1) fail_input("max_epochs must be >= 1");
}

ConvMaps conv1d_forward(const Matrix& input, const ConvSpec& spec,
                        const ModelParams& params) {
  spec.validate();
  if (input.cols != 0 && input.cols != spec.input_dim)
    fail_input("conv input has ", input.cols, " channels, spec expects ",
               spec.input_dim);

  const int T = input.rows;
  const int D = spec.input_dim;
  ConvMaps maps;
  maps.pre.resize(spec.filter_sizes.size());
  maps.act.resize(spec.filter_sizes.size());

  for (size_t wi = 0; wi < spec.filter_sizes.size(); ++wi) {
    const int w = spec.filter_sizes[wi];
    const Tensor& kernel = params.find(conv_kernel_name(w));
    const Tensor& bias = params.find(conv_bias_name(w));
    const int t_eff = std::max(T, w);
    const int map_len = t_eff - w + 1;
    maps.pre[wi].resize(spec.filters_per_size);
    maps.act[wi].resize(spec.filters_per_size);
    for (int f = 0; f < spec.filters_per_size; ++f) {
      auto& pre = maps.pre[wi][f];
      auto& act = maps.act[wi][f];
      pre.assign(map_len, 0.0);
      act.assign(map_len, 0.0);
      const double* kf = kernel.value.data() +
                         static_cast<size_t>(f) * w * D;
      for (int t = 0; t < map_len; ++t) {
        double acc = bias.value[f];
        for (int i = 0; i < w; ++i) {
          const int r = t + i;
          if (r >= T) continue;  // zero padding
          const double* row = input.data.data() + static_cast<size_t>(r) * D;
          const double* kr = kf + static_cast<size_t>(i) * D;
          for (int d = 0; d < D; ++d) acc += kr[d] * row[d];
        }
        pre[t] = acc;
        act[t] = acc > 0.0 ? acc : 0.0;
      }
    }
  }
  return maps;
}

PoolResult kmax_pool(const std::vector<double>& map, int k) {
  if (k < 1) fail_input("kmax_pool needs k >= 1, got ", k);
  const int n = static_cast<int>(map.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return map[a] > map[b];
  });
  const int take = std::min(k, n);
  std::vector<int> chosen(order.begin(), order.begin() + take);
  std::sort(chosen.begin(), chosen.end());

  PoolResult result;
  result.values.assign(static_cast<size_t>(k), 0.0);
  result.indices.assign(static_cast<size_t>(k), -1);
  const int pad = k - take;  // left padding for short maps
  for (int i = 0; i < take; ++i) {
    result.values[pad + i] = map[chosen[i]];
    result.indices[pad + i] = chosen[i];
  }
  return result;
}

LossResult weighted_cross_entropy(const std::array<double, 2>& logits,
                                  int label,
                                  const std::array<double, 2>& weights) {
  if (label != 0 && label != 1) fail_input("label must be 0 or 1, got ", label);
  const double m = std::max(logits[0], logits[1]);
  const double e0 = std::exp(logits[0] - m);
  const double e1 = std::exp(logits[1] - m);
  const double z = e0 + e1;
  const double p[2] = {e0 / z, e1 / z};
  const double w = weights[label];

  LossResult result;
  result.loss = -w * std::log(p[label]);
  for (int j = 0; j < 2; ++j) {
    result.dlogits[j] = w * (p[j] - (j == label ? 1.0 : 0.0));
  }
  return result;
}

double onecycle_lr(int step, int total_steps, double max_lr) {
  if (total_steps < 1) fail_input("onecycle_lr needs total_steps >= 1");
  if (step < 0 || step >= total_steps)
    fail_input("onecycle_lr step ", step, " out of range [0, ", total_steps, ")");

  const double start_lr = max_lr / 25.0;
  const double floor_lr = max_lr / 1e4;
  const int peak = static_cast<int>(std::llround(0.3 * (total_steps - 1)));

  if (step == peak) return max_lr;
  if (step < peak) {
    return start_lr + (max_lr - start_lr) * static_cast<double>(step) / peak;
  }
  if (step == total_steps - 1) return floor_lr;
  const double progress =
      static_cast<double>(step - peak) / static_cast<double>(total_steps - 1 - peak);
  return floor_lr + (max_lr - floor_lr) * 0.5 * (1.0 + std::cos(M_PI * progress));
}

ModelParams init_cnn_params(const ConvSpec& spec, uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  ModelParams params;
  for (int w : spec.filter_sizes) {
    const int fan_in = w * spec.input_dim;
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    Tensor kernel;
    kernel.name = conv_kernel_name(w);
    kernel.shape = {spec.filters_per_size, w, spec.input_dim};
    kernel.value.resize(static_cast<size_t>(spec.filters_per_size) * w *
                        spec.input_dim);
    for (auto& v : kernel.value) v = rng.next_range(-bound, bound);
    params.tensors.push_back(std::move(kernel));

    Tensor bias;
    bias.name = conv_bias_name(w);
    bias.shape = {spec.filters_per_size};
    bias.value.resize(static_cast<size_t>(spec.filters_per_size));
    for (auto& v : bias.value) v = rng.next_range(-bound, bound);
    params.tensors.push_back(std::move(bias));
  }
  const int feat = spec.feature_size();
  const double bound = 1.0 / std::sqrt(static_cast<double>(feat));
  Tensor lw;
  lw.name = "linear_w";
  lw.shape = {2, feat};
  lw.value.resize(static_cast<size_t>(2) * feat);
  for (auto& v : lw.value) v = rng.next_range(-bound, bound);
  params.tensors.push_back(std::move(lw));
  Tensor lb;
  lb.name = "linear_b";
  lb.shape = {2};
  lb.value.resize(2);
  for (auto& v : lb.value) v = rng.next_range(-bound, bound);
  params.tensors.push_back(std::move(lb));
  return params;
}

CnnForward cnn_forward(const Matrix& input, const ConvSpec& spec,
                       const ModelParams& params) {
  CnnCache cache = run_cnn(input, spec, params);
  CnnForward out;
  out.logits = cache.logits;
  out.features = std::move(cache.features);
  return out;
}

double cnn_forward_backward(const Matrix& input, int label,
                            const std::array<double, 2>& class_weights,
                            const ConvSpec& spec, const ModelParams& params,
                            ModelParams& grads, Matrix* input_grad) {
  CnnCache cache = run_cnn(input, spec, params);
  LossResult loss = weighted_cross_entropy(cache.logits, label, class_weights);

  const int feat = static_cast<int>(cache.features.size());
  const Tensor& lw = params.find("linear_w");
  Tensor& dlw = grads.find("linear_w");
  Tensor& dlb = grads.find("linear_b");

  std::vector<double> dfeatures(feat, 0.0);
  for (int o = 0; o < 2; ++o) {
    dlb.value[o] += loss.dlogits[o];
    for (int i = 0; i < feat; ++i) {
      dlw.value[static_cast<size_t>(o) * feat + i] +=
          loss.dlogits[o] * cache.features[i];
      dfeatures[i] += loss.dlogits[o] * lw.value[static_cast<size_t>(o) * feat + i];
    }
  }

  const int T = input.rows;
  const int D = spec.input_dim;
  if (input_grad != nullptr && (input_grad->rows != T || input_grad->cols != D)) {
    *input_grad = Matrix(T, D);
  }

  const int k = spec.pooled_per_map();
  int feature_cursor = 0;
  for (size_t wi = 0; wi < spec.filter_sizes.size(); ++wi) {
    const int w = spec.filter_sizes[wi];
    const Tensor& kernel = params.find(conv_kernel_name(w));
    Tensor& dkernel = grads.find(conv_kernel_name(w));
    Tensor& dbias = grads.find(conv_bias_name(w));
    for (int f = 0; f < spec.filters_per_size; ++f) {
      const auto& pool = cache.pools[wi][f];
      const auto& pre = cache.maps.pre[wi][f];
      for (int j = 0; j < k; ++j) {
        const double dpre = dfeatures[feature_cursor++];
        const int t = pool.indices[j];
        if (t < 0) continue;        // padded slot
        if (pre[t] <= 0.0) continue;  // rectifier gate closed
        dbias.value[f] += dpre;
        double* dkf = dkernel.value.data() + static_cast<size_t>(f) * w * D;
        const double* kf = kernel.value.data() + static_cast<size_t>(f) * w * D;
        for (int i = 0; i < w; ++i) {
          const int r = t + i;
          if (r >= T) continue;
          const double* row = input.data.data() + static_cast<size_t>(r) * D;
          double* dkr = dkf + static_cast<size_t>(i) * D;
          for (int d = 0; d < D; ++d) dkr[d] += dpre * row[d];
          if (input_grad != nullptr) {
            double* drow = input_grad->data.data() + static_cast<size_t>(r) * D;
            const double* kr = kf + static_cast<size_t>(i) * D;
            for (int d = 0; d < D; ++d) drow[d] += dpre * kr[d];
          }
        }
      }
    }
  }
  return loss.loss;
}

bool TrainableModel::l2_applies(const std::string& tensor_name) const {
  return starts_with(tensor_name, "conv_w");
}

double softmax_positive(const std::array<double, 2>& logits) {
  const double m = std::max(logits[0], logits[1]);
  const double e0 = std::exp(logits[0] - m);
  const double e1 = std::exp(logits[1] - m);
  return e1 / (e0 + e1);
}

double CnnClassifierModel::example_loss(const TrainExample& ex,
                                        const TrainConfig& config) const {
  CnnForward fwd = cnn_forward(ex.x, spec_, params_);
  return weighted_cross_entropy(fwd.logits, ex.label, config.class_weights).loss;
}

namespace {

double l2_penalty(const TrainableModel& model, double l2_weight) {
  if (l2_weight == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& t : model.params().tensors) {
    if (!model.l2_applies(t.name)) continue;
    for (double v : t.value) sum += v * v;
  }
  return l2_weight * sum;
}

double mean_data_loss(const TrainableModel& model,
                      const std::vector<TrainExample>& set,
                      const TrainConfig& config) {
  if (set.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& ex : set) sum += model.example_loss(ex, config);
  return sum / static_cast<double>(set.size());
}

}  // namespace

TrainResult train(TrainableModel& model, const std::vector<TrainExample>& train_set,
                  const std::vector<TrainExample>& dev_set,
                  const TrainConfig& config) {
  config.validate();
  if (train_set.empty()) fail_input("training set is empty");
  if (dev_set.empty()) fail_input("dev set is empty");

  ModelParams& params = model.params();
  ModelParams m_state = params.zeros_like();
  ModelParams v_state = params.zeros_like();
  constexpr double kBeta1 = 0.9;
  constexpr double kBeta2 = 0.999;
  constexpr double kEps = 1e-8;

  const int n = static_cast<int>(train_set.size());
  const int batches_per_epoch = (n + config.batch_size - 1) / config.batch_size;
  const int total_steps = config.max_epochs * batches_per_epoch;

  Rng root(config.seed);
  TrainResult result;
  ModelParams best_params = params;
  double best_dev = std::numeric_limits<double>::infinity();
  int best_epoch = 0;
  int epochs_without_improvement = 0;
  int step = 0;
  int adam_t = 0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng epoch_rng = root.fork(static_cast<uint64_t>(epoch));
    epoch_rng.shuffle(order);

    double epoch_loss = 0.0;
    double last_lr = 0.0;
    for (int b = 0; b < batches_per_epoch; ++b) {
      const int begin = b * config.batch_size;
      const int end = std::min(n, begin + config.batch_size);
      const int batch_n = end - begin;

      ModelParams grads = params.zeros_like();
      double batch_loss = 0.0;
      for (int i = begin; i < end; ++i) {
        batch_loss += model.example_loss_grad(train_set[order[i]], config, grads);
      }
      batch_loss /= batch_n;
      const double inv = 1.0 / batch_n;
      for (auto& g : grads.tensors) {
        for (auto& v : g.value) v *= inv;
      }
      if (config.l2_weight > 0.0) {
        batch_loss += l2_penalty(model, config.l2_weight);
        for (size_t ti = 0; ti < params.tensors.size(); ++ti) {
          if (!model.l2_applies(params.tensors[ti].name)) continue;
          auto& g = grads.tensors[ti].value;
          const auto& w = params.tensors[ti].value;
          for (size_t i = 0; i < g.size(); ++i) {
            g[i] += 2.0 * config.l2_weight * w[i];
          }
        }
      }
      if (!std::isfinite(batch_loss))
        fail_runtime("non-finite training loss at epoch ", epoch, " batch ", b,
                     " (seed ", config.seed, ")");

      const double lr = onecycle_lr(step, total_steps, config.max_lr);
      last_lr = lr;
      ++step;
      ++adam_t;
      const double bc1 = 1.0 - std::pow(kBeta1, adam_t);
      const double bc2 = 1.0 - std::pow(kBeta2, adam_t);
      for (size_t ti = 0; ti < params.tensors.size(); ++ti) {
        auto& w = params.tensors[ti].value;
        auto& g = grads.tensors[ti].value;
        auto& m = m_state.tensors[ti].value;
        auto& v = v_state.tensors[ti].value;
        for (size_t i = 0; i < w.size(); ++i) {
          m[i] = kBeta1 * m[i] + (1.0 - kBeta1) * g[i];
          v[i] = kBeta2 * v[i] + (1.0 - kBeta2) * g[i] * g[i];
          const double mhat = m[i] / bc1;
          const double vhat = v[i] / bc2;
          w[i] -= lr * mhat / (std::sqrt(vhat) + kEps);
        }
      }
      epoch_loss += batch_loss;
    }
    epoch_loss /= batches_per_epoch;

    const double dev_loss = mean_data_loss(model, dev_set, config);
    if (!std::isfinite(dev_loss))
      fail_runtime("non-finite dev loss at epoch ", epoch);
    result.history.push_back({epoch, epoch_loss, dev_loss, last_lr});
    log_debug("epoch ", epoch, " train_loss=", epoch_loss, " dev_loss=", dev_loss);

    if (dev_loss < best_dev) {
      best_dev = dev_loss;
      best_epoch = epoch;
      best_params = params;
      epochs_without_improvement = 0;
    } else {
      ++epochs_without_improvement;
      if (epochs_without_improvement >= config.early_stop_patience) {
        result.stopped_epoch = epoch;
        break;
      }
    }
    result.stopped_epoch = epoch;
  }

  params = best_params;
  result.best_epoch = best_epoch;
  result.best_dev_loss = best_dev;
  return result;
}

double grad_check(TrainableModel& model, const std::vector<TrainExample>& batch,
                  const TrainConfig& config, double eps) {
  if (eps <= 0) fail_input("grad_check needs eps > 0");
  if (batch.empty()) fail_input("grad_check needs a non-empty batch");

  ModelParams& params = model.params();
  const double inv = 1.0 / static_cast<double>(batch.size());

  ModelParams analytic = params.zeros_like();
  for (const auto& ex : batch) {
    double loss = model.example_loss_grad(ex, config, analytic);
    if (!std::isfinite(loss)) fail_runtime("non-finite loss in grad_check");
  }
  for (auto& t : analytic.tensors) {
    for (auto& v : t.value) v *= inv;
  }
  if (config.l2_weight > 0.0) {
    for (size_t ti = 0; ti < params.tensors.size(); ++ti) {
      if (!model.l2_applies(params.tensors[ti].name)) continue;
      auto& g = analytic.tensors[ti].value;
      const auto& w = params.tensors[ti].value;
      for (size_t i = 0; i < g.size(); ++i) g[i] += 2.0 * config.l2_weight * w[i];
    }
  }

  auto objective = [&]() {
    double value = mean_data_loss(model, batch, config);
    value += l2_penalty(model, config.l2_weight);
    if (!std::isfinite(value)) fail_runtime("non-finite loss in grad_check");
    return value;
  };

  double max_rel = 0.0;
  for (size_t ti = 0; ti < params.tensors.size(); ++ti) {
    auto& values = params.tensors[ti].value;
    for (size_t i = 0; i < values.size(); ++i) {
      const double saved = values[i];
      values[i] = saved + eps;
      const double f_plus = objective();
      values[i] = saved - eps;
      const double f_minus = objective();
      values[i] = saved;
      const double numeric = (f_plus - f_minus) / (2.0 * eps);
      const double a = analytic.tensors[ti].value[i];
      const double denom = std::max({1.0, std::abs(a), std::abs(numeric)});
      max_rel = std::max(max_rel, std::abs(a - numeric) / denom);
    }
  }
  return max_rel;
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  if (!ckpt.params.all_finite())
    fail_runtime("refusing to save non-finite parameters to ", path);
  ordered_json meta;
  meta["kind"] = ckpt.kind;
  meta["seed"] = ckpt.seed;
  if (!ckpt.config_json.empty()) {
    meta["config"] = ordered_json::parse(ckpt.config_json);
  } else {
    meta["config"] = ordered_json::object();
  }
  ordered_json tensors = ordered_json::array();
  for (const auto& t : ckpt.params.tensors) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["shape"] = t.shape;
    tensors.push_back(std::move(tj));
  }
  meta["tensors"] = std::move(tensors);
  const std::string meta_str = meta.dump();

  std::string buffer;
  buffer += "SGCKPT01";
  uint64_t len = meta_str.size();
  buffer.append(reinterpret_cast<const char*>(&len), sizeof(len));
  buffer += meta_str;
  for (const auto& t : ckpt.params.tensors) {
    buffer.append(reinterpret_cast<const char*>(t.value.data()),
                  t.value.size() * sizeof(double));
  }
  write_file(path, buffer);
}

Checkpoint load_checkpoint(const std::string& path) {
  const std::string buffer = read_file(path);
  if (buffer.size() < 16 || buffer.substr(0, 8) != "SGCKPT01")
    fail_input(path, ": not a checkpoint file");
  uint64_t len = 0;
  std::memcpy(&len, buffer.data() + 8, sizeof(len));
  if (16 + len > buffer.size()) fail_input(path, ": truncated checkpoint header");

  ordered_json meta;
  try {
    meta = ordered_json::parse(buffer.substr(16, len));
  } catch (const std::exception& e) {
    fail_input(path, ": bad checkpoint metadata: ", e.what());
  }

  Checkpoint ckpt;
  ckpt.kind = meta.at("kind").get<std::string>();
  ckpt.seed = meta.at("seed").get<uint64_t>();
  ckpt.config_json = meta.at("config").dump();

  size_t offset = 16 + len;
  for (const auto& tj : meta.at("tensors")) {
    Tensor t;
    t.name = tj.at("name").get<std::string>();
    t.shape = tj.at("shape").get<std::vector<int>>();
    size_t count = 1;
    for (int d : t.shape) count *= static_cast<size_t>(d);
    const size_t bytes = count * sizeof(double);
    if (offset + bytes > buffer.size())
      fail_input(path, ": truncated checkpoint payload for tensor ", t.name);
    t.value.resize(count);
    std::memcpy(t.value.data(), buffer.data() + offset, bytes);
    offset += bytes;
    ckpt.params.tensors.push_back(std::move(t));
  }
  if (offset != buffer.size())
    fail_input(path, ": trailing bytes after checkpoint payload");
  if (!ckpt.params.all_finite()) fail_input(path, ": non-finite parameters");
  return ckpt;
}

}  // namespace symground
