// Copyright 2026 The Simile Miner Authors.
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

#include "simile/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <random>

#include "simile/errors.h"
#include "simile/random.h"

namespace simile {

void EvalMetrics::Add(Label gold, Label predicted) {
  if (gold == Label::kSimile) {
    (predicted == Label::kSimile ? tp : fn) += 1;
  } else {
    (predicted == Label::kSimile ? fp : tn) += 1;
  }
}

double EvalMetrics::precision() const {
  return tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
}

double EvalMetrics::recall() const {
  return tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
}

double EvalMetrics::f_measure() const {
  const double p = precision();
  const double r = recall();
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

std::unique_ptr<Classifier> NbLearner::Train(std::span<const LabeledExample> data) const {
  return std::make_unique<NbModel>(NbModel::Train(data, alpha_));
}

std::unique_ptr<Classifier> LinearLearner::Train(std::span<const LabeledExample> data) const {
  return std::make_unique<LinearModel>(LinearModel::Train(data, hyper_));
}

std::unique_ptr<Classifier> AlwaysPositiveLearner::Train(std::span<const LabeledExample>) const {
  return std::make_unique<AlwaysPositive>();
}

std::unique_ptr<Learner> MakeLearner(std::string_view name, double alpha,
                                     LinearHyperparams hyper) {
  if (name == "nb") return std::make_unique<NbLearner>(alpha);
  if (name == "linear") return std::make_unique<LinearLearner>(hyper);
  if (name == "always-positive") return std::make_unique<AlwaysPositiveLearner>();
  throw InvalidArgument("unknown learner '" + std::string(name) +
                        "' (expected nb, linear or always-positive)");
}

std::vector<int> StratifiedFolds(std::span<const Label> labels, int k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("cross-validation needs at least 2 folds");
  if (static_cast<std::size_t>(k) > labels.size()) {
    throw InvalidArgument("cannot split " + std::to_string(labels.size()) + " examples into " +
                          std::to_string(k) + " folds");
  }
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == Label::kSimile ? positives : negatives).push_back(i);
  }
  std::mt19937_64 rng(seed);
  Shuffle(positives, rng);
  Shuffle(negatives, rng);
  std::vector<int> folds(labels.size(), 0);
  std::size_t dealt = 0;
  for (const auto *group : {&positives, &negatives}) {
    for (std::size_t i : *group) folds[i] = static_cast<int>(dealt++ % k);
  }
  return folds;
}

EvalMetrics CrossValidate(std::span<const LabeledExample> data, const Learner &learner,
                          std::span<const int> folds) {
  if (folds.size() != data.size()) {
    throw InvalidArgument("fold assignment size does not match the data");
  }
  const int k = data.empty() ? 0 : *std::max_element(folds.begin(), folds.end()) + 1;
  EvalMetrics metrics;
  for (int fold = 0; fold < k; ++fold) {
    std::vector<LabeledExample> train;
    std::vector<const LabeledExample *> test;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (folds[i] == fold) {
        test.push_back(&data[i]);
      } else {
        train.push_back(data[i]);
      }
    }
    if (test.empty()) continue;
    const std::unique_ptr<Classifier> model = learner.Train(train);
    for (const LabeledExample *e : test) metrics.Add(e->label, model->Predict(e->features).label);
  }
  return metrics;
}

EvalMetrics CrossValidate(std::span<const LabeledExample> data, const Learner &learner, int k,
                          std::uint64_t seed) {
  std::vector<Label> labels;
  labels.reserve(data.size());
  for (const LabeledExample &e : data) labels.push_back(e.label);
  const std::vector<int> folds = StratifiedFolds(labels, k, seed);
  return CrossValidate(data, learner, folds);
}

std::string FormatMetricsTable(const std::vector<std::pair<std::string, EvalMetrics>> &rows) {
  std::size_t name_width = std::string_view("Algorithm").size();
  for (const auto &[name, metrics] : rows) name_width = std::max(name_width, name.size());
  std::string out;
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%-*s  %9s  %6s  %9s\n", static_cast<int>(name_width),
                "Algorithm", "Precision", "Recall", "F-Measure");
  out += buffer;
  for (const auto &[name, m] : rows) {
    std::snprintf(buffer, sizeof(buffer), "%-*s  %9.3f  %6.3f  %9.3f\n",
                  static_cast<int>(name_width), name.c_str(), m.precision(), m.recall(),
                  m.f_measure());
    out += buffer;
  }
  return out;
}

}  // namespace simile
