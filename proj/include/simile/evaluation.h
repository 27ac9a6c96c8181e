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

#ifndef SIMILE_EVALUATION_H_
#define SIMILE_EVALUATION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simile/classifier.h"

namespace simile {

// Binary confusion counts with the simile class as positive.
struct EvalMetrics {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  void Add(Label gold, Label predicted);

  // 0 when the denominator is 0.
  double precision() const;
  double recall() const;
  double f_measure() const;
  std::int64_t total() const { return tp + fp + fn + tn; }

  bool operator==(const EvalMetrics &) const = default;
};

// Produces a classifier from training examples.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<Classifier> Train(std::span<const LabeledExample> data) const = 0;
};

class NbLearner : public Learner {
 public:
  explicit NbLearner(double alpha = 1.0) : alpha_(alpha) {}
  std::string name() const override { return "Naive Bayes"; }
  std::unique_ptr<Classifier> Train(std::span<const LabeledExample> data) const override;

 private:
  double alpha_;
};

class LinearLearner : public Learner {
 public:
  explicit LinearLearner(LinearHyperparams hyper = {}) : hyper_(hyper) {}
  std::string name() const override { return "Linear SVM"; }
  std::unique_ptr<Classifier> Train(std::span<const LabeledExample> data) const override;

 private:
  LinearHyperparams hyper_;
};

class AlwaysPositiveLearner : public Learner {
 public:
  std::string name() const override { return "Always positive"; }
  std::unique_ptr<Classifier> Train(std::span<const LabeledExample> data) const override;
};

// Creates "nb", "linear" or "always-positive". Throws InvalidArgument.
std::unique_ptr<Learner> MakeLearner(std::string_view name, double alpha = 1.0,
                                     LinearHyperparams hyper = {});

// Stratified fold assignment: each class is shuffled with the seed, then
// positives followed by negatives are dealt round-robin over k folds.
// Throws InvalidArgument when k < 2 or k exceeds the number of labels.
std::vector<int> StratifiedFolds(std::span<const Label> labels, int k, std::uint64_t seed);

// Trains on all folds but one and predicts the held-out fold, for every
// fold, pooling the predictions into one confusion matrix. folds[i] is the
// fold of example i.
EvalMetrics CrossValidate(std::span<const LabeledExample> data, const Learner &learner,
                          std::span<const int> folds);

EvalMetrics CrossValidate(std::span<const LabeledExample> data, const Learner &learner,
                          int k = 10, std::uint64_t seed = 1);

// Aligned text table: Algorithm, Precision, Recall, F-Measure, three
// decimals.
std::string FormatMetricsTable(const std::vector<std::pair<std::string, EvalMetrics>> &rows);

}  // namespace simile

#endif  // SIMILE_EVALUATION_H_
