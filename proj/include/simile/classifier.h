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

#ifndef SIMILE_CLASSIFIER_H_
#define SIMILE_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simile/matcher.h"
#include "simile/stemmer.h"

namespace simile {

// The six categorical features of a candidate phrase.
enum class FeatureNamespace { kWhole, kWholeStem, kLeft, kLeftStem, kRight, kRightStem };

inline constexpr std::array<FeatureNamespace, 6> kAllNamespaces = {
    FeatureNamespace::kWhole, FeatureNamespace::kWholeStem, FeatureNamespace::kLeft,
    FeatureNamespace::kLeftStem, FeatureNamespace::kRight, FeatureNamespace::kRightStem};

std::string_view NamespaceName(FeatureNamespace ns);

class FeatureMask {
 public:
  FeatureMask() = default;
  static FeatureMask All();
  static FeatureMask Of(std::initializer_list<FeatureNamespace> namespaces);
  // Comma-separated namespace names, or "all". Throws InvalidArgument.
  static FeatureMask Parse(std::string_view spec);

  bool Has(FeatureNamespace ns) const { return bits_ & Bit(ns); }
  FeatureMask With(FeatureNamespace ns) const;
  FeatureMask Without(FeatureNamespace ns) const;
  bool empty() const { return bits_ == 0; }
  std::string ToString() const;

  bool operator==(const FeatureMask &) const = default;

 private:
  static unsigned Bit(FeatureNamespace ns) { return 1u << static_cast<unsigned>(ns); }
  unsigned bits_ = 0;
};

// Sparse binary features, one "namespace=value" indicator per enabled
// namespace, kept in namespace order.
struct FeatureVector {
  std::vector<std::string> indicators;
  FeatureMask mask;

  // Value of the indicator in `ns`, or empty.
  std::string_view Get(FeatureNamespace ns) const;
};

FeatureVector Featurize(const SimileCandidate &candidate, FeatureMask mask = FeatureMask::All(),
                        const Stemmer &stemmer = Stemmer::Default());

enum class Label { kNotSimile = 0, kSimile = 1 };

struct LabeledPhrase {
  Label label;
  std::string phrase;
};

// Labeled dataset: one `label<TAB>phrase` per line, label 1 (simile) or 0.
std::vector<LabeledPhrase> ParseLabeledData(std::string_view contents);

struct LabeledExample {
  FeatureVector features;
  Label label;
};

// Splits each phrase at its connector and featurizes it. A phrase without a
// connector is an InvalidArgument naming it.
std::vector<LabeledExample> FeaturizeLabeled(std::span<const LabeledPhrase> data,
                                             FeatureMask mask = FeatureMask::All(),
                                             const MatcherConfig &config = {},
                                             const Stemmer &stemmer = Stemmer::Default());

struct Prediction {
  Label label;
  // Log-odds for Naive Bayes, margin for the linear model. Positive means
  // simile.
  double score;
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Prediction Predict(const FeatureVector &features) const = 0;
  virtual std::string Serialize() const = 0;
  virtual std::string name() const = 0;
  virtual FeatureMask mask() const = 0;

  void Save(const std::filesystem::path &path) const;
};

// Reads either model kind, dispatching on the magic header.
std::unique_ptr<Classifier> LoadClassifier(const std::filesystem::path &path);
std::unique_ptr<Classifier> DeserializeClassifier(std::string_view contents);

// Multinomial Naive Bayes over indicators with additive smoothing.
class NbModel : public Classifier {
 public:
  // Throws InvalidArgument unless both labels occur.
  static NbModel Train(std::span<const LabeledExample> data, double alpha = 1.0);
  static NbModel Deserialize(std::string_view contents);

  Prediction Predict(const FeatureVector &features) const override;
  std::string Serialize() const override;
  std::string name() const override { return "Naive Bayes"; }
  FeatureMask mask() const override { return mask_; }

  double Prior(Label label) const;
  // Smoothed P(indicator | label); indicators outside the vocabulary get the
  // pure smoothing mass.
  double Likelihood(std::string_view indicator, Label label) const;
  std::int64_t Count(std::string_view indicator, Label label) const;
  std::size_t vocabulary_size() const { return counts_.size(); }
  double alpha() const { return alpha_; }

 private:
  NbModel() = default;
  void Finish();

  double alpha_ = 1.0;
  FeatureMask mask_;
  std::array<std::int64_t, 2> documents_{};
  std::array<std::int64_t, 2> totals_{};
  std::map<std::string, std::array<std::int64_t, 2>, std::less<>> counts_;
};

struct LinearHyperparams {
  int epochs = 50;
  double learning_rate = 0.1;
  double regularization = 1e-4;
  std::uint64_t seed = 42;
};

// Linear classifier trained by stochastic subgradient descent on the L2
// regularized hinge loss. The returned weights are the average of all
// iterates.
class LinearModel : public Classifier {
 public:
  static LinearModel Train(std::span<const LabeledExample> data,
                           const LinearHyperparams &hyper = {});
  static LinearModel Deserialize(std::string_view contents);

  Prediction Predict(const FeatureVector &features) const override;
  std::string Serialize() const override;
  std::string name() const override { return "Linear SVM"; }
  FeatureMask mask() const override { return mask_; }

  double Margin(const FeatureVector &features) const;
  double Weight(std::string_view indicator) const;
  double bias() const { return bias_; }
  const LinearHyperparams &hyperparams() const { return hyper_; }
  const std::map<std::string, double, std::less<>> &weights() const { return weights_; }

 private:
  LinearModel() = default;

  LinearHyperparams hyper_;
  FeatureMask mask_;
  double bias_ = 0.0;
  std::map<std::string, double, std::less<>> weights_;
};

// Baseline that calls everything a simile.
class AlwaysPositive : public Classifier {
 public:
  Prediction Predict(const FeatureVector &) const override { return {Label::kSimile, 1.0}; }
  std::string Serialize() const override;
  std::string name() const override { return "Always positive"; }
  FeatureMask mask() const override { return FeatureMask::All(); }
};

}  // namespace simile

#endif  // SIMILE_CLASSIFIER_H_
