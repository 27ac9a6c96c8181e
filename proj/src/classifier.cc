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

#include "simile/classifier.h"

#include <cmath>
#include <random>
#include <sstream>

#include "simile/errors.h"
#include "simile/io.h"
#include "simile/random.h"
#include "simile/text.h"

namespace simile {

std::string_view NamespaceName(FeatureNamespace ns) {
  switch (ns) {
    case FeatureNamespace::kWhole: return "whole";
    case FeatureNamespace::kWholeStem: return "whole_stem";
    case FeatureNamespace::kLeft: return "left";
    case FeatureNamespace::kLeftStem: return "left_stem";
    case FeatureNamespace::kRight: return "right";
    case FeatureNamespace::kRightStem: return "right_stem";
  }
  return "";
}

FeatureMask FeatureMask::All() {
  FeatureMask mask;
  for (FeatureNamespace ns : kAllNamespaces) mask.bits_ |= Bit(ns);
  return mask;
}

FeatureMask FeatureMask::Of(std::initializer_list<FeatureNamespace> namespaces) {
  FeatureMask mask;
  for (FeatureNamespace ns : namespaces) mask.bits_ |= Bit(ns);
  return mask;
}

FeatureMask FeatureMask::Parse(std::string_view spec) {
  if (Trim(spec) == "all") return All();
  FeatureMask mask;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view name = Trim(spec.substr(start, comma - start));
    bool found = false;
    for (FeatureNamespace ns : kAllNamespaces) {
      if (NamespaceName(ns) == name) {
        mask.bits_ |= Bit(ns);
        found = true;
      }
    }
    if (!found) throw InvalidArgument("unknown feature namespace '" + std::string(name) + "'");
    start = comma + 1;
  }
  return mask;
}

FeatureMask FeatureMask::With(FeatureNamespace ns) const {
  FeatureMask copy = *this;
  copy.bits_ |= Bit(ns);
  return copy;
}

FeatureMask FeatureMask::Without(FeatureNamespace ns) const {
  FeatureMask copy = *this;
  copy.bits_ &= ~Bit(ns);
  return copy;
}

std::string FeatureMask::ToString() const {
  std::vector<std::string> names;
  for (FeatureNamespace ns : kAllNamespaces) {
    if (Has(ns)) names.emplace_back(NamespaceName(ns));
  }
  return Join(names, ",");
}

std::string_view FeatureVector::Get(FeatureNamespace ns) const {
  const std::string_view name = NamespaceName(ns);
  for (const std::string &indicator : indicators) {
    if (indicator.size() > name.size() && indicator.compare(0, name.size(), name) == 0 &&
        indicator[name.size()] == '=') {
      return std::string_view(indicator).substr(name.size() + 1);
    }
  }
  return {};
}

FeatureVector Featurize(const SimileCandidate &candidate, FeatureMask mask,
                        const Stemmer &stemmer) {
  FeatureVector fv;
  fv.mask = mask;
  const auto add = [&](FeatureNamespace ns, const std::string &value) {
    if (mask.Has(ns)) fv.indicators.push_back(std::string(NamespaceName(ns)) + "=" + value);
  };
  add(FeatureNamespace::kWhole, candidate.full_text);
  if (mask.Has(FeatureNamespace::kWholeStem)) {
    add(FeatureNamespace::kWholeStem, stemmer.StemPhrase(candidate.full_text));
  }
  add(FeatureNamespace::kLeft, candidate.left);
  if (mask.Has(FeatureNamespace::kLeftStem)) {
    add(FeatureNamespace::kLeftStem, stemmer.StemPhrase(candidate.left));
  }
  add(FeatureNamespace::kRight, candidate.right);
  if (mask.Has(FeatureNamespace::kRightStem)) {
    add(FeatureNamespace::kRightStem, stemmer.StemPhrase(candidate.right));
  }
  return fv;
}

std::vector<LabeledPhrase> ParseLabeledData(std::string_view contents) {
  std::vector<LabeledPhrase> data;
  int line_no = 0;
  for (const std::string &line : SplitLines(contents)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    const std::string label = tab == std::string::npos ? "" : std::string(Trim(line.substr(0, tab)));
    const std::string phrase =
        tab == std::string::npos ? "" : std::string(Trim(std::string_view(line).substr(tab + 1)));
    if ((label != "0" && label != "1") || phrase.empty()) {
      throw ParseError("labeled data line " + std::to_string(line_no) +
                       ": expected 1|0<TAB>phrase");
    }
    data.push_back({label == "1" ? Label::kSimile : Label::kNotSimile, phrase});
  }
  return data;
}

std::vector<LabeledExample> FeaturizeLabeled(std::span<const LabeledPhrase> data,
                                             FeatureMask mask, const MatcherConfig &config,
                                             const Stemmer &stemmer) {
  std::vector<LabeledExample> examples;
  examples.reserve(data.size());
  for (const LabeledPhrase &item : data) {
    const std::optional<SimileCandidate> candidate = CandidateFromPhrase(item.phrase, config);
    if (!candidate) {
      throw InvalidArgument("phrase has no connector between two words: '" + item.phrase + "'");
    }
    examples.push_back({Featurize(*candidate, mask, stemmer), item.label});
  }
  return examples;
}

void Classifier::Save(const std::filesystem::path &path) const {
  WriteFileAtomic(path, Serialize());
}

namespace {

constexpr std::string_view kNbMagic = "SIMILE-NB";
constexpr std::string_view kLinearMagic = "SIMILE-LINEAR";
constexpr std::string_view kBaselineMagic = "SIMILE-ALWAYS-POSITIVE";
constexpr int kModelVersion = 1;

int LabelIndex(Label label) { return label == Label::kSimile ? 1 : 0; }

void RequireBothLabels(std::span<const LabeledExample> data) {
  bool seen[2] = {false, false};
  for (const LabeledExample &e : data) seen[LabelIndex(e.label)] = true;
  if (!seen[0] || !seen[1]) {
    throw InvalidArgument("training data must contain both simile and non-simile examples");
  }
}

FeatureMask CommonMask(std::span<const LabeledExample> data) {
  return data.empty() ? FeatureMask::All() : data.front().features.mask;
}

// Line reader shared by the model formats.
class Lines {
 public:
  Lines(std::string_view contents, std::string_view what)
      : lines_(SplitLines(contents)), what_(what) {}

  std::vector<std::string> Next(std::string_view head, std::size_t fields) {
    if (pos_ >= lines_.size()) Fail("unexpected end of file");
    std::vector<std::string> parts = SplitTabs(lines_[pos_++]);
    if (!head.empty() && parts.front() != head) Fail("expected '" + std::string(head) + "'");
    if (parts.size() != fields) Fail("expected " + std::to_string(fields) + " fields");
    for (std::string &p : parts) p = UnescapeField(p);
    return parts;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(what_ + " line " + std::to_string(pos_) + ": " + message);
  }

  void Header(std::string_view magic) {
    const std::vector<std::string> h = Next("", 2);
    if (h[0] != magic) Fail("bad magic header");
    if (h[1] != std::to_string(kModelVersion)) Fail("unsupported version " + h[1]);
  }

  std::int64_t Int(const std::string &s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error &) {
    }
    Fail("bad integer '" + s + "'");
  }

  double Real(const std::string &s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error &) {
    }
    Fail("bad number '" + s + "'");
  }

  FeatureMask Mask(const std::string &s) {
    try {
      return s.empty() ? FeatureMask() : FeatureMask::Parse(s);
    } catch (const InvalidArgument &e) {
      Fail(e.what());
    }
  }

 private:
  std::vector<std::string> lines_;
  std::string what_;
  std::size_t pos_ = 0;
};

}  // namespace

NbModel NbModel::Train(std::span<const LabeledExample> data, double alpha) {
  RequireBothLabels(data);
  if (!(alpha > 0)) throw InvalidArgument("smoothing alpha must be positive");
  NbModel model;
  model.alpha_ = alpha;
  model.mask_ = CommonMask(data);
  for (const LabeledExample &e : data) {
    const int c = LabelIndex(e.label);
    ++model.documents_[c];
    for (const std::string &indicator : e.features.indicators) {
      auto it = model.counts_.find(indicator);
      if (it == model.counts_.end()) it = model.counts_.emplace(indicator, std::array<std::int64_t, 2>{}).first;
      ++it->second[c];
      ++model.totals_[c];
    }
  }
  return model;
}

double NbModel::Prior(Label label) const {
  const double n = static_cast<double>(documents_[0] + documents_[1]);
  return documents_[LabelIndex(label)] / n;
}

std::int64_t NbModel::Count(std::string_view indicator, Label label) const {
  const auto it = counts_.find(indicator);
  return it == counts_.end() ? 0 : it->second[LabelIndex(label)];
}

double NbModel::Likelihood(std::string_view indicator, Label label) const {
  const int c = LabelIndex(label);
  const double vocab = static_cast<double>(counts_.size());
  return (Count(indicator, label) + alpha_) / (totals_[c] + alpha_ * vocab);
}

Prediction NbModel::Predict(const FeatureVector &features) const {
  double log_odds = std::log(Prior(Label::kSimile)) - std::log(Prior(Label::kNotSimile));
  for (const std::string &indicator : features.indicators) {
    // Indicators outside the training vocabulary carry no evidence.
    if (counts_.find(indicator) == counts_.end()) continue;
    log_odds += std::log(Likelihood(indicator, Label::kSimile)) -
                std::log(Likelihood(indicator, Label::kNotSimile));
  }
  return {log_odds > 0 ? Label::kSimile : Label::kNotSimile, log_odds};
}

// SIMILE-NB 1 / mask / alpha / documents <n0> <n1> / features <n> then
// <indicator> <count0> <count1> lines / end
std::string NbModel::Serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << kNbMagic << '\t' << kModelVersion << '\n';
  out << "mask\t" << mask_.ToString() << '\n';
  out << "alpha\t" << alpha_ << '\n';
  out << "documents\t" << documents_[0] << '\t' << documents_[1] << '\n';
  out << "features\t" << counts_.size() << '\n';
  for (const auto &[indicator, counts] : counts_) {
    out << EscapeField(indicator) << '\t' << counts[0] << '\t' << counts[1] << '\n';
  }
  out << "end\n";
  return out.str();
}

NbModel NbModel::Deserialize(std::string_view contents) {
  Lines lines(contents, "naive bayes model");
  lines.Header(kNbMagic);
  NbModel model;
  model.mask_ = lines.Mask(lines.Next("mask", 2)[1]);
  model.alpha_ = lines.Real(lines.Next("alpha", 2)[1]);
  const std::vector<std::string> docs = lines.Next("documents", 3);
  model.documents_ = {lines.Int(docs[1]), lines.Int(docs[2])};
  const std::int64_t n = lines.Int(lines.Next("features", 2)[1]);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::vector<std::string> f = lines.Next("", 3);
    const std::array<std::int64_t, 2> counts = {lines.Int(f[1]), lines.Int(f[2])};
    model.counts_[f[0]] = counts;
    model.totals_[0] += counts[0];
    model.totals_[1] += counts[1];
  }
  lines.Next("end", 1);
  if (model.documents_[0] <= 0 || model.documents_[1] <= 0 || !(model.alpha_ > 0)) {
    lines.Fail("model statistics out of range");
  }
  return model;
}

LinearModel LinearModel::Train(std::span<const LabeledExample> data,
                               const LinearHyperparams &hyper) {
  RequireBothLabels(data);
  if (hyper.epochs < 1 || !(hyper.learning_rate > 0) || hyper.regularization < 0) {
    throw InvalidArgument("invalid linear learner hyperparameters");
  }
  std::map<std::string, int, std::less<>> index;
  std::vector<std::vector<int>> rows;
  std::vector<double> targets;
  for (const LabeledExample &e : data) {
    std::vector<int> row;
    for (const std::string &indicator : e.features.indicators) {
      const auto [it, inserted] = index.emplace(indicator, static_cast<int>(index.size()));
      row.push_back(it->second);
    }
    rows.push_back(std::move(row));
    targets.push_back(e.label == Label::kSimile ? 1.0 : -1.0);
  }

  const std::size_t dims = index.size();
  std::vector<double> w(dims, 0.0);
  std::vector<double> w_sum(dims, 0.0);
  double b = 0.0;
  double b_sum = 0.0;
  std::int64_t step = 0;
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(hyper.seed);

  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    Shuffle(order, rng);
    for (std::size_t i : order) {
      ++step;
      const double eta =
          hyper.learning_rate / (1.0 + hyper.learning_rate * hyper.regularization * step);
      double margin = b;
      for (int f : rows[i]) margin += w[f];
      margin *= targets[i];
      const double shrink = 1.0 - eta * hyper.regularization;
      for (double &wf : w) wf *= shrink;
      if (margin < 1.0) {
        for (int f : rows[i]) w[f] += eta * targets[i];
        b += eta * targets[i];
      }
      for (std::size_t f = 0; f < dims; ++f) w_sum[f] += w[f];
      b_sum += b;
    }
  }

  LinearModel model;
  model.hyper_ = hyper;
  model.mask_ = CommonMask(data);
  model.bias_ = b_sum / static_cast<double>(step);
  for (const auto &[indicator, f] : index) {
    model.weights_[indicator] = w_sum[f] / static_cast<double>(step);
  }
  return model;
}

double LinearModel::Weight(std::string_view indicator) const {
  const auto it = weights_.find(indicator);
  return it == weights_.end() ? 0.0 : it->second;
}

double LinearModel::Margin(const FeatureVector &features) const {
  double margin = bias_;
  for (const std::string &indicator : features.indicators) margin += Weight(indicator);
  return margin;
}

Prediction LinearModel::Predict(const FeatureVector &features) const {
  const double margin = Margin(features);
  return {margin > 0 ? Label::kSimile : Label::kNotSimile, margin};
}

// SIMILE-LINEAR 1 / mask / hyper <epochs> <lr> <reg> <seed> / bias /
// weights <n> then <indicator> <weight> lines / end
std::string LinearModel::Serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << kLinearMagic << '\t' << kModelVersion << '\n';
  out << "mask\t" << mask_.ToString() << '\n';
  out << "hyper\t" << hyper_.epochs << '\t' << hyper_.learning_rate << '\t'
      << hyper_.regularization << '\t' << hyper_.seed << '\n';
  out << "bias\t" << bias_ << '\n';
  out << "weights\t" << weights_.size() << '\n';
  for (const auto &[indicator, weight] : weights_) {
    out << EscapeField(indicator) << '\t' << weight << '\n';
  }
  out << "end\n";
  return out.str();
}

LinearModel LinearModel::Deserialize(std::string_view contents) {
  Lines lines(contents, "linear model");
  lines.Header(kLinearMagic);
  LinearModel model;
  model.mask_ = lines.Mask(lines.Next("mask", 2)[1]);
  const std::vector<std::string> h = lines.Next("hyper", 5);
  model.hyper_.epochs = static_cast<int>(lines.Int(h[1]));
  model.hyper_.learning_rate = lines.Real(h[2]);
  model.hyper_.regularization = lines.Real(h[3]);
  model.hyper_.seed = static_cast<std::uint64_t>(std::stoull(h[4]));
  model.bias_ = lines.Real(lines.Next("bias", 2)[1]);
  const std::int64_t n = lines.Int(lines.Next("weights", 2)[1]);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::vector<std::string> f = lines.Next("", 2);
    model.weights_[f[0]] = lines.Real(f[1]);
  }
  lines.Next("end", 1);
  return model;
}

std::string AlwaysPositive::Serialize() const {
  return std::string(kBaselineMagic) + "\t" + std::to_string(kModelVersion) + "\nend\n";
}

std::unique_ptr<Classifier> DeserializeClassifier(std::string_view contents) {
  const std::string_view first = contents.substr(0, contents.find('\t'));
  if (first == kNbMagic) return std::make_unique<NbModel>(NbModel::Deserialize(contents));
  if (first == kLinearMagic) {
    return std::make_unique<LinearModel>(LinearModel::Deserialize(contents));
  }
  if (first == kBaselineMagic) return std::make_unique<AlwaysPositive>();
  throw ParseError("not a classifier model (bad magic header)");
}

std::unique_ptr<Classifier> LoadClassifier(const std::filesystem::path &path) {
  try {
    return DeserializeClassifier(ReadFile(path));
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace simile
