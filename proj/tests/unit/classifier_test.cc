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

#include <cmath>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "simile/classifier.h"
#include "simile/errors.h"
#include "simile/evaluation.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

using NS = FeatureNamespace;

SimileCandidate Phrase(std::string_view text) {
  auto c = CandidateFromPhrase(text);
  REQUIRE(c.has_value());
  return *c;
}

std::vector<LabeledExample> Examples(std::string_view contents,
                                     FeatureMask mask = FeatureMask::All()) {
  const auto phrases = ParseLabeledData(contents);
  return FeaturizeLabeled(phrases, mask);
}

std::vector<LabeledExample> FixtureExamples(const char *name) {
  return Examples(ReadFile(std::string(SIMILE_FIXTURE_DIR) + "/" + name));
}

TEST_CASE("featurize worked example") {
  const FeatureVector fv = Featurize(Phrase("radi kao konj"));
  CHECK(fv.indicators == std::vector<std::string>{"whole=radi kao konj", "whole_stem=rad ka konj",
                                                  "left=radi", "left_stem=rad", "right=konj",
                                                  "right_stem=konj"});
  CHECK(fv.Get(NS::kWholeStem) == "rad ka konj");

  const FeatureVector left = Featurize(Phrase("radi kao konj"), FeatureMask::Of({NS::kLeft}));
  CHECK(left.indicators == std::vector<std::string>{"left=radi"});
  CHECK(left.Get(NS::kRight).empty());
}

TEST_CASE("featurize agrees with the stemmer") {
  const Stemmer &stemmer = Stemmer::Default();
  const FeatureVector fv = Featurize(Phrase("Lep ko beli sneg"));
  CHECK(fv.Get(NS::kRight) == "beli sneg");
  CHECK(fv.Get(NS::kRightStem) == stemmer.StemPhrase("beli sneg"));
  CHECK(fv.Get(NS::kWhole) == "lep kao beli sneg");
  for (const char *file : {"labeled_train.txt", "labeled_separable.txt", "labeled_frozen.txt"}) {
    for (const auto &item : ParseLabeledData(ReadFile(std::string(SIMILE_FIXTURE_DIR) + "/" + file))) {
      const FeatureVector f = Featurize(Phrase(item.phrase));
      CHECK(f.Get(NS::kWholeStem) == stemmer.StemPhrase(f.Get(NS::kWhole)));
      CHECK(f.Get(NS::kLeftStem) == stemmer.StemPhrase(f.Get(NS::kLeft)));
      CHECK(f.Get(NS::kRightStem) == stemmer.StemPhrase(f.Get(NS::kRight)));
    }
  }
}

TEST_CASE("disabling a namespace removes only its indicator") {
  const SimileCandidate c = Phrase("smorio se kao zmaj");
  const FeatureVector all = Featurize(c);
  for (NS ns : kAllNamespaces) {
    const FeatureVector fewer = Featurize(c, FeatureMask::All().Without(ns));
    std::vector<std::string> expected;
    for (const auto &ind : all.indicators) {
      if (ind.rfind(std::string(NamespaceName(ns)) + "=", 0) != 0) expected.push_back(ind);
    }
    CHECK(fewer.indicators == expected);
  }
}

TEST_CASE("feature mask parsing") {
  CHECK(FeatureMask::Parse("all") == FeatureMask::All());
  const FeatureMask m = FeatureMask::Parse("left, right_stem");
  CHECK(m.Has(NS::kLeft));
  CHECK(m.Has(NS::kRightStem));
  CHECK_FALSE(m.Has(NS::kWhole));
  CHECK(FeatureMask::Parse(m.ToString()) == m);
  CHECK(FeatureMask::Parse(FeatureMask::All().ToString()) == FeatureMask::All());
  CHECK_THROWS_AS(FeatureMask::Parse("left,bogus"), InvalidArgument);
  CHECK_THROWS_AS(FeatureMask::Parse(""), InvalidArgument);
}

TEST_CASE("labeled data parsing") {
  const auto data = ParseLabeledData("# c\n1\tradi kao konj\n\n0\tradi kao pravnik\n");
  REQUIRE(data.size() == 2);
  CHECK(data[0].label == Label::kSimile);
  CHECK(data[1].phrase == "radi kao pravnik");
  try {
    ParseLabeledData("1\tradi kao konj\n2\tfoo kao bar\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseLabeledData("1 radi kao konj\n"), ParseError);
  const auto bad = ParseLabeledData("1\tbez veznika\n");
  CHECK_THROWS_AS(FeaturizeLabeled(bad), InvalidArgument);
}

TEST_CASE("naive bayes counts and likelihoods") {
  const auto data = Examples("1\tradi kao konj\n0\tpiše kao pravnik\n");
  const NbModel nb = NbModel::Train(data);
  CHECK(nb.Prior(Label::kSimile) == doctest::Approx(0.5));
  CHECK(nb.Prior(Label::kSimile) + nb.Prior(Label::kNotSimile) == doctest::Approx(1.0));
  CHECK(nb.Count("right=konj", Label::kSimile) == 1);
  CHECK(nb.Count("right=konj", Label::kNotSimile) == 0);
  CHECK(nb.vocabulary_size() == 12);
  for (const auto &e : data) {
    for (const auto &ind : e.features.indicators) {
      const double own = nb.Likelihood(ind, e.label);
      const double other = nb.Likelihood(
          ind, e.label == Label::kSimile ? Label::kNotSimile : Label::kSimile);
      CHECK(own > other);
      CHECK(other > 0);
    }
  }
  CHECK_THROWS_AS(NbModel::Train(Examples("1\tradi kao konj\n1\tspava kao top\n")),
                  InvalidArgument);
  CHECK_THROWS_AS(NbModel::Train(data, 0.0), InvalidArgument);
}

TEST_CASE("naive bayes posterior by hand") {
  const FeatureMask mask = FeatureMask::Of({NS::kLeft, NS::kRight});
  const NbModel nb = NbModel::Train(Examples("1\tradi kao konj\n0\tradi kao pravnik\n", mask));
  // Vocabulary {left=radi, right=konj, right=pravnik}, two tokens per class.
  // left=radi cancels; right=konj gives log((1+1)/5) - log((0+1)/5).
  const Prediction p = nb.Predict(Featurize(Phrase("radi kao konj"), mask));
  CHECK(p.label == Label::kSimile);
  CHECK(p.score == doctest::Approx(std::log(2.0)));
  const Prediction q = nb.Predict(Featurize(Phrase("radi kao pravnik"), mask));
  CHECK(q.label == Label::kNotSimile);
  CHECK(q.score == doctest::Approx(-std::log(2.0)));
}

TEST_CASE("naive bayes falls back to the prior") {
  const NbModel nb = NbModel::Train(
      Examples("1\tradi kao konj\n1\tspava kao top\n0\tpiše kao pravnik\n"));
  CHECK(nb.Predict(FeatureVector{}).label == Label::kSimile);
  CHECK(nb.Predict(FeatureVector{}).score == doctest::Approx(std::log(2.0)));
  const Prediction unseen = nb.Predict(Featurize(Phrase("zeleno kao trava")));
  CHECK(unseen.label == Label::kSimile);
  CHECK(unseen.score == doctest::Approx(std::log(2.0)));

  const NbModel neg = NbModel::Train(
      Examples("1\tradi kao konj\n0\tspava kao lekar\n0\tpiše kao pravnik\n"));
  CHECK(neg.Predict(Featurize(Phrase("zeleno kao trava"))).label == Label::kNotSimile);
}

TEST_CASE("naive bayes is invariant under dataset duplication") {
  const auto data = FixtureExamples("labeled_train.txt");
  auto doubled = data;
  doubled.insert(doubled.end(), data.begin(), data.end());
  // Scaling alpha with the counts leaves every ratio, hence every score,
  // unchanged.
  const NbModel once = NbModel::Train(data, 1.0);
  const NbModel twice = NbModel::Train(doubled, 2.0);
  const NbModel twice_unit = NbModel::Train(doubled, 1.0);
  for (const auto &e : FixtureExamples("labeled_separable.txt")) {
    const Prediction a = once.Predict(e.features);
    CHECK(twice.Predict(e.features).score == doctest::Approx(a.score).epsilon(1e-12));
    CHECK(twice_unit.Predict(e.features).label == a.label);
  }
  for (const auto &e : data) {
    CHECK(twice_unit.Predict(e.features).label == once.Predict(e.features).label);
  }
}

TEST_CASE("linear model separates separable data") {
  const auto data = Examples(
      "1\tradi kao konj\n1\tspava kao top\n1\tpeva kao slavuj\n1\tbeo kao sneg\n"
      "1\tćuti kao riba\n0\tradi kao pravnik\n0\tživi kao lekar\n0\tpiše kao novinar\n"
      "0\tgovori kao profesor\n0\tradi kao kuvar\n");
  const LinearModel model = LinearModel::Train(data);
  for (const auto &e : data) {
    const Prediction p = model.Predict(e.features);
    CHECK(p.label == e.label);
    CHECK(p.score == doctest::Approx(model.Margin(e.features)));
  }
  double margin = model.bias();
  for (const auto &ind : data[0].features.indicators) margin += model.Weight(ind);
  CHECK(model.Margin(data[0].features) == doctest::Approx(margin));
  CHECK(model.Weight("right=nepoznato") == 0.0);
}

TEST_CASE("linear model on inseparable data predicts the majority") {
  const auto data = Examples(
      "1\tradi kao konj\n1\tradi kao konj\n1\tradi kao konj\n0\tradi kao konj\n");
  const LinearModel model = LinearModel::Train(data);
  int correct = 0;
  for (const auto &e : data) correct += model.Predict(e.features).label == e.label;
  CHECK(correct == 3);
  CHECK_THROWS_AS(LinearModel::Train(Examples("0\tradi kao konj\n")), InvalidArgument);
}

TEST_CASE("linear training is deterministic per seed") {
  const auto data = FixtureExamples("labeled_train.txt");
  const LinearModel a = LinearModel::Train(data);
  const LinearModel b = LinearModel::Train(data);
  CHECK(a.weights() == b.weights());
  CHECK(a.bias() == b.bias());
  CHECK(a.Serialize() == b.Serialize());
  LinearHyperparams other;
  other.seed = 7;
  CHECK(LinearModel::Train(data, other).Serialize() != a.Serialize());
}

TEST_CASE("model files round trip") {
  const auto data = FixtureExamples("labeled_train.txt");
  const auto tmp = std::filesystem::temp_directory_path();
  const NbModel nb = NbModel::Train(data);
  const LinearModel lin = LinearModel::Train(data);
  const AlwaysPositive ap;
  for (const Classifier *model : std::vector<const Classifier *>{&nb, &lin, &ap}) {
    const auto path = tmp / "simile_classifier_test.model";
    model->Save(path);
    const auto loaded = LoadClassifier(path);
    CHECK(loaded->name() == model->name());
    CHECK(loaded->Serialize() == model->Serialize());
    for (const auto &e : data) {
      const Prediction a = model->Predict(e.features);
      const Prediction b = loaded->Predict(e.features);
      CHECK(a.label == b.label);
      CHECK(a.score == b.score);
    }
    std::filesystem::remove(path);
  }
  const std::string text = nb.Serialize();
  CHECK_THROWS_AS(DeserializeClassifier(text.substr(0, text.size() - 5)), ParseError);
  CHECK_THROWS_AS(DeserializeClassifier("SIMILE-UNKNOWN\t1\n"), ParseError);
  CHECK_THROWS_AS(LoadClassifier("/nonexistent/model"), IoError);
}

TEST_CASE("metrics identities") {
  EvalMetrics m;
  CHECK(m.precision() == 0.0);
  CHECK(m.recall() == 0.0);
  CHECK(m.f_measure() == 0.0);
  m = {3, 1, 2, 4};
  CHECK(m.precision() == doctest::Approx(0.75));
  CHECK(m.recall() == doctest::Approx(0.6));
  CHECK(m.f_measure() == doctest::Approx(2 * 0.75 * 0.6 / 1.35));
  m.Add(Label::kSimile, Label::kNotSimile);
  CHECK(m.fn == 3);
  CHECK(m.total() == 11);
}

TEST_CASE("stratified folds") {
  std::vector<Label> labels;
  for (int i = 0; i < 23; ++i) labels.push_back(i % 3 == 0 ? Label::kSimile : Label::kNotSimile);
  const auto folds = StratifiedFolds(labels, 5, 3);
  REQUIRE(folds.size() == labels.size());
  std::map<int, std::array<int, 2>> per_fold;
  for (std::size_t i = 0; i < labels.size(); ++i) ++per_fold[folds[i]][static_cast<int>(labels[i])];
  CHECK(per_fold.size() == 5);
  for (const auto &[fold, counts] : per_fold) {
    CHECK(counts[1] >= 1);
    CHECK(counts[1] <= 2);
    CHECK(counts[0] + counts[1] >= 4);
    CHECK(counts[0] + counts[1] <= 5);
  }
  CHECK(StratifiedFolds(labels, 5, 3) == folds);
  CHECK_THROWS_AS(StratifiedFolds(labels, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(StratifiedFolds(labels, 24, 3), InvalidArgument);
}

TEST_CASE("always-positive baseline on balanced data") {
  const auto data = FixtureExamples("labeled_separable.txt");
  const EvalMetrics m = CrossValidate(data, AlwaysPositiveLearner(), 10, 1);
  CHECK(m.tp == 20);
  CHECK(m.fp == 20);
  CHECK(m.precision() == 0.5);
  CHECK(m.recall() == 1.0);
  CHECK(m.f_measure() == 2.0 / 3.0);
}

TEST_CASE("naive bayes is perfect on the separable set") {
  const auto data = FixtureExamples("labeled_separable.txt");
  for (std::uint64_t seed : {1, 2, 3, 99}) {
    const EvalMetrics m = CrossValidate(data, NbLearner(), 5, seed);
    CHECK(m.precision() == 1.0);
    CHECK(m.recall() == 1.0);
    CHECK(m.f_measure() == 1.0);
    CHECK(m.total() == 40);
  }
  CHECK_THROWS_AS(CrossValidate(data, NbLearner(), 41, 1), InvalidArgument);
}

TEST_CASE("cross-validation matches the frozen oracle") {
  const auto data = FixtureExamples("labeled_frozen.txt");
  std::vector<int> folds;
  for (const std::string &line : SplitLines(ReadFile(SIMILE_FIXTURE_DIR "/labeled_frozen_folds.txt"))) {
    folds.push_back(std::stoi(line));
  }
  std::map<std::string, std::int64_t> expected;
  for (const std::string &line :
       SplitLines(ReadFile(SIMILE_FIXTURE_DIR "/labeled_frozen_expected.txt"))) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = SplitTabs(line);
    expected[f[0]] = std::stoll(f[1]);
  }
  const EvalMetrics m = CrossValidate(data, NbLearner(), folds);
  CHECK(m.tp == expected.at("tp"));
  CHECK(m.fp == expected.at("fp"));
  CHECK(m.fn == expected.at("fn"));
  CHECK(m.tn == expected.at("tn"));
}

TEST_CASE("metrics table layout") {
  const std::string table = FormatMetricsTable(
      {{"Naive Bayes", EvalMetrics{3, 1, 2, 4}}, {"Linear SVM", EvalMetrics{1, 0, 0, 1}}});
  const auto lines = SplitLines(table);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].find("Algorithm") == 0);
  CHECK(lines[0].find("F-Measure") != std::string::npos);
  CHECK(lines[1].find("0.750") != std::string::npos);
  CHECK(lines[1].find("0.600") != std::string::npos);
  CHECK(lines[1].find("0.667") != std::string::npos);
  CHECK(lines[2].find("1.000") != std::string::npos);
  CHECK(lines[1].size() == lines[2].size());
}

TEST_CASE("learner factory") {
  CHECK(MakeLearner("nb")->name() == "Naive Bayes");
  CHECK(MakeLearner("linear")->name() == "Linear SVM");
  CHECK(MakeLearner("always-positive")->name() == "Always positive");
  CHECK_THROWS_AS(MakeLearner("forest"), InvalidArgument);
}

}  // namespace
}  // namespace simile
