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

#include "simile/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"
#include "simile/tokenizer.h"

namespace simile {
namespace {

class StageTimer {
 public:
  explicit StageTimer(PipelineRun *run, std::string name)
      : run_(run), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    if (!run_) return;
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
    run_->stage_ms.emplace_back(name_, d.count());
  }

 private:
  PipelineRun *run_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

bool ByProvenance(const SimileCandidate &a, const SimileCandidate &b) {
  return std::tie(a.source, a.span_begin, a.span_end) <
         std::tie(b.source, b.span_begin, b.span_end);
}

std::size_t ParseSize(const std::string &s, int line_no, const char *what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw ParseError("candidates line " + std::to_string(line_no) + ": bad " + what + " '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

std::string PipelineRun::Summary() const {
  std::ostringstream out;
  out << "run " << run_id << "\n";
  if (documents > 0 || sentences > 0) {
    out << "  documents       " << documents << "\n";
    out << "  sentences       " << sentences << "\n";
  }
  out << "  candidates      " << candidates << "\n";
  out << "  positives       " << positives << "\n";
  out << "  stored          " << stored << "\n";
  out << "  duplicates      " << duplicates << "\n";
  out << "  model-rejected  " << model_rejected << "\n";
  for (const auto &[name, ms] : stage_ms) {
    out << "  time " << name << " " << static_cast<std::int64_t>(ms + 0.5) << " ms\n";
  }
  return out.str();
}

std::string ProvenanceOf(const SourceRef &source) {
  return source.doc_id + ":" + std::to_string(source.sentence_offset);
}

std::vector<SimileCandidate> ExtractFromDocuments(const std::vector<Document> &documents,
                                                  const TaggerModel &tagger,
                                                  const ExtractOptions &options,
                                                  PipelineRun *run) {
  StageTimer timer(run, "extract");
  std::vector<std::vector<SimileCandidate>> per_doc(documents.size());
  std::vector<std::int64_t> sentences(documents.size(), 0);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < documents.size(); i = next++) {
      const Document &doc = documents[i];
      for (const Sentence &s : Segment(doc.text)) {
        ++sentences[i];
        auto found = ExtractCandidates(tagger.Tag(s.tokens), options.matcher,
                                       SourceRef{doc.doc_id, s.source_offset});
        for (auto &c : found) per_doc[i].push_back(std::move(c));
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, 64);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  std::vector<SimileCandidate> out;
  for (auto &v : per_doc) {
    for (auto &c : v) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), ByProvenance);
  if (run) {
    run->documents += static_cast<std::int64_t>(documents.size());
    for (auto n : sentences) run->sentences += n;
    run->candidates += static_cast<std::int64_t>(out.size());
  }
  return out;
}

std::string FormatCandidates(const std::vector<SimileCandidate> &candidates) {
  std::string out;
  for (const SimileCandidate &c : candidates) {
    out += EscapeField(c.full_text) + "\t" + EscapeField(c.source.doc_id) + "\t" +
           std::to_string(c.source.sentence_offset) + "\t" + std::to_string(c.span_begin) + "-" +
           std::to_string(c.span_end) + "\t" + EscapeField(c.left) + "\t" +
           EscapeField(c.right) + "\n";
  }
  return out;
}

std::vector<SimileCandidate> ParseCandidates(std::string_view contents) {
  std::vector<SimileCandidate> out;
  int line_no = 0;
  for (const std::string &line : SplitLines(contents)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitTabs(line);
    if (f.size() != 6) {
      throw ParseError("candidates line " + std::to_string(line_no) + ": expected 6 fields, got " +
                       std::to_string(f.size()));
    }
    SimileCandidate c;
    c.full_text = UnescapeField(f[0]);
    c.source.doc_id = UnescapeField(f[1]);
    c.source.sentence_offset = ParseSize(f[2], line_no, "sentence offset");
    const std::size_t dash = f[3].find('-');
    if (dash == std::string::npos) {
      throw ParseError("candidates line " + std::to_string(line_no) + ": bad token span '" + f[3] + "'");
    }
    c.span_begin = ParseSize(f[3].substr(0, dash), line_no, "token span");
    c.span_end = ParseSize(f[3].substr(dash + 1), line_no, "token span");
    if (c.span_end <= c.span_begin) {
      throw ParseError("candidates line " + std::to_string(line_no) + ": empty token span");
    }
    c.left = UnescapeField(f[4]);
    c.right = UnescapeField(f[5]);
    if (c.left.empty() || c.right.empty()) {
      throw ParseError("candidates line " + std::to_string(line_no) + ": empty left or right side");
    }
    c.connector_surface = c.connector;
    c.surface = c.full_text;
    out.push_back(std::move(c));
  }
  return out;
}

PipelineRun ClassifyIntoStore(const std::vector<SimileCandidate> &candidates,
                              const Classifier &classifier, CorpusStore &store,
                              const ClassifyOptions &options) {
  PipelineRun run;
  run.candidates = static_cast<std::int64_t>(candidates.size());
  std::vector<std::pair<const SimileCandidate *, Prediction>> positives, negatives;
  {
    StageTimer timer(&run, "classify");
    for (const SimileCandidate &c : candidates) {
      const Prediction p = classifier.Predict(Featurize(c, classifier.mask()));
      (p.label == Label::kSimile ? positives : negatives).emplace_back(&c, p);
    }
  }
  run.positives = static_cast<std::int64_t>(positives.size());
  StageTimer timer(&run, "store");
  // Positives first so a simile is never shadowed by a rejected variant.
  for (const auto *group : {&positives, &negatives}) {
    const bool positive = group == &positives;
    for (const auto &[c, p] : *group) {
      if (!store.FindExact(c->full_text).empty()) {
        if (positive) ++run.duplicates;
        continue;
      }
      NewEntry e;
      e.text = c->full_text;
      e.origin = Origin::kMined;
      e.provenance = ProvenanceOf(c->source);
      e.classifier_score = p.score;
      e.actor = options.actor;
      const EntryId id = store.Add(e).id;
      if (positive) {
        ++run.stored;
      } else {
        store.SetStatus(id, Status::kRejected, options.reject_actor);
        ++run.model_rejected;
      }
    }
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (const SimileCandidate &c : candidates) {
    for (unsigned char ch : ProvenanceOf(c.source) + c.full_text) h = (h ^ ch) * 1099511628211ULL;
  }
  run.run_id = DocIdFor(std::to_string(h) + ":" + std::to_string(store.size()));
  return run;
}

}  // namespace simile
