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

#ifndef SIMILE_PIPELINE_H_
#define SIMILE_PIPELINE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simile/classifier.h"
#include "simile/ingest.h"
#include "simile/matcher.h"
#include "simile/store.h"
#include "simile/tagger.h"

namespace simile {

// Funnel counters plus wall-clock per stage. Counts never grow along the
// funnel: candidates >= positives >= stored.
struct PipelineRun {
  std::string run_id;
  std::vector<std::pair<std::string, double>> stage_ms;
  std::int64_t documents = 0;
  std::int64_t sentences = 0;
  std::int64_t candidates = 0;
  std::int64_t positives = 0;
  std::int64_t stored = 0;
  std::int64_t duplicates = 0;       // positives dropped by dedup
  std::int64_t model_rejected = 0;   // negatives newly recorded as rejected

  bool FunnelHolds() const { return candidates >= positives && positives >= stored; }
  std::string Summary() const;
};

struct ExtractOptions {
  MatcherConfig matcher;
  int jobs = 1;
};

// Segments, tags and matches every document. Output is sorted by
// (doc_id, sentence_offset, span) so it does not depend on `jobs`.
std::vector<SimileCandidate> ExtractFromDocuments(const std::vector<Document> &documents,
                                                  const TaggerModel &tagger,
                                                  const ExtractOptions &options = {},
                                                  PipelineRun *run = nullptr);

// Candidate file: one TAB-separated record per line,
//   full_text doc_id sentence_offset begin-end left right
std::string FormatCandidates(const std::vector<SimileCandidate> &candidates);
std::vector<SimileCandidate> ParseCandidates(std::string_view contents);

std::string ProvenanceOf(const SourceRef &source);

struct ClassifyOptions {
  std::string actor = "pipeline";
  std::string reject_actor = "classifier";
};

// Positives go in as pending mined entries, negatives are stored and then
// rejected. Anything whose stem key already exists is skipped.
PipelineRun ClassifyIntoStore(const std::vector<SimileCandidate> &candidates,
                              const Classifier &classifier, CorpusStore &store,
                              const ClassifyOptions &options = {});

}  // namespace simile

#endif  // SIMILE_PIPELINE_H_
