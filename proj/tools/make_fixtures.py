#!/usr/bin/env python3
# Copyright 2026 The Simile Miner Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the synthetic fixtures under tests/fixtures.

Output is deterministic. The frozen-fold Naive Bayes expectations are
computed here, independently of the C++ code, and written next to the data.

  python3 tools/make_fixtures.py [fixture_dir]
"""

import math
import os
import random
import shutil
import sys

# --- vocabulary -----------------------------------------------------------

SUBJECTS = [
    [("On", "Pp3msn")], [("Ona", "Pp3fsn")], [("Marko", "Npmsn")], [("Jelena", "Npfsn")],
    [("Moj", "Ps1msn"), ("brat", "Ncmsn")], [("Njegova", "Ps3fsn"), ("sestra", "Ncfsn")],
    [("Taj", "Pd-msn"), ("čovek", "Ncmsn")], [("Naš", "Ps1msn"), ("komšija", "Ncmsn")],
]

# (verb, noun) pairs that are true similes.
VERB_SIMILES = [
    ("radi", "konj"), ("spava", "top"), ("peva", "slavuj"), ("pliva", "riba"),
    ("ćuti", "riba"), ("pije", "smuk"), ("jede", "ala"), ("trči", "zec"),
    ("viče", "magarac"), ("skače", "jarac"),
]
# (adjective, noun) pairs that are true similes.
ADJ_SIMILES = [
    ("beo", "sneg"), ("bela", "sneg"), ("belo", "sneg"), ("crven", "krv"),
    ("hladan", "led"), ("jak", "bik"), ("mudar", "sova"), ("tvrd", "kamen"),
    ("brz", "munja"), ("crn", "gavran"),
]
PROFESSIONS = ["pravnik", "lekar", "učitelj", "vojnik", "kuvar", "profesor", "konobar",
               "vozač", "novinar", "inženjer", "prodavac", "sudija"]
LITERAL_VERBS = ["radi", "radi", "radi", "živi", "govori", "piše", "izgleda", "predaje"]
LITERAL_ADJS = ["poznat", "zaposlen", "angažovan", "priznat", "cenjen"]
PLACES = [("gradu", "Ncmsl"), ("selu", "Ncnsl"), ("školi", "Ncfsl"), ("bolnici", "Ncfsl"),
          ("kući", "Ncfsl"), ("fabrici", "Ncfsl")]
ADVERBS = [("danas", "Rgp"), ("često", "Rgp"), ("sada", "Rgp"), ("uvek", "Rgp")]
MODIFIERS = [("mali", "Agpmsn"), ("stari", "Agpmsn"), ("veliki", "Agpmsn"), ("dobar", "Agpmsn")]

NOUN_TAG = "Ncmsn"
VERB_TAG = "Vmr3s"
ADJ_TAG = "Agpmsn"
CONN = ("kao", "Cs")


def conn(rng):
    return rng.choices(["kao", "ko", "k'o"], weights=[8, 1, 1])[0], "Cs"


def cap(tokens):
    word, tag = tokens[0]
    return [(word[:1].upper() + word[1:], tag)] + tokens[1:]


# Each generator returns (tokens, expected candidate or None, is_simile).
def simile_verb(rng):
    v, n = rng.choice(VERB_SIMILES)
    toks = rng.choice(SUBJECTS) + [(v, VERB_TAG), conn(rng), (n, NOUN_TAG), (".", "Z")]
    return toks, f"{v} kao {n}", True


def simile_adj(rng):
    a, n = rng.choice(ADJ_SIMILES)
    toks = rng.choice(SUBJECTS) + [("je", "Var3s"), (a, ADJ_TAG), conn(rng), (n, NOUN_TAG),
                                   (".", "Z")]
    return toks, f"{a} kao {n}", True


def literal_verb(rng):
    v = rng.choice(LITERAL_VERBS)
    p = rng.choice(PROFESSIONS)
    toks = rng.choice(SUBJECTS) + [(v, VERB_TAG), ("kao", "Cs"), (p, NOUN_TAG)]
    if rng.random() < 0.4:
        place, tag = rng.choice(PLACES)
        toks += [("u", "Sl"), (place, tag)]
    return toks + [(".", "Z")], f"{v} kao {p}", False


def literal_adj(rng):
    a = rng.choice(LITERAL_ADJS)
    m, mt = rng.choice(MODIFIERS)
    p = rng.choice(PROFESSIONS)
    toks = rng.choice(SUBJECTS) + [("je", "Var3s"), (a, ADJ_TAG), ("kao", "Cs"), (m, mt),
                                   (p, NOUN_TAG), (".", "Z")]
    return toks, f"{a} kao {m} {p}", False


def plain(rng):
    v = rng.choice(LITERAL_VERBS + [v for v, _ in VERB_SIMILES])
    place, tag = rng.choice(PLACES)
    adv = rng.choice(ADVERBS)
    toks = rng.choice(SUBJECTS) + [adv, (v, VERB_TAG), ("u", "Sl"), (place, tag), (".", "Z")]
    return toks, None, False


def question(rng):
    v = rng.choice(LITERAL_VERBS)
    toks = [("Ne", "Qz"), ("znam", "Vmr1s"), (",", "Z"), ("ko", "Pi-msn"), (v, VERB_TAG),
            ("u", "Sl"), rng.choice(PLACES), ("?", "Z")]
    return toks, None, False


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def surface(tokens):
    out = ""
    for word, tag in tokens:
        if tag == "Z" and word in ".,?!":
            out += word
        else:
            out += (" " if out else "") + word
    return out


# --- tagger training corpus -----------------------------------------------

def tagger_corpus(rng, n):
    gens = [simile_verb, simile_adj, literal_verb, literal_adj, plain, question]
    blocks = []
    for _ in range(n):
        toks, _, _ = rng.choice(gens)(rng)
        toks = cap(toks)
        blocks.append("\n".join(f"{w}\t{t}" for w, t in toks))
    # Reflexive and extended examples, so the tagger sees "se" and "u".
    extra = [
        [("Smeje", VERB_TAG), ("se", "Px--y"), ("kao", "Cs"), ("hijena", "Ncfsn"), (".", "Z")],
        [("Bio", "Vmp-sm"), ("je", "Var3s"), ("smoren", ADJ_TAG), ("kao", "Cs"), ("zmaj", NOUN_TAG),
         ("u", "Sl"), ("vatrogasnoj", "Agpfsl"), ("stanici", "Ncfsl"), (".", "Z")],
    ]
    for toks in extra * 5:
        blocks.append("\n".join(f"{w}\t{t}" for w, t in toks))
    return "\n\n".join(blocks) + "\n"


# --- document tree --------------------------------------------------------

SITES = [("burek", 6), ("laguna", 4), ("rastko", 3), ("tarzanija", 2)]


def document_tree(rng, root, total_sentences):
    # Weights: majority literal comparisons, a minority of true similes.
    gens = ([simile_verb] * 2 + [simile_adj] * 1 + [literal_verb] * 6 + [literal_adj] * 2 +
            [plain] * 3 + [question] * 1)
    docs = sum(n for _, n in SITES)
    sentences = []
    for _ in range(total_sentences):
        sentences.append(rng.choice(gens)(rng))
    per_doc = [total_sentences // docs] * docs
    for i in range(total_sentences % docs):
        per_doc[i] += 1
    expected = []
    shutil.rmtree(root, ignore_errors=True)
    i = d = 0
    for site, count in SITES:
        for j in range(count):
            chunk = sentences[i:i + per_doc[d]]
            i += per_doc[d]
            d += 1
            lines = []
            for k in range(0, len(chunk), 4):
                lines.append(" ".join(surface(cap(t)) for t, _, _ in chunk[k:k + 4]))
            write(os.path.join(root, site, f"doc{j + 1:02d}.txt"), "\n\n".join(lines) + "\n")
            expected += [e for _, e, _ in chunk if e]
    return sentences, expected


# --- labeled data ---------------------------------------------------------

def labeled_train(rng):
    rows = []
    for v, n in VERB_SIMILES:
        rows += [("1", f"{v} kao {n}")] * 2
    for a, n in ADJ_SIMILES:
        rows += [("1", f"{a} kao {n}")] * 2
    for v in sorted(set(LITERAL_VERBS)):
        for p in PROFESSIONS:
            rows.append(("0", f"{v} kao {p}"))
    for a in LITERAL_ADJS:
        for p in rng.sample(PROFESSIONS, 4):
            rows.append(("0", f"{a} kao {rng.choice(MODIFIERS)[0]} {p}"))
    rng.shuffle(rows)
    return rows


def labeled_separable():
    sim_left = ["radi", "spava", "trči", "ćuti", "skače"]
    lit_left = ["živi", "govori", "piše", "predaje", "izgleda"]
    rows = []
    for i, right in enumerate(["konj", "top", "zmaj", "sneg"]):
        for j in range(5):
            rows.append(("1", f"{sim_left[(i + j) % 5]} kao {right}"))
    for i, right in enumerate(["pravnik", "lekar", "učitelj", "vojnik"]):
        for j in range(5):
            rows.append(("0", f"{lit_left[(i + j) % 5]} kao {right}"))
    return rows


# --- independent Naive Bayes oracle --------------------------------------

def load_rules(path):
    transforms, suffixes, min_len, section = [], [], 2, None
    for raw in open(path, encoding="utf-8"):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("min_stem_len="):
            min_len = int(line.split("=", 1)[1])
        elif line in ("[transforms]", "[suffixes]"):
            section = line
        elif section == "[transforms]":
            a, b = line.split("\t")
            transforms.append((a, b))
        else:
            suffixes.append(line)
    suffixes.sort(key=len, reverse=True)
    return transforms, suffixes, min_len


def make_stem(rules):
    transforms, suffixes, min_len = rules

    def stem(word):
        w = word.lower()
        if len(w) <= min_len:
            return w
        seen = set()
        for _ in range(32):
            if w in seen:
                break
            seen.add(w)
            nxt = w
            for a, b in transforms:
                if nxt.endswith(a):
                    r = nxt[:len(nxt) - len(a)] + b
                    if len(r) >= min_len:
                        nxt = r
                    break
            for s in suffixes:
                if nxt.endswith(s) and len(nxt) - len(s) >= min_len:
                    nxt = nxt[:len(nxt) - len(s)]
                    break
            if nxt == w:
                break
            w = nxt
        return w
    return stem


def features(phrase, stem):
    words = phrase.lower().split()
    k = next(i for i, w in enumerate(words) if w in ("kao", "ko", "k'o") and 0 < i < len(words) - 1)
    left, right = " ".join(words[:k]), " ".join(words[k + 1:])
    whole = f"{left} kao {right}"
    sp = lambda p: " ".join(stem(w) for w in p.split())
    return [f"whole={whole}", f"whole_stem={sp(whole)}", f"left={left}", f"left_stem={sp(left)}",
            f"right={right}", f"right_stem={sp(right)}"]


def nb_predict(train, feats):
    docs = {0: 0, 1: 0}
    totals = {0: 0, 1: 0}
    counts = {}
    for label, fv in train:
        docs[label] += 1
        for f in fv:
            counts.setdefault(f, [0, 0])[label] += 1
            totals[label] += 1
    vocab = len(counts)
    score = math.log(docs[1] / (docs[0] + docs[1])) - math.log(docs[0] / (docs[0] + docs[1]))
    for f in feats:
        if f not in counts:
            continue
        c = counts[f]
        score += math.log((c[1] + 1) / (totals[1] + vocab)) - math.log((c[0] + 1) / (totals[0] + vocab))
    assert abs(score) > 1e-9, "tie in frozen oracle; pick other examples"
    return 1 if score > 0 else 0


FROZEN = [
    ("1", "radi kao konj", 0), ("0", "radi kao pravnik", 0), ("0", "živi kao lekar", 0),
    ("1", "beo kao sneg", 1), ("0", "radi kao lekar", 1), ("1", "spava kao lekar", 1),
    ("1", "bela kao sneg", 2), ("0", "beo kao lekar", 2),
]


def frozen_oracle(stem):
    data = [(int(l), features(p, stem), f) for l, p, f in FROZEN]
    tp = fp = fn = tn = 0
    for fold in sorted({f for _, _, f in data}):
        train = [(l, fv) for l, fv, f in data if f != fold]
        for l, fv, f in data:
            if f != fold:
                continue
            p = nb_predict(train, fv)
            tp += l == 1 and p == 1
            fp += l == 0 and p == 1
            fn += l == 1 and p == 0
            tn += l == 0 and p == 0
    return tp, fp, fn, tn


# --- seed list ------------------------------------------------------------

SEED = ["Go kao pištolj", "Spor kao puž", "Vredan kao mrav", "Lukav kao lisica",
        "Radi ko konj",  # same key as a mined simile
        "Zdrav kao dren", "Tvrdoglav kao mazga", "Plašljiv kao zec u šumi",
        "Miran kao bubica", "Gladan kao vuk"]


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "tests", "fixtures")
    rules = os.path.join(here, "..", "data", "stemmer_rules.txt")
    rng = random.Random(20260101)

    write(os.path.join(out, "tagger_corpus.txt"), tagger_corpus(rng, 400))

    _, expected = document_tree(rng, os.path.join(out, "corpus"), 200)
    write(os.path.join(out, "corpus_candidates.txt"), "\n".join(sorted(expected)) + "\n")
    counts = "\n".join(f"{site}\t{n}" for site, n in SITES)
    write(os.path.join(out, "corpus_counts.txt"), counts + f"\nTotal\t{sum(n for _, n in SITES)}\n")

    write(os.path.join(out, "labeled_train.txt"),
          "".join(f"{l}\t{p}\n" for l, p in labeled_train(rng)))
    write(os.path.join(out, "labeled_separable.txt"),
          "".join(f"{l}\t{p}\n" for l, p in labeled_separable()))

    stem = make_stem(load_rules(rules))
    write(os.path.join(out, "labeled_frozen.txt"), "".join(f"{l}\t{p}\n" for l, p, _ in FROZEN))
    write(os.path.join(out, "labeled_frozen_folds.txt"), "".join(f"{f}\n" for _, _, f in FROZEN))
    tp, fp, fn, tn = frozen_oracle(stem)
    write(os.path.join(out, "labeled_frozen_expected.txt"),
          f"# Naive Bayes, alpha 1, all features, folds as listed\ntp\t{tp}\nfp\t{fp}\nfn\t{fn}\ntn\t{tn}\n")

    write(os.path.join(out, "seed.txt"), "\n".join(SEED) + "\n")


if __name__ == "__main__":
    main()
