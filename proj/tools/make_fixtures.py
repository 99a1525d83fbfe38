#!/usr/bin/env python3
# Copyright 2026 The mtmeta Authors
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

"""Writes tests/data/sacrebleu_fixtures.json from sacrebleu.

Requires sacrebleu >= 2.0. BLEU uses no smoothing; `effective_order`
switches between skipping and zeroing orders with no hypothesis n-grams.
ChrF uses character order 6, beta 2 and no epsilon smoothing.
"""

import json
import random
import sys

from sacrebleu.metrics import BLEU, CHRF
from sacrebleu.tokenizers.tokenizer_13a import Tokenizer13a

WORDS = ["the", "cat", "sat", "on", "mat", "a", "dog", "ran", "home", "It's", "U.S.", "3.14", "1,000", "e-mail",
         "naïve", "Zürich", "don't", "(see", "below)", "\"quoted\"", "end.", "what?", "yes!", "&amp;", "&lt;tag&gt;",
         "x-y-z", "$5", "100%", "über", "café", "-", "--", "...", "a/b", "C++", "2024-01-01", "straße", "Ωmega"]

TOKENIZER_CASES = [
    "Hello, world!",
    "The U.S.A. costs $3.50 (approx.) per item.",
    "Numbers: 1,000,000 and 3.14159 -- and 2-3 items.",
    "Quotes \"inside\" and 'single' ones.",
    "HTML &amp; entities &lt;b&gt; &quot;x&quot;",
    "<skipped> tag here",
    "line\nbreak-\nhyphen",
    "Tabs\tand   multiple    spaces",
    "Ünïcödé wörds, ñ and façade.",
    "end with period.",
    "e.g. i.e. etc.",
    "Mr. Smith's dog's bone",
    "",
    "   ",
    "a-b-c d--e",
    "@user #tag http://example.com/path?x=1&y=2",
]


def sentence(rng):
    return " ".join(rng.choice(WORDS) for _ in range(rng.randint(0, 12)))


def perturb(rng, s):
    toks = s.split()
    out = [t for t in toks if rng.random() > 0.25]
    if out and rng.random() < 0.5:
        out.insert(rng.randrange(len(out) + 1), rng.choice(WORDS))
    return " ".join(out)


def main(path):
    rng = random.Random(12345)
    tok = Tokenizer13a()
    extra = [sentence(rng) for _ in range(40)]
    tokenizer = [{"input": s, "tokens": tok(s).split()} for s in TOKENIZER_CASES + extra]

    corpora = []
    for _ in range(60):
        n = rng.randint(1, 6)
        refs = [sentence(rng) for _ in range(n)]
        hyps = [perturb(rng, r) if rng.random() < 0.8 else sentence(rng) for r in refs]
        corpora.append({
            "hyps": hyps,
            "refs": refs,
            "bleu": BLEU(tokenize="13a", smooth_method="none", effective_order=True).corpus_score(hyps, [refs]).score,
            "bleu_strict": BLEU(tokenize="13a", smooth_method="none").corpus_score(hyps, [refs]).score,
            "chrf": CHRF(char_order=6, word_order=0, beta=2, eps_smoothing=False).corpus_score(hyps, [refs]).score,
        })
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"tokenizer_13a": tokenizer, "corpora": corpora}, f, ensure_ascii=False, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/sacrebleu_fixtures.json")
