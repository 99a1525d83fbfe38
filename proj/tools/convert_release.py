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

"""Converts a tab-separated judgement release into the mtmeta JSONL schema.

The released format is not fixed here; this stub reads the layout below and
is meant to be adapted once the release is at hand.

  campaigns.tsv   campaign_id  source_lang  target_lang  domain  group
  judgements.tsv  campaign_id  system_id  segment_id  annotator_id  score
  scores.tsv      metric  campaign_id  system_id  score  [orientation]

Segments are synthesised from the judged segment ids when no segments.tsv
(campaign_id  segment_id  source  [reference]) is present.
"""

import argparse
import csv
import json
import os
import sys
from collections import defaultdict


def read_tsv(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f, delimiter="\t"))


def convert(release_dir, out):
    campaigns = read_tsv(os.path.join(release_dir, "campaigns.tsv"))
    judgements = read_tsv(os.path.join(release_dir, "judgements.tsv"))
    scores_path = os.path.join(release_dir, "scores.tsv")
    scores = read_tsv(scores_path) if os.path.exists(scores_path) else []
    segments_path = os.path.join(release_dir, "segments.tsv")
    segments = read_tsv(segments_path) if os.path.exists(segments_path) else None

    orientations = {}
    for row in scores:
        if row.get("orientation"):
            orientations[row["metric"]] = row["orientation"]
    rows = [{"kind": "manifest", "schema_version": 1, "alphas": [0.05, 0.01, 0.001],
             "orientations": orientations}]

    judged = defaultdict(list)
    for j in judgements:
        judged[j["campaign_id"]].append(j)
    by_metric = defaultdict(list)
    for s in scores:
        by_metric[(s["campaign_id"], s["metric"])].append(s)

    for c in campaigns:
        cid = c["campaign_id"]
        rec = {"kind": "campaign", "campaign_id": cid, "source_lang": c["source_lang"],
               "target_lang": c["target_lang"]}
        if c.get("domain"):
            rec["domain"] = c["domain"]
        if c.get("group"):
            rec["group"] = c["group"]
        rows.append(rec)
        if segments is not None:
            for s in segments:
                if s["campaign_id"] == cid:
                    seg = {"kind": "segment", "campaign_id": cid, "segment_id": s["segment_id"],
                           "source": s["source"]}
                    if s.get("reference"):
                        seg["reference"] = s["reference"]
                    rows.append(seg)
        else:
            for seg_id in sorted({j["segment_id"] for j in judged[cid]}):
                rows.append({"kind": "segment", "campaign_id": cid, "segment_id": seg_id,
                             "source": f"segment {seg_id}"})
        for j in judged[cid]:
            rows.append({"kind": "judgement", "campaign_id": cid, "annotator_id": j["annotator_id"],
                         "system_id": j["system_id"], "segment_id": j["segment_id"],
                         "score": float(j["score"])})
        for (mcid, metric), entries in sorted(by_metric.items()):
            if mcid != cid:
                continue
            rows.append({"kind": "metric_scores", "campaign_id": cid, "metric_name": metric,
                         "granularity": "system",
                         "scores": [{"system_id": e["system_id"], "score": float(e["score"])} for e in entries]})

    for row in rows:
        out.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("release_dir")
    ap.add_argument("-o", "--output", help="output JSONL (default: stdout)")
    args = ap.parse_args()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            convert(args.release_dir, f)
    else:
        convert(args.release_dir, sys.stdout)


if __name__ == "__main__":
    main()
