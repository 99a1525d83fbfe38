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

"""Writes data/sample.jsonl, a small synthetic collection.

Hypotheses are references with words dropped or swapped at a per-system
rate. Human scores follow the same rate shifted by a per-system bias that
the surface metrics cannot see, plus annotator noise.
"""

import json
import random
import sys

SENTENCES = {
    "en": [
        "the weather will be sunny tomorrow in the north",
        "please restart the computer before installing the update",
        "the museum opens at nine and closes at six",
        "our team finished the project two weeks early",
        "the train to the airport leaves every ten minutes",
        "she bought fresh bread at the market this morning",
        "the report shows a steady increase in sales",
        "turn left at the second traffic light",
        "the new policy applies to all employees",
        "children under twelve travel for free",
    ],
    "de": [
        "morgen wird es im norden sonnig sein",
        "bitte starten sie den computer vor dem update neu",
        "das museum öffnet um neun und schließt um sechs",
        "unser team hat das projekt zwei wochen früher beendet",
        "der zug zum flughafen fährt alle zehn minuten",
        "sie kaufte heute morgen frisches brot auf dem markt",
        "der bericht zeigt einen stetigen anstieg der verkäufe",
        "biegen sie an der zweiten ampel links ab",
        "die neue regelung gilt für alle mitarbeiter",
        "kinder unter zwölf jahren reisen kostenlos",
    ],
    "zh": [
        "明天北方天气晴朗",
        "安装更新前请重新启动电脑",
        "博物馆九点开门六点关门",
        "我们的团队提前两周完成了项目",
        "去机场的火车每十分钟一班",
        "她今天早上在市场买了新鲜面包",
        "报告显示销售额稳步增长",
        "在第二个红绿灯左转",
        "新政策适用于所有员工",
        "十二岁以下儿童免费乘车",
    ],
}

CAMPAIGNS = [
    ("c-en-de", "en", "de", "news", {"sysA": 0.05, "sysB": 0.25, "sysC": 0.45}),
    ("c-de-en", "de", "en", "news", {"sysA": 0.10, "sysB": 0.15, "sysC": 0.60}),
    ("c-en-zh", "en", "zh", "chat", {"sysA": 0.05, "sysB": 0.35, "sysD": 0.30}),
    ("c-de-en-2", "de", "en", "chat", {"sysA": 0.20, "sysB": 0.05}),
    ("c-en-de-2", "en", "de", "chat", {"sysA": 0.20, "sysB": 0.24, "sysC": 0.28, "sysD": 0.22}),
    ("c-de-en-3", "de", "en", "news", {"sysB": 0.30, "sysC": 0.26, "sysD": 0.34}),
    ("c-en-zh-2", "en", "zh", "news", {"sysA": 0.15, "sysC": 0.18, "sysD": 0.12}),
]


def corrupt(text, rate, rng, chars):
    units = list(text.replace(" ", "")) if chars else text.split()
    out = []
    for u in units:
        r = rng.random()
        if r < rate / 2:
            continue
        if r < rate and out:
            out[-1], u = u, out[-1]
        out.append(u)
    return ("" if chars else " ").join(out) or units[0]


def main(path):
    rng = random.Random(20240601)
    rows = [{"kind": "manifest", "schema_version": 1, "alphas": [0.05, 0.01, 0.001],
             "orientations": {"EmbedSim": "higher-better"}}]
    for cid, src, tgt, domain, systems in CAMPAIGNS:
        camp = {"kind": "campaign", "campaign_id": cid, "source_lang": src, "target_lang": tgt, "domain": domain}
        names = sorted(systems)
        if len(names) == 3:
            camp["group"] = "independent"
            camp["pair_groups"] = [{"system_a": names[0], "system_b": names[1], "group": "incremental"}]
        rows.append(camp)
        for i, (s, r) in enumerate(zip(SENTENCES[src], SENTENCES[tgt])):
            rows.append({"kind": "segment", "campaign_id": cid, "segment_id": f"s{i}", "source": s, "reference": r})
        embed = {"kind": "metric_scores", "campaign_id": cid, "metric_name": "EmbedSim", "granularity": "segment",
                 "scores": []}
        for sys_id in names:
            rate = systems[sys_id]
            bias = rng.gauss(0, 6)
            for i, ref in enumerate(SENTENCES[tgt]):
                hyp = corrupt(ref, rate, rng, tgt == "zh")
                rows.append({"kind": "output", "campaign_id": cid, "system_id": sys_id, "segment_id": f"s{i}",
                             "hypothesis": hyp})
                quality = 100 * (1 - rate)
                embed["scores"].append({"system_id": sys_id, "segment_id": f"s{i}",
                                        "score": round((quality + bias / 2) / 100 + rng.gauss(0, 0.08), 4)})
                for ann in ("a1", "a2", "a3"):
                    score = max(0, min(100, round(quality + bias + rng.gauss(0, 15))))
                    rows.append({"kind": "judgement", "campaign_id": cid, "annotator_id": ann,
                                 "system_id": sys_id, "segment_id": f"s{i}", "score": score})
        rows.append(embed)
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sample.jsonl")
