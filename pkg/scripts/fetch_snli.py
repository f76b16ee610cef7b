#!/usr/bin/env python3
"""Download SNLI and convert it to the toolkit's corpus format.

Needs network access. Run from the repository root:

    python3 scripts/fetch_snli.py

Writes data/snli_train.jsonl, data/snli_dev.jsonl, and data/snli_test.jsonl
with one record per line: {"id", "premise", "hypothesis", "label"} where the
label codes are 0=entailment, 1=neutral, 2=contradiction. Examples whose
annotators reached no consensus (gold label "-") are kept with label -1;
toolkit commands skip them and report the count. The downloaded archive is
cached next to the outputs so reruns convert without refetching.

The test suite runs against these files when they exist and skips the
real-data variants (with a pointer to this script) when they do not.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.request
import zipfile
from pathlib import Path

SNLI_URL = "https://nlp.stanford.edu/projects/snli/snli_1.0.zip"
SPLITS = {
    "train": "snli_1.0/snli_1.0_train.jsonl",
    "dev": "snli_1.0/snli_1.0_dev.jsonl",
    "test": "snli_1.0/snli_1.0_test.jsonl",
}
LABEL_CODES = {"entailment": 0, "neutral": 1, "contradiction": 2, "-": -1}


def download(url: str, target: Path) -> Path:
    if target.exists():
        print(f"using cached {target}")
        return target
    print(f"downloading {url} -> {target}")
    target.parent.mkdir(parents=True, exist_ok=True)
    with urllib.request.urlopen(url) as response, target.open("wb") as out:
        while chunk := response.read(1 << 20):
            out.write(chunk)
    return target


def convert_split(archive: zipfile.ZipFile, member: str, out_path: Path) -> tuple[int, int]:
    total = unlabeled = 0
    with archive.open(member) as raw, out_path.open("w", encoding="utf-8", newline="\n") as out:
        for line in raw:
            line = line.strip()
            if not line:
                continue
            source = json.loads(line)
            label = LABEL_CODES[source["gold_label"]]
            record = {
                "id": source["pairID"],
                "premise": source["sentence1"],
                "hypothesis": source["sentence2"],
                "label": label,
            }
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
            total += 1
            unlabeled += label == -1
    return total, unlabeled


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--data-dir",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data",
        help="where the converted corpora go (default: <repo>/data)",
    )
    parser.add_argument(
        "--splits",
        default="train,dev,test",
        help="comma-separated subset of train,dev,test (default: all three)",
    )
    parser.add_argument("--url", default=SNLI_URL, help="archive location override")
    args = parser.parse_args(argv)

    wanted = [s.strip() for s in args.splits.split(",") if s.strip()]
    unknown = [s for s in wanted if s not in SPLITS]
    if unknown:
        parser.error(f"unknown split(s) {unknown}; choose from {sorted(SPLITS)}")

    archive_path = download(args.url, args.data_dir / "snli_1.0.zip")
    with zipfile.ZipFile(archive_path) as archive:
        for split in wanted:
            out_path = args.data_dir / f"snli_{split}.jsonl"
            total, unlabeled = convert_split(archive, SPLITS[split], out_path)
            print(f"{out_path}: {total} records ({unlabeled} without gold consensus)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
