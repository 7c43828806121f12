#!/usr/bin/env python3
"""Score tests/fixtures/easse_sample.tsv with EASSE and write the expected values.

Run once on a machine where EASSE is installed (pip install easse, or from
https://github.com/feralvam/easse). The output file is read by the acceptance
binary, which compares it with the C++ SARI on the same records.

    python3 tools/easse_crosscheck.py \
        tests/fixtures/easse_sample.tsv tests/fixtures/easse_expected.tsv
"""

import argparse
import sys


def read_records(path):
    sources, systems, refs = [], [], []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) < 3:
                sys.exit(f"{path}: expected source, system and references, got {len(fields)} fields")
            sources.append(fields[0])
            systems.append(fields[1])
            refs.append(fields[2:])
    widths = {len(r) for r in refs}
    if len(widths) != 1:
        sys.exit("EASSE needs the same number of references on every record")
    # EASSE wants one list per reference slot, each covering the whole corpus.
    ref_sets = [[r[k] for r in refs] for k in range(widths.pop())]
    return sources, systems, ref_sets


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("sample")
    parser.add_argument("output")
    args = parser.parse_args()

    try:
        from easse.sari import corpus_sari, get_corpus_sari_operation_scores
    except ImportError:
        sys.exit("EASSE is not installed")

    sources, systems, ref_sets = read_records(args.sample)
    # The fixture is already tokenized and lower-cased.
    opts = dict(lowercase=False, tokenizer="none")
    score = corpus_sari(sources, systems, ref_sets, **opts)
    add, keep, delete = get_corpus_sari_operation_scores(sources, systems, ref_sets, **opts)

    with open(args.output, "w", encoding="utf-8") as f:
        f.write("sari\tadd\tkeep\tdelete\n")
        f.write(f"{score:.6f}\t{add:.6f}\t{keep:.6f}\t{delete:.6f}\n")
    print(f"sari {score:.4f}  add {add:.4f}  keep {keep:.4f}  delete {delete:.4f}")


if __name__ == "__main__":
    main()
