"""How often does a single-entry perturbation still satisfy every axiom?

Uses the same generator as acceptance criterion 1 over several seeds and
reports the rate of perturbations that remain valid structures, each
confirmed by the dense oracle.
"""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import _oracle_valid, mutants  # noqa: E402


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--count", type=int, default=100)
    args = ap.parse_args(argv)
    total = valid = 0
    where = Counter()
    for seed in range(args.seeds):
        for obj, name, idx, step, m in mutants(seed=seed, count=args.count):
            total += 1
            if not m.violations():
                assert _oracle_valid(m), "package and oracle disagree"
                valid += 1
                where[f"{obj.name}.{name}"] += 1
    print(f"{valid}/{total} perturbations remain valid ({100 * valid / total:.1f}%)")
    for k, v in where.most_common():
        print(f"  {k}: {v}")


if __name__ == "__main__":
    main()
