"""Tabulate the main verdicts for every built-in instance.

Prints one row per coalgebra (balanced-form dimension, co-Frobenius,
symmetric, inner Nakayama map, coextension size) and one row per Hopf
algebra (unimodularity in both senses, S^2 inner in both senses, the two
symmetry verdicts, H_inf).  ``--csv`` writes the same tables to files.
"""

import argparse
import csv
import time
from pathlib import Path

from symcoalg.coext import embedding_theorem_check
from symcoalg.corpus import full_corpus, hopf_corpus
from symcoalg.frob import balanced_form_space, is_cofrobenius, is_symmetric
from symcoalg.hopf import (h_infinity, hopf_symmetric_coalgebra, integrals, s2_inner_in_H,
                           symmetric_as_algebra)
from symcoalg.nakayama import is_inner, nakayama


def coalgebra_rows(seed):
    for c in full_corpus():
        t0 = time.perf_counter()
        cert = is_cofrobenius(c, seed=seed)
        sym = is_symmetric(c, seed=seed)
        inner = None if cert is None else is_inner(nakayama(cert), seed=seed) is not None
        d = embedding_theorem_check(c, search=False)
        yield {
            "name": c.name, "dim": c.dim,
            "balanced": len(balanced_form_space(c, seed=seed)),
            "cofrobenius": cert is not None, "symmetric": sym is not None,
            "inner": inner, "D dim": d.d.dim, "D ok": d.report.ok,
            "seconds": round(time.perf_counter() - t0, 3),
        }


def hopf_rows(seed):
    for h in hopf_corpus():
        data = integrals(h)
        cv = hopf_symmetric_coalgebra(h, seed=seed)
        av = symmetric_as_algebra(h, seed=seed)
        hinf = h_infinity(h)
        yield {
            "name": h.name, "dim": h.dim,
            "unimodular on": data.unimodular_on, "unimodular in": data.unimodular_in,
            "S2 inner via dual": cv.s2_inner_dual is not None,
            "S2 inner in H": s2_inner_in_H(h, seed=seed) is not None,
            "sym coalgebra": cv.symmetric, "sym algebra": av.symmetric,
            "H_inf dim": hinf.result.dim, "H_inf steps": hinf.steps,
        }


def show(rows):
    rows = list(rows)
    if not rows:
        return rows
    keys = list(rows[0])
    width = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    print("  ".join(k.ljust(width[k]) for k in keys))
    for r in rows:
        print("  ".join(str(r[k]).ljust(width[k]) for k in keys))
    print()
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", help="directory for coalgebras.csv and hopf.csv")
    args = ap.parse_args(argv)
    tables = {"coalgebras": show(coalgebra_rows(args.seed)), "hopf": show(hopf_rows(args.seed))}
    if args.csv:
        out = Path(args.csv)
        out.mkdir(parents=True, exist_ok=True)
        for name, rows in tables.items():
            with open(out / f"{name}.csv", "w", newline="") as fh:
                w = csv.DictWriter(fh, fieldnames=list(rows[0]))
                w.writeheader()
                w.writerows(rows)


if __name__ == "__main__":
    main()
