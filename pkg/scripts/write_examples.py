"""Write exchange documents for the built-in corpus into data/."""

import argparse
from pathlib import Path

from symcoalg.coalg import right_coideal_generated, comodule_from_coideal, regular_comodule
from symcoalg.corpus import coalgebra_corpus, hopf_corpus
from symcoalg.exactla import Subspace, unit_vec
from symcoalg.exchange import emit


def slug(name):
    name = name.replace("*", "_dual").replace("-", "m").replace("^", "_")
    keep = "".join(ch if ch.isalnum() else "_" for ch in name)
    return keep.strip("_") or "c"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data")
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for c in coalgebra_corpus():
        written.append(out / f"{slug(c.name)}.json")
        written[-1].write_text(emit(c))
    for h in hopf_corpus():
        written.append(out / f"{slug(h.name)}.json")
        written[-1].write_text(emit(h))
        unit = Subspace(h.dim, [h.unit])
        written.append(out / f"{slug(h.name)}_unit.json")
        written[-1].write_text(emit(unit, parent_name=h.name))
    from symcoalg.coalg import matrix_coalgebra
    mc = matrix_coalgebra(2)
    reg = regular_comodule(mc)
    written.append(out / "Mc_2_regular.json")
    written[-1].write_text(emit(reg, parent_name=mc.name))
    row, _ = comodule_from_coideal(mc, right_coideal_generated(mc, [unit_vec(4, 0)]))
    written.append(out / "Mc_2_row.json")
    written[-1].write_text(emit(row, parent_name=mc.name))
    for p in written:
        print(p)


if __name__ == "__main__":
    main()
