"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest (``pytest tests/test_acceptance.py -s``) or directly
(``python3 tests/test_acceptance.py``).  Every check is exact.
"""

import io
import random
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import oracles  # noqa: E402
from symcoalg.brauer import anti_isomorphism_defects, equivalence_FG  # noqa: E402
from symcoalg.cli import main  # noqa: E402
from symcoalg.coalg import (Coalgebra, direct_sum, is_subcoalgebra, left_coideal_generated,  # noqa: E402
                            right_coideal_generated, subcoalgebra_generated, tensor)
from symcoalg.coext import embedding_theorem_check  # noqa: E402
from symcoalg.corpus import (coalgebra_corpus, comodule_corpus, full_corpus,  # noqa: E402
                             hopf_corpus, quantum_exterior_dual, sweedler)
from symcoalg.errors import UncertifiedSearch  # noqa: E402
from symcoalg.exactla import Matrix, random_int_vector, unit_vec  # noqa: E402
from symcoalg.frob import (balanced_form_space, block_diagonal, certificate,  # noqa: E402
                           check_witness, find_nonsingular, is_cofrobenius, is_symmetric,
                           symmetric_bimodule_iso, symmetric_search, symmetric_subspace,
                           trace_map)
from symcoalg.hopf import (HopfAlgebra, a_infinity, form_from_integral, h_infinity,  # noqa: E402
                           hopf_closure_report, hopf_symmetric_coalgebra, integrals,
                           s2_inner_dual, s2_inner_in_H, symmetric_as_algebra, wedge)
from symcoalg.nakayama import (check_nakayama, compare_forms, find_unit, inner_candidates,  # noqa: E402
                               is_inner, nakayama)
from symcoalg.ring import (bimodule_law_check, build_ring, ideal_coideal_check,  # noqa: E402
                           products_agree)

DATA = Path(__file__).resolve().parent.parent / "data"
SEED = 0
MUTATIONS = 100
EXTRA_FORMS = 2

_cache = {}


def corpus():
    if "corpus" not in _cache:
        _cache["corpus"] = full_corpus()
    return _cache["corpus"]


def certificates(c):
    """The search certificate plus a few more nondegenerate balanced forms."""
    key = ("certs", c.name)
    if key not in _cache:
        out = []
        base = is_cofrobenius(c, seed=SEED)
        if base is not None:
            out.append(base)
            space = [f.gram for f in balanced_form_space(c)]
            for s in range(1, EXTRA_FORMS + 1):
                res = find_nonsingular(space, seed=SEED + s, method="random")
                if res.found:
                    out.append(certificate(c, res.matrix))
        _cache[key] = out
    return _cache[key]


def symmetric_cert(c):
    key = ("sym", c.name)
    if key not in _cache:
        _cache[key] = is_symmetric(c, seed=SEED)
    return _cache[key]


# -- 1. axiom suite -----------------------------------------------------------

def _tables(obj):
    """Mutable copies of every structure table, keyed by name."""
    if isinstance(obj, HopfAlgebra):
        return {"delta": obj.coalgebra.delta, "counit": obj.coalgebra.counit,
                "mult": obj.algebra.mult, "unit": obj.algebra.unit,
                "antipode": obj.antipode.tolist()}
    return {"delta": obj.delta, "counit": obj.counit}


def _entries(t, prefix=()):
    if isinstance(t, (list, tuple)) and t and isinstance(t[0], (list, tuple)):
        for i, sub in enumerate(t):
            yield from _entries(sub, prefix + (i,))
    else:
        for i in range(len(t)):
            yield prefix + (i,)


def _deep_list(t):
    return [_deep_list(x) for x in t] if isinstance(t, (list, tuple)) else t


def _rebuild(obj, tables):
    if isinstance(obj, HopfAlgebra):
        return HopfAlgebra.from_tables(tables["delta"], tables["counit"], tables["mult"],
                                       tables["unit"], Matrix(tables["antipode"]),
                                       obj.coalgebra.basis_names, obj.name)
    return Coalgebra(tables["delta"], tables["counit"], obj.basis_names, obj.name)


def mutants(seed=SEED, count=MUTATIONS):
    """Single-entry perturbations: object, then table, then entry, uniformly."""
    rng = random.Random(seed)
    pool = coalgebra_corpus() + hopf_corpus()
    for _ in range(count):
        obj = rng.choice(pool)
        tables = {k: _deep_list(v) for k, v in _tables(obj).items()}
        name = rng.choice(sorted(tables))
        idx = rng.choice(list(_entries(tables[name])))
        step = rng.choice([-2, -1, 1, 2])
        cell = tables[name]
        for i in idx[:-1]:
            cell = cell[i]
        cell[idx[-1]] += step
        yield obj, name, idx, step, _rebuild(obj, tables)


def _oracle_valid(m):
    if isinstance(m, HopfAlgebra):
        from test_hopf import oracle_violations
        return oracles.coalgebra_ok(*oracles.dense(m.coalgebra)) and not oracle_violations(m)
    return oracles.coalgebra_ok(*oracles.dense(m))


def criterion_1():
    bad_corpus = [x.name for x in coalgebra_corpus() + hopf_corpus() if x.violations()]
    survivors = []
    for obj, name, idx, step, m in mutants():
        if not m.violations():
            confirmed = _oracle_valid(m)
            survivors.append(f"{obj.name}.{name}{list(idx)}{step:+d}"
                             f" (oracle: {'valid' if confirmed else 'INVALID'})")
    ok = not bad_corpus and not survivors
    detail = (f"corpus valid: {not bad_corpus}; {MUTATIONS - len(survivors)}/{MUTATIONS} "
              f"mutations rejected")
    if survivors:
        detail += "; still valid: " + ", ".join(survivors)
    return ok, detail


# -- 2. the two products --------------------------------------------------------

def criterion_2():
    count = 0
    for c in corpus():
        delta, _ = oracles.dense(c)
        for cert in certificates(c):
            if products_agree(cert):
                return False, f"products differ on {c.name}"
            r = build_ring(cert)
            gram = cert.gram.tolist()
            for x in oracles.basis(c.dim):
                ax = tuple(oracles.form(gram, e, x) for e in oracles.basis(c.dim))
                for y in oracles.basis(c.dim):
                    if r.multiply(x, y) != oracles.hit_left(delta, ax, y):
                        return False, f"oracle product differs on {c.name}"
            count += 1
    return True, f"{count} certificates, all basis pairs agree"


# -- 3. bimodule law and ideals ---------------------------------------------------

def criterion_3():
    rng = random.Random(SEED)
    checked = 0
    for c in corpus():
        for cert in certificates(c):
            rep = bimodule_law_check(build_ring(cert))
            if not rep.ok:
                return False, f"{c.name}: {rep.details[:2]}"
        certs = certificates(c)
        if not certs:
            continue
        r = build_ring(certs[0])
        for t in range(20):
            x = random_int_vector(rng, c.dim, 2)
            s = (right_coideal_generated if t % 2 == 0 else left_coideal_generated)(c, [x])
            rep = ideal_coideal_check(r, s)
            if not rep.ok:
                return False, f"{c.name}: ideal/coideal mismatch {rep.details}"
            want = "left ideal" if t % 2 == 0 else "right ideal"
            if not rep.facts[want]:
                return False, f"{c.name}: generated coideal is not a {want}"
            checked += 1
    return True, f"bimodule law on all certificates; {checked} generated coideals"


# -- 4. symmetric characterizations ---------------------------------------------

def criterion_4():
    n_sym = 0
    for c in corpus():
        form = symmetric_cert(c)
        iso = symmetric_bimodule_iso(c, seed=SEED)
        if (form is None) != (iso is None):
            return False, f"{c.name}: bimodule map and form disagree"
        if form is not None:
            tm = trace_map(form, seed=SEED)
            if not tm.report.ok:
                return False, f"{c.name}: trace map {tm.report.details}"
            n_sym += 1
    notes = []
    for q in (2, -1):
        lam = quantum_exterior_dual(q)
        if is_cofrobenius(lam, seed=SEED) is None:
            return False, f"{lam.name} not co-Frobenius"
        cert, res = symmetric_search(lam, seed=SEED)
        if cert is not None or res.method != "grid":
            return False, f"{lam.name}: symmetric absence not certified by grid ({res.method})"
        notes.append(lam.name)
    return True, (f"{n_sym} symmetric instances agree on all three; "
                  f"{', '.join(notes)} co-Frobenius, not symmetric (grid certified)")


# -- 5. direct sums and tensor products ------------------------------------------

def criterion_5():
    sym = [c for c in corpus() if c.dim <= 4 and symmetric_cert(c) is not None]
    pairs = 0
    for a in sym:
        for b in sym:
            ga, gb = symmetric_cert(a).gram, symmetric_cert(b).gram
            check_witness(direct_sum(a, b), block_diagonal(ga, gb))
            if is_symmetric(direct_sum(a, b), seed=SEED) is None:
                return False, f"{a.name}+{b.name} not found symmetric"
            if a.dim * b.dim <= 9:
                check_witness(tensor(a, b), ga.kron(gb))
                if is_symmetric(tensor(a, b), seed=SEED) is None:
                    return False, f"{a.name}(x){b.name} not found symmetric"
            pairs += 1
    return True, f"{pairs} ordered pairs: block and Kronecker witnesses exact"


# -- 6. embedding theorem ---------------------------------------------------------

def criterion_6():
    dims = []
    for c in corpus():
        if c.dim > 12:
            continue
        res = embedding_theorem_check(c, search=True, seed=SEED)
        if not res.report.ok or not res.search_symmetric:
            return False, f"{c.name}: {res.report.details[:2]}"
        dims.append(res.d.dim)
    return True, f"{len(dims)} coextensions (max dim {max(dims)}) symmetric by witness and search"


# -- 7. F and G --------------------------------------------------------------------

def criterion_7():
    count = 0
    for c in corpus():
        for m in comodule_corpus(c, seed=SEED):
            rep = equivalence_FG(m, seed=SEED)
            if not rep.ok:
                return False, f"{c.name}/{m.name}: {rep.details[:2]}"
            count += 1
        if anti_isomorphism_defects(c):
            return False, f"{c.name}: anti-isomorphism fails"
    return True, f"{count} comodules round-trip; anti-isomorphism exact on all coalgebras"


# -- 8. Nakayama -------------------------------------------------------------------

def criterion_8():
    compared = 0
    for c in corpus():
        certs = certificates(c)
        for cert in certs:
            rep = check_nakayama(nakayama(cert))
            if not rep.ok:
                return False, f"{c.name}: {rep.details[:2]}"
        if len(balanced_form_space(c)) >= 2 and len(certs) >= 2:
            _, rep = compare_forms(certs[0], certs[1])
            if not rep.ok:
                return False, f"{c.name}: conjugation law {rep.details[:2]}"
            compared += 1
        if certs:
            inner = is_inner(nakayama(certs[0]), seed=SEED) is not None
            if inner != (symmetric_cert(c) is not None):
                return False, f"{c.name}: inner and symmetric disagree"
    return True, f"relation and automorphism exact; {compared} two-form comparisons; inner iff symmetric"


# -- 9. Hopf anchor ----------------------------------------------------------------

def criterion_9():
    anchored = 0
    for h in hopf_corpus():
        data = integrals(h)
        if data.unimodular_on:
            t = data.left_on_H.vectors[0]
            if nakayama(form_from_integral(h, t)).sigma != h.s2:
                return False, f"{h.name}: sigma != S^2"
            anchored += 1
        v = hopf_symmetric_coalgebra(h, seed=SEED)
        if v.symmetric:
            g = v.form
            if not (g == g.T and check_witness(h.coalgebra, g)):
                return False, f"{h.name}: emitted form fails"
    return True, f"sigma = S^2 on {anchored} unimodular instances; emitted forms verified"


# -- 10. Sweedler -------------------------------------------------------------------

def criterion_10():
    h = sweedler()
    delta, eps = oracles.dense(h.coalgebra)
    mult = [[list(r) for r in s] for s in h.algebra.mult]
    on_l = oracles.integrals_on(delta, list(h.unit), "left")
    on_r = oracles.integrals_on(delta, list(h.unit), "right")
    in_l = oracles.integrals_in(mult, eps, "left")
    in_r = oracles.integrals_in(mult, eps, "right")
    oracle_unimod_on = oracles.span_equal(on_l, on_r, 4)
    oracle_unimod_in = oracles.span_equal(in_l, in_r, 4)
    data = integrals(h)
    if data.unimodular_on != oracle_unimod_on or data.unimodular_in != oracle_unimod_in:
        return False, "integral lines disagree with the oracle"
    u = s2_inner_dual(h, seed=SEED)
    g = s2_inner_in_H(h, seed=SEED)
    cv = hopf_symmetric_coalgebra(h, seed=SEED)
    av = symmetric_as_algebra(h, seed=SEED)
    ok = (not data.unimodular_on and u is not None and g is not None and not cv.symmetric
          and av.symmetric == (data.unimodular_in and g is not None))
    return ok, (f"unimodular(on H)={data.unimodular_on}, S^2 inner via H*={u is not None}, "
                f"S^2 inner in H={g is not None}, symmetric-as-coalgebra={cv.symmetric}, "
                f"symmetric-as-algebra={av.symmetric}")


# -- 11. wedge ------------------------------------------------------------------------

def criterion_11():
    runs = 0
    for c in corpus():
        subs = {subcoalgebra_generated(c, [unit_vec(c.dim, i)]) for i in range(c.dim)}
        for a in sorted(subs, key=lambda s: (s.dim, s.vectors)):
            tr = a_infinity(c, a)
            if tr.steps > c.dim or wedge(c, tr.result, a) != tr.result:
                return False, f"{c.name}: not stable"
            if not is_subcoalgebra(c, tr.result):
                return False, f"{c.name}: A_inf not a subcoalgebra"
            runs += 1
    for h in hopf_corpus():
        tr = h_infinity(h)
        rep = hopf_closure_report(h, tr.result)
        if not rep.ok or not any(x for x in (sum(a * b for a, b in zip(h.counit, v))
                                             for v in tr.result.vectors)):
            return False, f"{h.name}: H_inf {rep.details}"
    return True, f"{runs} A_inf computations stable; H_inf closed on all Hopf instances"


# -- 12. determinism ---------------------------------------------------------------------

COMMANDS = [("is-cofrobenius", "Lambda_2_dual.json"), ("is-symmetric", "Mc_2.json"),
            ("is-symmetric", "Lambda_m1_dual.json"), ("nakayama", "H4.json"),
            ("hopf", "H4.json"), ("hopf", "k_S3.json"), ("info", "kS3.json"),
            ("coextend", "D_2.json")]


def _cli(argv):
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


def criterion_12():
    for cmd, f in COMMANDS:
        argv = [cmd, str(DATA / f), "--seed", "3"]
        first = _cli(argv)
        if _cli(argv) != first:
            return False, f"{cmd} {f} differs within a process"
        res = subprocess.run([sys.executable, "-m", "symcoalg.cli"] + argv,
                             capture_output=True, text=True, env={"PYTHONHASHSEED": "random",
                                                                   "PATH": ""})
        if res.stdout != first:
            return False, f"{cmd} {f} differs across processes"
    compared = skipped = 0
    for c in corpus():
        space = [f.gram for f in balanced_form_space(c)]
        for symmetric_only in (False, True):
            grams = symmetric_subspace(space) if symmetric_only else space
            if not grams:
                continue
            rnd = find_nonsingular(grams, seed=SEED, method="random")
            try:
                grid = find_nonsingular(grams, method="grid")
            except UncertifiedSearch:
                skipped += 1
                continue
            if rnd.found != grid.found:
                return False, f"{c.name}: random and grid disagree"
            compared += 1
        cert = is_cofrobenius(c, seed=SEED)
        if cert is not None:
            space_u = inner_candidates(c, nakayama(cert).sigma)
            a, _ = find_unit(c, space_u, seed=SEED, method="random")
            try:
                b, _ = find_unit(c, space_u, method="grid")
            except UncertifiedSearch:
                skipped += 1
                continue
            if (a is None) != (b is None):
                return False, f"{c.name}: inner search disagrees"
            compared += 1
    return True, (f"CLI output byte-identical; grid agrees with random on {compared} searches"
                  f" ({skipped} above the grid cap)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def report(i, fn):
    try:
        ok, detail = fn()
    except Exception as e:  # an exception is a failed criterion, shown with its cause
        ok, detail = False, f"{type(e).__name__}: {e}"
    print(f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail}", flush=True)
    return ok, detail


@pytest.mark.parametrize("i", range(1, len(CRITERIA) + 1))
def test_criterion(i):
    ok, detail = report(i, CRITERIA[i - 1])
    assert ok, detail


if __name__ == "__main__":
    results = [report(i, fn)[0] for i, fn in enumerate(CRITERIA, 1)]
    sys.exit(0 if all(results) else 1)
