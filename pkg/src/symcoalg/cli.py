"""Command-line driver.

Output is a stable ``key: value`` report with scalars as "p/q"; verdict
lines come last.  Exit codes: 0 ran to a verdict, 2 invalid input,
3 an identity guaranteed by the theory failed.
"""

import argparse
import json
import sys

from . import __version__
from .coalg import Coalgebra, Comodule, cocommutative_elements, grouplikes
from .errors import (DimensionMismatch, InvalidStructure, ParseError, TheoremViolation,
                     UncertifiedSearch)
from .exactla import Subspace, format_scalar

EXIT_OK, EXIT_INPUT, EXIT_THEOREM = 0, 2, 3


def fmt_vec(v):
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def fmt_mat(m):
    return "[" + "; ".join(" ".join(format_scalar(x) for x in row) for row in m) + "]"


def yn(b):
    return "yes" if b else "no"


class Out:
    def __init__(self, stream):
        self.stream = stream

    def __call__(self, key, value=None):
        if value is None:
            print(key, file=self.stream)
        else:
            print(f"{key}: {value}", file=self.stream)


def _coalgebra(obj):
    from .hopf import HopfAlgebra
    return obj.coalgebra if isinstance(obj, HopfAlgebra) else obj


def _load(path, validate=True, known=None):
    from .exchange import load
    return load(path, known=known, validate=validate)


def _known(obj):
    c = _coalgebra(obj)
    return {c.name: c, getattr(obj, "name", c.name): c}


# -- commands ---------------------------------------------------------------

def cmd_validate(args, out):
    from .hopf import HopfAlgebra
    obj = _load(args.file, validate=False)
    if isinstance(obj, HopfAlgebra):
        problems = obj.violations()
    elif isinstance(obj, Coalgebra):
        problems = [str(v) for v in obj.violations()]
    else:
        out("kind", type(obj).__name__)
        out("valid", "yes")
        return EXIT_OK
    out("name", obj.name)
    out("dim", obj.dim)
    for p in problems:
        out("violation", p)
    out("valid", yn(not problems))
    return EXIT_OK if not problems else EXIT_INPUT


def cmd_info(args, out):
    obj = _load(args.file)
    c = _coalgebra(obj)
    out("name", c.name)
    out("dim", c.dim)
    out("basis", " ".join(c.basis_names))
    coc = cocommutative_elements(c)
    out("cocommutative dim", coc.dim)
    for v in coc.vectors:
        out("cocommutative", fmt_vec(v))
    gs = grouplikes(c, seed=args.seed)
    out("grouplike scan", "best effort")
    for g in gs:
        out("grouplike", fmt_vec(g))
    out("grouplikes found", len(gs))
    return EXIT_OK


def cmd_cofrobenius(args, out):
    from .frob import balanced_form_space, find_nondegenerate, certificate
    c = _coalgebra(_load(args.file))
    space = balanced_form_space(c, seed=args.seed)
    out("balanced forms dim", len(space))
    m, res = find_nondegenerate(space, seed=args.seed)
    out("search", res.method)
    if m is not None:
        certificate(c, m)
        out("gram", fmt_mat(m))
    out("cofrobenius", yn(m is not None))
    return EXIT_OK


def cmd_symmetric(args, out):
    from .frob import cocommutative_generator_test, symmetric_search
    c = _coalgebra(_load(args.file))
    cert, res = symmetric_search(c, seed=args.seed)
    out("search", res.method)
    if cert is not None:
        out("gram", fmt_mat(cert.gram))
    e = cocommutative_generator_test(c, seed=args.seed)
    out("cocommutative generator", fmt_vec(e) if e is not None else "none")
    if (e is not None) != (cert is not None):
        raise TheoremViolation("cocommutative generator test disagrees with the form search")
    out("symmetric", yn(cert is not None))
    return EXIT_OK


def cmd_ring(args, out):
    from .frob import is_cofrobenius
    from .ring import bimodule_law_check, build_ring
    c = _coalgebra(_load(args.file))
    cert = is_cofrobenius(c, seed=args.seed)
    if cert is None:
        out("cofrobenius", "no")
        out("ring", "none")
        return EXIT_OK
    r = build_ring(cert)
    out("gram", fmt_mat(cert.gram))
    names = c.basis_names
    for a in range(c.dim):
        for b in range(c.dim):
            terms = [f"{format_scalar(x)}*{names[k]}" for k, x in enumerate(r.mult_table[a][b]) if x]
            out(f"{names[a]} o {names[b]}", " + ".join(terms) if terms else "0")
    out("identity", fmt_vec(r.identity))
    rep = bimodule_law_check(r)
    if not rep.ok:
        raise TheoremViolation("bimodule law fails: " + "; ".join(rep.details[:3]))
    out("bimodule law", "ok")
    out("ring", "built")
    return EXIT_OK


def cmd_nakayama(args, out):
    from .frob import is_cofrobenius
    from .nakayama import check_nakayama, is_inner, nakayama
    c = _coalgebra(_load(args.file))
    cert = is_cofrobenius(c, seed=args.seed)
    if cert is None:
        out("cofrobenius", "no")
        return EXIT_OK
    na = nakayama(cert)
    rep = check_nakayama(na)
    if not rep.ok:
        raise TheoremViolation("; ".join(rep.details[:3]))
    out("gram", fmt_mat(cert.gram))
    out("sigma", fmt_mat(na.sigma))
    u = is_inner(na, seed=args.seed)
    if u is not None:
        out("u", fmt_vec(u))
    out("inner", yn(u is not None))
    return EXIT_OK


def cmd_coextend(args, out):
    from .coext import embedding_theorem_check
    from .exchange import emit
    c = _coalgebra(_load(args.file))
    res = embedding_theorem_check(c, search=not args.no_search, seed=args.seed)
    if not res.report.ok:
        raise TheoremViolation("; ".join(res.report.details[:3]))
    text = emit(res.d)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out("document", args.output)
    else:
        out(text.rstrip("\n"))
    out("dim", res.d.dim)
    out("witness gram", fmt_mat(res.gram))
    if res.search_symmetric is not None:
        out("search agrees", yn(res.search_symmetric))
    out("symmetric", "yes")
    return EXIT_OK


def cmd_brauer(args, out):
    from .brauer import compute_F, compute_G, compute_H, equivalence_FG, symmetric_via_GH
    obj = _load(args.file)
    c = _coalgebra(obj)
    m = _load(args.comodule, known=_known(obj))
    if not isinstance(m, Comodule):
        raise ParseError("expected a comodule document", args.comodule)
    if m.parent is not c and m.parent.dim != c.dim:
        raise DimensionMismatch("comodule parent does not match the coalgebra")
    out("dim F", compute_F(m).dim)
    out("dim G", compute_G(m, args.seed).dim)
    out("dim H", compute_H(m, args.seed).dim)
    rep = equivalence_FG(m, seed=args.seed)
    if not rep.ok:
        raise TheoremViolation("; ".join(rep.details[:3]))
    out("F ~ G roundtrip", "ok")
    gh = symmetric_via_GH(m.parent, [m], seed=args.seed)
    for d in gh.details:
        out("G/H", d)
    if not gh.ok:
        raise TheoremViolation("G -> H comparison fails on a symmetric coalgebra")
    out("G ~ H", "verified" if not any("only dimension" in d for d in gh.details) else "not applicable")
    return EXIT_OK


def cmd_hopf(args, out):
    from .hopf import (HopfAlgebra, h_infinity, hopf_closure_report, hopf_symmetric_coalgebra,
                       integrals, s2_inner_in_H, symmetric_as_algebra)
    h = _load(args.file)
    if not isinstance(h, HopfAlgebra):
        raise ParseError("expected a hopf document", "$.kind")
    data = integrals(h)
    for line in data.lines():
        out(line)
    out("S^2", fmt_mat(h.s2))
    hinf = h_infinity(h)
    out("H_inf dim", hinf.result.dim)
    out("H_inf steps", hinf.steps)
    rep = hopf_closure_report(h, hinf.result)
    if not rep.ok:
        raise TheoremViolation("H_inf is not a Hopf subalgebra")
    g = s2_inner_in_H(h, seed=args.seed)
    if g is not None:
        out("g", fmt_vec(g))
    cv = hopf_symmetric_coalgebra(h, seed=args.seed)
    av = symmetric_as_algebra(h, seed=args.seed)
    for line in cv.lines()[:-1]:
        out(line)
    out("unimodular(in H)", yn(data.unimodular_in))
    out("S^2 inner in H", yn(g is not None))
    out("symmetric-as-algebra", yn(av.symmetric))
    out(cv.lines()[-1])
    return EXIT_OK


def cmd_wedge(args, out):
    from .coalg import is_subcoalgebra
    from .hopf import a_infinity, wedge_powers
    obj = _load(args.file)
    c = _coalgebra(obj)
    s = _load(args.sub, known=_known(obj))
    if not isinstance(s, Subspace):
        raise ParseError("expected a subspace document", args.sub)
    if args.n is not None:
        for k, p in enumerate(wedge_powers(c, s, args.n), 1):
            out(f"wedge^{k} dim", p.dim)
        return EXIT_OK
    if not is_subcoalgebra(c, s):
        raise ParseError("subspace is not a subcoalgebra; pass -n for a fixed number of powers",
                         args.sub)
    tr = a_infinity(c, s)
    for k, d in enumerate(tr.dims, 1):
        out(f"wedge^{k} dim", d)
    for v in tr.result.vectors:
        out("A_inf basis", fmt_vec(v))
    out("steps", tr.steps)
    out("A_inf dim", tr.result.dim)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate, "info": cmd_info, "is-cofrobenius": cmd_cofrobenius,
    "is-symmetric": cmd_symmetric, "ring": cmd_ring, "nakayama": cmd_nakayama,
    "coextend": cmd_coextend, "brauer": cmd_brauer, "hopf": cmd_hopf, "wedge": cmd_wedge,
}


def build_parser():
    p = argparse.ArgumentParser(prog="symcoalg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--seed", type=int, default=0)
        if name == "coextend":
            sp.add_argument("-o", "--output")
            sp.add_argument("--no-search", action="store_true",
                            help="skip the independent form search on D")
        if name == "brauer":
            sp.add_argument("--comodule", required=True)
        if name == "wedge":
            sp.add_argument("--sub", required=True)
            sp.add_argument("-n", type=int)
    return p


def main(argv=None, stream=None):
    args = build_parser().parse_args(argv)
    out = Out(stream or sys.stdout)
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, InvalidStructure, DimensionMismatch, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as e:
        print(f"theorem violation: {e}", file=sys.stderr)
        return EXIT_THEOREM
    except UncertifiedSearch as e:
        print(f"search uncertified: {e}", file=sys.stderr)
        return EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
