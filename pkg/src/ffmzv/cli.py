"""Command-line front end: reproducible verification runs with JSON reports.

Exit codes: 0 when no case failed (observations never gate), 1 when a
case failed, 2 for usage or syntax errors, 3 for internal limits
(budget exceeded, reduction cap).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import charzero
from .algebra import FieldSpec, Poly, RatFunc, field, rat_to_laurent
from .dependence import DependenceProblem, find_dependence, precision_warning
from .errors import (FFMZVError, InvalidInput, NotAdmissible,
                     PrecisionTooExpensive, ReductionDiverged)
from .evaluate import EvalBudget, Evaluator, ValueFamily, default_precision
from .indices import (EMPTY, Index, IndexAlgebra, ProductKind, compositions,
                      parse_index)
from .reduction import Reducer
from .reports import Case, Report, merge

_SUITES = ("fundamental", "products", "prodsum", "theorem", "prop41", "prop42",
           "keylemma", "all")


# -- literal parsing ----------------------------------------------------------

def _parse_u_poly(spec: FieldSpec, text: str):
    """A coefficient literal like "2", "u", "u^2+u+1" -> FieldElem."""
    t = text.strip().replace(" ", "")
    if not t:
        raise InvalidInput("empty coefficient")
    total = spec.zero
    sign = 1
    token = ""
    parts = []
    for ch in t + "+":
        if ch in "+-":
            if token:
                parts.append((sign, token))
            sign = 1 if ch == "+" else -1
            token = ""
        else:
            token += ch
    for sg, tok in parts:
        if "*" in tok:
            c, _, rest = tok.partition("*")
            coef = int(c)
            tok = rest
        else:
            coef = 1
        if tok == "":
            raise InvalidInput(f"bad coefficient term in {text!r}")
        if tok.isdigit():
            val = spec.elem(int(tok) * coef)
        elif tok == "u":
            val = spec.gen * spec.elem(coef)
        elif tok.startswith("u^"):
            val = (spec.gen ** int(tok[2:])) * spec.elem(coef)
        else:
            raise InvalidInput(f"bad coefficient term {tok!r}")
        total = total + (val if sg > 0 else -val)
    return total


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse "T^2+u*T+1" style literals (coefficients in u need parens)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise InvalidInput("empty polynomial")
    # split on top-level + and -
    terms = []
    depth = 0
    cur = ""
    sign = 1
    for ch in t:
        if ch == "(":
            depth += 1
            cur += ch
        elif ch == ")":
            depth -= 1
            cur += ch
        elif ch in "+-" and depth == 0 and cur:
            terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch == "-" and depth == 0 and not cur:
            sign = -sign
        else:
            cur += ch
    if cur:
        terms.append((sign, cur))
    out = spec.poly([])
    for sg, term in terms:
        coef = spec.one
        power = 0
        if "T" in term:
            pre, _, post = term.partition("T")
            if pre:
                if not pre.endswith("*"):
                    raise InvalidInput(f"bad term {term!r}: use coef*T")
                pre = pre[:-1]
                if pre.startswith("(") and pre.endswith(")"):
                    pre = pre[1:-1]
                coef = _parse_u_poly(spec, pre)
            if post:
                if not post.startswith("^"):
                    raise InvalidInput(f"bad power in {term!r}")
                power = int(post[1:])
                if power < 0:
                    raise InvalidInput("polynomial literals need powers >= 0")
            else:
                power = 1
        else:
            body = term[1:-1] if term.startswith("(") and term.endswith(")") else term
            coef = _parse_u_poly(spec, body)
        mono = [spec.zero] * power + [coef]
        p = Poly(spec, mono)
        out = out + (p if sg > 0 else -p)
    return out


def parse_ratfunc(spec: FieldSpec, text: str) -> RatFunc:
    t = text.strip()
    depth = 0
    split = None
    for i, ch in enumerate(t):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split = i
            break
    if split is None:
        return RatFunc.of(parse_poly(spec, t))
    num, den = t[:split], t[split + 1:]
    if num.startswith("(") and num.endswith(")"):
        num = num[1:-1]
    if den.startswith("(") and den.endswith(")"):
        den = den[1:-1]
    return RatFunc(parse_poly(spec, num), parse_poly(spec, den))


# -- context -------------------------------------------------------------------

class Context:
    """Everything a subcommand needs, derived from the common flags."""

    def __init__(self, args):
        if args.q is not None:
            modulus = None
            if args.modulus:
                modulus = tuple(int(c) for c in args.modulus.split(","))
            self.field = field(args.q, modulus)
        else:
            p = args.p if args.p is not None else 2
            e = args.e if args.e is not None else 1
            modulus = tuple(int(c) for c in args.modulus.split(",")) if args.modulus else None
            self.field = FieldSpec(p, e, modulus) if (modulus or e > 1) else field(p ** e)
        budget = args.budget
        env = os.environ.get("FFMZV_BUDGET")
        if env:
            budget = int(env)
        self.budget = EvalBudget(max_bruteforce=budget)
        self.evaluator = Evaluator(self.field, self.budget)
        self.algebra = IndexAlgebra(self.field)
        self.reducer = Reducer(self.algebra, self.evaluator, cap=args.cap)
        self.args = args

    @property
    def q(self):
        return self.field.q

    def prec(self, weight: int = 6) -> int:
        if self.args.prec is not None:
            return self.args.prec
        return default_precision(weight)


def _common_flags(sp):
    sp.add_argument("--q", type=int, default=None, help="field order (prime power)")
    sp.add_argument("--p", type=int, default=None, help="characteristic")
    sp.add_argument("--e", type=int, default=None, help="extension degree")
    sp.add_argument("--modulus", default=None,
                    help="comma-separated F_p coefficients of the field modulus, low first")
    sp.add_argument("--prec", type=int, default=None, help="absolute series precision")
    sp.add_argument("--max-weight", type=int, default=6)
    sp.add_argument("--max-d", type=int, default=4)
    sp.add_argument("--deg-bound", type=int, default=3)
    sp.add_argument("--budget", type=int, default=1 << 20,
                    help="brute-force enumeration cap (env FFMZV_BUDGET overrides)")
    sp.add_argument("--cap", type=int, default=10_000, help="rewriting iteration cap")
    sp.add_argument("--json", default=None, metavar="PATH",
                    help="write the JSON report to PATH ('-' for stdout)")
    sp.add_argument("--seed", type=int, default=20260811)
    sp.add_argument("--pairs", type=int, default=50)


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="ffmzv",
        description="Exact verification engine for function-field multiple zeta values")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate one value as a Laurent series")
    _common_flags(sp)
    sp.add_argument("--family", required=True,
                    choices=[f.value for f in ValueFamily])
    sp.add_argument("--index", required=True)

    sp = sub.add_parser("product", help="harmonic or q-shuffle product of two indices")
    _common_flags(sp)
    sp.add_argument("--kind", required=True, choices=["harmonic", "qshuffle"])
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)

    sp = sub.add_parser("reduce", help="rewrite a value into Thakur-basis coordinates")
    _common_flags(sp)
    sp.add_argument("--family", required=True, choices=["zeta", "li"])
    sp.add_argument("--index", required=True)

    sp = sub.add_parser("verify", help="run a verification suite")
    _common_flags(sp)
    sp.add_argument("--suite", required=True, choices=_SUITES)

    sp = sub.add_parser("iota", help="involution checks at one weight")
    _common_flags(sp)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--check", default="involution,nontrivial")

    sp = sub.add_parser("conjecture", help="compare iota with the dagger class (report only)")
    _common_flags(sp)
    sp.add_argument("--index", default=None)

    sp = sub.add_parser("depend", help="numeric linear-dependence search")
    _common_flags(sp)
    sp.add_argument("--values", required=True,
                    help='semicolon-separated selectors, e.g. "li:(2);li:(1,1)"')

    sp = sub.add_parser("charzero", help="characteristic-zero comparisons")
    _common_flags(sp)
    sp.add_argument("--check", required=True, choices=["duality", "prodsum", "example45"])
    sp.add_argument("--index", default=None)
    sp.add_argument("--terms", type=int, default=10 ** 6)
    sp.add_argument("--tol", type=float, default=1e-5)

    return ap


# -- suites ---------------------------------------------------------------------

def _suite_fundamental(ctx: Context) -> Report:
    reports = [ctx.evaluator.fundamental_identity_check(d)
               for d in range(ctx.args.max_d + 1)]
    return merge("fundamental", {"q": ctx.q, "max_d": ctx.args.max_d}, reports)


def _random_index(rng, max_weight):
    w = rng.randint(1, max_weight)
    entries = []
    while w > 0:
        x = rng.randint(1, w)
        entries.append(x)
        w -= x
    return Index(entries)


def _suite_products(ctx: Context) -> Report:
    rng = random.Random(ctx.args.seed)
    prec = ctx.prec(ctx.args.max_weight)
    E, A = ctx.evaluator, ctx.algebra
    cases = []
    for k in range(ctx.args.pairs):
        s = _random_index(rng, ctx.args.max_weight)
        n = _random_index(rng, ctx.args.max_weight)
        for fam, kind in ((ValueFamily.ZETA, ProductKind.QSHUFFLE),
                          (ValueFamily.LI, ProductKind.HARMONIC)):
            lhs = E.eval_value(fam, A.mono(s), prec) * E.eval_value(fam, A.mono(n), prec)
            rhs = E.eval_value(fam, A.product(A.mono(s), A.mono(n), kind), prec)
            ok = lhs == rhs
            cases.append(Case(
                input=f"pair{k:03d} {kind.value} {s} x {n}",
                status="pass" if ok else "fail",
                detail=f"N={prec}"))
    return Report("products", {"q": ctx.q, "pairs": ctx.args.pairs,
                               "max_weight": ctx.args.max_weight, "prec": prec},
                  cases).sorted()


def _suite_prodsum(ctx: Context) -> Report:
    prec = ctx.prec(ctx.args.max_weight)
    E, R = ctx.evaluator, ctx.reducer
    cases = []
    for w in range(1, ctx.args.max_weight + 1):
        for s in compositions(w, max_depth=4):
            for fam in (ValueFamily.ZETA, ValueFamily.LI):
                famd = fam.dagger
                tot1 = tot2 = None
                for i in range(s.depth + 1):
                    a = E.eval_value(fam, s.prefix(i), prec) * E.eval_value(famd, s.drop(i), prec)
                    b = E.eval_value(famd, s.prefix(i), prec) * E.eval_value(fam, s.drop(i), prec)
                    tot1 = a if tot1 is None else tot1 + a
                    tot2 = b if tot2 is None else tot2 + b
                dag = E.eval_value(famd, s, prec)
                exp = E.eval_value(fam, R.dagger_expand(fam.side, s), prec)
                ok = tot1.is_zero_to_prec and tot2.is_zero_to_prec and dag == exp
                cases.append(Case(
                    input=f"{fam.side} {s}",
                    status="pass" if ok else "fail",
                    detail="slice sums vanish; dagger expansion matches" if ok else
                    f"residuals: {tot1}, {tot2}"))
    return Report("prodsum", {"q": ctx.q, "max_weight": ctx.args.max_weight,
                              "prec": prec}, cases).sorted()


def _suite_theorem(ctx: Context) -> Report:
    reports = [ctx.reducer.check_theorem(w) for w in range(ctx.args.max_weight + 1)]
    return merge("theorem", {"q": ctx.q, "max_weight": ctx.args.max_weight}, reports)


def _suite_prop41(ctx: Context) -> Report:
    reports = []
    for s in range(1, 5):
        for n in range(1, 5):
            reports.append(ctx.reducer.check_prop41(s, n))
    return merge("prop41", {"q": ctx.q, "max_entry": 4}, reports)


def _suite_prop42(ctx: Context) -> Report:
    reports = []
    cap = min(ctx.args.max_weight, 5)
    for wtot in range(cap + 1):
        for ws in range(wtot + 1):
            for s in compositions(ws):
                if not (s.is_empty or s[-1] < ctx.q):
                    continue
                wn = wtot - ws
                ns = [EMPTY] if wn == 0 else [Index((wn,))]
                for n in ns:
                    reports.append(ctx.reducer.check_prop42(s, n))
    return merge("prop42", {"q": ctx.q, "max_total_weight": cap}, reports)


def _suite_keylemma(ctx: Context) -> Report:
    reports = []
    small = [EMPTY, Index((1,)), Index((2,)), Index((1, 1))]
    chains = [[], [1], [2], [1, 1]]
    for s in small:
        for n in small:
            for cs in chains:
                if s.depth + n.depth + len(cs) < 1:
                    continue
                w = s.weight + n.weight + sum(cs) + len(cs) * (ctx.q - 1)
                if w > ctx.args.max_weight:
                    continue
                reports.append(ctx.reducer.check_keylemma(s, n, cs))
    return merge("keylemma", {"q": ctx.q, "max_weight": ctx.args.max_weight}, reports)


_SUITE_FN = {
    "fundamental": _suite_fundamental,
    "products": _suite_products,
    "prodsum": _suite_prodsum,
    "theorem": _suite_theorem,
    "prop41": _suite_prop41,
    "prop42": _suite_prop42,
    "keylemma": _suite_keylemma,
}


# -- commands --------------------------------------------------------------------

def _cmd_eval(ctx: Context) -> Report:
    s = parse_index(ctx.args.index)
    prec = ctx.prec(max(s.weight, 1))
    val = ctx.evaluator.eval_value(ctx.args.family, s, prec)
    return Report("eval", {"q": ctx.q, "family": ctx.args.family,
                           "index": str(s), "prec": prec},
                  [Case(input=str(s), status="observation", detail=str(val))])


def _cmd_product(ctx: Context) -> Report:
    left = parse_index(ctx.args.left)
    right = parse_index(ctx.args.right)
    A = ctx.algebra
    out = A.product(A.mono(left), A.mono(right), ctx.args.kind)
    return Report("product", {"q": ctx.q, "kind": ctx.args.kind,
                              "left": str(left), "right": str(right)},
                  [Case(input=f"{left} x {right}", status="observation", detail=str(out))])


def _cmd_reduce(ctx: Context) -> Report:
    s = parse_index(ctx.args.index)
    out = ctx.reducer.reduce_to_T(ctx.args.family, ctx.algebra.mono(s))
    return Report("reduce", {"q": ctx.q, "family": ctx.args.family, "index": str(s)},
                  [Case(input=str(s), status="observation", detail=str(out))])


def _cmd_verify(ctx: Context):
    if ctx.args.suite == "all":
        return [fn(ctx) for name, fn in _SUITE_FN.items()]
    return _SUITE_FN[ctx.args.suite](ctx)


def _cmd_iota(ctx: Context) -> Report:
    w = ctx.args.weight
    checks = [c.strip() for c in ctx.args.check.split(",") if c.strip()]
    R = ctx.reducer
    cases = []
    if "involution" in checks:
        m = R.iota_matrix(w)
        ok = m.squared_is_identity()
        cases.append(Case(input=f"iota^2 @ w={w}", status="pass" if ok else "fail",
                          detail=f"quotient dimension {m.dim}"))
    if "nontrivial" in checks:
        A = ctx.algebra
        witness = None
        if ctx.field.p != 2 and w == 1:
            witness = R.dagger_expand("li", Index((1,))) - A.mono((1,))
            label = "class(dagger(1) - (1)) @ w=1"
        elif ctx.q >= 4 and w == 2:
            witness = R.reduce_to_T("li", A.mono((2,)))
            label = "class((2)) @ w=2"
        elif ctx.q == 2 and w == 6:
            witness = R.reduce_to_T("li", A.mono((6,)))
            label = "class((6)) @ w=6"
        if witness is None:
            cases.append(Case(input=f"nontrivial @ w={w}", status="observation",
                              detail=f"no non-triviality witness configured for q={ctx.q}, w={w}"))
        else:
            red = R.reduce_to_T("li", witness)
            nz = not R.quotient_space(w).class_is_zero(R.to_vector(w, red))
            cases.append(Case(input=label, status="pass" if nz else "fail",
                              detail="nonzero class" if nz else "class vanished"))
    return Report("iota", {"q": ctx.q, "weight": w}, cases)


def _cmd_conjecture(ctx: Context):
    R = ctx.reducer
    if ctx.args.index is not None:
        return R.check_conjecture(parse_index(ctx.args.index))
    reports = []
    for w in range(ctx.args.max_weight + 1):
        for s in compositions(w):
            reports.append(R.check_conjecture(s))
    return merge("conjecture", {"q": ctx.q, "max_weight": ctx.args.max_weight}, reports)


def _cmd_depend(ctx: Context) -> Report:
    sels = [s.strip() for s in ctx.args.values.split(";") if s.strip()]
    if not sels:
        raise InvalidInput("no value selectors given")
    prec = ctx.args.prec if ctx.args.prec is not None else 40
    series = []
    for sel in sels:
        fam, sep, idx = sel.partition(":")
        if sep and fam in [f.value for f in ValueFamily]:
            series.append(ctx.evaluator.eval_value(fam, parse_index(idx), prec))
        else:
            series.append(rat_to_laurent(parse_ratfunc(ctx.field, sel), prec))
    prob = DependenceProblem(series, ctx.args.deg_bound)
    warning = precision_warning(prob)
    kernel = find_dependence(prob)
    cases = []
    for i, tup in enumerate(kernel):
        cases.append(Case(input=f"candidate{i:02d}", status="observation",
                          detail="(" + ", ".join(str(p) for p in tup) + ")"))
    if not kernel:
        cases.append(Case(input="kernel", status="observation", detail="empty"))
    if warning:
        cases.append(Case(input="precision", status="observation", detail=warning))
    return Report("depend", {"q": ctx.q, "values": sels, "deg_bound": ctx.args.deg_bound,
                             "prec": prec}, cases)


def _cmd_charzero(ctx: Context):
    args = ctx.args
    if args.check == "duality":
        corpus = ([parse_index(args.index)] if args.index else
                  [Index(t) for t in ((2,), (3,), (4,), (2, 2), (2, 4), (3, 1))])
        reports = [charzero.duality_report(s, args.terms, args.tol) for s in corpus]
        return merge("duality", {"terms": args.terms, "tol": args.tol}, reports)
    if args.check == "prodsum":
        corpus = ([parse_index(args.index)] if args.index else
                  [Index(t) for t in ((2, 3), (2, 2, 2), (3, 2))])
        reports = [charzero.check_prodsum0(s, args.terms, args.tol) for s in corpus]
        return merge("prodsum0", {"terms": args.terms, "tol": args.tol}, reports)
    return charzero.example45_report(args.terms, args.tol)


_COMMANDS = {
    "eval": _cmd_eval,
    "product": _cmd_product,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "iota": _cmd_iota,
    "conjecture": _cmd_conjecture,
    "depend": _cmd_depend,
    "charzero": _cmd_charzero,
}

_CHARZERO_ONLY = {"charzero"}


def _emit(reports, args, elapsed_ms, out=sys.stdout):
    if isinstance(reports, Report):
        reports = [reports]
    payload = []
    worst = 0
    for r in reports:
        r = r.sorted()
        r.elapsed_ms = elapsed_ms
        payload.append(r.to_dict())
        s = r.summary
        print(f"== {r.check}  {json.dumps(r.params, sort_keys=True)}", file=out)
        for c in r.cases:
            print(f"  [{c.status:<11}] {c.input}" + (f" -- {c.detail}" if c.detail else ""),
                  file=out)
        print(f"  summary: {s['pass']} pass, {s['fail']} fail, "
              f"{s['observation']} observation", file=out)
        if s["fail"]:
            worst = 1
    if args.json:
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
        if args.json == "-":
            print(text, file=out)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)
    return worst


def run(argv=None, out=sys.stdout) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.time()
    try:
        if args.command in _CHARZERO_ONLY:
            ctx = _CharzeroContext(args)
        else:
            ctx = Context(args)
        reports = _COMMANDS[args.command](ctx)
    except (InvalidInput, NotAdmissible) as exc:
        print(f"error: {exc}", file=out)
        return 2
    except (PrecisionTooExpensive, ReductionDiverged) as exc:
        print(f"{type(exc).__name__}: {exc}", file=out)
        return 3
    except FFMZVError as exc:
        print(f"{type(exc).__name__}: {exc}", file=out)
        return 3
    elapsed_ms = round((time.time() - t0) * 1000.0, 3)
    return _emit(reports, args, elapsed_ms, out=out)


class _CharzeroContext:
    """charzero needs no finite field; keep the args interface."""

    def __init__(self, args):
        self.args = args


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
