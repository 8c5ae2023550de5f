"""Relation generators, rewriting to the Thakur basis, and the involution checks.

For each side ("zeta" with the q-shuffle product, "li" with the
harmonic product) the generator family gen_A spans all linear
relations among the values.  One rewriting step subtracts the
generator in which a non-Thakur index occurs with unit coefficient;
iterating expresses any combination in coordinates on the Thakur
index set, where exact linear algebra over F_q(T) decides ideal
membership, builds the weight-graded quotients by the weight-(q-1)
zeta value, and realizes the dagger involution as an explicit matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RatFunc, carlitz_bracket
from .errors import InvalidInput, ReductionDiverged
from .evaluate import ValueFamily
from .indices import (EMPTY, Index, IndexAlgebra, IndexPoly, ProductKind,
                      compositions, repeat, thakur_indices)
from .reports import Case, Report

_FAMILIES = ("zeta", "li")
_KIND = {"zeta": ProductKind.QSHUFFLE, "li": ProductKind.HARMONIC}


def _family(name) -> str:
    if isinstance(name, ValueFamily):
        name = name.side
    if name not in _FAMILIES:
        raise InvalidInput(f"family must be one of {_FAMILIES}, got {name!r}")
    return name


@dataclass(frozen=True)
class TDecomposition:
    """a = (s, {q}^(m-1), n) with s Thakur, n empty or starting above q."""
    s: Index
    m: int
    n: Index

    def reassemble(self, q: int) -> Index:
        return self.s.cat(repeat(q, self.m - 1), self.n)


class BasisVector:
    """Coordinates of a value on the Thakur index set of one weight."""

    __slots__ = ("weight", "coords")

    def __init__(self, weight: int, coords: dict):
        self.weight = weight
        self.coords = {s: c for s, c in coords.items() if not c.is_zero}

    @property
    def is_zero(self):
        return not self.coords

    def items(self):
        return [(s, self.coords[s]) for s in sorted(self.coords)]

    def __eq__(self, other):
        return (isinstance(other, BasisVector) and other.weight == self.weight
                and other.coords == self.coords)

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*{s}" if str(c) != "1" else str(s) for s, c in self.items())


class QuotientSpace:
    """The weight-w piece of the value span modulo the weight-(q-1) zeta ideal."""

    def __init__(self, weight: int, basis, ideal_gens, echelon, pivots):
        self.weight = weight
        self.basis = basis            # canonical list of Thakur indices
        self.ideal_gens = ideal_gens  # BasisVectors, pre-echelon
        self.echelon = echelon        # reduced rows, list[list[RatFunc]]
        self.pivots = pivots          # pivot column positions, ascending
        self.quotient_basis = [b for i, b in enumerate(basis) if i not in set(pivots)]

    @property
    def dim_space(self):
        return len(self.basis)

    @property
    def dim_ideal(self):
        return len(self.pivots)

    @property
    def dim_quotient(self):
        return len(self.quotient_basis)

    def class_vector(self, vec: BasisVector):
        """Quotient coordinates (on quotient_basis); None entries mean zero."""
        if vec.weight != self.weight:
            raise InvalidInput("weight mismatch")
        dense = [vec.coords.get(s) for s in self.basis]
        for r, pc in zip(self.echelon, self.pivots):
            c = dense[pc]
            if c is None or c.is_zero:
                continue
            for j in range(pc, len(self.basis)):
                if r[j].is_zero:
                    continue
                term = c * r[j]
                dense[j] = (-term) if dense[j] is None else dense[j] - term
        pivot_set = set(self.pivots)
        return [dense[i] for i in range(len(self.basis)) if i not in pivot_set]

    def class_is_zero(self, vec: BasisVector) -> bool:
        return all(v is None or v.is_zero for v in self.class_vector(vec))


class IotaMatrix:
    """The involution on quotient coordinates at one weight, as an exact matrix."""

    def __init__(self, weight: int, basis, rows, field):
        self.weight = weight
        self.basis = basis  # quotient basis (Thakur indices)
        self.rows = rows    # rows[i][j]: coefficient of basis[i] in iota(basis[j])
        self.field = field

    @property
    def dim(self):
        return len(self.basis)

    def apply(self, coords):
        n = self.dim
        zero = RatFunc.of(0, self.field)
        out = []
        for i in range(n):
            acc = zero
            for j in range(n):
                c = coords[j]
                if c is None or c.is_zero:
                    continue
                acc = acc + self.rows[i][j] * c
            out.append(acc)
        return out

    def squared_is_identity(self) -> bool:
        n = self.dim
        zero = RatFunc.of(0, self.field)
        one = RatFunc.of(1, self.field)
        for i in range(n):
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.rows[i][k] * self.rows[k][j]
                if acc != (one if i == j else zero):
                    return False
        return True


class Reducer:
    """Rewriting, exact linear algebra, and the theorem checkers for one GF(q)."""

    def __init__(self, algebra: IndexAlgebra, evaluator=None, cap: int = 10_000):
        self.algebra = algebra
        self.field = algebra.field
        self.q = algebra.q
        self.cap = cap
        self.evaluator = evaluator
        self._ustep_memo = {}
        self._dagger_memo = {}
        self._quotient_memo = {}
        self._iota_memo = {}

    # -- scalars --------------------------------------------------------------

    def _L1(self) -> RatFunc:
        return RatFunc.of(carlitz_bracket(self.field, 1), self.field)

    # -- generators -------------------------------------------------------------

    def gen_A(self, family, s, m: int, n) -> IndexPoly:
        """The relation generator for (s; m; n); homogeneous of weight wt(s)+mq+wt(n)."""
        family = _family(family)
        if m < 1:
            raise InvalidInput("m must be >= 1")
        A = self.algebra
        q = self.q
        s, n = Index(s), Index(n)
        kind = _KIND[family]
        qm = repeat(q, m)
        l1m = self._L1() ** m
        n_poly = A.mono(n)
        alpha_m = A.alpha(1, (q - 1,), kind, n_poly, m)
        out = A.mono(s.cat(qm, n))
        out = out + A.boxplus(A.mono(qm), n_poly).linear_map(lambda t: A.mono(s.cat(t)))
        if family == "zeta":
            dq = A.d_op(Index((q,)), n_poly)
            out = out + dq.linear_map(lambda t: A.mono(s.cat(repeat(q, m - 1), t)))
        out = out - alpha_m.linear_map(lambda t: A.mono(s.cat(t))).scale(l1m)
        out = out - A.boxplus(A.mono(s), alpha_m).scale(l1m)
        if family == "zeta" and not s.is_empty:
            ds = A.d_op(Index((s[-1],)), alpha_m)
            out = out - ds.linear_map(lambda t: A.mono(s.plus.cat(t))).scale(l1m)
        return out

    # -- rewriting ----------------------------------------------------------------

    def decompose_T(self, a) -> TDecomposition:
        """Unique splitting a = (s, {q}^(m-1), n), s Thakur, n empty or n_1 > q."""
        a = Index(a)
        q = self.q
        cut = a.depth
        for i, v in enumerate(a):
            if v > q:
                cut = i
                break
        n = a.drop(cut)
        run = 0
        while run < cut and a[cut - 1 - run] == q:
            run += 1
        s = a.prefix(cut - run)
        return TDecomposition(s=s, m=run + 1, n=n)

    def u_step(self, family, P: IndexPoly) -> IndexPoly:
        """One value-preserving rewriting pass; fixes anything already Thakur."""
        family = _family(family)
        out = IndexPoly.zero(self.field)
        for a, c in P.terms.items():
            out = out + self._u_image(family, a).scale(c)
        return out

    def _u_image(self, family, a: Index) -> IndexPoly:
        if a.is_thakur(self.q):
            return self.algebra.mono(a)
        key = (family, a)
        hit = self._ustep_memo.get(key)
        if hit is not None:
            return hit
        dec = self.decompose_T(a)
        if not dec.n.is_empty:
            littler = Index((dec.n[0] - self.q,)).cat(dec.n.minus)
            gen = self.gen_A(family, dec.s, dec.m, littler)
        else:
            # no oversized entry, so the trailing run has m >= 2
            gen = self.gen_A(family, dec.s, dec.m - 1, EMPTY)
        out = self.algebra.mono(a) - gen
        if not out.coeff(a).is_zero:
            raise InvalidInput(f"rewriting failed to cancel {a}")
        self._ustep_memo[key] = out
        return out

    def reduce_to_T(self, family, P: IndexPoly, cap=None) -> IndexPoly:
        """Iterate rewriting until the support lies in the Thakur set."""
        family = _family(family)
        cap = self.cap if cap is None else cap
        cur = P
        for _ in range(cap):
            if all(a.is_thakur(self.q) for a in cur.terms):
                return cur
            cur = self.u_step(family, cur)
        trail = [a for a in cur.support() if not a.is_thakur(self.q)]
        raise ReductionDiverged(
            f"no Thakur support after {cap} rewriting passes", trail=trail)

    # -- dagger expansion ------------------------------------------------------------

    def dagger_expand(self, family, s) -> IndexPoly:
        """D with value(dagger, s) = value(plain, D(s)); D(empty) = empty."""
        family = _family(family)
        s = Index(s)
        key = (family, s)
        hit = self._dagger_memo.get(key)
        if hit is not None:
            return hit
        A = self.algebra
        if s.is_empty:
            out = A.one()
        else:
            kind = _KIND[family]
            out = IndexPoly.zero(self.field)
            for i in range(1, s.depth + 1):
                out = out - A.product(A.mono(s.prefix(i)),
                                      self.dagger_expand(family, s.drop(i)), kind)
        self._dagger_memo[key] = out
        return out

    def dagger_linear(self, family, P: IndexPoly) -> IndexPoly:
        return P.linear_map(lambda s: self.dagger_expand(family, s))

    # -- exact linear algebra ------------------------------------------------------------

    def to_vector(self, w: int, P: IndexPoly) -> BasisVector:
        for s in P.terms:
            if not s.is_thakur(self.q) or s.weight != w:
                raise InvalidInput(f"{s} is not a weight-{w} Thakur index")
        return BasisVector(w, dict(P.terms))

    def linear_solve(self, vectors, target):
        """Exact membership of target in the span; returns coefficients or None.

        Pivoting is deterministic: sweep coordinates in canonical order
        and prefer the unused vector whose pivot entry has the smallest
        numerator+denominator degree.
        """
        if not vectors and target.is_zero:
            return []
        weight = target.weight
        for v in vectors:
            if v.weight != weight:
                raise InvalidInput("weight mismatch in linear_solve")
        basis = thakur_indices(self.q, weight)
        zero = RatFunc.of(0, self.field)
        cols = [[v.coords.get(s, zero) for s in basis] for v in vectors]
        rhs = [target.coords.get(s, zero) for s in basis]
        n = len(vectors)
        coeff_rows = [[RatFunc.of(1 if i == j else 0, self.field) for j in range(n)]
                      for i in range(n)]
        used = [False] * n
        assign = {}
        for ci in range(len(basis)):
            cands = [i for i in range(n) if not used[i] and not cols[i][ci].is_zero]
            if not cands:
                continue
            cands.sort(key=lambda i: (cols[i][ci].num.degree + cols[i][ci].den.degree, i))
            pi = cands[0]
            used[pi] = True
            assign[ci] = pi
            pivot = cols[pi][ci]
            for i in range(n):
                if i == pi or cols[i][ci].is_zero:
                    continue
                f = cols[i][ci] / pivot
                for j in range(len(basis)):
                    cols[i][j] = cols[i][j] - f * cols[pi][j]
                for j in range(n):
                    coeff_rows[i][j] = coeff_rows[i][j] - f * coeff_rows[pi][j]
        # eliminate the target against the pivots, tracking the combination
        combo = [zero] * n
        for ci in range(len(basis)):
            if rhs[ci].is_zero:
                continue
            pi = assign.get(ci)
            if pi is None:
                return None
            f = rhs[ci] / cols[pi][ci]
            for j in range(len(basis)):
                rhs[j] = rhs[j] - f * cols[pi][j]
            for j in range(n):
                combo[j] = combo[j] + f * coeff_rows[pi][j]
        if any(not v.is_zero for v in rhs):
            return None
        return combo

    def quotient_space(self, w: int) -> QuotientSpace:
        if w < 0:
            raise InvalidInput("weight must be >= 0")
        hit = self._quotient_memo.get(w)
        if hit is not None:
            return hit
        A = self.algebra
        basis = thakur_indices(self.q, w)
        gens = []
        lower = w - (self.q - 1)
        if lower >= 0:
            for b in thakur_indices(self.q, lower):
                prod = A.harmonic(A.mono(Index((self.q - 1,))), A.mono(b))
                gens.append(self.to_vector(w, self.reduce_to_T("li", prod)))
        # reduced echelon form over F_q(T)
        zero = RatFunc.of(0, self.field)
        rows = [[g.coords.get(s, zero) for s in basis] for g in gens]
        pivots = []
        rank = 0
        for ci in range(len(basis)):
            sel = None
            for r in range(rank, len(rows)):
                if not rows[r][ci].is_zero:
                    sel = r
                    break
            if sel is None:
                continue
            rows[rank], rows[sel] = rows[sel], rows[rank]
            inv = rows[rank][ci].inverse()
            rows[rank] = [v * inv for v in rows[rank]]
            for r in range(len(rows)):
                if r != rank and not rows[r][ci].is_zero:
                    f = rows[r][ci]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            pivots.append(ci)
            rank += 1
        out = QuotientSpace(w, basis, gens, rows[:rank], pivots)
        self._quotient_memo[w] = out
        return out

    def class_of(self, w: int, P: IndexPoly):
        """Quotient coordinates of a Thakur-supported combination."""
        return self.quotient_space(w).class_vector(self.to_vector(w, P))

    def iota_matrix(self, w: int) -> IotaMatrix:
        hit = self._iota_memo.get(w)
        if hit is not None:
            return hit
        qs = self.quotient_space(w)
        zero = RatFunc.of(0, self.field)
        cols = []
        for a in qs.quotient_basis:
            img = self.reduce_to_T("li", self.dagger_expand("li", a))
            cols.append(qs.class_vector(self.to_vector(w, img)))
        n = len(qs.quotient_basis)
        rows = [[(cols[j][i] if cols[j][i] is not None else zero) for j in range(n)]
                for i in range(n)]
        out = IotaMatrix(w, qs.quotient_basis, rows, self.field)
        self._iota_memo[w] = out
        return out

    # -- checkers -------------------------------------------------------------------

    def _ideal_cases(self, w: int):
        """All (s, m, n) with wt(s) + m q + wt(n) = w, m >= 1, in canonical order."""
        out = []
        for m in range(1, w // self.q + 1):
            rest = w - m * self.q
            for ws in range(rest + 1):
                for s in compositions(ws):
                    for n in compositions(rest - ws):
                        out.append((s, m, n))
        out.sort(key=lambda t: (t[0].weight, t[0], t[1], t[2]))
        return out

    def check_theorem(self, w: int) -> Report:
        """Dagger images of all weight-w li-side generators land in the ideal,
        and the involution squares to the identity there."""
        qs = self.quotient_space(w)
        cases = []
        for s, m, n in self._ideal_cases(w):
            gen = self.gen_A("li", s, m, n)
            img = self.reduce_to_T("li", self.dagger_linear("li", gen))
            ok = qs.class_is_zero(self.to_vector(w, img))
            cases.append(Case(
                input=f"A(li; s={s}; m={m}; n={n})",
                status="pass" if ok else "fail",
                detail="dagger image in ideal" if ok else "dagger image escapes the ideal"))
        iota = self.iota_matrix(w)
        inv_ok = iota.squared_is_identity()
        cases.append(Case(
            input=f"iota^2 @ w={w}",
            status="pass" if inv_ok else "fail",
            detail=f"quotient dimension {qs.dim_quotient}"))
        return Report(check="theorem", params={"q": self.q, "weight": w}, cases=cases)

    def check_keylemma(self, s, n, cs) -> Report:
        """Congruence of a dagger value of (s, alpha-chain(n)) with its expansion."""
        A = self.algebra
        s, n = Index(s), Index(n)
        cs = list(cs)
        m = len(cs)
        if s.depth + n.depth + m < 1:
            raise InvalidInput("at least one of s, n, cs must be nonempty")

        def chain(values, P):
            out = P
            for c in reversed(values):
                out = A.alpha(c, (self.q - 1,), ProductKind.HARMONIC, out, 1)
            return out

        full = chain(cs, A.mono(n)).linear_map(lambda t: A.mono(s.cat(t)))
        expr = self.dagger_linear("li", full)
        for i in range(1, s.depth + 1):
            left = A.mono(s.prefix(i))
            right = self.dagger_linear(
                "li", chain(cs, A.mono(n)).linear_map(lambda t: A.mono(s.drop(i).cat(t))))
            expr = expr + A.harmonic(left, right)
        for i in range(1, m + 1):
            left = chain(cs[:i], A.one()).linear_map(lambda t: A.mono(s.cat(t)))
            right = self.dagger_linear("li", chain(cs[i:], A.mono(n)))
            expr = expr + A.harmonic(left, right)
        for i in range(1, n.depth + 1):
            left = chain(cs, A.mono(n.prefix(i))).linear_map(lambda t: A.mono(s.cat(t)))
            right = self.dagger_expand("li", n.drop(i))
            expr = expr + A.harmonic(left, right)
        reduced = self.reduce_to_T("li", expr)
        w = s.weight + n.weight + sum(cs) + m * (self.q - 1)
        if reduced.is_zero:
            status, detail = "pass", "exact zero before taking the quotient"
        else:
            ok = self.quotient_space(w).class_is_zero(self.to_vector(w, reduced))
            status = "pass" if ok else "fail"
            detail = "zero in the quotient" if ok else "nonzero class"
        return Report(check="keylemma",
                      params={"q": self.q, "s": str(s), "n": str(n), "cs": cs},
                      cases=[Case(input=f"s={s} n={n} cs={cs}", status=status, detail=detail)])

    def check_prop41(self, s: int, n: int) -> Report:
        """Single dagger q-shuffle: exact identity with its carry correction,
        plus the congruence form in the quotient."""
        A = self.algebra
        ds = self.dagger_expand("zeta", Index((s,)))
        dn = self.dagger_expand("zeta", Index((n,)))
        expr = A.qshuffle(ds, dn)
        prod = A.qshuffle(A.mono(Index((s,))), A.mono(Index((n,))))
        expr = expr - self.dagger_linear("zeta", prod)
        for j in range(1, s + n):
            dj = A.delta(s, n, j)
            if dj.is_zero:
                continue
            term = A.qshuffle(A.mono(Index((s + n - j,))),
                              self.dagger_expand("zeta", Index((j,))))
            expr = expr - term.scale(dj)
        reduced = self.reduce_to_T("zeta", expr)
        exact_ok = reduced.is_zero
        w = s + n
        cong = A.qshuffle(ds, dn) - self.dagger_linear("zeta", prod)
        cong_red = self.reduce_to_T("zeta", cong)
        cong_ok = self.quotient_space(w).class_is_zero(self.to_vector(w, cong_red))
        cases = [
            Case(input=f"exact s={s} n={n}", status="pass" if exact_ok else "fail",
                 detail="identity with carry correction holds exactly" if exact_ok
                 else "nonzero reduction"),
            Case(input=f"congruence s={s} n={n}", status="pass" if cong_ok else "fail",
                 detail="q-shuffle product congruence in the quotient" if cong_ok
                 else "nonzero class"),
        ]
        return Report(check="prop41", params={"q": self.q, "s": s, "n": n}, cases=cases)

    def check_prop42(self, s, n) -> Report:
        """Dagger image of a zeta-side generator with m = 1 in the quotient."""
        s, n = Index(s), Index(n)
        hyp = (s.is_empty or s[-1] < self.q) and n.depth <= 1
        gen = self.gen_A("zeta", s, 1, n)
        img = self.reduce_to_T("zeta", self.dagger_linear("zeta", gen))
        w = s.weight + self.q + n.weight
        ok = self.quotient_space(w).class_is_zero(self.to_vector(w, img))
        if hyp:
            status = "pass" if ok else "fail"
            detail = "in ideal" if ok else "escapes the ideal under the stated hypotheses"
        else:
            status = "observation"
            detail = ("beyond proven hypotheses: in ideal" if ok
                      else "beyond proven hypotheses: NOT in ideal")
        return Report(check="prop42",
                      params={"q": self.q, "s": str(s), "n": str(n)},
                      cases=[Case(input=f"s={s} n={n}", status=status, detail=detail)])

    def check_conjecture(self, s) -> Report:
        """Compare iota(class of zeta(s)) with the class of the dagger expansion.

        Open conjecture: always reported as an observation, never asserted.
        """
        s = Index(s)
        w = s.weight
        qs = self.quotient_space(w)
        iota = self.iota_matrix(w)
        zero = RatFunc.of(0, self.field)
        lhs_vec = qs.class_vector(self.to_vector(w, self.reduce_to_T("zeta", self.algebra.mono(s))))
        lhs = iota.apply([v if v is not None else zero for v in lhs_vec])
        rhs_vec = qs.class_vector(self.to_vector(
            w, self.reduce_to_T("zeta", self.dagger_expand("zeta", s))))
        rhs = [v if v is not None else zero for v in rhs_vec]
        diff = [a - b for a, b in zip(lhs, rhs)]
        equal = all(v.is_zero for v in diff)
        detail = "classes equal" if equal else (
            "classes differ by " + " | ".join(
                f"{qs.quotient_basis[i]}: {v}" for i, v in enumerate(diff) if not v.is_zero))
        return Report(check="conjecture", params={"q": self.q, "index": str(s)},
                      cases=[Case(input=str(s), status="observation", detail=detail)])
