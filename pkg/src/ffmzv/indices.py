"""Indices and the free algebra they span over F_q(T).

An index is a finite sequence of positive integers; the empty index is
the unit.  ``IndexPoly`` is a finite F_q(T)-linear combination of
indices.  The two products live here: the plain harmonic
(quasi-shuffle) product, and the q-shuffle product which adds the
carry terms D driven by the coefficients Delta.
"""

from __future__ import annotations

import enum

from .algebra import FieldSpec, RatFunc, poly_lucas_binom
from .errors import EmptyIndex, InvalidInput


class Index(tuple):
    """Composition of positive integers; () is the empty index."""

    def __new__(cls, entries=()):
        entries = tuple(int(x) for x in entries)
        for x in entries:
            if x < 1:
                raise InvalidInput(f"index entries must be >= 1, got {x}")
        return super().__new__(cls, entries)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def is_empty(self) -> bool:
        return not self

    def prefix(self, i: int) -> "Index":
        """First i entries; i = 0 gives the empty index."""
        if not 0 <= i <= self.depth:
            raise InvalidInput(f"prefix length {i} out of range")
        return Index(tuple.__getitem__(self, slice(0, i)))

    def suffix(self, i: int) -> "Index":
        """Entries from position i on (1-based); i = depth+1 gives the empty index."""
        if not 1 <= i <= self.depth + 1:
            raise InvalidInput(f"suffix position {i} out of range")
        return Index(tuple.__getitem__(self, slice(i - 1, None)))

    def drop(self, i: int) -> "Index":
        """Entries strictly after the first i."""
        return self.suffix(i + 1)

    @property
    def plus(self) -> "Index":
        """Drop the last entry."""
        if self.is_empty:
            raise EmptyIndex("the empty index has no last entry")
        return self.prefix(self.depth - 1)

    @property
    def minus(self) -> "Index":
        """Drop the first entry."""
        if self.is_empty:
            raise EmptyIndex("the empty index has no first entry")
        return self.suffix(2)

    def cat(self, *others) -> "Index":
        out = tuple(self)
        for o in others:
            out = out + tuple(o)
        return Index(out)

    def reversed(self) -> "Index":
        return Index(tuple(reversed(self)))

    def is_thakur(self, q: int) -> bool:
        """All entries <= q and the last entry <= q-1 (true for the empty index)."""
        if self.is_empty:
            return True
        return all(s <= q for s in tuple.__getitem__(self, slice(0, -1))) and self[-1] <= q - 1

    def in_iprime(self, q: int) -> bool:
        """Empty, or first entry exceeding q."""
        return self.is_empty or self[0] > q

    @property
    def admissible(self) -> bool:
        """Empty, or first entry > 1 (convergence of classical zeta sums)."""
        return self.is_empty or self[0] > 1

    @property
    def rev_admissible(self) -> bool:
        """Empty, or last entry > 1 (convergence of the dagger sums)."""
        return self.is_empty or self[-1] > 1

    def __str__(self):
        return "(" + ",".join(str(x) for x in self) + ")"

    def __repr__(self):
        return f"Index{str(self)}"


EMPTY = Index()


def parse_index(text: str) -> Index:
    """Parse "(3,1,2)" or "()" into an Index."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise InvalidInput(f"index must be parenthesized: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return EMPTY
    parts = [p.strip() for p in body.split(",")]
    entries = []
    for p in parts:
        if not p.isdigit():
            raise InvalidInput(f"bad index entry {p!r} in {text!r}")
        entries.append(int(p))
    return Index(entries)


def repeat(s: int, m: int) -> Index:
    """The index (s, s, ..., s) with m copies."""
    return Index((s,) * m)


def classify(s: Index, q: int) -> dict:
    """Membership flags for the four index families used downstream."""
    return {
        "in_IT": s.is_thakur(q),
        "in_Iprime": s.in_iprime(q),
        "admissible0": s.admissible,
        "rev_admissible0": s.rev_admissible,
    }


def compositions(w: int, max_depth=None, max_part=None):
    """All indices of weight w (lexicographic), optionally bounded."""
    if w == 0:
        yield EMPTY
        return
    cap = w if max_part is None else min(w, max_part)
    depth_left = w if max_depth is None else max_depth
    if depth_left <= 0:
        return

    def rec(rem, parts, depth_left):
        if rem == 0:
            yield Index(parts)
            return
        if depth_left == 0:
            return
        for first in range(1, min(rem, cap) + 1):
            yield from rec(rem - first, parts + [first], depth_left - 1)

    yield from rec(w, [], depth_left)


def thakur_indices(q: int, w: int):
    """All weight-w indices with entries <= q and last entry <= q-1, lex order."""
    out = []
    for s in compositions(w, max_part=q):
        if s.is_thakur(q):
            out.append(s)
    return out


class ProductKind(enum.Enum):
    HARMONIC = "harmonic"
    QSHUFFLE = "qshuffle"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(text)
        except ValueError:
            raise InvalidInput(f"unknown product kind {text!r}") from None


class IndexPoly:
    """Finite F_q(T)-linear combination of indices (an element of the free algebra)."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms=None):
        self.field = field
        clean = {}
        for s, c in (terms or {}).items():
            c = RatFunc.of(c, field)
            if not c.is_zero:
                clean[Index(s)] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: FieldSpec) -> "IndexPoly":
        return cls(field)

    @classmethod
    def mono(cls, field: FieldSpec, s, coeff=1) -> "IndexPoly":
        return cls(field, {Index(s): RatFunc.of(coeff, field)})

    @classmethod
    def one(cls, field: FieldSpec) -> "IndexPoly":
        return cls.mono(field, EMPTY)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def items(self):
        return [(s, self.terms[s]) for s in sorted(self.terms)]

    def coeff(self, s) -> RatFunc:
        return self.terms.get(Index(s), RatFunc.of(0, self.field))

    def _check(self, other):
        if self.field != other.field:
            raise InvalidInput("mixed coefficient fields")

    def __add__(self, other):
        if not isinstance(other, IndexPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            if s in out:
                v = out[s] + c
                if v.is_zero:
                    del out[s]
                else:
                    out[s] = v
            else:
                out[s] = c
        res = IndexPoly.__new__(IndexPoly)
        res.field = self.field
        res.terms = out
        return res

    def __neg__(self):
        res = IndexPoly.__new__(IndexPoly)
        res.field = self.field
        res.terms = {s: -c for s, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, IndexPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "IndexPoly":
        c = RatFunc.of(c, self.field)
        if c.is_zero:
            return IndexPoly.zero(self.field)
        res = IndexPoly.__new__(IndexPoly)
        res.field = self.field
        res.terms = {s: v * c for s, v in self.terms.items()}
        return res

    def prepend(self, prefix) -> "IndexPoly":
        """Concatenate a fixed index in front of every term."""
        prefix = Index(prefix)
        res = IndexPoly.__new__(IndexPoly)
        res.field = self.field
        res.terms = {prefix.cat(s): c for s, c in self.terms.items()}
        return res

    def linear_map(self, fn) -> "IndexPoly":
        """Sum of coeff * fn(index) over the terms; fn returns an IndexPoly."""
        out = IndexPoly.zero(self.field)
        for s, c in self.terms.items():
            out = out + fn(s).scale(c)
        return out

    def weight(self):
        """The common weight of the support, or None if mixed/empty."""
        ws = {s.weight for s in self.terms}
        return ws.pop() if len(ws) == 1 else None

    @property
    def is_homogeneous(self) -> bool:
        return len({s.weight for s in self.terms}) <= 1

    def __eq__(self, other):
        return (isinstance(other, IndexPoly) and other.field == self.field
                and other.terms == self.terms)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for s, c in self.items():
            cs = str(c)
            if cs == "1":
                parts.append(str(s))
            else:
                if "+" in cs and not (cs.startswith("(") and cs.endswith(")")):
                    cs = f"({cs})"
                parts.append(f"{cs}*{s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"IndexPoly({self!s})"


class IndexAlgebra:
    """The two products and the auxiliary operators, bound to one GF(q).

    All methods are pure; the product recursion is memoized on index
    pairs (function-cache contract: concurrent duplicate computation is
    harmless).
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.q = field.q
        self.p = field.p
        self._prod_memo = {}
        self._d_memo = {}

    # -- scalars -----------------------------------------------------------

    def const(self, n: int) -> RatFunc:
        return RatFunc.of(self.field.poly([n]), self.field)

    def zero(self) -> IndexPoly:
        return IndexPoly.zero(self.field)

    def mono(self, s, coeff=1) -> IndexPoly:
        return IndexPoly.mono(self.field, s, coeff)

    def one(self) -> IndexPoly:
        return IndexPoly.one(self.field)

    # -- Delta -------------------------------------------------------------

    def delta(self, s: int, n: int, j: int):
        """The carry coefficient for level-wise products, in the prime subfield."""
        p = self.p
        if j < 1 or j >= s + n:
            return self.field.zero
        if (self.q - 1) != 1 and j % (self.q - 1) != 0:
            return self.field.zero
        a = poly_lucas_binom(j - 1, s - 1, p)
        if (s - 1) % 2:
            a = (-a) % p
        b = poly_lucas_binom(j - 1, n - 1, p)
        if (n - 1) % 2:
            b = (-b) % p
        return self.field.elem((a + b) % p)

    # -- products ----------------------------------------------------------

    def product(self, P: IndexPoly, Q: IndexPoly, kind) -> IndexPoly:
        kind = ProductKind.parse(kind)
        out = self.zero()
        for s, cs in P.terms.items():
            for n, cn in Q.terms.items():
                out = out + self._prod_indices(s, n, kind).scale(cs * cn)
        return out

    def harmonic(self, P: IndexPoly, Q: IndexPoly) -> IndexPoly:
        return self.product(P, Q, ProductKind.HARMONIC)

    def qshuffle(self, P: IndexPoly, Q: IndexPoly) -> IndexPoly:
        return self.product(P, Q, ProductKind.QSHUFFLE)

    def _prod_indices(self, s: Index, n: Index, kind: ProductKind) -> IndexPoly:
        if s.is_empty:
            return self.mono(n)
        if n.is_empty:
            return self.mono(s)
        key = (kind, s, n)
        hit = self._prod_memo.get(key)
        if hit is not None:
            return hit
        s1, n1 = s[0], n[0]
        out = (self._prod_indices(s.minus, n, kind).prepend((s1,))
               + self._prod_indices(s, n.minus, kind).prepend((n1,))
               + self._prod_indices(s.minus, n.minus, kind).prepend((s1 + n1,)))
        if kind is ProductKind.QSHUFFLE:
            out = out + self._d_indices(s, n)
        self._prod_memo[key] = out
        return out

    def _d_indices(self, s: Index, n: Index) -> IndexPoly:
        key = (s, n)
        hit = self._d_memo.get(key)
        if hit is not None:
            return hit
        s1, n1 = s[0], n[0]
        tails = self._prod_indices(s.minus, n.minus, ProductKind.QSHUFFLE)
        out = self.zero()
        for j in range(1, s1 + n1):
            dj = self.delta(s1, n1, j)
            if dj.is_zero:
                continue
            term = self.qshuffle(self.mono(Index((j,))), tails)
            out = out + term.prepend((s1 + n1 - j,)).scale(dj)
        self._d_memo[key] = out
        return out

    def d_op(self, head: Index, P: IndexPoly) -> IndexPoly:
        """The carry operator D_head applied linearly; D_head(empty) = 0."""
        head = Index(head)
        if head.is_empty:
            raise EmptyIndex("the carry operator needs a nonempty head")
        out = self.zero()
        for n, c in P.terms.items():
            if n.is_empty:
                continue
            out = out + self._d_indices(head, n).scale(c)
        return out

    # -- boxplus and alpha ---------------------------------------------------

    def boxplus(self, P: IndexPoly, Q: IndexPoly) -> IndexPoly:
        """Bilinear splice: (s+, s_r + n_1, n-); zero when either side is empty."""
        out = self.zero()
        for s, cs in P.terms.items():
            if s.is_empty:
                continue
            for n, cn in Q.terms.items():
                if n.is_empty:
                    continue
                spliced = s.plus.cat((s[-1] + n[0],), n.minus)
                out = out + self.mono(spliced, cs * cn)
        return out

    def alpha(self, c: int, s, kind, P: IndexPoly, iterations: int = 1) -> IndexPoly:
        """P  |->  (c, s * P), iterated; 0 iterations is the identity."""
        kind = ProductKind.parse(kind)
        s = Index(s)
        out = P
        for _ in range(iterations):
            out = self.product(self.mono(s), out, kind).prepend((c,))
        return out
