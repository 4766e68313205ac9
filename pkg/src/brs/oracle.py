"""Brute-force colength oracle by jet truncation and exact linear algebra.

Validates every standard-basis colength through a completely independent
route: the quotient by an ideal I is modelled at finite order d as the span
of all monomial multiples of the generators truncated below degree d, and
its dimension is rows minus rank of an exact rational matrix.

The sequence dim(d) is non-decreasing and, because the associated graded
algebra is generated in degree one, a single repeat dim(d) == dim(d-2) means
the value has provably stabilized at the true colength.  Infinite colengths
are only reported when the dimension keeps growing at a linear-or-faster
rate and some variable has no pure power in the truncated span; anything
else at the cap is reported as Inconclusive, never as a confident number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BrsError
from .polycore import Polynomial
from .stdbasis import Ideal, NOT_FINITE, Value


class InconclusiveType:
    """Singleton marker: the oracle could not certify a value at its cap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Inconclusive"


INCONCLUSIVE = InconclusiveType()

OracleValue = Value | InconclusiveType

DEFAULT_CAP = 32


def _monomials_below(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree < d, in graded lexicographic order."""

    def fixed_degree(deg: int, slots: int) -> list[tuple[int, ...]]:
        if slots == 1:
            return [(deg,)]
        out = []
        for e in range(deg + 1):
            out.extend((e,) + rest for rest in fixed_degree(deg - e, slots - 1))
        return out

    monos: list[tuple[int, ...]] = []
    for deg in range(d):
        chunk = fixed_degree(deg, n)
        chunk.sort()
        monos.extend(chunk)
    return monos


@dataclass(frozen=True)
class JetTruncation:
    """Finite-dimensional model of the local ring below a degree cap."""

    degree_cap: int
    monomial_index: dict[tuple[int, ...], int] = field(compare=False)

    @classmethod
    def build(cls, n: int, degree_cap: int) -> "JetTruncation":
        monos = _monomials_below(n, degree_cap)
        return cls(degree_cap=degree_cap, monomial_index={m: i for i, m in enumerate(monos)})

    @property
    def size(self) -> int:
        return len(self.monomial_index)


Column = dict[int, Fraction]


def _truncated_column(g: Polynomial, shift: tuple[int, ...], jt: JetTruncation) -> Column:
    col: Column = {}
    cap = jt.degree_cap
    shift_deg = sum(shift)
    for mono, coeff in g.terms:
        deg = mono.degree + shift_deg
        if deg >= cap:
            continue
        exps = tuple(a + b for a, b in zip(mono.exponents, shift))
        col[jt.monomial_index[exps]] = col.get(jt.monomial_index[exps], Fraction(0)) + coeff
    return {k: v for k, v in col.items() if v != 0}


class _Echelon:
    """Incremental sparse echelon basis of a column space over the rationals.

    Pivot choice follows the row enumeration, which is graded lexicographic,
    so the pivot is always the surviving entry of lowest total degree.
    """

    def __init__(self):
        self.pivots: dict[int, Column] = {}

    def reduce(self, col: Column) -> Column:
        col = dict(col)
        while col:
            r = min(col)
            piv = self.pivots.get(r)
            if piv is None:
                return col
            factor = col[r]
            for k, v in piv.items():
                nv = col.get(k, Fraction(0)) - factor * v
                if nv == 0:
                    col.pop(k, None)
                else:
                    col[k] = nv
        return col

    def insert(self, col: Column) -> bool:
        residual = self.reduce(col)
        if not residual:
            return False
        r = min(residual)
        inv = Fraction(1) / residual[r]
        self.pivots[r] = {k: v * inv for k, v in residual.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _jet_model(I: Ideal, d: int) -> tuple[JetTruncation, _Echelon]:
    jt = JetTruncation.build(I.ctx.n, d)
    ech = _Echelon()
    shifts = _monomials_below(I.ctx.n, d)
    for g in I.gens:
        lead_deg = min((m.degree for m, _ in g.terms), default=d)
        for shift in shifts:
            if sum(shift) + lead_deg >= d:
                continue
            col = _truncated_column(g, shift, jt)
            if col:
                ech.insert(col)
    return jt, ech


def jet_quotient_dim(I: Ideal, d: int) -> int:
    """Exact dimension of the quotient by (I + maximal ideal^d)."""
    jt, ech = _jet_model(I, d)
    return jt.size - ech.rank


def module_jet_quotient_dim(gens, rank: int, n: int, d: int) -> int:
    """Dimension of a free-module quotient at jet level d.

    Rows are (component, monomial below d); columns are all monomial shifts
    of the generators, truncated componentwise.  Because the quotient module
    is generated in degree zero, the value is non-decreasing in d and two
    consecutive equal steps certify the exact dimension, the same argument
    as for ideals.
    """
    jt = JetTruncation.build(n, d)
    size = jt.size
    shifts = _monomials_below(n, d)
    ech = _Echelon()
    for vec in gens:
        lead_deg = min(
            (m.degree for p in vec for m, _ in p.terms),
            default=d,
        )
        for shift in shifts:
            if sum(shift) + lead_deg >= d:
                continue
            col: Column = {}
            for comp, p in enumerate(vec):
                part = _truncated_column(p, shift, jt)
                for row, value in part.items():
                    col[comp * size + row] = value
            if col:
                ech.insert(col)
    return rank * size - ech.rank


def jet_contains(I: Ideal, p: Polynomial, d: int) -> bool:
    """Membership of p in I at jet level d, i.e. in I + maximal ideal^d.

    Test helper: a true answer at a level beyond the largest standard
    monomial degree of a zero-dimensional I certifies real membership.
    """
    jt, ech = _jet_model(I, d)
    col = _truncated_column(p, (0,) * I.ctx.n, jt)
    return not ech.reduce(col)


def _power_probe(I: Ideal, jt: JetTruncation, ech: _Echelon) -> bool:
    """True when every variable has some pure power in the truncated span."""
    n = I.ctx.n
    d = jt.degree_cap
    for v in range(n):
        found = False
        for k in range(1, d):
            exps = tuple(k if i == v else 0 for i in range(n))
            col = {jt.monomial_index[exps]: Fraction(1)}
            if not ech.reduce(col):
                found = True
                break
        if not found:
            return False
    return True


def oracle_colength(I: Ideal, cap: int = DEFAULT_CAP) -> OracleValue:
    """Independent colength by stabilized jet dimensions.

    Walks d = 4, 6, 8, ... up to the cap.  Returns the dimension once two
    consecutive steps agree; returns NOT_FINITE when three steps grow at a
    linear-or-faster rate while some variable has no pure power in the span;
    returns INCONCLUSIVE at the cap otherwise.
    """
    if cap < 4:
        raise BrsError("oracle cap must be at least 4")
    history: list[int] = []
    for d in range(4, cap + 1, 2):
        jt, ech = _jet_model(I, d)
        qd = jt.size - ech.rank
        history.append(qd)
        if len(history) >= 2 and history[-1] == history[-2]:
            return qd
        if len(history) >= 3:
            inc_new = history[-1] - history[-2]
            inc_old = history[-2] - history[-3]
            if inc_new >= inc_old >= 1 and not _power_probe(I, jt, ech):
                return NOT_FINITE
    return INCONCLUSIVE
