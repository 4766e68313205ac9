"""Exact multivariate polynomial arithmetic over the rationals, ordered locally.

Everything downstream (standard bases, derivation modules, invariants) is built
on the types here.  Coefficients are `fractions.Fraction` throughout and no
floating point is ever introduced: all the identity checks this package exists
for are exact integer equalities, so a single rounded coefficient would
invalidate the whole pipeline.

The one ring ordering shipped is negative-degree-reverse-lexicographic: lower
total degree wins, ties are broken on the rightmost differing exponent (larger
exponent wins).  Under it the constant monomial 1 is the greatest monomial, so
leading terms pick out lowest-order behaviour and computations take place in
the local ring of germs at the origin rather than in the polynomial ring.

All values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import ContextError, GermError

CoeffLike = Union[int, Fraction]


def as_coeff(value: CoeffLike) -> Fraction:
    """Coerce an exact number to Fraction; floats are rejected outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational coefficient required, got {type(value).__name__}")


class VarContext:
    """Ordered, pairwise-distinct variable names fixing the ambient ring."""

    __slots__ = ("names",)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ContextError("a variable context needs at least one variable")
        if len(set(names)) != len(names):
            raise ContextError(f"duplicate variable names in {names!r}")
        self.names = names

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ContextError(f"unknown variable {name!r}") from None

    def variable(self, i: int) -> "Polynomial":
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, [(Monomial(exps), Fraction(1))])

    def variables(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(i) for i in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, VarContext) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarContext({', '.join(self.names)})"


def require_same_ctx(a: VarContext, b: VarContext) -> None:
    if a != b:
        raise ContextError(f"mixed variable contexts: {a!r} vs {b!r}")


class Monomial:
    """Exponent vector with cached total degree.

    Monomials do not carry their context; operations check exponent lengths,
    and `Polynomial` owns the actual context.
    """

    __slots__ = ("exponents", "degree", "_key")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.exponents = exps
        self.degree = sum(exps)
        self._key = None

    def sort_key(self) -> tuple:
        # Greater key means greater monomial under negdegrevlex.
        key = self._key
        if key is None:
            key = (-self.degree, self.exponents[::-1])
            self._key = key
        return key

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents, strict=True))

    def divides(self, other: "Monomial") -> bool:
        return self.degree <= other.degree and all(
            a <= b for a, b in zip(self.exponents, other.exponents, strict=True)
        )

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; caller must ensure other divides self."""
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents, strict=True))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents, strict=True))

    def pure_power_axis(self) -> int | None:
        """Index of the single variable this is a power of, or None.

        The unit monomial is a pure power of every variable; it returns -1.
        """
        nonzero = [i for i, e in enumerate(self.exponents) if e > 0]
        if not nonzero:
            return -1
        if len(nonzero) == 1:
            return nonzero[0]
        return None

    def is_unit(self) -> bool:
        return self.degree == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial{self.exponents}"


@dataclass(frozen=True)
class LocalOrder:
    """Local monomial ordering: 1 is strictly greater than every variable."""

    kind: str = "negdegrevlex"

    def key(self, m: Monomial) -> tuple:
        return m.sort_key()

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = a.sort_key(), b.sort_key()
        if ka > kb:
            return 1
        if ka < kb:
            return -1
        return 0


NEGDEGREVLEX = LocalOrder()


@dataclass(frozen=True)
class ModuleOrder:
    """Module ordering layered over the ring order.

    position="top": term over position, ties broken by ascending component.
    position="pot": position over term; lower components dominate outright,
    which makes the first block of components an elimination block (that is
    exactly what the syzygy extraction needs).
    """

    ring: LocalOrder = NEGDEGREVLEX
    position: str = "top"

    def key(self, component: int, m: Monomial) -> tuple:
        if self.position == "pot":
            return (-component,) + m.sort_key()
        return m.sort_key() + (-component,)


TOP = ModuleOrder(position="top")
POT = ModuleOrder(position="pot")


def compare(a: Monomial, b: Monomial, order: LocalOrder = NEGDEGREVLEX) -> int:
    """Total order on monomials: -1 less, 0 equal, 1 greater."""
    if len(a.exponents) != len(b.exponents):
        raise ContextError("monomials come from contexts of different size")
    return order.compare(a, b)


Term = tuple[Monomial, Fraction]


class Polynomial:
    """Sparse polynomial: terms sorted strictly descending under the local order.

    The zero polynomial has an empty term tuple.  Arithmetic is exact and
    always returns normalized results (no zero coefficients, no duplicate
    monomials).  Instances are immutable by convention; nothing mutates
    `terms` after construction.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VarContext, terms: Iterable[tuple[Monomial, CoeffLike]] = ()):
        collected: dict[tuple, tuple[Monomial, Fraction]] = {}
        for mono, coeff in terms:
            if len(mono.exponents) != ctx.n:
                raise ContextError(f"monomial {mono!r} does not fit context {ctx!r}")
            coeff = as_coeff(coeff)
            prev = collected.get(mono.exponents)
            if prev is not None:
                coeff = prev[1] + coeff
            collected[mono.exponents] = (mono, coeff)
        cleaned = [(m, c) for (m, c) in collected.values() if c != 0]
        cleaned.sort(key=lambda t: t[0].sort_key(), reverse=True)
        self.ctx = ctx
        self.terms = tuple(cleaned)

    @staticmethod
    def _raw(ctx: VarContext, terms: tuple[Term, ...]) -> "Polynomial":
        """Trusted constructor for terms already normalized and sorted."""
        p = object.__new__(Polynomial)
        p.ctx = ctx
        p.terms = terms
        return p

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, ctx: VarContext) -> "Polynomial":
        return cls._raw(ctx, ())

    @classmethod
    def constant(cls, ctx: VarContext, value: CoeffLike) -> "Polynomial":
        c = as_coeff(value)
        if c == 0:
            return cls.zero(ctx)
        return cls._raw(ctx, ((Monomial((0,) * ctx.n), c),))

    @classmethod
    def monomial(cls, ctx: VarContext, exponents: Iterable[int], coeff: CoeffLike = 1) -> "Polynomial":
        return cls(ctx, [(Monomial(exponents), coeff)])

    # ------------------------------------------------------------------
    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def leading(self) -> Term | None:
        """Greatest term under the local order (None for the zero polynomial)."""
        return self.terms[0] if self.terms else None

    def constant_term(self) -> Fraction:
        # The unit monomial is the greatest monomial under a local order,
        # so a constant term can only sit in front.
        if self.terms and self.terms[0][0].degree == 0:
            return self.terms[0][1]
        return Fraction(0)

    def degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.degree for m, _ in self.terms)

    def tail_degree(self) -> int:
        """Degree of the leading (lowest-order) monomial; -1 for zero."""
        if not self.terms:
            return -1
        return self.terms[0][0].degree

    def support_vars(self) -> frozenset[int]:
        used = set()
        for m, _ in self.terms:
            for i, e in enumerate(m.exponents):
                if e:
                    used.add(i)
        return frozenset(used)

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        require_same_ctx(self.ctx, other.ctx)
        out: list[Term] = []
        i = j = 0
        a, b = self.terms, other.terms
        while i < len(a) and j < len(b):
            ka, kb = a[i][0].sort_key(), b[j][0].sort_key()
            if ka > kb:
                out.append(a[i])
                i += 1
            elif ka < kb:
                out.append(b[j])
                j += 1
            else:
                c = a[i][1] + b[j][1]
                if c != 0:
                    out.append((a[i][0], c))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Polynomial._raw(self.ctx, tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ctx, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        require_same_ctx(self.ctx, other.ctx)
        acc: dict[tuple, Fraction] = {}
        monos: dict[tuple, Monomial] = {}
        for ma, ca in self.terms:
            ea = ma.exponents
            for mb, cb in other.terms:
                exps = tuple(x + y for x, y in zip(ea, mb.exponents))
                prev = acc.get(exps)
                acc[exps] = cb * ca if prev is None else prev + ca * cb
                if prev is None:
                    monos[exps] = Monomial(exps)
        cleaned = [(monos[e], c) for e, c in acc.items() if c != 0]
        cleaned.sort(key=lambda t: t[0].sort_key(), reverse=True)
        return Polynomial._raw(self.ctx, tuple(cleaned))

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if not isinstance(power, int) or power < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scale(self, c: CoeffLike) -> "Polynomial":
        c = as_coeff(c)
        if c == 0:
            return Polynomial.zero(self.ctx)
        return Polynomial._raw(self.ctx, tuple((m, coeff * c) for m, coeff in self.terms))

    def mul_term(self, mono: Monomial, coeff: Fraction) -> "Polynomial":
        """Multiply by a single term.  Order is preserved, so no re-sort."""
        if coeff == 0:
            return Polynomial.zero(self.ctx)
        if mono.is_unit():
            return self.scale(coeff)
        return Polynomial._raw(
            self.ctx, tuple((m.mul(mono), c * coeff) for m, c in self.terms)
        )

    def partial(self, i: int) -> "Polynomial":
        """Exact partial derivative with respect to variable i."""
        if not 0 <= i < self.ctx.n:
            raise ContextError(f"variable index {i} out of range")
        out: list[Term] = []
        for m, c in self.terms:
            e = m.exponents[i]
            if e == 0:
                continue
            exps = list(m.exponents)
            exps[i] = e - 1
            out.append((Monomial(exps), c * e))
        # Surviving terms keep their relative order (same shift for all),
        # but route through the normalizing constructor for safety.
        return Polynomial(self.ctx, out)

    # ------------------------------------------------------------------
    # context plumbing

    def embed(self, new_ctx: VarContext) -> "Polynomial":
        """Reinterpret in a larger context, matching variables by name."""
        mapping = [new_ctx.index(name) for name in self.ctx.names]
        out = []
        for m, c in self.terms:
            exps = [0] * new_ctx.n
            for old_i, e in enumerate(m.exponents):
                exps[mapping[old_i]] = e
            out.append((Monomial(exps), c))
        return Polynomial(new_ctx, out)

    def restrict(self, sub_ctx: VarContext) -> "Polynomial":
        """Project onto a sub-context; fails if other variables occur."""
        mapping = []
        for i, name in enumerate(self.ctx.names):
            mapping.append(sub_ctx.names.index(name) if name in sub_ctx.names else None)
        out = []
        for m, c in self.terms:
            exps = [0] * sub_ctx.n
            for old_i, e in enumerate(m.exponents):
                if e == 0:
                    continue
                if mapping[old_i] is None:
                    raise ContextError(
                        f"variable {self.ctx.names[old_i]!r} not present in {sub_ctx!r}"
                    )
                exps[mapping[old_i]] = e
            out.append((Monomial(exps), c))
        return Polynomial(sub_ctx, out)

    # ------------------------------------------------------------------
    # comparison / display

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ctx, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx.names, tuple((m.exponents, c) for m, c in self.terms)))

    def _format_term(self, mono: Monomial, coeff: Fraction) -> str:
        factors = []
        for name, e in zip(self.ctx.names, mono.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return str(coeff)
        body = "*".join(factors)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{coeff}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.terms):
            rendered = self._format_term(m, c)
            if idx == 0:
                parts.append(rendered)
            elif rendered.startswith("-"):
                parts.append(f"- {rendered[1:]}")
            else:
                parts.append(f"+ {rendered}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@dataclass(frozen=True)
class VectorField:
    """Vector field on the ambient space: one polynomial per variable."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.components:
            raise ContextError("a vector field needs at least one component")
        ctx = self.components[0].ctx
        for c in self.components:
            require_same_ctx(ctx, c.ctx)
        if len(self.components) != ctx.n:
            raise ContextError(
                f"vector field has {len(self.components)} components in a {ctx.n}-variable context"
            )

    @property
    def ctx(self) -> VarContext:
        return self.components[0].ctx

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def jacobian_ideal(f: Polynomial) -> list[Polynomial]:
    """All partial derivatives of a germ, in variable order.

    Generates the Jacobian ideal; positions matter to callers that pair
    components with variables, so zero partials are kept in place.
    """
    if f.constant_term() != 0:
        raise GermError("not a germ: f(0) != 0")
    return [f.partial(i) for i in range(f.ctx.n)]


def minors_2x2(f: Polynomial, phi: Polynomial) -> list[Polynomial]:
    """2x2 minors of the Jacobian matrix of the pair (f, phi).

    Generators f_j*phi_k - f_k*phi_j for j < k, in lexicographic (j, k)
    order; n*(n-1)/2 entries, empty for one variable.
    """
    require_same_ctx(f.ctx, phi.ctx)
    n = f.ctx.n
    df = [f.partial(i) for i in range(n)]
    dphi = [phi.partial(i) for i in range(n)]
    out = []
    for j in range(n):
        for k in range(j + 1, n):
            out.append(df[j] * dphi[k] - df[k] * dphi[j])
    return out

