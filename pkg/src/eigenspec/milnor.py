"""Sparse polynomials over Q, weight vectors, Groebner bases, Jacobian rings.

Monomials are tuples of nonnegative exponents.  Orders are weighted: a
monomial's primary key is its weighted degree for an integer weight vector,
with ties broken either reverse-lexicographically (the default) or
lexicographically.  For a quasi-homogeneous ``F`` the Jacobian ideal is
weighted homogeneous, so any such order makes the quotient graded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .algebra import to_fraction
from .errors import (
    InconsistentWeightsError,
    IndeterminateWeightsError,
    NonIsolatedSingularityError,
    NotQuasiHomogeneousError,
    SmoothPointError,
)

Monomial = tuple


# -- monomial helpers -------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """Weighted-degree order with a reverse-lex or lex tie-break.

    ``key(m)`` is increasing in the order, so ``max(..., key=order.key)``
    picks the leading monomial.
    """

    __slots__ = ("kappa", "tiebreak")

    def __init__(self, kappa: Sequence[int], tiebreak: str = "revlex"):
        if tiebreak not in ("revlex", "lex"):
            raise ValueError(f"unknown tie-break {tiebreak!r}")
        if any(int(k) != k or k <= 0 for k in kappa):
            raise ValueError("order weights must be positive integers")
        self.kappa = tuple(int(k) for k in kappa)
        self.tiebreak = tiebreak

    def key(self, m: Monomial):
        deg = sum(k * e for k, e in zip(self.kappa, m))
        if self.tiebreak == "revlex":
            return (deg, tuple(-e for e in reversed(m)))
        return (deg, m)

    __call__ = key

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kappa == other.kappa
            and self.tiebreak == other.tiebreak
        )

    def __hash__(self):
        return hash((self.kappa, self.tiebreak))

    def __repr__(self):
        return f"MonomialOrder({self.kappa}, {self.tiebreak!r})"


def grevlex(nvars: int) -> MonomialOrder:
    return MonomialOrder((1,) * nvars, "revlex")


def weighted_revlex(kappa: Sequence[int]) -> MonomialOrder:
    return MonomialOrder(kappa, "revlex")


def weighted_lex(kappa: Sequence[int]) -> MonomialOrder:
    return MonomialOrder(kappa, "lex")


# -- polynomials ------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if nvars is None:
                nvars = len(exps)
            elif len(exps) != nvars:
                raise ValueError(
                    f"monomial {exps} has {len(exps)} exponents, expected {nvars}"
                )
            acc[exps] = acc.get(exps, 0) + to_fraction(coeff)
        if nvars is None or nvars < 1:
            raise ValueError("variable count must be given and positive")
        self.nvars = nvars
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Polynomial:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Monomial, coeff=1) -> Polynomial:
        return cls({tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        return cls.monomial(tuple(1 if k == i else 0 for k in range(nvars)))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self) -> list:
        return sorted(self._terms)

    def coeff(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _same_ring(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise ValueError(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._same_ring(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial._raw(acc, self.nvars)

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._same_ring(other)
            acc: dict = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = mono_mul(m1, m2)
                    acc[m] = acc.get(m, 0) + c1 * c2
            return Polynomial._raw({m: c for m, c in acc.items() if c}, self.nvars)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return Polynomial._raw({}, self.nvars)
            return Polynomial._raw(
                {m: c * other for m, c in self._terms.items()}, self.nvars
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return reduce(lambda a, b: a * b, [self] * e, Polynomial.constant(1, self.nvars))

    def diff(self, i: int) -> Polynomial:
        """Partial derivative with respect to variable ``i`` (0-based)."""
        acc = {}
        for m, c in self._terms.items():
            if m[i]:
                acc[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
        return Polynomial._raw(acc, self.nvars)

    def jacobian_generators(self) -> list:
        return [self.diff(i) for i in range(self.nvars)]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """Terms in descending order (grevlex when no order is given)."""
        order = order or grevlex(self.nvars)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self._terms, key=order.key)

    def leading_term(self, order: MonomialOrder) -> tuple:
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def monic(self, order: MonomialOrder) -> Polynomial:
        _, lc = self.leading_term(order)
        return self * (1 / lc)

    def __repr__(self):
        return f"Polynomial({self.sorted_terms()!r}, nvars={self.nvars})"


# -- weights ----------------------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """Positive rational weights ``w`` with their integer rescaling.

    ``kappaF`` is the least positive integer making every ``kappaF * w_i``
    integral, and ``kappa`` holds those integers.
    """

    w: tuple

    def __init__(self, w: Iterable):
        w = tuple(to_fraction(x) for x in w)
        if not w:
            raise ValueError("empty weight vector")
        if any(x <= 0 for x in w):
            raise ValueError(f"weights must be positive, got {[str(x) for x in w]}")
        object.__setattr__(self, "w", w)

    @property
    def kappaF(self) -> int:
        return reduce(math.lcm, (x.denominator for x in self.w), 1)

    @property
    def kappa(self) -> tuple:
        k = self.kappaF
        return tuple(int(x * k) for x in self.w)

    def __len__(self):
        return len(self.w)

    def degree(self, m: Monomial) -> Fraction:
        return sum((e * x for e, x in zip(m, self.w)), Fraction(0))

    def order(self, tiebreak: str = "revlex") -> MonomialOrder:
        return MonomialOrder(self.kappa, tiebreak)

    def milnor_orlik(self) -> Fraction:
        """``prod (1/w_i - 1)``, the Milnor number of any isolated QH singularity."""
        return reduce(lambda a, b: a * b, (1 / x - 1 for x in self.w), Fraction(1))

    def __str__(self):
        return ",".join(str(x) for x in self.w)


def check_quasi_homogeneous(F: Polynomial, w: WeightVector) -> bool:
    if len(w) != F.nvars:
        raise ValueError(f"{len(w)} weights for a polynomial in {F.nvars} variables")
    if not F:
        raise ValueError("the zero polynomial has no weighted degree")
    return all(w.degree(m) == 1 for m in F.support())


def _rref(rows: list) -> list:
    """Row-reduce an augmented matrix of Fractions in place; returns pivots."""
    pivots = []
    r = 0
    ncols = len(rows[0]) - 1 if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return pivots


def infer_weights(F: Polynomial) -> WeightVector:
    """Solve ``m . w = 1`` over the support of ``F``.

    Raises :class:`IndeterminateWeightsError` when the solution is not
    unique and :class:`InconsistentWeightsError` when there is no solution
    or the unique solution has a non-positive entry.
    """
    if not F:
        raise ValueError("the zero polynomial has no weights")
    n = F.nvars
    rows = [[Fraction(e) for e in m] + [Fraction(1)] for m in F.support()]
    pivots = _rref(rows)
    rank = len(pivots)
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in rows):
        raise InconsistentWeightsError("the weight equations have no solution")
    if rank < n:
        raise IndeterminateWeightsError(
            f"{rank} independent weight equations for {n} unknowns"
        )
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    if any(x <= 0 for x in sol):
        raise InconsistentWeightsError(
            f"weights {[str(x) for x in sol]} are not all positive"
        )
    return WeightVector(sol)


# -- Groebner bases ---------------------------------------------------------

def _normal_form(p: dict, basis: list, order: MonomialOrder) -> dict:
    """Fully reduce ``p`` by monic ``basis`` = [(lm, terms), ...]."""
    p = dict(p)
    r = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.items():
                    t = mono_mul(q, gm)
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _monic(p: dict, order: MonomialOrder) -> tuple:
    lm = max(p, key=order.key)
    inv = 1 / p[lm]
    return lm, {m: c * inv for m, c in p.items()}


def _spoly(f: tuple, g: tuple) -> dict:
    (lf, pf), (lg, pg) = f, g
    lcm = mono_lcm(lf, lg)
    uf, ug = mono_div(lcm, lf), mono_div(lcm, lg)
    acc: dict = {}
    for m, c in pf.items():
        t = mono_mul(uf, m)
        acc[t] = acc.get(t, 0) + c
    for m, c in pg.items():
        t = mono_mul(ug, m)
        acc[t] = acc.get(t, 0) - c
    return {m: c for m, c in acc.items() if c}


def groebner_basis(
    generators: Sequence[Polynomial], order: MonomialOrder | None = None
) -> list:
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    Buchberger's algorithm with the normal selection strategy (smallest
    lcm first) and the Gebauer-Moeller installation of Buchberger's two
    criteria.  Zero generators are ignored; the result is monic and
    sorted by leading monomial, ascending.
    """
    gens = [g for g in generators if g]
    if not gens:
        raise ValueError("the zero ideal has no nontrivial Groebner basis")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("generators live in different polynomial rings")
    order = order or grevlex(nvars)
    key = order.key

    f: list = []   # every basis candidate ever produced: (lm, terms)
    G: list = []   # indices into f of the current basis
    B: list = []   # critical pairs (i, j)

    def update(ih):
        nonlocal G, B
        mh = f[ih][0]
        C = list(G)
        D = []
        while C:
            ig = C.pop()
            mg = f[ig][0]
            lcm_hg = mono_lcm(mh, mg)

            def lcm_divides(ip, lcm_hg=lcm_hg):
                return mono_divides(mono_lcm(mh, f[ip][0]), lcm_hg)

            if mono_coprime(mh, mg) or (
                not any(lcm_divides(ip) for ip in C)
                and not any(lcm_divides(ip) for _, ip in D)
            ):
                D.append((ih, ig))
        E = [(a, b) for a, b in D if not mono_coprime(mh, f[b][0])]
        kept = []
        for i1, i2 in B:
            m1, m2 = f[i1][0], f[i2][0]
            lcm12 = mono_lcm(m1, m2)
            if (
                not mono_divides(mh, lcm12)
                or mono_lcm(m1, mh) == lcm12
                or mono_lcm(m2, mh) == lcm12
            ):
                kept.append((i1, i2))
        B = kept + E
        G = [ig for ig in G if not mono_divides(mh, f[ig][0])] + [ih]

    for g in sorted(gens, key=lambda p: key(p.leading_monomial(order))):
        nf = _normal_form(g._terms, [f[i] for i in G], order)
        if nf:
            f.append(_monic(nf, order))
            update(len(f) - 1)

    while B:
        pair = min(B, key=lambda pr: key(mono_lcm(f[pr[0]][0], f[pr[1]][0])))
        B.remove(pair)
        s = _spoly(f[pair[0]], f[pair[1]])
        if not s:
            continue
        h = _normal_form(s, [f[i] for i in G], order)
        if h:
            f.append(_monic(h, order))
            update(len(f) - 1)

    # inter-reduce: drop redundant leading monomials, then tail-reduce
    cands = sorted((f[i] for i in G), key=lambda t: key(t[0]))
    minimal = []
    for i, (lm, p) in enumerate(cands):
        if not any(mono_divides(olm, lm) for j, (olm, _) in enumerate(cands) if j != i
                   and (olm != lm or j < i)):
            minimal.append((lm, p))
    reduced = []
    for i, (lm, p) in enumerate(minimal):
        others = [t for j, t in enumerate(minimal) if j != i]
        tail = {m: c for m, c in p.items() if m != lm}
        tail = _normal_form(tail, others, order)
        tail[lm] = Fraction(1)
        reduced.append(Polynomial._raw(tail, nvars))
    return sorted(reduced, key=lambda p: key(p.leading_monomial(order)))


def reduce_polynomial(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of ``p`` on full division by ``basis``."""
    monic = [_monic(b._terms, order) for b in basis if b]
    return Polynomial._raw(_normal_form(p._terms, monic, order), p.nvars)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    return Polynomial._raw(_spoly(_monic(f._terms, order), _monic(g._terms, order)), f.nvars)


def is_groebner(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Every S-polynomial reduces to zero modulo ``basis``."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if reduce_polynomial(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


def is_reduced(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Monic, and no term of any element is divisible by another's leading monomial."""
    lms = [b.leading_monomial(order) for b in basis]
    for i, b in enumerate(basis):
        if b.coeff(lms[i]) != 1:
            return False
        for m in b.support():
            if any(mono_divides(lms[j], m) for j in range(len(basis)) if j != i):
                return False
    return True


# -- Jacobian ring ----------------------------------------------------------

@dataclass(frozen=True)
class MonomialBasis:
    """Standard monomials spanning ``Q[z]/J_F``."""

    betas: tuple

    @property
    def milnor_number(self) -> int:
        return len(self.betas)

    def __iter__(self):
        return iter(self.betas)

    def __len__(self):
        return len(self.betas)


def standard_monomials(leading: Sequence[Monomial], nvars: int) -> list:
    """Monomials divisible by none of ``leading``, if finitely many."""
    if any(all(e == 0 for e in m) for m in leading):
        return []
    for i in range(nvars):
        if not any(m[i] > 0 and all(e == 0 for k, e in enumerate(m) if k != i)
                   for m in leading):
            raise NonIsolatedSingularityError(
                f"no pure power of variable {i + 1} among the leading monomials: "
                "the quotient is infinite dimensional"
            )
    seen = set()
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            if m in seen or any(mono_divides(lm, m) for lm in leading):
                continue
            seen.add(m)
            for i in range(nvars):
                nxt.append(m[:i] + (m[i] + 1,) + m[i + 1:])
        frontier = nxt
    return sorted(seen)


def standard_monomial_basis(
    F: Polynomial, w: WeightVector, order: MonomialOrder | None = None
) -> MonomialBasis:
    """Monomial basis of the Jacobian ring of a quasi-homogeneous ``F``.

    ``order`` defaults to the weighted reverse-lex order for ``w``.
    Raises :class:`NotQuasiHomogeneousError`, :class:`SmoothPointError`
    or :class:`NonIsolatedSingularityError`.
    """
    if not check_quasi_homogeneous(F, w):
        raise NotQuasiHomogeneousError(f"polynomial is not quasi-homogeneous for weights {w}")
    order = order or w.order()
    gens = [g for g in F.jacobian_generators() if g]
    if not gens:
        raise NonIsolatedSingularityError("all partial derivatives vanish")
    gb = groebner_basis(gens, order)
    leading = [g.leading_monomial(order) for g in gb]
    if any(all(e == 0 for e in m) for m in leading):
        raise SmoothPointError("the Jacobian ideal is the unit ideal; the origin is smooth")
    return MonomialBasis(tuple(standard_monomials(leading, F.nvars)))


def milnor_number(F: Polynomial, w: WeightVector) -> int:
    return standard_monomial_basis(F, w).milnor_number


def ell_value(beta: Monomial, w: WeightVector) -> Fraction:
    """``sum_i w_i (beta_i + 1)``."""
    if len(beta) != len(w):
        raise ValueError("monomial and weight vector lengths differ")
    return sum((x * (b + 1) for x, b in zip(w.w, beta)), Fraction(0))
