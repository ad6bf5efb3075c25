"""Exact residues mod 1 and sparse integer group rings over Q and Q x Q/Z.

Rationals are plain :class:`fractions.Fraction` values.  A group-ring element
is a finite formal sum ``sum c_k [k]`` with integer coefficients; its keys are
either rationals (the group Q) or pairs ``(alpha, gamma)`` with ``gamma`` a
:class:`UnitClass` (the group Q x Q/Z).  The product is convolution: keys add.

    >>> g4 = gr_gamma(4)
    >>> gr_coeff(g4 * g4 * g4 * g4, 2)
    19
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Iterable, Mapping, Union

from .errors import DomainMismatchError

Rational = Fraction

RATIONAL = "Q"
PAIR = "QxQ/Z"


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


@total_ordering
class UnitClass:
    """An element of Q/Z, stored by its representative in [0, 1)."""

    __slots__ = ("_value",)

    def __init__(self, value=0):
        if isinstance(value, UnitClass):
            self._value = value._value
        else:
            self._value = frac_part(to_fraction(value))

    @property
    def value(self) -> Fraction:
        return self._value

    def __add__(self, other):
        if not isinstance(other, UnitClass):
            other = UnitClass(other)
        return UnitClass(self._value + other._value)

    __radd__ = __add__

    def __neg__(self):
        return UnitClass(-self._value)

    def __sub__(self, other):
        return self + (-UnitClass(other))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return UnitClass(self._value * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, UnitClass):
            return self._value == other._value
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, UnitClass):
            return self._value < other._value
        return NotImplemented

    def __hash__(self):
        return hash(("UnitClass", self._value))

    def __repr__(self):
        return f"UnitClass({str(self._value)!r})"

    def __str__(self):
        return str(self._value)


Key = Union[Fraction, tuple]


def _coerce_key(key) -> tuple[str, Key]:
    if isinstance(key, tuple):
        if len(key) != 2:
            raise ValueError(f"pair keys have two components, got {key!r}")
        return PAIR, (to_fraction(key[0]), UnitClass(key[1]))
    return RATIONAL, to_fraction(key)


def _sort_key(key: Key):
    if isinstance(key, tuple):
        return (key[0], key[1].value)
    return (key,)


def _add_keys(a: Key, b: Key) -> Key:
    if isinstance(a, tuple):
        return (a[0] + b[0], a[1] + b[1])
    return a + b


class GroupRingElt:
    """Immutable finite integer combination of group elements.

    Terms are kept in canonical form: zero coefficients are dropped and keys
    are sorted numerically (by ``alpha``, then by the residue).  Two elements
    are equal exactly when their term lists agree.  The zero element has no
    terms and is compatible with either key group.
    """

    __slots__ = ("_terms", "_kind", "_index")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        kind = None
        for key, coeff in items:
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficients must be integers, got {coeff!r}")
            k_kind, key = _coerce_key(key)
            if kind is None:
                kind = k_kind
            elif kind != k_kind:
                raise DomainMismatchError("mixed key groups in one element")
            acc[key] = acc.get(key, 0) + coeff
        self._terms = tuple(
            (k, acc[k]) for k in sorted(acc, key=_sort_key) if acc[k] != 0
        )
        self._kind = kind if self._terms else None
        self._index = dict(self._terms)

    @classmethod
    def unit(cls, kind: str = RATIONAL) -> GroupRingElt:
        if kind == RATIONAL:
            return cls({Fraction(0): 1})
        if kind == PAIR:
            return cls({(Fraction(0), UnitClass(0)): 1})
        raise ValueError(f"unknown key group {kind!r}")

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def kind(self) -> str | None:
        """``"Q"``, ``"QxQ/Z"``, or None for the zero element."""
        return self._kind

    def keys(self) -> list:
        return [k for k, _ in self._terms]

    def coeff(self, key) -> int:
        try:
            k_kind, key = _coerce_key(key)
        except (TypeError, ValueError):
            return 0
        if self._kind is not None and k_kind != self._kind:
            return 0
        return self._index.get(key, 0)

    def total(self) -> int:
        """Augmentation: the sum of all coefficients."""
        return sum(c for _, c in self._terms)

    def project(self) -> GroupRingElt:
        """Forget the Q/Z component of every key."""
        if self._kind != PAIR:
            return self
        return GroupRingElt((k[0], c) for k, c in self._terms)

    def _check(self, other: GroupRingElt):
        if self._kind and other._kind and self._kind != other._kind:
            raise DomainMismatchError(
                f"cannot combine elements over {self._kind} and {other._kind}"
            )

    def __mul__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return gr_convolve(self, other)

    def __add__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        self._check(other)
        return GroupRingElt(self._terms + other._terms)

    def __neg__(self):
        return GroupRingElt((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if e == 0:
            return GroupRingElt.unit(self._kind or RATIONAL)
        return reduce(gr_convolve, [self] * e)

    def __eq__(self, other):
        if isinstance(other, GroupRingElt):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "GroupRingElt(0)"
        return f"GroupRingElt({format_element(self)})"

    def to_json(self) -> list:
        out = []
        for key, c in self._terms:
            if isinstance(key, tuple):
                out.append({"key": [str(key[0]), str(key[1])], "coeff": c})
            else:
                out.append({"key": str(key), "coeff": c})
        return out

    @classmethod
    def from_json(cls, data: list) -> GroupRingElt:
        terms = []
        for item in data:
            key = item["key"]
            if isinstance(key, list):
                key = (Fraction(key[0]), UnitClass(Fraction(key[1])))
            terms.append((key, int(item["coeff"])))
        return cls(terms)


def format_element(a: GroupRingElt) -> str:
    """Human-readable form such as ``[1] + 4[5/4] + ...``."""
    if not a:
        return "0"
    parts = []
    for key, c in a:
        k = f"({key[0]}, {key[1]})" if isinstance(key, tuple) else str(key)
        coef = "" if c == 1 else ("-" if c == -1 else str(c))
        parts.append(f"{coef}[{k}]")
    return " + ".join(parts).replace("+ -", "- ")


def gr_gamma(m: int) -> GroupRingElt:
    """``[1/m] + [2/m] + ... + [(m-1)/m]``; the zero element when m = 1."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return GroupRingElt((Fraction(j, m), 1) for j in range(1, m))


def gr_gamma_tilde(m: int, c: int, l: int) -> GroupRingElt:
    """``sum_{j=1}^{m-1} [((m-j)/m, j*c/l mod 1)]`` over Q x Q/Z."""
    if m < 1 or l < 1:
        raise ValueError("m and l must be positive integers")
    return GroupRingElt(
        ((Fraction(m - j, m), UnitClass(Fraction(j * c, l))), 1)
        for j in range(1, m)
    )


def gr_convolve(a: GroupRingElt, b: GroupRingElt) -> GroupRingElt:
    if not isinstance(a, GroupRingElt) or not isinstance(b, GroupRingElt):
        raise TypeError("gr_convolve expects two GroupRingElt values")
    a._check(b)
    acc: dict = {}
    for ka, ca in a:
        for kb, cb in b:
            k = _add_keys(ka, kb)
            acc[k] = acc.get(k, 0) + ca * cb
    return GroupRingElt(acc)


def gr_convolve_all(elements: Iterable[GroupRingElt], kind: str = RATIONAL) -> GroupRingElt:
    """Product of a sequence; the empty product is the unit of ``kind``."""
    return reduce(gr_convolve, elements, GroupRingElt.unit(kind))


def gr_coeff(a: GroupRingElt, key) -> int:
    return a.coeff(key)


def gamma_product(degrees: Iterable[int]) -> GroupRingElt:
    """``Gamma_{d_0} * Gamma_{d_1} * ...`` for the given integers."""
    return gr_convolve_all((gr_gamma(d) for d in degrees), RATIONAL)
