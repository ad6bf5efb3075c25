"""Mixed spectra and eigenspectra of quasi-homogeneous isolated singularities.

For ``F`` in ``N = n + 1`` variables with Jacobian basis ``B``, each
``beta`` in ``B`` contributes the entry ``(alpha, weight)`` with

    alpha  = N - sum_i w_i (beta_i + 1)
    weight = N if alpha is an integer, N - 1 otherwise

and, for a diagonal automorphism ``z_i -> exp(2 pi i c_i / l) z_i`` fixing
``F``, the eigenvalue exponent ``gamma = sum_i c_i (beta_i + 1) / l mod 1``.
Entry ``(alpha, weight)`` sits in Hodge-Deligne type
``(floor(alpha), weight - floor(alpha))`` with semisimple monodromy
eigenvalue ``exp(2 pi i alpha)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import PAIR, UnitClass, frac_part, gr_convolve_all, gr_gamma_tilde, to_fraction
from .errors import NotInvariantError
from .milnor import MonomialOrder, Polynomial, WeightVector, ell_value, standard_monomial_basis


def spectral_weight(alpha: Fraction, nvars: int) -> int:
    return nvars if alpha.denominator == 1 else nvars - 1


class Spectrum:
    """Multiset of ``(alpha, weight)`` entries with positive multiplicities.

    ``nvars`` is the number of variables of the singularity (``n + 1``).
    """

    __slots__ = ("nvars", "_entries")
    _arity = 2

    def __init__(self, entries: Mapping | Iterable, nvars: int):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: Counter = Counter()
        for entry, mult in items:
            entry = self._coerce(entry)
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicity must be a nonnegative integer, got {mult!r}")
            acc[entry] += mult
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        self._entries = tuple(sorted((e, m) for e, m in acc.items() if m > 0))

    def _coerce(self, entry) -> tuple:
        if len(entry) != self._arity:
            raise ValueError(f"expected {self._arity}-component entries, got {entry!r}")
        return (to_fraction(entry[0]), int(entry[1]))

    @property
    def entries(self) -> tuple:
        """Sorted ``((alpha, weight[, gamma]), mult)`` pairs."""
        return self._entries

    def as_dict(self) -> dict:
        return dict(self._entries)

    def total(self) -> int:
        return sum(m for _, m in self._entries)

    def alpha_multiplicities(self) -> Counter:
        acc: Counter = Counter()
        for e, m in self._entries:
            acc[e[0]] += m
        return acc

    def is_symmetric(self) -> bool:
        """Multiplicity of ``alpha`` equals that of ``nvars - alpha``."""
        mults = self.alpha_multiplicities()
        return all(mults[self.nvars - a] == m for a, m in mults.items())

    def _replace(self, entries) -> Spectrum:
        return type(self)(entries, self.nvars)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if type(other) is type(self):
            return self.nvars == other.nvars and self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.nvars, self._entries))

    def __repr__(self):
        body = ", ".join(
            "(" + ", ".join(str(x) for x in e) + f"):{m}" for e, m in self._entries
        )
        return f"{type(self).__name__}({{{body}}}, nvars={self.nvars})"

    def to_json(self) -> list:
        out = []
        for e, m in self._entries:
            item = {"alpha": str(e[0]), "weight": e[1], "mult": m}
            if len(e) == 3:
                item["gamma"] = str(e[2])
            out.append(item)
        return out

    @staticmethod
    def from_json(data: list, nvars: int) -> Spectrum:
        """Rebuild a Spectrum, or an EigenSpectrum if entries carry ``gamma``."""
        if any("gamma" in item for item in data):
            return EigenSpectrum(
                (((Fraction(d["alpha"]), int(d["weight"]), Fraction(d.get("gamma", "0"))),
                  int(d["mult"])) for d in data),
                nvars,
            )
        return Spectrum(
            (((Fraction(d["alpha"]), int(d["weight"])), int(d["mult"])) for d in data), nvars
        )


class EigenSpectrum(Spectrum):
    """Multiset of ``(alpha, weight, gamma)`` entries, ``gamma`` in Q/Z."""

    __slots__ = ()
    _arity = 3

    def _coerce(self, entry) -> tuple:
        if len(entry) != 3:
            raise ValueError(f"expected 3-component entries, got {entry!r}")
        return (to_fraction(entry[0]), int(entry[1]), UnitClass(entry[2]))

    def forget_gamma(self) -> Spectrum:
        return Spectrum((((a, w), m) for (a, w, _), m in self._entries), self.nvars)


@dataclass(frozen=True)
class DiagonalAutomorphism:
    """``z_i -> zeta_l^{c_i} z_i`` with each ``c_i`` reduced mod ``l``."""

    order: int
    c: tuple

    def __init__(self, order: int, c: Iterable[int]):
        if order < 1:
            raise ValueError("automorphism order must be positive")
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "c", tuple(int(x) % order for x in c))

    @classmethod
    def identity(cls, nvars: int) -> DiagonalAutomorphism:
        return cls(1, (0,) * nvars)

    def character(self, m) -> UnitClass:
        """Exponent of the eigenvalue of the monomial ``z^m``."""
        return UnitClass(Fraction(sum(ci * mi for ci, mi in zip(self.c, m)), self.order))

    def fixes(self, F: Polynomial) -> bool:
        return all(self.character(m) == UnitClass(0) for m in F.support())


def _alpha(beta, w: WeightVector, nvars: int) -> Fraction:
    return nvars - ell_value(beta, w)


def mixed_spectrum(F: Polynomial, w: WeightVector, order: MonomialOrder | None = None) -> Spectrum:
    nvars = F.nvars
    basis = standard_monomial_basis(F, w, order)
    entries = Counter()
    for beta in basis:
        a = _alpha(beta, w, nvars)
        entries[(a, spectral_weight(a, nvars))] += 1
    return Spectrum(entries, nvars)


def eigenspectrum(
    F: Polynomial,
    w: WeightVector,
    g: DiagonalAutomorphism,
    order: MonomialOrder | None = None,
) -> EigenSpectrum:
    nvars = F.nvars
    if len(g.c) != nvars:
        raise ValueError(f"automorphism acts on {len(g.c)} variables, polynomial has {nvars}")
    if not g.fixes(F):
        raise NotInvariantError("polynomial is not invariant under the automorphism")
    basis = standard_monomial_basis(F, w, order)
    entries = Counter()
    for beta in basis:
        a = _alpha(beta, w, nvars)
        gamma = g.character(tuple(b + 1 for b in beta))
        entries[(a, spectral_weight(a, nvars), gamma)] += 1
    return EigenSpectrum(entries, nvars)


def bp_eigenspectrum(lambdas: Sequence[int], c: Sequence[int], l: int) -> EigenSpectrum:
    """Eigenspectrum of ``sum z_i^{lambda_i}`` under ``z_i -> zeta_l^{c_i} z_i``.

    Computed as the convolution of the elementary elements
    ``sum_{j=1}^{m-1} [((m-j)/m, j c/l)]`` without any Groebner basis.
    """
    if len(lambdas) != len(c):
        raise ValueError("lambdas and c must have the same length")
    if any(m < 2 for m in lambdas):
        raise ValueError("exponents must be at least 2")
    nvars = len(lambdas)
    prod = gr_convolve_all((gr_gamma_tilde(m, ci, l) for m, ci in zip(lambdas, c)), PAIR)
    return EigenSpectrum(
        (((a, spectral_weight(a, nvars), gamma), coeff) for (a, gamma), coeff in prod),
        nvars,
    )


def base_change(s: Spectrum, k: int) -> Spectrum:
    """Replace each ``alpha`` by ``{k alpha} + floor(alpha)``.

    This is the effect of pulling back along ``t -> t^k``: the semisimple
    monodromy eigenvalues are raised to the ``k``-th power while the Hodge
    type is kept.  Weight and ``gamma`` are unchanged.
    """
    if k < 1:
        raise ValueError("base change exponent must be positive")
    return s._replace(
        ((frac_part(k * e[0]) + math.floor(e[0]),) + e[1:], m) for e, m in s
    )


@dataclass(frozen=True)
class HodgeDeligneTable:
    """Dimensions indexed by ``(p, q, eigenvalue)``; eigenvalue as a UnitClass."""

    dims: tuple

    def as_dict(self) -> dict:
        return dict(self.dims)

    def total(self) -> int:
        return sum(d for _, d in self.dims)

    def __getitem__(self, key):
        p, q, eig = key
        return self.as_dict().get((p, q, UnitClass(eig)), 0)

    def to_json(self) -> list:
        return [
            {"p": p, "q": q, "eigenvalue": str(eig), "dim": d}
            for (p, q, eig), d in self.dims
        ]


def hodge_deligne_table(s: Spectrum) -> HodgeDeligneTable:
    acc: Counter = Counter()
    for e, m in s:
        alpha, weight = e[0], e[1]
        p = math.floor(alpha)
        acc[(p, weight - p, UnitClass(alpha))] += m
    return HodgeDeligneTable(tuple(sorted(acc.items())))
