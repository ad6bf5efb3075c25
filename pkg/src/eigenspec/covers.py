"""Hodge data of cyclic covers ``y^m = f(x)`` of the line branched at 2m points.

Eigenspace ranks on the smooth locus, boundary eigenspectra for the two kinds
of boundary strata of the equal-weight Hassett compactification (two points
colliding: type A; the points splitting into two halves of m: type B), and
the resulting limiting Hodge-Deligne diamonds of ``V^{zeta_m^j}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import UnitClass
from .spectra import EigenSpectrum, base_change, bp_eigenspectrum

STRATA = ("A", "B")


@dataclass(frozen=True)
class CoverConfig:
    m: int
    j: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"cover degree m={self.m} must be at least 2")
        if not 1 <= self.j <= self.m - 1:
            raise ValueError(f"eigenvalue index j={self.j} outside 1..{self.m - 1}")


@dataclass(frozen=True)
class EigenspaceRanks:
    h10: int
    h01: int
    total: int


def eigenspace_ranks(cfg: CoverConfig) -> EigenspaceRanks:
    """Hodge ranks of the ``zeta_m^j`` eigenspace of ``H^1`` of a smooth cover."""
    m, j = cfg.m, cfg.j
    return EigenspaceRanks(2 * (m - j) - 1, 2 * j - 1, 2 * m - 2)


def full_rank(m: int) -> int:
    """Rank of ``H^1`` of the whole cover (all nontrivial eigenspaces)."""
    return 2 * (m - 1) ** 2


def boundary_local_spectrum(m: int, stratum: str) -> EigenSpectrum:
    """Eigenspectrum of the local model at a boundary point, ``g: y -> zeta_m y``.

    Type A is ``y^m + z^2``; type B is one copy of ``y^m + x^m``.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if stratum == "A":
        return bp_eigenspectrum((2, m), (0, 1), m)
    if stratum == "B":
        return bp_eigenspectrum((m, m), (0, 1), m)
    raise ValueError(f"unknown stratum {stratum!r}; expected 'A' or 'B'")


def _local_entries(m: int, j: int, stratum: str, k: int) -> list:
    """Local entries with ``gamma = j/m`` after base change by ``t -> t^k``."""
    spec = base_change(boundary_local_spectrum(m, stratum), k)
    g = UnitClass(Fraction(j, m))
    return [(e, mult) for e, mult in spec if e[2] == g]


@dataclass(frozen=True)
class LmhsDiamond:
    """Limit Hodge-Deligne numbers of ``V^{zeta_m^j}`` along a boundary stratum.

    ``tss_eigen`` maps semisimple-monodromy eigenvalues (as residues) to
    dimensions; ``outlier_type`` is the Hodge type of the non-unipotent
    eigenline when there is one.  ``consistency_flag`` is True when the
    diamond's total rank differs from the rank ``2m - 2`` of the smooth fiber.
    """

    m: int
    j: int
    stratum: str
    h: dict
    N_rank: int
    tss_eigen: dict
    outlier_type: tuple | None
    consistency_flag: bool

    @property
    def rank(self) -> int:
        return sum(self.h.values())

    @property
    def pure(self) -> bool:
        return self.h[(0, 0)] == 0 and self.h[(1, 1)] == 0

    def grid(self) -> list:
        """``[[h11, h10], [h01, h00]]``."""
        h = self.h
        return [[h[(1, 1)], h[(1, 0)]], [h[(0, 1)], h[(0, 0)]]]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "j": self.j,
            "stratum": self.stratum,
            "grid": self.grid(),
            "h": {f"{p},{q}": v for (p, q), v in sorted(self.h.items())},
            "N_rank": self.N_rank,
            "tss_eigen": {str(k): v for k, v in sorted(self.tss_eigen.items())},
            "outlier_type": list(self.outlier_type) if self.outlier_type else None,
            "consistency_flag": self.consistency_flag,
        }


def lmhs(cfg: CoverConfig, stratum: str) -> LmhsDiamond:
    """Limiting diamond of ``V^{zeta_m^j}`` along a type A or type B stratum.

    The Hodge numbers are the known closed forms; the monodromy data are
    read off the local eigenspectrum after the base change that makes the
    family ordered (``t -> t^2`` for type A, ``t -> t^m`` for type B).
    """
    m, j = cfg.m, cfg.j
    if stratum == "A":
        if 2 * j == m:
            h = {(1, 1): 1, (0, 0): 1, (1, 0): m - 1, (0, 1): m - 1}
            n_rank = 1
        else:
            h = {(1, 1): 0, (0, 0): 0, (1, 0): 2 * m - 2 * j - 1, (0, 1): 2 * j - 1}
            n_rank = 0
        local = _local_entries(m, j, "A", 2)
    elif stratum == "B":
        h = {(1, 1): 1, (0, 0): 1, (1, 0): 2 * m - 2 * j - 2, (0, 1): 2 * j - 2}
        n_rank = 1
        local = _local_entries(m, j, "B", m)
    else:
        raise ValueError(f"unknown stratum {stratum!r}; expected 'A' or 'B'")

    rank = sum(h.values())
    tss: dict = {}
    outlier = None
    for (alpha, weight, _), mult in local:
        eig = UnitClass(alpha)
        if eig != UnitClass(0):
            tss[eig] = tss.get(eig, 0) + mult
            p = math.floor(alpha)
            outlier = (p, weight - p)
    tss[UnitClass(0)] = rank - sum(tss.values())
    return LmhsDiamond(
        m=m,
        j=j,
        stratum=stratum,
        h=h,
        N_rank=n_rank,
        tss_eigen=tss,
        outlier_type=outlier,
        consistency_flag=rank != eigenspace_ranks(cfg).total,
    )


def hyperplane_cover_hodge(n: int) -> list:
    """Primitive Hodge numbers ``h^{p,n-p}`` of the double cover of P^n
    branched along 2n+2 general hyperplanes."""
    if n < 1:
        raise ValueError("n must be positive")
    return [math.comb(n, p) ** 2 for p in range(n + 1)]
