"""Upper bounds for the number of nodes on hypersurfaces in weighted P^{n+1}.

A configuration is the list of ambient weights ``e_0, ..., e_{n+1}`` and a
degree ``d`` divisible by every ``e_i``; all bounds are coefficients in the
group-ring product ``Gamma_{d/e_0} * ... * Gamma_{d/e_{n+1}}`` except the
Miyaoka inequality, which needs the surface invariants chi(O) and K^2.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .algebra import GroupRingElt, gamma_product
from .errors import NotApplicableError


@dataclass(frozen=True)
class WeightedHypersurfaceConfig:
    e: tuple
    d: int

    def __init__(self, e: Sequence[int], d: int, warn: bool = True):
        e = tuple(int(x) for x in e)
        d = int(d)
        if any(x <= 0 for x in e) or d <= 0:
            raise ValueError("ambient weights and degree must be positive integers")
        if len(e) < 3:
            raise ValueError(
                f"invalid dimension: {len(e)} ambient weights give n = {len(e) - 2}, need n >= 1"
            )
        bad = [x for x in e if d % x]
        if bad:
            raise ValueError(f"degree {d} is not divisible by ambient weights {bad}")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "d", d)
        note = shared_factor_warning(e) if warn else None
        if note:
            warnings.warn(note, stacklevel=2)

    @property
    def n(self) -> int:
        return len(self.e) - 2

    @property
    def d_i(self) -> tuple:
        return tuple(self.d // x for x in self.e)

    def gamma_product(self) -> GroupRingElt:
        return _cached_gamma_product(tuple(sorted(self.d_i)))


def shared_factor_warning(e: Sequence[int]) -> str | None:
    """Message if some n+1 of the n+2 ambient weights share a factor."""
    for sub in itertools.combinations(e, len(e) - 1):
        if reduce(math.gcd, sub) > 1:
            return f"ambient weights {list(e)}: the weights {list(sub)} share a common factor"
    return None


@lru_cache(maxsize=64)
def _cached_gamma_product(degrees: tuple) -> GroupRingElt:
    return gamma_product(degrees)


def cover_eigen_dimension(cfg: WeightedHypersurfaceConfig, j: int, q: int) -> int:
    """Dimension of the ``exp(-2 pi i j/d)`` eigenspace in ``H^{n-q+1,q}`` of the d-fold cover.

    That is the coefficient of ``[q + j/d]``; requires ``0 < j < d``.
    """
    if not 0 < j < cfg.d:
        raise ValueError(f"eigenvalue index j={j} outside 0 < j < {cfg.d}")
    return cfg.gamma_product().coeff(q + Fraction(j, cfg.d))


def spectral_key(cfg: WeightedHypersurfaceConfig) -> Fraction:
    n, d = cfg.n, cfg.d
    if n % 2 == 0 and d % 2 == 1:
        return Fraction(n + 1, 2) + Fraction(1, 2 * d)
    return Fraction(n + 1, 2) + Fraction(1, d)


def spectral_eigen_index(cfg: WeightedHypersurfaceConfig) -> tuple:
    """``(j, q)`` such that the spectral bound is ``cover_eigen_dimension(cfg, j, q)``."""
    n, d = cfg.n, cfg.d
    if n % 2 == 1:
        return 1, (n + 1) // 2
    return -(-(d + 1) // 2), n // 2


def spectral_node_bound(cfg: WeightedHypersurfaceConfig) -> int:
    return cfg.gamma_product().coeff(spectral_key(cfg))


def naive_middle_bound(cfg: WeightedHypersurfaceConfig) -> int:
    """Primitive middle Hodge number ``h^{n/2,n/2}_pr``; only defined for even n."""
    if cfg.n % 2:
        raise NotApplicableError(
            f"n = {cfg.n} is odd: nodes have trivial monodromy eigenvalue, no middle bound"
        )
    return cfg.gamma_product().coeff(Fraction(cfg.n, 2) + 1)


def miyaoka_bound(chi: int, Ksq) -> int:
    """``floor(8 chi - 8/9 K^2)`` for a nodal surface with K nef."""
    return math.floor(8 * Fraction(chi) - Fraction(8, 9) * Fraction(Ksq))


def p3_surface_invariants(d: int) -> tuple:
    """``(chi(O_X), K_X^2)`` of a degree-d surface in P^3."""
    return 1 + math.comb(d - 1, 3), d * (d - 4) ** 2


def miyaoka_p3(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be positive")
    closed = math.floor(Fraction(4, 9) * d * (d - 1) ** 2)
    via_invariants = miyaoka_bound(*p3_surface_invariants(d))
    assert closed == via_invariants, (d, closed, via_invariants)
    return closed


@dataclass(frozen=True)
class BoundReport:
    config: WeightedHypersurfaceConfig
    spectral: int
    naive: int | None = None
    miyaoka: int | None = None
    provenance: dict = field(default_factory=dict)

    @property
    def best(self) -> int:
        return min(b for b in (self.naive, self.spectral, self.miyaoka) if b is not None)

    def to_json(self) -> dict:
        return {
            "weights": list(self.config.e),
            "degree": self.config.d,
            "n": self.config.n,
            "naive": self.naive,
            "spectral": self.spectral,
            "miyaoka": self.miyaoka,
            "best": self.best,
            "provenance": dict(self.provenance),
        }


def best_node_bound(cfg: WeightedHypersurfaceConfig, chi: int | None = None, Ksq=None) -> BoundReport:
    """All applicable bounds and their minimum.

    ``chi`` and ``Ksq`` describe a surface whose nodes are in bijection with
    those being bounded (e.g. the branch surface of a double cover).  K nef is
    assumed, not checked.
    """
    prov = {
        "spectral": f"coefficient of [{spectral_key(cfg)}] in the Gamma product "
                    "(cyclic-cover eigenspectrum bound)",
    }
    naive = None
    if cfg.n % 2 == 0:
        naive = naive_middle_bound(cfg)
        prov["naive"] = f"primitive h^{{{cfg.n // 2},{cfg.n // 2}}} (coefficient of [{cfg.n // 2 + 1}])"
    else:
        prov["naive"] = "not applicable: n is odd"
    miyaoka = None
    if (chi is None) != (Ksq is None):
        raise ValueError("chi and Ksq must be given together")
    if chi is not None:
        miyaoka = miyaoka_bound(chi, Ksq)
        prov["miyaoka"] = (
            f"floor(8*{chi} - 8/9*{Fraction(Ksq)}); assumes K nef (unverified)"
        )
    else:
        prov["miyaoka"] = "not applicable: no surface invariants given"
    return BoundReport(cfg, spectral_node_bound(cfg), naive, miyaoka, prov)


@dataclass(frozen=True)
class RecordExample:
    name: str
    weights: tuple
    degree: int
    nodes: int
    citation: str
    surface: tuple | None = None   # (chi, K^2) of the associated surface, if any


REGISTRY = (
    RecordExample("three lines in P^2", (1, 1, 1), 3, 3, "elementary"),
    RecordExample("Kummer quartic surface", (1, 1, 1, 1), 4, 16, "Kummer"),
    RecordExample("Barth sextic", (1, 1, 1, 1), 6, 65, "Barth; sharpness via coding theory (Jaffe-Ruberman)",
                  p3_surface_invariants(6)),
    RecordExample("Fermat pencil quintic threefold", (1, 1, 1, 1, 1), 5, 125,
                  "fiber W_0^5+...+W_4^5 = 5 W_0...W_4"),
    RecordExample("van Straten quintic threefold", (1, 1, 1, 1, 1), 5, 130, "van Straten"),
    RecordExample("Fermat-type sextic in P(1,1,1,1,2)", (1, 1, 1, 1, 2), 6, 108,
                  "W_0^6+...+W_3^6+W_4^3 = 3*2^(2/3) W_0...W_4"),
    RecordExample("Fermat-type octic in P(1,1,1,1,4)", (1, 1, 1, 1, 4), 8, 128,
                  "W_0^8+...+W_3^8+W_4^2 = 4 W_0...W_4"),
    RecordExample("Endrass octic double solid", (1, 1, 1, 1, 4), 8, 168,
                  "Endrass octic surface, 168 nodes", p3_surface_invariants(8)),
    RecordExample("Fermat-type dectic in P(1,1,1,2,5)", (1, 1, 1, 2, 5), 10, 100,
                  "W_0^10+W_1^10+W_2^10+W_3^5+W_4^2 = 2^(4/5) 5^(1/2) W_0...W_4", (35, 125)),
    RecordExample("Togliatti quintic preimage in P(1,1,1,2,5)", (1, 1, 1, 2, 5), 10, 124,
                  "4 x 31 nodes of a Togliatti quintic (Beauville)", (35, 125)),
)


def registry_rows() -> list:
    rows = []
    for ex in REGISTRY:
        cfg = WeightedHypersurfaceConfig(ex.weights, ex.degree)
        report = best_node_bound(cfg, *(ex.surface or (None, None)))
        rows.append({
            "name": ex.name,
            "weights": list(ex.weights),
            "degree": ex.degree,
            "nodes": ex.nodes,
            "best_bound": report.best,
            "citation": ex.citation,
        })
    return rows
