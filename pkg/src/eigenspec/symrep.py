"""Sign-character multiplicities in permutation modules of exponent tuples.

For odd ``n`` the degree-(n+2) symmetric Calabi-Yau case leads to the
monomials ``W^k`` with ``0 < k_i < n+2`` and ``sum k_i = (n+3)(n+2)/2 - 1``,
permuted by the symmetric group ``S_{n+2}``.  A node whose orbit has full
size ``(n+2)!`` would force a copy of the sign character in the span of those
monomials; the functions here count such copies by Burnside's lemma.

A permutation fixes ``W^k`` iff ``k`` is constant on its cycles, so all
counts are organized by cycle type rather than by iterating over the group.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import NotApplicableError


def _check_odd(n: int):
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n % 2 == 0:
        raise NotApplicableError(
            f"n = {n} is even: the residue exponent (n+3)/2 is not an integer"
        )


def target_sum(n: int) -> int:
    return (n + 3) * (n + 2) // 2 - 1


def enumerate_monomials(n: int) -> list:
    """All exponent tuples of length n+2, entries in 1..n+1, with the target sum.

    Tuples are produced in lexicographic order.
    """
    _check_odd(n)
    length, top, total = n + 2, n + 1, target_sum(n)
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        lo = max(1, remaining - top * (slots - 1))
        hi = min(top, remaining - (slots - 1))
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(prefix, remaining - v, slots - 1)
            prefix.pop()

    rec([], total, length)
    return out


def partitions(N: int, largest: int | None = None):
    """Partitions of N as non-increasing tuples."""
    largest = N if largest is None else largest
    if N == 0:
        yield ()
        return
    for first in range(min(N, largest), 0, -1):
        for rest in partitions(N - first, first):
            yield (first,) + rest


def class_size(cycle_type: tuple) -> int:
    """Number of permutations of the given cycle type."""
    N = sum(cycle_type)
    z = 1
    for length, mult in Counter(cycle_type).items():
        z *= length ** mult * math.factorial(mult)
    return math.factorial(N) // z


def cycle_sign(cycle_type: tuple) -> int:
    return -1 if (sum(cycle_type) - len(cycle_type)) % 2 else 1


def _fixed_in_orbit(cycle_type: tuple, content: tuple) -> int:
    """Arrangements of ``content`` (value multiplicities) constant on the cycles."""

    @lru_cache(maxsize=None)
    def count(i, remaining):
        if i == len(cycle_type):
            return 1 if not any(remaining) else 0
        length = cycle_type[i]
        total = 0
        for v, r in enumerate(remaining):
            if r >= length:
                nxt = remaining[:v] + (r - length,) + remaining[v + 1:]
                total += count(i + 1, nxt)
        return total

    return count(0, content)


def _fixed_in_all(cycle_type: tuple, top: int, total: int) -> int:
    """Tuples with entries in 1..top summing to ``total``, constant on the cycles."""

    @lru_cache(maxsize=None)
    def count(i, remaining):
        if i == len(cycle_type):
            return 1 if remaining == 0 else 0
        length = cycle_type[i]
        return sum(count(i + 1, remaining - length * v) for v in range(1, top + 1)
                   if remaining - length * v >= 0)

    return count(0, total)


@dataclass(frozen=True)
class OrbitRecord:
    representative: tuple
    size: int
    sign_multiplicity: int
    burnside_count: int = 1   # (1/|G|) sum_g |o^g|, always 1 for a single orbit

    def to_json(self) -> dict:
        return {
            "representative": list(self.representative),
            "size": self.size,
            "sign_multiplicity": self.sign_multiplicity,
        }


def orbit_sign_multiplicity(rep) -> OrbitRecord:
    """Burnside count of sign characters in the span of the orbit of ``rep``.

    ``(1/N!) sum_g sgn(g) |o^g|`` evaluated per cycle type.
    """
    rep = tuple(sorted(int(k) for k in rep))
    N = len(rep)
    content = tuple(Counter(rep).values())
    size = math.factorial(N)
    for m in content:
        size //= math.factorial(m)
    signed = plain = 0
    for ct in partitions(N):
        fixed = _fixed_in_orbit(ct, content)
        if fixed:
            weight = class_size(ct) * fixed
            signed += cycle_sign(ct) * weight
            plain += weight
    order = math.factorial(N)
    sign_mult = Fraction(signed, order)
    burnside = Fraction(plain, order)
    if sign_mult.denominator != 1 or burnside != 1:
        raise ArithmeticError(f"non-integral Burnside count for orbit {rep}")
    return OrbitRecord(rep, size, int(sign_mult), int(burnside))


def orbit_sign_multiplicity_literal(rep) -> int:
    """Same count by summing over every permutation; feasible for short tuples."""
    rep = tuple(rep)
    N = len(rep)
    orbit = set(itertools.permutations(rep))
    total = 0
    for perm in itertools.permutations(range(N)):
        fixed = sum(1 for t in orbit if all(t[perm[i]] == t[i] for i in range(N)))
        total += _perm_sign(perm) * fixed
    q, r = divmod(total, math.factorial(N))
    if r:
        raise ArithmeticError("non-integral literal Burnside sum")
    return q


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    transpositions = 0
    for i in range(len(perm)):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length:
            transpositions += length - 1
    return -1 if transpositions % 2 else 1


@dataclass(frozen=True)
class ObstructionReport:
    n: int
    monomial_count: int
    orbit_count: int
    total_sign_multiplicity: int
    orbits: tuple = field(default=(), compare=False)

    @property
    def verdict(self) -> str:
        # a regular representation would contain exactly one sign character
        return "obstructed" if self.total_sign_multiplicity < 1 else "not-obstructed"

    def to_json(self, include_orbits: bool = False) -> dict:
        out = {
            "n": self.n,
            "monomial_count": self.monomial_count,
            "orbit_count": self.orbit_count,
            "total_sign_multiplicity": self.total_sign_multiplicity,
            "verdict": self.verdict,
        }
        if include_orbits:
            out["orbits"] = [o.to_json() for o in self.orbits]
        return out


def orbit_representatives(n: int) -> list:
    """Sorted (lexicographically minimal) tuples, one per orbit."""
    _check_odd(n)
    return sorted({tuple(sorted(k)) for k in _sorted_tuples(n)})


def _sorted_tuples(n: int):
    length, top, total = n + 2, n + 1, target_sum(n)
    for combo in itertools.combinations_with_replacement(range(1, top + 1), length):
        if sum(combo) == total:
            yield combo


def sign_multiplicity_by_cycle_type(n: int) -> int:
    """Total sign multiplicity on the whole monomial span, per cycle type."""
    _check_odd(n)
    N, top, total = n + 2, n + 1, target_sum(n)
    signed = sum(
        cycle_sign(ct) * class_size(ct) * _fixed_in_all(ct, top, total)
        for ct in partitions(N)
    )
    q, r = divmod(signed, math.factorial(N))
    if r:
        raise ArithmeticError("non-integral sign multiplicity")
    return q


def sign_multiplicity_literal(n: int) -> int:
    """Total sign multiplicity by iterating over all (n+2)! permutations."""
    mons = enumerate_monomials(n)
    N = n + 2
    total = 0
    for perm in itertools.permutations(range(N)):
        fixed = sum(1 for k in mons if all(k[perm[i]] == k[i] for i in range(N)))
        total += _perm_sign(perm) * fixed
    q, r = divmod(total, math.factorial(N))
    if r:
        raise ArithmeticError("non-integral literal sign multiplicity")
    return q


def sign_multiplicity_total(n: int) -> ObstructionReport:
    _check_odd(n)
    orbits = tuple(orbit_sign_multiplicity(rep) for rep in orbit_representatives(n))
    total = sign_multiplicity_by_cycle_type(n)
    if total != sum(o.sign_multiplicity for o in orbits):
        raise ArithmeticError("orbit-wise and cycle-type sign multiplicities disagree")
    return ObstructionReport(
        n=n,
        monomial_count=sum(o.size for o in orbits),
        orbit_count=len(orbits),
        total_sign_multiplicity=total,
        orbits=orbits,
    )
