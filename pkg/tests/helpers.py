"""Independent oracles and random input generators shared by the test modules.

Nothing here calls into the Groebner code: the oracles enumerate lattice
points or group elements directly so they can check the library.
"""

import itertools
import random
from collections import Counter
from fractions import Fraction

from eigenspec.milnor import Polynomial, WeightVector


def gamma_product_brute(degrees, key):
    """Coefficient of [key] in Gamma_{d_0} * ... * Gamma_{d_r}, by enumeration."""
    key = Fraction(key)
    count = 0
    for ks in itertools.product(*(range(1, d) for d in degrees)):
        if sum(Fraction(k, d) for k, d in zip(ks, degrees)) == key:
            count += 1
    return count


def bp_spectrum_brute(lambdas, c, l):
    """Eigenspectrum of sum z_i^{lambda_i} from the explicit monomial basis.

    The Jacobian ring of a Brieskorn-Pham polynomial has the box basis
    0 <= beta_i <= lambda_i - 2, so no Groebner basis is needed.
    """
    n1 = len(lambdas)
    out = Counter()
    for beta in itertools.product(*(range(lam - 1) for lam in lambdas)):
        ell = sum(Fraction(b + 1, lam) for b, lam in zip(beta, lambdas))
        alpha = n1 - ell
        weight = n1 if alpha.denominator == 1 else n1 - 1
        gamma = Fraction(sum(ci * (b + 1) for ci, b in zip(c, beta)), l) % 1
        out[(alpha, weight, gamma)] += 1
    return out


def interior_points_by_eigenvalue(m):
    """Interior lattice points of the Newton triangle of y^m = f(x), deg f = 2m.

    The triangle has vertices (0,0), (2m,0), (0,m).  Points at height v give
    the holomorphic forms x^a dx / y^{m-v}; under y -> zeta y these span the
    h^{1,0} part of the zeta^v eigenspace.
    """
    counts = Counter()
    for u in range(1, 2 * m):
        for v in range(1, m):
            # strictly inside: u/(2m) + v/m < 1
            if Fraction(u, 2 * m) + Fraction(v, m) < 1:
                counts[v] += 1
    return counts


# -- random quasi-homogeneous polynomials ----------------------------------

def _block(rng, kind, offset, nvars, max_exp):
    """Monomials and weights for one Thom-Sebastiani summand."""
    if kind == "fermat":
        a = rng.randint(2, max_exp)
        mono = [0] * nvars
        mono[offset] = a
        return [tuple(mono)], [Fraction(1, a)]
    a = rng.randint(2, max_exp)
    b = rng.randint(2, max_exp)
    m1 = [0] * nvars
    m2 = [0] * nvars
    if kind == "chain":          # x^a y + y^b
        m1[offset], m1[offset + 1] = a, 1
        m2[offset + 1] = b
        w = [Fraction(b - 1, a * b), Fraction(1, b)]
    else:                        # loop: x^a y + x y^b
        m1[offset], m1[offset + 1] = a, 1
        m2[offset], m2[offset + 1] = 1, b
        w = [Fraction(b - 1, a * b - 1), Fraction(a - 1, a * b - 1)]
    return [tuple(m1), tuple(m2)], w


def _degree_one_monomials(w, bound):
    n = len(w)
    for exps in itertools.product(*(range(bound + 1) for _ in range(n))):
        if sum(e * wi for e, wi in zip(exps, w)) == 1:
            yield exps


def random_quasi_homogeneous(rng, max_vars=4, max_exp=5, extras=2, kinds=None):
    """A random isolated-looking quasi-homogeneous polynomial and its weights.

    The core is a sum of Fermat, chain and loop blocks (each isolated), with
    a few extra monomials of weighted degree one added on top.  Callers must
    still be ready for a non-isolated result when extra terms cancel badly.
    """
    nvars = rng.randint(1, max_vars)
    kinds = kinds or ("fermat", "chain", "loop")
    monos, weights = [], []
    i = 0
    while i < nvars:
        choices = [k for k in kinds if k == "fermat" or i + 1 < nvars]
        if not choices:
            choices = ["fermat"]
        kind = rng.choice(choices)
        ms, ws = _block(rng, kind, i, nvars, max_exp)
        monos.extend(ms)
        weights.extend(ws)
        i += len(ws)
    terms = {m: Fraction(rng.choice([1, 2, 3, -1, -2])) for m in monos}
    pool = [m for m in _degree_one_monomials(weights, 2 * max_exp) if m not in terms]
    for m in rng.sample(pool, min(extras, len(pool))):
        terms[m] = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3))
    return Polynomial(terms, nvars), WeightVector(weights)


def random_bp_case(rng):
    """Brieskorn-Pham exponents with a compatible diagonal automorphism."""
    lambdas = [rng.randint(2, 6) for _ in range(rng.randint(2, 3))]
    l = rng.randint(1, 12)
    c = []
    for lam in lambdas:
        # lam * c_i = 0 mod l  <=>  c_i is a multiple of l / gcd(l, lam)
        step = l // _gcd(l, lam)
        c.append(step * rng.randrange(l // step))
    return lambdas, c, l


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def bp_polynomial(lambdas):
    n = len(lambdas)
    terms = {}
    for i, lam in enumerate(lambdas):
        e = [0] * n
        e[i] = lam
        terms[tuple(e)] = Fraction(1)
    return Polynomial(terms, n), WeightVector([Fraction(1, lam) for lam in lambdas])


def seeded(seed):
    return random.Random(seed)
