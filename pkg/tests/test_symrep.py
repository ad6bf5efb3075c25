import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eigenspec.bounds import WeightedHypersurfaceConfig, spectral_node_bound
from eigenspec.errors import NotApplicableError
from eigenspec.symrep import (
    class_size,
    cycle_sign,
    enumerate_monomials,
    orbit_representatives,
    orbit_sign_multiplicity,
    orbit_sign_multiplicity_literal,
    partitions,
    sign_multiplicity_by_cycle_type,
    sign_multiplicity_literal,
    sign_multiplicity_total,
    target_sum,
)


def test_enumerate_n1():
    assert enumerate_monomials(1) == [(1, 2, 2), (2, 1, 2), (2, 2, 1)]


def test_enumerate_n3_count():
    mons = enumerate_monomials(3)
    assert len(mons) == 715 - 630 + 50 == 135
    assert mons == sorted(mons)
    assert all(sum(k) == 14 and all(1 <= x <= 4 for x in k) for k in mons)


def test_enumerate_against_product():
    brute = [k for k in itertools.product(range(1, 5), repeat=5) if sum(k) == target_sum(3)]
    assert enumerate_monomials(3) == brute


def test_even_n_not_applicable():
    with pytest.raises(NotApplicableError):
        enumerate_monomials(2)
    with pytest.raises(NotApplicableError):
        sign_multiplicity_total(4)
    with pytest.raises(ValueError):
        enumerate_monomials(0)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_pigeonhole_repeated_entry(n):
    for k in enumerate_monomials(n):
        assert len(set(k)) < len(k)
        assert all(0 < x < n + 2 for x in k)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_monomial_count_matches_spectral_bound(n):
    cfg = WeightedHypersurfaceConfig((1,) * (n + 2), n + 2)
    assert len(enumerate_monomials(n)) == spectral_node_bound(cfg)


def test_group_helpers():
    assert [sum(class_size(ct) for ct in partitions(N)) for N in range(1, 7)] == \
        [math.factorial(N) for N in range(1, 7)]
    assert cycle_sign((2,)) == -1 and cycle_sign((3,)) == 1 and cycle_sign((2, 2)) == 1
    assert len(list(partitions(7))) == 15


def test_orbit_examples():
    rec = orbit_sign_multiplicity((1, 2, 2))
    assert rec.sign_multiplicity == 0 and rec.size == 3
    assert orbit_sign_multiplicity((1, 1, 4, 4, 4)).sign_multiplicity == 0
    assert orbit_sign_multiplicity((2, 3, 3, 3, 3)).sign_multiplicity == 0
    assert orbit_sign_multiplicity_literal((1, 1, 4, 4, 4)) == 0
    assert orbit_sign_multiplicity_literal((2, 3, 3, 3, 3)) == 0


def test_distinct_entries_carry_one_sign_copy():
    assert orbit_sign_multiplicity((1, 2, 3)).sign_multiplicity == 1
    assert orbit_sign_multiplicity((1, 2, 3)).size == 6


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_orbit_count_matches_literal(rep):
    rec = orbit_sign_multiplicity(rep)
    assert rec.sign_multiplicity == orbit_sign_multiplicity_literal(sorted(rep))
    assert rec.size == len(set(itertools.permutations(rep)))
    assert math.factorial(len(rep)) % rec.size == 0
    assert rec.sign_multiplicity in (0, 1)
    assert rec.sign_multiplicity == (1 if len(set(rep)) == len(rep) else 0)


@pytest.mark.parametrize("n", [1, 3])
def test_cycle_type_matches_literal(n):
    assert sign_multiplicity_by_cycle_type(n) == sign_multiplicity_literal(n)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_total_obstructed(n):
    report = sign_multiplicity_total(n)
    assert report.total_sign_multiplicity == 0
    assert report.verdict == "obstructed"
    assert report.monomial_count == len(enumerate_monomials(n))
    assert report.orbit_count == len(orbit_representatives(n))
    assert all(o.representative == tuple(sorted(o.representative)) for o in report.orbits)


def test_report_json():
    doc = sign_multiplicity_total(1).to_json(include_orbits=True)
    assert doc["orbits"] == [{"representative": [1, 2, 2], "size": 3, "sign_multiplicity": 0}]
    assert "orbits" not in sign_multiplicity_total(1).to_json()
