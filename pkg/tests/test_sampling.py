import random

import pytest
from hypothesis import given, strategies as st

from mapwords.maps import genus, is_connected, validate
from mapwords.perm import DomainError
from mapwords.sampling import random_map, random_planar_map, rooted_map_census

CENSUS = {1: 2, 2: 10, 3: 74, 4: 706}


@pytest.mark.parametrize("m", sorted(CENSUS))
def test_census_sizes(m):
    assert len(rooted_map_census(m)) == CENSUS[m]


@given(st.integers(1, 8), st.integers(0, 10**6))
def test_random_map(m, seed):
    g = random_map(m, random.Random(seed))
    assert validate(g) == "ok" and is_connected(g) and g.num_edges() == m


@given(st.integers(1, 8), st.integers(0, 10**6))
def test_random_planar_map(m, seed):
    g = random_planar_map(m, random.Random(seed))
    assert validate(g) == "ok" and genus(g) == 0 and g.num_edges() == m


def test_seeded_reproducibility():
    assert random_map(5, random.Random(7)) == random_map(5, random.Random(7))


def test_guards():
    with pytest.raises(DomainError):
        random_map(0, random.Random(0))
    with pytest.raises(DomainError):
        rooted_map_census(6)
