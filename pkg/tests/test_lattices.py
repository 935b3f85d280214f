"""Root lattices and their exact invariants, cross-checked against sympy
determinants and against the classical root counts."""

import random

import pytest
import sympy

from k3seg.classify import component, StableType
from k3seg.errors import BadIndexError
from k3seg.lattices import (
    Lattice,
    count_norm_vectors,
    determinant,
    direct_sum,
    gm_weights,
    inertia,
    rank_embeds,
    root_lattice,
    segment_lattice,
    stable_type_lattice,
    wps_weights,
)


def test_a_series_determinants():
    for n in range(1, 18):
        assert root_lattice("A", n).determinant() == n + 1


def test_d_series_determinants():
    for n in range(1, 17):
        assert root_lattice("D", n).determinant() == 4


def test_e_series_determinants():
    # the pattern 9 - n covers the stragglers below E6 as well
    for n in range(1, 9):
        assert root_lattice("E", n).determinant() == 9 - n
    assert [root_lattice("E", n).determinant() for n in (6, 7, 8)] == [3, 2, 1]


def test_index_zero_is_the_empty_lattice():
    for kind in "ADE":
        lat = root_lattice(kind, 0)
        assert lat.rank == 0
        assert lat.determinant() == 1
        assert lat.name == kind + "0"


def test_bad_indices():
    with pytest.raises(BadIndexError):
        root_lattice("A", -1)
    with pytest.raises(BadIndexError):
        root_lattice("E", 9)
    with pytest.raises(BadIndexError):
        root_lattice("F", 4)


def test_root_lattices_are_even_and_positive():
    for kind, n in (("A", 5), ("D", 7), ("E", 6), ("E", 8), ("D", 1), ("E", 2)):
        lat = root_lattice(kind, n)
        assert lat.is_even()
        assert lat.signature() == (lat.rank, 0, 0)


def test_determinant_against_sympy_on_random_symmetric_matrices():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(1, 6)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-4, 4)
        gram = tuple(tuple(row) for row in m)
        assert determinant(gram) == int(sympy.Matrix(m).det())


def test_inertia_on_known_shapes():
    assert inertia(root_lattice("A", 4).gram) == (4, 0, 0)
    assert inertia(((0, 1), (1, 0))) == (1, 1, 0)
    assert inertia(((1, 1), (1, 1))) == (1, 0, 1)
    assert inertia(((0, 0), (0, 0))) == (0, 0, 2)
    assert inertia(()) == (0, 0, 0)


def test_norm_two_counts_match_the_root_numbers():
    assert count_norm_vectors(root_lattice("A", 1), 2) == 2
    assert count_norm_vectors(root_lattice("A", 2), 2) == 6
    assert count_norm_vectors(root_lattice("D", 4), 2) == 24
    assert count_norm_vectors(root_lattice("E", 6), 2) == 72
    assert count_norm_vectors(root_lattice("E", 7), 2) == 126
    assert count_norm_vectors(root_lattice("E", 8), 2) == 240


def test_norm_counts_beyond_two():
    # A2 theta series starts 1 + 6q + 0q^2 + 6q^3
    assert count_norm_vectors(root_lattice("A", 2), 4) == 0
    assert count_norm_vectors(root_lattice("A", 2), 6) == 6
    # D1 is the even integers with the square form
    assert count_norm_vectors(root_lattice("D", 1), 2) == 0
    assert count_norm_vectors(root_lattice("D", 1), 4) == 2


def test_norm_count_on_the_empty_lattice():
    assert count_norm_vectors(root_lattice("A", 0), 2) == 0


def test_low_index_e_identifications():
    def key(lat):
        return (lat.rank, lat.determinant(), count_norm_vectors(lat, 2))

    assert key(root_lattice("E", 5)) == key(root_lattice("D", 5))
    assert key(root_lattice("E", 4)) == key(root_lattice("A", 4))
    a2a1 = direct_sum([root_lattice("A", 2), root_lattice("A", 1)])
    assert key(root_lattice("E", 3)) == key(a2a1)


def test_direct_sum_blocks_and_name():
    lat = direct_sum([root_lattice("A", 1), root_lattice("D", 1)])
    assert lat.gram == ((2, 0), (0, 4))
    assert lat.name == "A1+D1"
    assert lat.determinant() == 8


def test_direct_sum_skips_rank_zero_names():
    parts = [root_lattice("E", 0), root_lattice("A", 17), root_lattice("E", 0)]
    assert direct_sum(parts).name == "A17"
    assert direct_sum([root_lattice("E", 0)]).name == "0"
    assert direct_sum([], name="custom").name == "custom"


def test_stable_type_lattice(named_reports):
    st = StableType((component("E", 0), component("A", 17), component("E", 0)))
    lat = stable_type_lattice(st)
    assert (lat.name, lat.rank, lat.determinant()) == ("A17", 17, 18)
    rep = named_reports["tent"]
    assert (rep.lattice.name, rep.lattice.rank) == ("E3+A11+E3", 17)
    assert rep.lattice.determinant() == 432


def test_segment_lattice_shape():
    lat = segment_lattice()
    assert lat.name == "U+E8(-1)+E8(-1)"
    assert lat.rank == 18
    assert lat.determinant() == -1
    assert lat.signature() == (1, 17, 0)
    assert lat.is_even()


def test_rank_embeds_is_rank_comparison():
    assert rank_embeds(root_lattice("A", 17), segment_lattice())
    assert not rank_embeds(segment_lattice(), root_lattice("A", 17))


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


def test_wps_weights_e_series():
    assert wps_weights("E", 8) == (1, 2, 2, 3, 3, 4, 4, 5, 6)
    assert wps_weights("E", 7) == (1, 1, 2, 2, 2, 3, 3, 4)
    assert wps_weights("E", 6) == (1, 1, 1, 2, 2, 2, 3)
    assert wps_weights("E", 5) == (1, 1, 1, 1, 2, 2)
    assert wps_weights("E", 4) == (1, 1, 1, 1, 1)


def test_wps_weights_d_series():
    for n in range(3, 13):
        assert wps_weights("D", n) == tuple([1, 1, 1, 1] + [2] * (n - 3))


def test_wps_weights_rejections():
    with pytest.raises(BadIndexError):
        wps_weights("A", 5)  # A-family has no attached space here
    with pytest.raises(BadIndexError):
        wps_weights("E", 0)  # no roots
    with pytest.raises(BadIndexError):
        wps_weights("D", 1)  # norm-4 generator, not a root basis
    with pytest.raises(BadIndexError):
        wps_weights("D", 2)  # disconnected diagram
    with pytest.raises(BadIndexError):
        wps_weights("E", 1)  # norm-8 generator
    with pytest.raises(BadIndexError):
        wps_weights("E", 2)
    with pytest.raises(BadIndexError):
        wps_weights("E", 3)  # disconnected diagram
    with pytest.raises(BadIndexError):
        wps_weights("E", 9)


def test_gm_weights_frozen():
    w8, w12 = gm_weights()
    assert w8 == (-4, -3, -2, 2, 3, 4)
    assert w12 == (-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6)
    assert sum(w8) == 0 and sum(w12) == 0


def test_lattice_dataclass_is_immutable():
    lat = root_lattice("A", 2)
    with pytest.raises(Exception):
        lat.name = "other"
    assert isinstance(lat, Lattice)
