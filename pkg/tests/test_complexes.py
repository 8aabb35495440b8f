"""Balanced complexes: boundaries, homology, and the lattice comparison."""

import itertools
import random

import pytest

from balacyc.complexes import (
    apply_top_coboundary,
    boundary_matrix,
    build_complex,
    coboundary_lattice,
    coboundary_matches_fourier,
    coboundary_top_matrix,
    cochain_vector,
    complex_json,
    fourier_lattice,
    is_coboundary,
    nested_elements,
    reduced_cohomology,
    reduced_homology,
    top_coboundary_domain,
    uct_consistent,
)
from balacyc.groups import (
    FiniteAbelianGroup,
    GroupFunction,
    fourier_support,
    positive_dual_block,
    product_group,
)
from balacyc.intlinalg import smith_normal_form

Z2 = FiniteAbelianGroup((2,))
Z3 = FiniteAbelianGroup((3,))
Z4 = FiniteAbelianGroup((4,))
Z5 = FiniteAbelianGroup((5,))
Z22 = FiniteAbelianGroup((2, 2))


def full(colors):
    return nested_elements(colors)


# --- construction -----------------------------------------------------------


def test_f_vectors_frozen():
    assert build_complex((Z2, Z3), full((Z2, Z3))).f_vector() == (5, 6)
    assert build_complex((Z2, Z3), ()).f_vector() == (5, 0)
    assert build_complex((Z2, Z3, Z5), ()).f_vector() == (10, 31, 0)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build_complex((Z2, FiniteAbelianGroup((1,))), ())
    with pytest.raises(ValueError):
        build_complex((Z2, Z3), [((0,), (0,)), ((0,), (0,))])
    with pytest.raises(ValueError):
        build_complex((Z2, Z3), [((0,), (9,))])
    with pytest.raises(ValueError):
        build_complex((), ())


def test_cells_are_canonically_ordered():
    x = build_complex((Z2, Z3, Z5), full((Z2, Z3, Z5)))
    for cells in x.cells_by_dim:
        assert list(cells) == sorted(cells)


def test_single_color_complex():
    # one color: no skeleton below the points, reduced homology counts them
    x = build_complex((Z5,), [((0,),), ((2,),), ((4,),)])
    assert x.f_vector() == (3,)
    assert str(reduced_homology(x, 0)) == "Z^2"
    assert uct_consistent(x)


# --- boundary maps ------------------------------------------------------------


def test_single_edge_boundary_signs():
    x = build_complex((Z2, Z3), [((0,), (0,))])
    d1 = boundary_matrix(x, 1)
    # vertices in canonical order: color 0 first, then color 1
    column = [d1.at(i, 0) for i in range(5)]
    assert column == [-1, 0, 1, 0, 0]  # edge boundary = endpoint1 - endpoint0
    d0 = boundary_matrix(x, 0)
    assert d0.entries == (1,) * 5
    assert (d0 @ d1).is_zero()


def test_boundary_squares_to_zero_everywhere():
    rng = random.Random(1)
    for colors in [(Z2, Z3), (Z2, Z2, Z2), (Z2, Z3, Z5), (Z22, Z3)]:
        points = list(nested_elements(colors))
        tops = rng.sample(points, rng.randint(0, len(points)))
        x = build_complex(colors, tops)
        for i in range(x.top_dim):
            di = boundary_matrix(x, i)
            dnext = boundary_matrix(x, i + 1)
            assert (di @ dnext).is_zero()


def test_rank_of_edge_boundary_full_bipartite():
    x = build_complex((Z2, Z3), full((Z2, Z3)))
    assert smith_normal_form(boundary_matrix(x, 1)).rank == 4


# --- top coboundary ------------------------------------------------------------


def test_coboundary_matrix_formula_two_slots():
    colors = (Z2, Z2)
    labels = top_coboundary_domain(colors)
    assert len(labels) == 4
    rng = random.Random(3)
    psi0 = {(g,): rng.randint(-5, 5) for g in Z2.elements()}
    psi1 = {(g,): rng.randint(-5, 5) for g in Z2.elements()}
    image = apply_top_coboundary(colors, cochain_vector(colors, [psi0, psi1]))
    for row, (g0, g1) in enumerate(nested_elements(colors)):
        expected = psi0[(g1,)] - psi1[(g0,)]
        assert image[row] == expected


def test_coboundary_matrix_ranks():
    assert smith_normal_form(coboundary_top_matrix((Z2, Z2))).rank == 3
    assert smith_normal_form(coboundary_top_matrix((Z2, Z3))).rank == 4


def test_coboundary_is_transposed_top_boundary_blockwise():
    for colors in [(Z2, Z3), (Z2, Z2, Z2), (Z22, Z3)]:
        k = len(colors) - 1
        x = build_complex(colors, full(colors))
        dual = boundary_matrix(x, k).transpose()
        cob = coboundary_top_matrix(colors)
        labels = top_coboundary_domain(colors)
        faces = x.cells_by_dim[k - 1]
        face_index = {cell: j for j, cell in enumerate(faces)}
        assert dual.rows == cob.rows
        for col, (i, t) in enumerate(labels):
            support = tuple(j for j in range(k + 1) if j != i)
            j = face_index[(support, t)]
            assert cob.column(col) == dual.column(j)


def test_random_coboundaries_avoid_positive_block():
    rng = random.Random(9)
    for colors in [(Z2, Z3), (Z2, Z2, Z2), (Z4, Z3)]:
        width = len(top_coboundary_domain(colors))
        block = set(positive_dual_block(colors))
        for _ in range(10):
            psi = [rng.randint(-4, 4) for _ in range(width)]
            image = apply_top_coboundary(colors, psi)
            f = GroupFunction.from_vector(product_group(colors), image)
            assert fourier_support(f).isdisjoint(block)


# --- homology -------------------------------------------------------------------


def test_wedge_homology_frozen():
    x = build_complex((Z2, Z3), full((Z2, Z3)))
    assert str(reduced_homology(x, 1)) == "Z^2"
    assert reduced_homology(x, 0).is_trivial()
    x = build_complex((Z2, Z3, Z5), full((Z2, Z3, Z5)))
    assert str(reduced_homology(x, 2)) == "Z^8"
    assert reduced_homology(x, 1).is_trivial()
    assert reduced_homology(x, 0).is_trivial()
    x = build_complex((Z2, Z3), ())
    assert str(reduced_homology(x, 0)) == "Z^4"


def test_wedge_homology_at_desk_scale_bound():
    # largest configured group order: 6 * 5 * 7 = 210 points in the top layer
    z6, z7 = FiniteAbelianGroup((6,)), FiniteAbelianGroup((7,))
    colors = (z6, Z5, z7)
    x = build_complex(colors, full(colors))
    assert x.f_vector() == (18, 107, 210)
    assert str(reduced_homology(x, 2)) == "Z^120"
    assert reduced_homology(x, 1).is_trivial()
    assert reduced_homology(x, 0).is_trivial()


def test_skeleton_forces_low_connectivity():
    rng = random.Random(11)
    for colors in [(Z2, Z2, Z2), (Z2, Z3, Z5)]:
        points = list(nested_elements(colors))
        for _ in range(5):
            tops = rng.sample(points, rng.randint(0, len(points)))
            x = build_complex(colors, tops)
            k = x.top_dim
            for i in range(k - 1):
                assert reduced_homology(x, i).is_trivial()


def test_uct_consistency_on_samples():
    rng = random.Random(13)
    for colors in [(Z2, Z3), (Z22, Z3), (Z2, Z3, Z5)]:
        points = list(nested_elements(colors))
        for _ in range(4):
            tops = rng.sample(points, rng.randint(0, len(points)))
            assert uct_consistent(build_complex(colors, tops))


def test_cohomology_direct_route():
    x = build_complex((Z2, Z3), full((Z2, Z3)))
    assert str(reduced_cohomology(x, 1)) == "Z^2"
    assert reduced_cohomology(x, 0).is_trivial()


# --- lattices -------------------------------------------------------------------


def test_lattice_ranks_frozen():
    assert coboundary_lattice((Z2, Z3), ()).rank == 0
    assert fourier_lattice((Z2, Z3), ()).rank == 0
    assert coboundary_lattice((Z2, Z2), full((Z2, Z2))).rank == 3
    assert fourier_lattice((Z2, Z2), full((Z2, Z2))).rank == 3
    assert coboundary_lattice((Z2, Z3, Z5), full((Z2, Z3, Z5))).rank == 22
    assert coboundary_lattice((Z2, Z3), full((Z2, Z3))).rank == 4


def test_lattice_match_exhaustive_small():
    for colors in [(Z2, Z2), (Z2, Z3)]:
        points = list(nested_elements(colors))
        for size in range(len(points) + 1):
            for tops in itertools.combinations(points, size):
                assert coboundary_matches_fourier(colors, tops)


def test_lattice_match_random_configs():
    rng = random.Random(20260808)
    for colors in [(Z2, Z2, Z2), (Z4, Z3), (Z22, Z3), (Z2, Z3, Z5)]:
        points = list(nested_elements(colors))
        for _ in range(8):
            tops = rng.sample(points, rng.randint(0, len(points)))
            assert coboundary_matches_fourier(colors, tops)


def test_lattice_match_composite_orders():
    # both colors composite: conductor 12, character values with four
    # power-basis coordinates
    z6 = FiniteAbelianGroup((6,))
    rng = random.Random(4)
    points = list(nested_elements((Z4, z6)))
    for _ in range(5):
        tops = rng.sample(points, rng.randint(0, len(points)))
        assert coboundary_matches_fourier((Z4, z6), tops)


# --- membership ------------------------------------------------------------------


def test_is_coboundary_cases():
    colors = (Z2, Z3)
    tops = full(colors)
    assert is_coboundary(colors, tops, [0] * 6)
    column = coboundary_top_matrix(colors).column(0)
    assert is_coboundary(colors, tops, list(column))
    indicator = [1, 0, 0, 0, 0, 0]
    assert not is_coboundary(colors, tops, indicator)
    # cross-check through the transform: the indicator of the identity has
    # full transform support, so it cannot be a coboundary
    f = GroupFunction.from_vector(product_group(colors), indicator)
    assert not fourier_support(f).isdisjoint(set(positive_dual_block(colors)))


def test_is_coboundary_validates_length():
    with pytest.raises(ValueError):
        is_coboundary((Z2, Z3), full((Z2, Z3)), [0] * 5)


# --- serialization ----------------------------------------------------------------


def test_complex_json_shape():
    x = build_complex((Z2, Z3), [((0,), (0,)), ((1,), (2,))])
    data = complex_json(x)
    assert data["colors"] == [[2], [3]]
    assert data["A"] == [[[0], [0]], [[1], [2]]]
    assert set(data["homology"]) == {"0", "1"}
    # two disjoint edges on 5 vertices: three components
    assert data["homology"]["0"] == {"rank": 2, "torsion": []}
