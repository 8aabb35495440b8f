"""The cyclotomic-coefficient complex family and its verifications."""

import random
from math import gcd

import pytest

from balacyc.complexes import reduced_homology
from balacyc.cyclo_family import (
    CycloComplexData,
    all_subsets,
    build_family_complex,
    coefficient_vector_is_coboundary,
    crt_split,
    crt_unit,
    predicted_cohomology,
    predicted_homology,
    product_group_of,
    pullback_matches_root_kernel,
    quotient_presentation,
    root_relation_lattice,
    transform_pullback_check,
    upper_indices,
    verify_homology_tables,
)
from balacyc.cyclotomic import cyclotomic, root_power
from balacyc.groups import GroupFunction
from balacyc.intlinalg import AbelianGroupStructure, IntMatrix, lattice_contains


# --- CRT bookkeeping ---------------------------------------------------------


def test_crt_split_frozen():
    assert crt_split((2, 3), 3) == ((1,), (0,))
    assert crt_split((2, 3), 5) == ((1,), (2,))
    assert crt_split((2, 3, 5), 0) == ((0,), (0,), (0,))


def test_crt_split_bijective_and_additive():
    for primes in [(2, 3), (2, 3, 5), (3, 7)]:
        n = 1
        for p in primes:
            n *= p
        images = {crt_split(primes, x) for x in range(n)}
        assert len(images) == n
        for x in range(n):
            for y in (1, n - 1, x):
                left = crt_split(primes, (x + y) % n)
                right = tuple(
                    ((a[0] + b[0]) % p,)
                    for a, b, p in zip(crt_split(primes, x), crt_split(primes, y), primes)
                )
                assert left == right


def test_crt_unit_frozen_and_unit_property():
    assert crt_unit((2, 3)) == 5
    assert crt_unit((2, 3, 5)) == 1
    assert crt_unit((2, 3, 7)) == 41
    for primes in [(2, 3), (2, 3, 5), (2, 3, 7), (3, 5, 7)]:
        n = 1
        for p in primes:
            n *= p
        u = crt_unit(primes)
        assert gcd(u, n) == 1
        units = {m for m in range(n) if gcd(m, n) == 1}
        assert {(u * m) % n for m in units} == units


def test_prime_validation():
    with pytest.raises(ValueError):
        crt_unit((2,))  # single prime: dimension zero is out of scope
    with pytest.raises(ValueError):
        crt_unit((2, 2, 3))
    with pytest.raises(ValueError):
        crt_unit((2, 9))


def test_family_data_fields():
    data = CycloComplexData.build((2, 3), (0, 2))
    assert (data.n, data.totient) == (6, 2)
    assert data.upper == (3, 4, 5)
    assert data.coeffs == (1, -1, 1)
    assert data.subset_coeffs == (1, 1)
    assert data.coeff_gcd == 1
    assert data.top_indices == (0, 2, 3, 4, 5)
    assert upper_indices(30) == tuple(range(9, 30))
    with pytest.raises(ValueError):
        CycloComplexData.build((2, 3), (7,))


# --- complexes -----------------------------------------------------------------


def test_family_complex_frozen_shapes():
    full = build_family_complex((2, 3), (0, 1, 2))
    assert full.f_vector() == (5, 6)  # all six edges of the bipartite join
    tree = build_family_complex((2, 3), (0,))
    assert set(tree.top_cells()) == {
        ((0,), (0,)),
        ((1,), (0,)),
        ((0,), (1,)),
        ((1,), (2,)),
    }
    assert reduced_homology(tree, 0).is_trivial()
    assert reduced_homology(tree, 1).is_trivial()
    forest = build_family_complex((2, 3), ())
    assert forest.f_vector() == (5, 3)
    assert str(reduced_homology(forest, 0)) == "Z"


# --- predictions -----------------------------------------------------------------


def test_predicted_tables_frozen():
    # n = 6, all three coefficients are units
    assert str(predicted_homology((2, 3), (0, 1, 2), 1)) == "Z^2"
    assert predicted_homology((2, 3), (0, 1, 2), 0).is_trivial()
    # n = 30: coefficient at index 2 vanishes
    assert cyclotomic(30).coeffs == (1, 1, 0, -1, -1, -1, 0, 1, 1)
    assert str(predicted_homology((2, 3, 5), (2,), 1)) == "Z"
    assert str(predicted_homology((2, 3, 5), (2,), 2)) == "Z"
    assert predicted_homology((2, 3, 5), (2,), 0).is_trivial()
    assert str(predicted_homology((2, 3, 5), (2, 6), 2)) == "Z^2"
    assert str(predicted_homology((2, 3, 5), (2, 6), 1)) == "Z"
    assert str(predicted_cohomology((2, 3, 5), (2, 6), 2)) == "Z^2"
    assert str(predicted_cohomology((2, 3, 5), (2, 6), 1)) == "Z"


def test_predictions_reject_empty_subset():
    with pytest.raises(ValueError):
        predicted_homology((2, 3), (), 1)
    with pytest.raises(ValueError):
        verify_homology_tables((2, 3), ())


def test_single_index_table_matches_direct_formula():
    # the closed form specialises to: torsion Z/|c_j| below the top, a free
    # line at the top exactly when c_j = 0
    for primes in [(2, 3), (2, 3, 5)]:
        data = CycloComplexData.build(primes, ())
        k = len(primes) - 1
        for j in range(data.totient + 1):
            c = data.coeffs[j]
            expected_low = AbelianGroupStructure.from_parts(0, (c,))
            expected_top = AbelianGroupStructure.from_parts(1 if c == 0 else 0)
            assert predicted_homology(primes, (j,), k - 1) == expected_low
            assert predicted_homology(primes, (j,), k) == expected_top
            report = verify_homology_tables(primes, (j,))
            assert report.match and report.euler_poincare and report.uct


def test_verify_tables_exhaustive_n6():
    for subset in all_subsets(2, include_empty=False):
        report = verify_homology_tables((2, 3), subset)
        assert report.match and report.euler_poincare and report.uct


def test_verify_tables_n30_samples():
    rng = random.Random(5)
    subsets = [(2,), (2, 6), (0, 8), tuple(range(9))]
    for _ in range(6):
        subsets.append(tuple(sorted(rng.sample(range(9), rng.randint(1, 9)))))
    for subset in subsets:
        report = verify_homology_tables((2, 3, 5), subset)
        assert report.match and report.euler_poincare and report.uct


def test_torsion_branch_at_n105():
    # the 105th cyclotomic polynomial has coefficient -2 at degrees 7 and
    # 41, giving genuine 2-torsion: predicted and Smith-computed tables
    # must both carry it, homology below the top and cohomology at the top
    data = CycloComplexData.build((3, 5, 7), ())
    assert data.coeffs[7] == -2 and data.coeffs[41] == -2
    zero = next(j for j, c in enumerate(data.coeffs) if c == 0)
    for subset in [(7,), (7, 41), (7, zero), (7, 41, zero)]:
        report = verify_homology_tables((3, 5, 7), subset)
        assert report.match and report.euler_poincare and report.uct
        assert report.computed_homology[1] == AbelianGroupStructure(0, (2,))
        assert report.computed_cohomology[2].torsion == (2,)
    assert pullback_matches_root_kernel((3, 5, 7), (7,))
    presentation = quotient_presentation((3, 5, 7), (7,))
    assert presentation.ok
    assert str(presentation.ambient_quotient) == "C2"


def test_verification_report_json_shape():
    report = verify_homology_tables((2, 3, 5), (2, 6))
    data = report.to_json_dict()
    assert data["primes"] == [2, 3, 5]
    assert data["n"] == 30
    assert data["A"] == [2, 6]
    assert data["dA"] == 0
    assert data["match"] is True and data["euler_poincare"] is True
    assert data["computed"]["homology"]["2"] == {"rank": 2, "torsion": []}
    assert data["predicted"]["cohomology"]["1"] == {"rank": 1, "torsion": []}


# --- the vanishing-evaluation lattice ---------------------------------------------


def test_root_relation_lattice_frozen():
    assert root_relation_lattice((2, 3), (0, 1, 2)).rank == 4
    # empty subset at n = 6: the projection to the three upper coordinates
    # is onto, so the canonical form is the identity (golden value)
    empty = root_relation_lattice((2, 3), ())
    assert empty.h == IntMatrix.identity(3)


def test_coefficient_vector_lies_in_lattice():
    from balacyc.cyclotomic import euler_phi

    for primes in [(2, 3), (2, 3, 5), (2, 3, 7)]:
        n = 1
        for p in primes:
            n *= p
        data = CycloComplexData.build(primes, range(euler_phi(n) + 1))
        lattice = root_relation_lattice(primes, data.subset)
        vec = [data.coeffs[x] if x <= data.totient else 0 for x in data.top_indices]
        assert lattice_contains(lattice.h, IntMatrix.from_columns([vec]))


def test_pullback_matches_exhaustive_n6():
    for subset in all_subsets(2, include_empty=True):
        assert pullback_matches_root_kernel((2, 3), subset)


def test_pullback_matches_targeted_n30():
    for subset in [(), (0,), (2,), (2, 6), tuple(range(9))]:
        assert pullback_matches_root_kernel((2, 3, 5), subset)


def test_pullback_matches_random_n42():
    rng = random.Random(17)
    for _ in range(10):
        subset = tuple(sorted(rng.sample(range(13), rng.randint(0, 13))))
        assert pullback_matches_root_kernel((2, 3, 7), subset)


# --- transform pullback --------------------------------------------------------


def test_transform_pullback_zero_and_indicator():
    g = product_group_of((2, 3))
    zero = GroupFunction.zero(g)
    assert transform_pullback_check((2, 3), zero)
    indicator = GroupFunction(g, {(1, 2): 1})
    for m in range(6):
        assert transform_pullback_check((2, 3), indicator, m)


def test_transform_pullback_random_functions():
    rng = random.Random(23)
    for primes in [(2, 3), (2, 3, 5)]:
        g = product_group_of(primes)
        for _ in range(5):
            h = GroupFunction(g, {x: rng.randint(-3, 3) for x in g.elements()})
            assert transform_pullback_check(primes, h)


def test_transform_pullback_rejects_wrong_group():
    with pytest.raises(ValueError):
        transform_pullback_check((2, 3), GroupFunction.zero(product_group_of((2, 5))), 0)


# --- coefficient coboundary and presentation ----------------------------------------


def test_coefficient_vector_is_coboundary_all_primes():
    for primes in [(2, 3), (2, 3, 5), (2, 3, 7)]:
        assert coefficient_vector_is_coboundary(primes)


def test_presentation_frozen_cases():
    report = quotient_presentation((2, 3), (0, 1, 2))
    assert report.quotient_ok
    assert str(report.ambient_quotient) == "Z^2"
    assert all(ok for _, ok in report.generator_membership)

    report = quotient_presentation((2, 3, 5), (2, 6))
    assert report.quotient_ok
    assert str(report.ambient_quotient) == "Z^2"  # both coefficients vanish
    assert all(ok for _, ok in report.generator_membership)

    report = quotient_presentation((2, 3, 5), (0,))
    assert report.quotient_ok
    assert report.ambient_quotient.is_trivial()
    assert all(ok for _, ok in report.generator_membership)

    with pytest.raises(ValueError):
        quotient_presentation((2, 3), ())


def test_presentation_sweep_n6():
    from balacyc.cyclo_family import quotient_presentation_check

    for subset in all_subsets(2, include_empty=False):
        report = quotient_presentation((2, 3), subset)
        assert report.ok
        assert quotient_presentation_check((2, 3), subset)


def test_quotient_agrees_with_top_cohomology():
    # the quotient by the vanishing lattice is the top cohomology group
    for primes, subset in [((2, 3), (0, 2)), ((2, 3, 5), (1, 4, 7)), ((2, 3, 5), (2, 6))]:
        report = quotient_presentation(primes, subset)
        x = build_family_complex(primes, subset)
        top = len(primes) - 1
        from balacyc.complexes import reduced_cohomology

        assert report.ambient_quotient == reduced_cohomology(x, top)


# --- generator relation sanity ---------------------------------------------------


def test_upper_generator_relation_is_genuine():
    # the constructive generator vectors encode a true vanishing sum: the
    # function with 1 at t and the negated power-basis coordinates of
    # zeta_n**t below the totient evaluates to zero at the root
    from balacyc.cyclotomic import eval_at_root

    data = CycloComplexData.build((2, 3, 5), ())
    for t in data.upper:
        coords = root_power(data.n, t).coords
        values = [0] * data.n
        for j, c in enumerate(coords):
            values[j] = -c
        values[t] += 1
        assert eval_at_root(values, data.n).is_zero()
