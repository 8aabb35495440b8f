"""Balanced complexes indexed by cyclotomic coefficient data.

For distinct primes p_0, ..., p_k with product n, the residues mod n split
through the Chinese remainder map into the product of the Z_p_i. Each
subset A of {0, ..., phi(n)} determines a complex over the join of those
cyclic groups: its top cells are the CRT images of A together with all
residues above phi(n). The homology of these complexes is governed by the
coefficients of the n-th cyclotomic polynomial restricted to A; this
module builds the complexes, predicts their homology from the coefficient
data, and verifies every step exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from .complexes import (
    build_complex,
    coboundary_restriction,
    cohomology_profile,
    homology_profile,
    is_coboundary,
    nested_elements,
    uct_consistent,
)
from .cyclotomic import CycInt, cyclotomic, euler_phi, is_prime, root_power
from .groups import FiniteAbelianGroup, GroupFunction, fourier_transform
from .intlinalg import (
    AbelianGroupStructure,
    HermiteForm,
    IntMatrix,
    cokernel_structure,
    hermite_normal_form,
    kernel_basis,
    solve_in_lattice,
)


def _check_primes(primes) -> tuple[int, ...]:
    primes = tuple(primes)
    if len(primes) < 2:
        raise ValueError("at least two primes required (top dimension >= 1)")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return primes


def family_colors(primes) -> tuple[FiniteAbelianGroup, ...]:
    return tuple(FiniteAbelianGroup((p,)) for p in _check_primes(primes))


def crt_split(primes, x: int) -> tuple[tuple[int, ...], ...]:
    """Residue of x modulo each prime, as a point of the product group.

    >>> crt_split((2, 3), 5)
    ((1,), (2,))
    """
    return tuple((x % p,) for p in primes)


@lru_cache(maxsize=None)
def _crt_inverse(primes: tuple[int, ...]) -> dict:
    n = prod(primes)
    return {crt_split(primes, x): x for x in range(n)}


def crt_unit(primes) -> int:
    """The sum over j of the product of the other primes, reduced mod n.

    This residue is coprime to n (mod p_j it is the product of the other
    primes); multiplication by it permutes the units of Z_n. It converts
    between the transform of a CRT pullback on Z_n and the transform on
    the product group.

    >>> crt_unit((2, 3)), crt_unit((2, 3, 5))
    (5, 1)
    """
    primes = _check_primes(primes)
    n = prod(primes)
    u = sum(prod(q for q in primes if q != p) for p in primes) % n
    if gcd(u, n) != 1:
        raise AssertionError("twist residue must be a unit")
    return u


def upper_indices(n: int) -> tuple[int, ...]:
    """The residues phi(n)+1, ..., n-1: top cells present in every complex."""
    return tuple(range(euler_phi(n) + 1, n))


@dataclass(frozen=True)
class CycloComplexData:
    """Derived data for one (primes, subset) configuration."""

    primes: tuple[int, ...]
    subset: tuple[int, ...]
    n: int
    totient: int
    upper: tuple[int, ...]
    coeffs: tuple[int, ...]
    subset_coeffs: tuple[int, ...]
    coeff_gcd: int
    unit: int

    @classmethod
    def build(cls, primes, subset) -> CycloComplexData:
        primes = _check_primes(primes)
        n = prod(primes)
        totient = euler_phi(n)
        subset = tuple(sorted(set(int(j) for j in subset)))
        if subset and not (0 <= subset[0] and subset[-1] <= totient):
            raise ValueError(f"subset must lie in 0..{totient}")
        coeffs = cyclotomic(n).coeffs
        sub = tuple(coeffs[j] for j in subset)
        return cls(
            primes=primes,
            subset=subset,
            n=n,
            totient=totient,
            upper=upper_indices(n),
            coeffs=coeffs,
            subset_coeffs=sub,
            coeff_gcd=gcd(*sub) if sub else 0,
            unit=crt_unit(primes),
        )

    @property
    def top_indices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.subset) | set(self.upper)))


def build_family_complex(primes, subset):
    """The complex whose top cells are the CRT images of subset + upper part.

    >>> build_family_complex((2, 3), (0, 1, 2)).f_vector()
    (5, 6)
    >>> build_family_complex((2, 3), ()).f_vector()
    (5, 3)
    """
    data = CycloComplexData.build(primes, subset)
    tops = [crt_split(data.primes, x) for x in data.top_indices]
    return build_complex(family_colors(data.primes), tops)


def predicted_homology(primes, subset, i: int) -> AbelianGroupStructure:
    """Expected reduced homology in dimension i from the coefficient data.

    With d the gcd of the subset's cyclotomic coefficients (0 when they
    all vanish): dimension k-1 carries Z/d (so Z when d = 0), dimension k
    is free of rank |A| when d = 0 and |A|-1 otherwise, and every other
    dimension vanishes. The subset must be nonempty.
    """
    data = CycloComplexData.build(primes, subset)
    if not data.subset:
        raise ValueError("empty subsets are not covered by the closed form")
    k = len(data.primes) - 1
    if i == k - 1:
        return AbelianGroupStructure.from_parts(0, (data.coeff_gcd,))
    if i == k:
        size = len(data.subset)
        return AbelianGroupStructure.from_parts(size if data.coeff_gcd == 0 else size - 1)
    return AbelianGroupStructure.from_parts(0)


def predicted_cohomology(primes, subset, i: int) -> AbelianGroupStructure:
    """Expected reduced cohomology: Z^(|A|-1) + Z/d at the top, Z below it
    exactly when d = 0, zero elsewhere."""
    data = CycloComplexData.build(primes, subset)
    if not data.subset:
        raise ValueError("empty subsets are not covered by the closed form")
    k = len(data.primes) - 1
    if i == k - 1:
        return AbelianGroupStructure.from_parts(1 if data.coeff_gcd == 0 else 0)
    if i == k:
        return AbelianGroupStructure.from_parts(
            len(data.subset) - 1, (data.coeff_gcd,)
        )
    return AbelianGroupStructure.from_parts(0)


@lru_cache(maxsize=None)
def _root_relation_kernel(n: int) -> IntMatrix:
    """Saturated kernel of evaluating integer vectors at zeta_n.

    Column l of the evaluated matrix holds the power-basis coordinates of
    zeta_n**l, so the kernel is the lattice of integer functions on Z_n
    whose root-of-unity evaluation vanishes.
    """
    cols = [root_power(n, e).coords for e in range(n)]
    matrix = IntMatrix.from_columns(cols, rows=euler_phi(n))
    return kernel_basis(matrix)


def root_relation_lattice(primes, subset) -> HermiteForm:
    """Vanishing-evaluation functions restricted to the top index set.

    The kernel lattice above is projected onto the coordinates indexed by
    subset + upper part (ascending) and brought to canonical form.
    """
    data = CycloComplexData.build(primes, subset)
    kernel = _root_relation_kernel(data.n)
    return hermite_normal_form(kernel.select_rows(data.top_indices))


def pullback_matches_root_kernel(primes, subset) -> bool:
    """Compare the coboundary image lattice with the evaluation kernel.

    The restricted coboundary lattice of the complex is pulled back along
    the CRT bijection (a pure reindexing of coordinates from product-group
    points to residues) and must coincide with root_relation_lattice.
    """
    data = CycloComplexData.build(primes, subset)
    colors = family_colors(data.primes)
    points = [crt_split(data.primes, x) for x in data.top_indices]
    pulled_back = hermite_normal_form(coboundary_restriction(colors, points))
    return pulled_back == root_relation_lattice(primes, subset)


def transform_pullback_check(primes, h: GroupFunction, m: int | None = None) -> bool:
    """Exact intertwining of the two Fourier transforms through the CRT map.

    The Z_n-transform of the pullback of h, taken at unit * m, must equal
    the product-group transform of h at the character indexed by the CRT
    split of m. With m=None every residue of Z_n is checked against one
    shared transform. Also checks that multiplication by the unit permutes
    the units of Z_n.
    """
    data = CycloComplexData.build(primes, ())
    n = data.n
    if h.group != product_group_of(data.primes):
        raise ValueError("function does not live on the expected product group")
    units = {x for x in range(n) if gcd(x, n) == 1}
    if {(data.unit * x) % n for x in units} != units:
        return False
    inverse = _crt_inverse(data.primes)
    residues = {x: inverse[tuple((xi,) for xi in x)] for x in h.values}
    hat = fourier_transform(h)
    for point in range(n) if m is None else (m,):
        lhs = CycInt.zero(n)
        for x, v in h.values.items():
            lhs = lhs + v * root_power(n, residues[x] * data.unit * point)
        if lhs != hat[tuple(point % p for p in data.primes)]:
            return False
    return True


def product_group_of(primes) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(_check_primes(primes)))


def coefficient_vector_is_coboundary(primes) -> bool:
    """The truncated cyclotomic coefficient vector is a top coboundary.

    The function on Z_n equal to the coefficients of the n-th cyclotomic
    polynomial up to degree phi(n) and zero above, carried to the product
    group through the CRT map, must lie in the image of the top coboundary
    over the full join.
    """
    data = CycloComplexData.build(primes, ())
    colors = family_colors(data.primes)
    inverse = _crt_inverse(data.primes)
    values = []
    for g in nested_elements(colors):
        x = inverse[g]
        values.append(data.coeffs[x] if x <= data.totient else 0)
    return is_coboundary(colors, nested_elements(colors), values)


@dataclass(frozen=True)
class PresentationReport:
    """Two computations of the top-cell quotient, plus generator checks."""

    expected: AbelianGroupStructure
    ambient_quotient: AbelianGroupStructure
    column_quotient: AbelianGroupStructure
    generator_membership: tuple[tuple[int, bool], ...]

    @property
    def quotient_ok(self) -> bool:
        return self.expected == self.ambient_quotient == self.column_quotient

    @property
    def ok(self) -> bool:
        return self.quotient_ok and all(m for _, m in self.generator_membership)


def quotient_presentation(primes, subset) -> PresentationReport:
    """Present the quotient by the vanishing lattice two independent ways.

    (a) directly, as the cokernel of the restricted kernel lattice inside
    the full top index set; (b) as the cokernel of the single column of
    subset coefficients. Both must give free rank |A|-1 plus one cyclic
    factor of order gcd. Additionally each upper index t is checked
    constructively: the vector that places 1 at t and the negated
    power-basis coordinates of zeta_n**t at the subset indices lies in the
    vanishing lattice, which rewrites the class of t in subset classes.
    """
    data = CycloComplexData.build(primes, subset)
    if not data.subset:
        raise ValueError("presentation requires a nonempty subset")
    lattice = root_relation_lattice(primes, subset)
    ambient = cokernel_structure(lattice.h)
    column = IntMatrix.from_columns([data.subset_coeffs], rows=len(data.subset))
    small = cokernel_structure(column)
    expected = AbelianGroupStructure.from_parts(len(data.subset) - 1, (data.coeff_gcd,))

    indices = data.top_indices
    position = {x: r for r, x in enumerate(indices)}
    checks = []
    for t in data.upper:
        coords = root_power(data.n, t).coords
        vec = [0] * len(indices)
        for j in data.subset:
            if j < len(coords):
                vec[position[j]] = -coords[j]
        vec[position[t]] += 1
        member = solve_in_lattice(lattice.h, vec) is not None
        checks.append((t, member))
    return PresentationReport(expected, ambient, small, tuple(checks))


def quotient_presentation_check(primes, subset) -> bool:
    return quotient_presentation(primes, subset).ok


@dataclass(frozen=True)
class HomologyVerification:
    """Computed versus predicted (co)homology for one configuration."""

    primes: tuple[int, ...]
    n: int
    subset: tuple[int, ...]
    coeff_gcd: int
    computed_homology: tuple[AbelianGroupStructure, ...]
    predicted_homology: tuple[AbelianGroupStructure, ...]
    computed_cohomology: tuple[AbelianGroupStructure, ...]
    predicted_cohomology: tuple[AbelianGroupStructure, ...]
    match: bool
    euler_poincare: bool
    uct: bool

    def to_json_dict(self) -> dict:
        def table(groups):
            return {str(i): g.to_json_dict() for i, g in enumerate(groups)}

        return {
            "primes": list(self.primes),
            "n": self.n,
            "A": list(self.subset),
            "dA": self.coeff_gcd,
            "predicted": {
                "homology": table(self.predicted_homology),
                "cohomology": table(self.predicted_cohomology),
            },
            "computed": {
                "homology": table(self.computed_homology),
                "cohomology": table(self.computed_cohomology),
            },
            "match": self.match,
            "euler_poincare": self.euler_poincare,
            "uct": self.uct,
        }


def verify_homology_tables(primes, subset) -> HomologyVerification:
    """Compute all reduced (co)homology of the complex and grade it.

    Every dimension 0..k is computed by Smith reduction and compared with
    the coefficient predictions, including the dimensions where the
    prediction is zero. The rank bookkeeping identity
    rank H_k - rank H_(k-1) = |A| - 1 and universal-coefficient
    consistency are checked alongside.
    """
    data = CycloComplexData.build(primes, subset)
    if not data.subset:
        raise ValueError("verification requires a nonempty subset")
    k = len(data.primes) - 1
    x = build_family_complex(primes, subset)
    computed_h = homology_profile(x)
    computed_c = cohomology_profile(x)
    predicted_h = {i: predicted_homology(primes, subset, i) for i in range(k + 1)}
    predicted_c = {i: predicted_cohomology(primes, subset, i) for i in range(k + 1)}
    match = all(
        computed_h[i] == predicted_h[i] and computed_c[i] == predicted_c[i]
        for i in range(k + 1)
    )
    euler = computed_h[k].free_rank - computed_h[k - 1].free_rank == len(data.subset) - 1
    return HomologyVerification(
        primes=data.primes,
        n=data.n,
        subset=data.subset,
        coeff_gcd=data.coeff_gcd,
        computed_homology=tuple(computed_h[i] for i in range(k + 1)),
        predicted_homology=tuple(predicted_h[i] for i in range(k + 1)),
        computed_cohomology=tuple(computed_c[i] for i in range(k + 1)),
        predicted_cohomology=tuple(predicted_c[i] for i in range(k + 1)),
        match=match,
        euler_poincare=euler,
        uct=uct_consistent(x),
    )


def all_subsets(totient: int, include_empty: bool = True):
    """Every subset of {0, ..., totient}, smallest first, lex within size."""
    universe = range(totient + 1)
    start = 0 if include_empty else 1
    for size in range(start, totient + 2):
        yield from itertools.combinations(universe, size)
