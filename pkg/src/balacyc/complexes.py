"""Balanced simplicial complexes over joins of finite abelian groups.

The vertex set is the disjoint union of the groups G_0, ..., G_k (one
"color" per group); a cell picks at most one vertex per color, written
with colors increasing. A complex here is the full (k-1)-skeleton of the
join together with a chosen set of top cells. Boundary and coboundary
matrices, integral (co)homology via Smith forms, and the two competing
descriptions of the restricted top-coboundary lattice all live here.

Cells are plain pairs (support, vertices): `support` is the increasing
tuple of color indices, `vertices[j]` the element of the support[j]-th
group. Tuple comparison on these pairs is exactly the documented cell
order (support first, then vertex coordinates), so sorted() gives the
canonical basis everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import euler_phi
from .groups import FiniteAbelianGroup, positive_dual_block, product_group
from .intlinalg import (
    AbelianGroupStructure,
    HermiteForm,
    IntMatrix,
    hermite_normal_form,
    kernel_basis,
    smith_normal_form,
    solve_in_lattice,
)

Cell = tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class BalancedComplex:
    colors: tuple[FiniteAbelianGroup, ...]
    cells_by_dim: tuple[tuple[Cell, ...], ...]

    @property
    def top_dim(self) -> int:
        return len(self.colors) - 1

    def n_cells(self, dim: int) -> int:
        return len(self.cells_by_dim[dim])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(cells) for cells in self.cells_by_dim)

    def top_cells(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return tuple(vertices for _, vertices in self.cells_by_dim[self.top_dim])


def nested_elements(colors) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All points of G_0 x ... x G_k as per-color tuples, in lex order."""
    return tuple(itertools.product(*(g.elements() for g in colors)))


def normalize_top_cells(colors, top_cells) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Validate and canonically sort a set of product-group points."""
    colors = tuple(colors)
    seen = []
    for a in top_cells:
        a = tuple(tuple(v) for v in a)
        if len(a) != len(colors):
            raise ValueError("top cell must pick one vertex per color")
        for g, v in zip(colors, a):
            if not g.contains(v):
                raise ValueError(f"vertex {v} is outside its color group")
        seen.append(a)
    if len(set(seen)) != len(seen):
        raise ValueError("duplicate top cells")
    return tuple(sorted(seen))


def build_complex(colors, top_cells) -> BalancedComplex:
    """Full (k-1)-skeleton of the join plus the given set of top cells.

    >>> z2, z3 = FiniteAbelianGroup((2,)), FiniteAbelianGroup((3,))
    >>> build_complex((z2, z3), nested_elements((z2, z3))).f_vector()
    (5, 6)
    >>> build_complex((z2, z3), ()).f_vector()
    (5, 0)
    """
    colors = tuple(colors)
    if not colors:
        raise ValueError("at least one color group required")
    if any(g.order < 2 for g in colors):
        raise ValueError("color groups must be nontrivial")
    k = len(colors) - 1
    top = normalize_top_cells(colors, top_cells)
    cells: list[tuple[Cell, ...]] = []
    for dim in range(k):
        layer = []
        for support in itertools.combinations(range(k + 1), dim + 1):
            for vertices in itertools.product(*(colors[i].elements() for i in support)):
                layer.append((support, vertices))
        cells.append(tuple(layer))
    full = tuple(range(k + 1))
    cells.append(tuple((full, a) for a in top))
    return BalancedComplex(colors, tuple(cells))


@lru_cache(maxsize=512)
def boundary_matrix(x: BalancedComplex, i: int) -> IntMatrix:
    """Matrix of the boundary map from i-chains to (i-1)-chains.

    Dimension 0 yields the augmentation row of ones (reduced complex).
    Signs alternate with the position of the dropped color in the
    increasing support, so consecutive boundaries compose to zero.
    """
    if not 0 <= i <= x.top_dim:
        raise ValueError("dimension out of range")
    cols = x.cells_by_dim[i]
    if i == 0:
        return IntMatrix(1, len(cols), (1,) * len(cols))
    rows = x.cells_by_dim[i - 1]
    index = {cell: r for r, cell in enumerate(rows)}
    entries = [0] * (len(rows) * len(cols))
    width = len(cols)
    for c, (support, vertices) in enumerate(cols):
        sign = 1
        for j in range(len(support)):
            face = (support[:j] + support[j + 1 :], vertices[:j] + vertices[j + 1 :])
            entries[index[face] * width + c] += sign
            sign = -sign
    return IntMatrix(len(rows), len(cols), tuple(entries))


def _boundary_above(x: BalancedComplex, i: int) -> IntMatrix:
    if i < x.top_dim:
        return boundary_matrix(x, i + 1)
    return IntMatrix.zero(x.n_cells(x.top_dim), 0)


def reduced_homology(x: BalancedComplex, i: int) -> AbelianGroupStructure:
    """Reduced integral homology in dimension i, via Smith normal forms.

    >>> z2, z3 = FiniteAbelianGroup((2,)), FiniteAbelianGroup((3,))
    >>> xg = build_complex((z2, z3), nested_elements((z2, z3)))
    >>> print(reduced_homology(xg, 1))
    Z^2
    >>> print(reduced_homology(xg, 0))
    0
    """
    down = smith_normal_form(boundary_matrix(x, i))
    up = smith_normal_form(_boundary_above(x, i))
    free = x.n_cells(i) - down.rank - up.rank
    return AbelianGroupStructure.from_parts(free, tuple(d for d in up.invariant_factors if d > 1))


def reduced_cohomology(x: BalancedComplex, i: int) -> AbelianGroupStructure:
    """Reduced integral cohomology in dimension i, from transposed boundaries.

    Computed directly from the coboundary complex rather than by dualizing
    homology, so universal-coefficient consistency is a real cross-check.
    """
    into = smith_normal_form(boundary_matrix(x, i).transpose())
    out_of = smith_normal_form(_boundary_above(x, i).transpose())
    free = x.n_cells(i) - into.rank - out_of.rank
    return AbelianGroupStructure.from_parts(free, tuple(d for d in into.invariant_factors if d > 1))


def homology_profile(x: BalancedComplex) -> dict[int, AbelianGroupStructure]:
    return {i: reduced_homology(x, i) for i in range(x.top_dim + 1)}


def cohomology_profile(x: BalancedComplex) -> dict[int, AbelianGroupStructure]:
    return {i: reduced_cohomology(x, i) for i in range(x.top_dim + 1)}


def uct_consistent(x: BalancedComplex) -> bool:
    """Rank and torsion bookkeeping between homology and cohomology.

    Over Z the cohomology in dimension i must carry the free rank of
    homology in dimension i and the torsion of dimension i - 1.
    """
    for i in range(x.top_dim + 1):
        h_i = reduced_homology(x, i)
        c_i = reduced_cohomology(x, i)
        if c_i.free_rank != h_i.free_rank:
            return False
        below = reduced_homology(x, i - 1).torsion if i >= 1 else ()
        if c_i.torsion != below:
            return False
    return True


@lru_cache(maxsize=None)
def top_coboundary_domain(colors: tuple[FiniteAbelianGroup, ...]) -> tuple[tuple[int, tuple], ...]:
    """Column labels (i, t) of the top coboundary matrix.

    Slot i ranges over colors; t over the product of the other colors'
    elements in lex order. These label the (k-1)-cochain components.
    """
    k = len(colors) - 1
    labels = []
    for i in range(k + 1):
        others = [colors[j].elements() for j in range(k + 1) if j != i]
        for t in itertools.product(*others):
            labels.append((i, t))
    return tuple(labels)


@lru_cache(maxsize=None)
def coboundary_top_matrix(colors: tuple[FiniteAbelianGroup, ...]) -> IntMatrix:
    """Matrix of the top coboundary map on the full join.

    Rows are indexed by the points of G_0 x ... x G_k in lex order,
    columns by top_coboundary_domain. The entry in row (g_0, ..., g_k)
    and column (i, t) is (-1)**i when t equals the row with slot i
    removed, else 0.
    """
    points = nested_elements(colors)
    index = {g: r for r, g in enumerate(points)}
    labels = top_coboundary_domain(colors)
    width = len(labels)
    entries = [0] * (len(points) * width)
    for c, (i, t) in enumerate(labels):
        sign = -1 if i % 2 else 1
        for gi in colors[i].elements():
            g = t[:i] + (gi,) + t[i:]
            entries[index[g] * width + c] = sign
    return IntMatrix(len(points), width, tuple(entries))


def apply_top_coboundary(colors, cochain) -> tuple[int, ...]:
    """Evaluate the top coboundary on a cochain given in domain order."""
    return coboundary_top_matrix(tuple(colors)).apply(cochain)


def cochain_vector(colors, components) -> tuple[int, ...]:
    """Flatten per-slot cochain components into domain order.

    `components[i]` maps tuples over the other colors (slot i removed) to
    integers; missing tuples are zero. The result feeds
    apply_top_coboundary.
    """
    components = list(components)
    if len(components) != len(colors):
        raise ValueError("one component per color required")
    return tuple(components[i].get(t, 0) for i, t in top_coboundary_domain(tuple(colors)))


def coboundary_restriction(colors, points_in_order) -> IntMatrix:
    """Rows of the top coboundary matrix for the given points, in order."""
    colors = tuple(colors)
    full = coboundary_top_matrix(colors)
    index = {g: r for r, g in enumerate(nested_elements(colors))}
    return full.select_rows([index[tuple(tuple(v) for v in g)] for g in points_in_order])


def coboundary_lattice(colors, top_cells) -> HermiteForm:
    """Canonical form of the restricted image of the top coboundary.

    The image lattice of the top coboundary map, with coordinates
    restricted to the chosen top cells (sorted canonically).
    """
    cells = normalize_top_cells(colors, top_cells)
    return hermite_normal_form(coboundary_restriction(colors, cells))


@lru_cache(maxsize=None)
def fourier_vanishing_matrix(colors: tuple[FiniteAbelianGroup, ...]) -> IntMatrix:
    """Integer matrix whose kernel is cut out by transform vanishing.

    For each character nontrivial in every slot, the transform value of a
    function on the product group is a cyclotomic integer with phi(N)
    integer coordinates; each coordinate contributes one row. A function
    vector lies in the kernel exactly when its transform vanishes on the
    whole all-slots-nontrivial block.
    """
    colors = tuple(colors)
    g = product_group(colors)
    n = g.exponent
    phi = euler_phi(n)
    points = g.elements()
    rows = []
    for chi in positive_dual_block(colors):
        cols = [g.char_value(chi, x).coords for x in points]
        for t in range(phi):
            rows.append([col[t] for col in cols])
    if not rows:
        return IntMatrix.zero(0, len(points))
    return IntMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def _fourier_kernel(colors: tuple[FiniteAbelianGroup, ...]) -> IntMatrix:
    return kernel_basis(fourier_vanishing_matrix(colors))


def fourier_lattice(colors, top_cells) -> HermiteForm:
    """Restriction lattice of functions with transform vanishing as above.

    The saturated kernel of the vanishing conditions is projected onto the
    coordinates of the chosen top cells, then brought to canonical form.
    """
    colors = tuple(colors)
    cells = normalize_top_cells(colors, top_cells)
    kernel = _fourier_kernel(colors)
    index = {g: r for r, g in enumerate(nested_elements(colors))}
    projected = kernel.select_rows([index[a] for a in cells])
    return hermite_normal_form(projected)


def coboundary_matches_fourier(colors, top_cells) -> bool:
    """Whether the two lattice descriptions agree for this set of top cells.

    The restricted coboundary image and the restricted transform-vanishing
    lattice are computed along independent routes and compared through
    their canonical forms.
    """
    return coboundary_lattice(colors, top_cells) == fourier_lattice(colors, top_cells)


def is_coboundary(colors, top_cells, values) -> bool:
    """Whether an integer vector on the top cells extends to a coboundary.

    `values` is indexed by the canonically sorted top cells.
    """
    cells = normalize_top_cells(colors, top_cells)
    values = list(values)
    if len(values) != len(cells):
        raise ValueError("value vector length does not match top cell count")
    return solve_in_lattice(coboundary_restriction(colors, cells), values) is not None


def complex_json(x: BalancedComplex) -> dict:
    """Homology report for a complex, JSON-ready."""
    return {
        "colors": [g.to_json() for g in x.colors],
        "A": [[list(v) for v in a] for a in x.top_cells()],
        "homology": {
            str(i): reduced_homology(x, i).to_json_dict() for i in range(x.top_dim + 1)
        },
        "cohomology": {
            str(i): reduced_cohomology(x, i).to_json_dict() for i in range(x.top_dim + 1)
        },
    }
