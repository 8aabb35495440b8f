"""Arbitrary-precision integer matrix algebra.

Smith and Hermite normal forms, integer kernels, lattice comparison and
integral linear solving, all over Python's native big integers. Column
lattices are compared through a single canonical Hermite form, so lattice
equality is literal matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> IntMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("row count required for an empty column list")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def select_rows(self, indices) -> IntMatrix:
        indices = list(indices)
        picked = []
        for i in indices:
            picked.extend(self.row(i))
        return IntMatrix(len(indices), self.cols, tuple(picked))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum(a * b for a, b in zip(r, c)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec) -> tuple[int, ...]:
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_json_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [str(x) for x in self.entries]}

    @classmethod
    def from_json_dict(cls, data: dict) -> IntMatrix:
        return cls(data["rows"], data["cols"], tuple(int(x) for x in data["entries"]))


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization u @ m @ v = d with unimodular u, v.

    The diagonal of d holds the invariant factors, nonnegative and each
    dividing the next; `rank` counts the nonzero ones.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(self.d.at(i, i) for i in range(self.rank))


@dataclass(frozen=True)
class HermiteForm:
    """Canonical column basis of an integer column lattice.

    `h` keeps the ambient row count and exactly `rank` columns: pivot rows
    strictly increase left to right, pivots are positive, and within each
    pivot row the entries left of the pivot are reduced into [0, pivot).
    Equal lattices produce equal forms, so `==` decides lattice equality.
    """

    h: IntMatrix

    @property
    def rank(self) -> int:
        return self.h.cols


@dataclass(frozen=True)
class AbelianGroupStructure:
    """A finitely generated abelian group: free rank plus torsion divisors.

    Torsion entries are > 1 and each divides the next; unit factors are
    dropped and a zero divisor counts as one free factor.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for t in self.torsion:
            if t <= 1:
                raise ValueError("torsion divisors must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion divisors must form a divisibility chain")

    @classmethod
    def from_parts(cls, free_rank: int, divisors=()) -> AbelianGroupStructure:
        """Normalize raw divisors: 0 becomes a free factor, units vanish.

        >>> AbelianGroupStructure.from_parts(1, (0, -6, 1))
        AbelianGroupStructure(free_rank=2, torsion=(6,))
        """
        torsion = []
        for d in divisors:
            if d == 0:
                free_rank += 1
            elif abs(d) > 1:
                torsion.append(abs(d))
        return cls(free_rank, tuple(sorted(torsion)))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"C{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}


def _find_pivot(a: list[list[int]], t: int, rows: int, cols: int):
    """Position of a smallest-magnitude nonzero entry of a[t:, t:], or None."""
    best = None
    best_abs = None
    for i in range(t, rows):
        ai = a[i]
        for j in range(t, cols):
            x = ai[j]
            if x:
                ax = abs(x)
                if best_abs is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        return best
    return best


@lru_cache(maxsize=256)
def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form with accumulated unimodular transforms.

    Row and column reductions use smallest-magnitude pivoting to limit
    entry growth; a final divisibility pass at each pivot guarantees the
    chain d1 | d2 | ... . Exact by construction: u @ m @ v = d.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def add_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = _find_pivot(a, t, rows, cols)
        if pos is None:
            break
        if pos[0] != t:
            swap_rows(pos[0], t)
        if pos[1] != t:
            swap_cols(pos[1], t)
        if a[t][t] < 0:
            negate_row(t)
        while True:
            dirty = False
            i = t + 1
            while i < rows:
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t]:
                        # remainder in (0, pivot): promote it and restart
                        swap_rows(i, t)
                        dirty = True
                        continue
                i += 1
            j = t + 1
            while j < cols:
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j]:
                        swap_cols(j, t)
                        dirty = True
                        continue
                j += 1
            if not dirty:
                break
        pivot = a[t][t]
        offender = None
        for i in range(t + 1, rows):
            ai = a[i]
            for j in range(t + 1, cols):
                if ai[j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, -1)
            continue
        t += 1

    d = IntMatrix(rows, cols, tuple(x for r in a for x in r))
    return SmithForm(d, IntMatrix(rows, rows, tuple(x for r in u for x in r)), IntMatrix(cols, cols, tuple(x for r in v for x in r)), t)


def hermite_normal_form(m: IntMatrix) -> HermiteForm:
    """Column-style Hermite normal form of the column lattice of m.

    Column operations only (right-unimodular), so the column lattice is
    preserved; zero columns are dropped from the result. The output is the
    unique canonical basis described on HermiteForm.
    """
    rows, cols = m.rows, m.cols
    # work column-major
    c = [list(m.column(j)) for j in range(cols)]
    piv = 0
    for r in range(rows):
        best = None
        for j in range(piv, cols):
            x = c[j][r]
            if x and (best is None or abs(x) < abs(c[best][r])):
                best = j
                if abs(x) == 1:
                    break
        if best is None:
            continue
        c[piv], c[best] = c[best], c[piv]
        while True:
            for j in range(piv + 1, cols):
                x = c[j][r]
                if x:
                    q = x // c[piv][r]
                    c[j] = [y - q * z for y, z in zip(c[j], c[piv])]
            nxt = None
            for j in range(piv + 1, cols):
                x = c[j][r]
                if x and (nxt is None or abs(x) < abs(c[nxt][r])):
                    nxt = j
            if nxt is None:
                break
            c[piv], c[nxt] = c[nxt], c[piv]
        if c[piv][r] < 0:
            c[piv] = [-y for y in c[piv]]
        p = c[piv][r]
        for j in range(piv):
            q = c[j][r] // p
            if q:
                c[j] = [y - q * z for y, z in zip(c[j], c[piv])]
        piv += 1
        if piv == cols:
            break
    basis = c[:piv]
    return HermiteForm(IntMatrix(rows, piv, tuple(basis[j][i] for i in range(rows) for j in range(piv))))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice {x : m @ x = 0}.

    Taken from the trailing columns of the Smith column transform, so the
    basis is saturated: every integer kernel vector is an integer
    combination of the columns returned.
    """
    snf = smith_normal_form(m)
    ker_cols = [snf.v.column(j) for j in range(snf.rank, m.cols)]
    return IntMatrix.from_columns(ker_cols, rows=m.cols)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            a[i] = [(akk * x - aik * y) // prev for x, y in zip(a[i], a[k])]
        prev = akk
    return sign * a[n - 1][n - 1]


def _solve_with(snf: SmithForm, b) -> tuple[int, ...] | None:
    c = snf.u.apply(b)
    y = [0] * snf.v.rows
    for i, ci in enumerate(c):
        if i < snf.rank:
            di = snf.d.at(i, i)
            if ci % di:
                return None
            y[i] = ci // di
        elif ci:
            return None
    return snf.v.apply(y)


def solve_in_lattice(m: IntMatrix, b) -> tuple[int, ...] | None:
    """An integer x with m @ x = b, or None when b is outside the lattice.

    >>> solve_in_lattice(IntMatrix.from_rows([[2]]), [3]) is None
    True
    >>> solve_in_lattice(IntMatrix.from_rows([[1, 1], [1, -1]]), [2, 0])
    (1, 1)
    """
    b = list(b)
    if len(b) != m.rows:
        raise ValueError("vector length does not match row count")
    return _solve_with(smith_normal_form(m), b)


def lattice_contains(outer: IntMatrix, inner: IntMatrix) -> bool:
    """Whether every column of `inner` lies in the column lattice of `outer`."""
    if outer.rows != inner.rows:
        raise ValueError("lattices live in different ambient spaces")
    snf = smith_normal_form(outer)
    return all(_solve_with(snf, inner.column(j)) is not None for j in range(inner.cols))


def lattice_equal(m1: IntMatrix, m2: IntMatrix) -> bool:
    """Whether two generator matrices span the same column lattice."""
    if m1.rows != m2.rows:
        raise ValueError("lattices live in different ambient spaces")
    return hermite_normal_form(m1) == hermite_normal_form(m2)


def cokernel_structure(m: IntMatrix) -> AbelianGroupStructure:
    """Isomorphism type of Z**rows divided by the column lattice of m.

    >>> print(cokernel_structure(IntMatrix.from_rows([[2, 0], [0, 3]])))
    C6
    >>> print(cokernel_structure(IntMatrix.zero(3, 0)))
    Z^3
    """
    snf = smith_normal_form(m)
    return AbelianGroupStructure.from_parts(
        m.rows - snf.rank, tuple(d for d in snf.invariant_factors if d > 1)
    )
