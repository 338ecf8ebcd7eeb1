"""Exact integer lattice arithmetic.

Immutable integer matrices, Smith normal form with unimodular transforms,
cokernels of column lattices, and finite abelian quotients in invariant
factor form.  All arithmetic uses Python integers and fractions; nothing
here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class SingularMatrix(Exception):
    """Square system with no unique rational solution."""


class ZeroVector(Exception):
    """The zero vector has no primitive part."""


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch in dot product")
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class IntMatrix:
    """Immutable matrix of Python ints.

    Row-major tuple of tuples.  Dimensions are positive; vectors are
    columns, so ``a.apply(v)`` is the usual matrix-times-column product.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"non-integer entry {x!r}")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]]) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            raise ValueError("need at least one column")
        return cls.from_rows(zip(*cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls.from_rows([[0] * n for _ in range(m)])

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    # -- shape and access ---------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.col(j) for j in range(self.ncols))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix.from_rows(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix.from_rows([[-x for x in row] for row in self.entries])

    def __mul__(self, k: int) -> "IntMatrix":
        return IntMatrix.from_rows([[k * x for x in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        cols = other.columns()
        return IntMatrix.from_rows(
            [[dot(row, c) for c in cols] for row in self.entries]
        )

    def __pow__(self, k: int) -> "IntMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        out = IntMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(dot(row, v) for row in self.entries)

    def apply_fractions(self, v: Sequence) -> tuple:
        """Matrix times a column of Fractions, exactly."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(zip(*self.entries))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows(
            [ra + rb for ra, rb in zip(self.entries, other.entries)]
        )

    def with_columns(self, cols: Iterable[Sequence[int]]) -> "IntMatrix":
        cols = list(cols)
        if not cols:
            return self
        return self.hstack(IntMatrix.from_columns(cols))

    # -- predicates ---------------------------------------------------

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            x == int(i == j)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
        )

    def scalar_value(self) -> int | None:
        """Return c when the matrix equals c times the identity, else None."""
        if self.nrows != self.ncols:
            return None
        c = self.entries[0][0]
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x != (c if i == j else 0):
                    return None
        return c

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            piv = next((i for i in range(k, n) if a[i][k]), None)
            if piv is None:
                return 0
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # exact by Sylvester's identity
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntMatrix[{body}]"


# -- Smith normal form ------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == S with U, V unimodular and S in Smith form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> Vector:
        k = min(self.S.shape)
        return tuple(self.S[i, i] for i in range(k))


def _pick_pivot(s, t, m, n):
    """Smallest nonzero |entry| in the trailing submatrix; ties go to the
    smaller row index, then the smaller column index."""
    best = None
    for i in range(t, m):
        for j in range(t, n):
            x = s[i][j]
            if x and (best is None or (abs(x), i, j) < best):
                best = (abs(x), i, j)
    return None if best is None else (best[1], best[2])


def snf(matrix: IntMatrix) -> SNFResult:
    """Smith normal form with both transforms.

    Deterministic: the pivot rule is fixed, so identical inputs give
    identical (U, S, V), not just identical S.
    """
    m, n = matrix.shape
    s = [list(row) for row in matrix.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i, q, t):
        # row_i -= q * row_t
        s[i] = [a - q * b for a, b in zip(s[i], s[t])]
        u[i] = [a - q * b for a, b in zip(u[i], u[t])]

    def col_sub(j, q, t):
        for row in s:
            row[j] -= q * row[t]
        for row in v:
            row[j] -= q * row[t]

    t = 0
    while t < min(m, n):
        if _pick_pivot(s, t, m, n) is None:
            break
        while True:
            pi, pj = _pick_pivot(s, t, m, n)
            if pi != t:
                s[t], s[pi] = s[pi], s[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in s:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
            p = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // p
                    if q:
                        row_sub(i, q, t)
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // p
                    if q:
                        col_sub(j, q, t)
                    if s[t][j]:
                        dirty = True
            if dirty:
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if s[i][j] % p
                ),
                None,
            )
            if bad is None:
                break
            # fold the offending row into row t so the pivot shrinks
            row_sub(t, -1, bad)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return SNFResult(
        IntMatrix.from_rows(u), IntMatrix.from_rows(s), IntMatrix.from_rows(v)
    )


# -- rational solving -------------------------------------------------


def _eliminate(a_rows, b_rows):
    """Gauss elimination over Fraction; returns the solution block or raises."""
    n = len(a_rows)
    w = [
        [Fraction(x) for x in a_rows[i]] + [Fraction(x) for x in b_rows[i]]
        for i in range(n)
    ]
    width = len(w[0])
    for k in range(n):
        piv = next((i for i in range(k, n) if w[i][k]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        if piv != k:
            w[k], w[piv] = w[piv], w[k]
        inv = 1 / w[k][k]
        w[k] = [x * inv for x in w[k]]
        for i in range(n):
            if i != k and w[i][k]:
                f = w[i][k]
                w[i] = [x - f * y for x, y in zip(w[i], w[k])]
    return [row[n:width] for row in w]


def solve_rational(matrix: IntMatrix, rhs: Sequence[int]) -> tuple[Fraction, ...]:
    """Unique rational solution of matrix @ x == rhs (square, nonsingular)."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("system must be square")
    if len(rhs) != matrix.nrows:
        raise ValueError("rhs length mismatch")
    sol = _eliminate(matrix.entries, [[x] for x in rhs])
    return tuple(row[0] for row in sol)


def inverse_unimodular(matrix: IntMatrix) -> IntMatrix:
    """Exact integer inverse; requires determinant +-1."""
    n = matrix.nrows
    if matrix.ncols != n:
        raise ValueError("inverse of a non-square matrix")
    sol = _eliminate(matrix.entries, IntMatrix.identity(n).entries)
    rows = []
    for row in sol:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ints.append(int(x))
        rows.append(ints)
    return IntMatrix.from_rows(rows)


def primitive_part(vector: Sequence) -> tuple[Vector, int, int]:
    """Write a nonzero rational vector v as (num/den) * u with u a primitive
    integer vector pointing the same way, num > 0, den > 0, gcd(num, den) = 1.

    Returns (u, num, den).
    """
    for x in vector:
        if isinstance(x, float):
            raise TypeError("floats are not accepted; use Fraction or int")
    fracs = [Fraction(x) for x in vector]
    if all(x == 0 for x in fracs):
        raise ZeroVector("primitive part of zero")
    den = lcm(*(x.denominator for x in fracs))
    ints = [int(x * den) for x in fracs]
    g = gcd(*(abs(x) for x in ints))
    u = tuple(x // g for x in ints)
    scale = Fraction(g, den)
    return u, scale.numerator, scale.denominator


# -- finite abelian quotients -----------------------------------------


class FiniteAbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``invariant_factors`` lists the cyclic orders > 1 in a divisibility
    chain; ``free_rank`` counts infinite cyclic summands.  Groups built by
    :func:`cokernel` remember their defining sublattice and can reduce
    ambient vectors to canonical class tuples.
    """

    def __init__(
        self,
        invariant_factors: Sequence[int] = (),
        free_rank: int = 0,
        *,
        proj: IntMatrix | None = None,
        diag: Vector | None = None,
        relations: IntMatrix | None = None,
        generators: tuple[Vector, ...] | None = None,
        moduli: Vector | None = None,
    ):
        factors = tuple(int(d) for d in invariant_factors)
        if any(d <= 1 for d in factors):
            raise ValueError("trivial invariant factors must be trimmed")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        self.invariant_factors = factors
        self.free_rank = int(free_rank)
        self._proj = proj
        self._diag = diag
        self._relations = relations
        self.generators = generators
        self.moduli = moduli

    @property
    def order(self) -> int:
        if self.free_rank:
            raise ValueError("group is infinite")
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank

    def class_of(self, vector: Sequence[int]) -> Vector:
        """Canonical tuple of the class of an ambient vector: one coordinate
        per invariant factor (reduced), then the free coordinates."""
        if self._proj is None or self._diag is None:
            raise ValueError("group carries no ambient projection")
        w = self._proj.apply(vector)
        tors = tuple(w[i] % d for i, d in enumerate(self._diag) if d > 1)
        free = tuple(w[i] for i, d in enumerate(self._diag) if d == 0)
        return tors + free

    def is_identity(self, vector: Sequence[int]) -> bool:
        return all(x == 0 for x in self.class_of(vector))

    def order_of(self, vector: Sequence[int]) -> int:
        """Order of the class of an ambient vector; infinite order raises."""
        if self._proj is None or self._diag is None:
            raise ValueError("group carries no ambient projection")
        w = self._proj.apply(vector)
        k = 1
        for wi, d in zip(w, self._diag):
            if d == 0:
                if wi:
                    raise ValueError("element has infinite order")
            elif d > 1:
                k = lcm(k, d // gcd(wi % d, d))
        return k

    def elements(self):
        """Iterate canonical class tuples (finite groups only)."""
        if self.free_rank:
            raise ValueError("group is infinite")
        def rec(prefix, rest):
            if not rest:
                yield tuple(prefix)
                return
            for c in range(rest[0]):
                yield from rec(prefix + [c], rest[1:])
        yield from rec([], list(self.invariant_factors))

    def __repr__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        parts += ["Z"] * self.free_rank
        return "FiniteAbelianGroup(%s)" % (" x ".join(parts) if parts else "1")


def cokernel(matrix: IntMatrix) -> FiniteAbelianGroup:
    """Z^n modulo the column lattice of `matrix` (n = its row count)."""
    res = snf(matrix)
    n = matrix.nrows
    diag = list(res.diagonal) + [0] * (n - min(matrix.shape))
    factors = tuple(d for d in diag if d > 1)
    free = sum(1 for d in diag if d == 0)
    uinv = inverse_unimodular(res.U)
    gens = tuple(uinv.col(i) for i, d in enumerate(diag) if d > 1)
    return FiniteAbelianGroup(
        factors,
        free,
        proj=res.U,
        diag=tuple(diag),
        relations=matrix,
        generators=gens,
    )


def subgroup_image(
    ambient: FiniteAbelianGroup, generators: Sequence[Sequence[int]]
) -> FiniteAbelianGroup:
    """Subgroup of a finite cokernel generated by the classes of the given
    ambient vectors, again in invariant-factor form."""
    if ambient._relations is None:
        raise ValueError("ambient group carries no defining lattice")
    if ambient.free_rank:
        raise ValueError("ambient group must be finite")
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        return FiniteAbelianGroup()
    rel = ambient._relations
    n = rel.nrows
    big = rel.with_columns(gens)
    res = snf(big)
    d = res.diagonal
    if len(d) < n or any(x == 0 for x in d):
        raise ValueError("enlarged lattice is not finite index")
    # write the old relation lattice in a basis of the enlarged one
    w = res.U @ rel
    c_rows = []
    for i in range(n):
        row = []
        for j in range(rel.ncols):
            num = w[i, j]
            if num % d[i]:
                raise AssertionError("old lattice not inside enlarged lattice")
            row.append(num // d[i])
        c_rows.append(row)
    factors = tuple(x for x in snf(IntMatrix.from_rows(c_rows)).diagonal if x > 1)
    sub = FiniteAbelianGroup(factors)
    # Lagrange: |subgroup| * |quotient by enlarged lattice| = |ambient|
    quot = 1
    for x in d:
        quot *= x
    if sub.order * quot != ambient.order:
        raise AssertionError("subgroup order fails Lagrange check")
    return sub


def kernel_mod(matrix: IntMatrix, moduli: Sequence[int]) -> FiniteAbelianGroup:
    """Classes e in prod_j Z/m_j admitting an integer lift with
    matrix @ e == 0 (mod M), where M = lcm of the m_j.

    When column j of `matrix` is divisible by M/m_j the congruence is well
    defined classwise and this is exactly the naive solution set.  Returned
    generators are reduced coordinatewise modulo the m_j.
    """
    mods = tuple(int(m) for m in moduli)
    if len(mods) != matrix.ncols:
        raise ValueError("one modulus per column required")
    if any(m < 1 for m in mods):
        raise ValueError("moduli must be positive")
    k, n = matrix.ncols, matrix.nrows
    big_m = lcm(*mods)
    if big_m == 1:
        return FiniteAbelianGroup(generators=(), moduli=mods)

    stacked = matrix.hstack(big_m * IntMatrix.identity(n))
    res = snf(stacked)
    rank = sum(1 for x in res.diagonal if x)
    if rank != n:
        raise AssertionError("stacked system must have full row rank")
    # integer kernel of [A | M*I], projected to the e-coordinates, plus the
    # per-coordinate moduli lattice
    cand = [
        tuple(res.V[i, j] for i in range(k)) for j in range(rank, k + n)
    ] + [tuple(m if i == j else 0 for i in range(k)) for j, m in enumerate(mods)]
    lat = IntMatrix.from_columns(cand)
    res1 = snf(lat)
    s1 = res1.diagonal
    if any(x == 0 for x in s1):
        raise AssertionError("solution lattice must have full rank")
    basis = inverse_unimodular(res1.U) @ IntMatrix.diagonal(s1)
    w = res1.U @ IntMatrix.diagonal(mods)
    c_rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if w[i, j] % s1[i]:
                raise AssertionError("moduli lattice not inside solution lattice")
            row.append(w[i, j] // s1[i])
        c_rows.append(row)
    res2 = snf(IntMatrix.from_rows(c_rows))
    d2 = res2.diagonal
    u2inv = inverse_unimodular(res2.U)
    factors = []
    gens = []
    for i, di in enumerate(d2):
        if di > 1:
            factors.append(di)
            vec = basis.apply(u2inv.col(i))
            gens.append(tuple(x % m for x, m in zip(vec, mods)))
    group = FiniteAbelianGroup(tuple(factors), generators=tuple(gens), moduli=mods)
    total = 1
    for m in mods:
        total *= m
    if group.order * abs(basis.det()) != total:
        raise AssertionError("kernel order fails index check")
    return group
