"""Exhaustive rank-one checks over small finite fields.

Everything here is brute force on purpose: the point is to certify, by
complete enumeration, the behavior of the matrix-entry map used to build
rank-one covers, and to count points on the plane curve x y^q - x^q y = 1
together with the action of the (q+1)-st roots of unity on it.

Fields are lookup tables.  Prime fields are residues; the four prime-power
sizes 4, 8, 9, 16 use fixed irreducible polynomials (t^2+t+1, t^3+t+1,
t^2+1, t^4+t+1), elements being base-p digit strings packed into ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .frobenius import is_prime_power


class FieldUnsupported(Exception):
    pass


_MAX_PRIME = 31
# t^k rewritten as a lower-degree polynomial (digit lists, constant first)
_REDUCTIONS = {4: [1, 1], 8: [1, 1, 0], 9: [2, 0], 16: [1, 1, 0, 0]}


class GF:
    """Field of order q with full addition and multiplication tables."""

    def __init__(self, q: int):
        pp = is_prime_power(q)
        if pp is None:
            raise FieldUnsupported(f"{q} is not a prime power")
        p, k = pp
        if k == 1:
            if p > _MAX_PRIME:
                raise FieldUnsupported(f"prime {p} exceeds the table bound")
        elif q not in _REDUCTIONS:
            raise FieldUnsupported(f"no table for q = {q}")
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            red = _REDUCTIONS[q]
            digs = [self._digits(x) for x in range(q)]
            self._add = [
                [
                    self._value([(u + v) % p for u, v in zip(digs[a], digs[b])])
                    for b in range(q)
                ]
                for a in range(q)
            ]
            self._mul = [
                [self._poly_mul(digs[a], digs[b], red) for b in range(q)]
                for a in range(q)
            ]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        self._inv = [0] + [
            next(b for b in range(1, q) if self._mul[a][b] == 1)
            for a in range(1, q)
        ]
        if q <= 16:
            self._self_check()

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.k)]

    def _value(self, digits) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _poly_mul(self, da, db, red) -> int:
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, u in enumerate(da):
            for j, v in enumerate(db):
                conv[i + j] = (conv[i + j] + u * v) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = conv[deg]
            if c:
                conv[deg] = 0
                for i, r in enumerate(red):
                    conv[deg - k + i] = (conv[deg - k + i] + c * r) % p
        return self._value(conv[:k])

    def _self_check(self):
        q = self.q
        rng = range(q)
        for a in rng:
            assert self._add[a][0] == a and self._mul[a][1] == a
            assert self._mul[a][0] == 0
            for b in rng:
                assert self._add[a][b] == self._add[b][a]
                assert self._mul[a][b] == self._mul[b][a]
        for a in rng:
            for b in rng:
                for c in rng:
                    assert self._add[self._add[a][b]][c] == self._add[a][self._add[b][c]]
                    assert self._mul[self._mul[a][b]][c] == self._mul[a][self._mul[b][c]]
                    assert self._mul[a][self._add[b][c]] == self._add[
                        self._mul[a][b]
                    ][self._mul[a][c]]
        for a in range(1, q):
            assert self._mul[a][self._inv[a]] == 1

    # -- public ops ---------------------------------------------------

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def pow(self, a, e: int):
        out = 1
        for _ in range(e):
            out = self._mul[out][a]
        return out

    @property
    def elements(self):
        return range(self.q)

    @property
    def units(self):
        return range(1, self.q)


# -- the rank-one group and its entry map -----------------------------


def sl2_elements(field: GF) -> list[tuple[int, int, int, int]]:
    """All (a, b, c, d) with ad - bc = 1."""
    out = []
    for a, b, c, d in product(field.elements, repeat=4):
        if field.sub(field.mul(a, d), field.mul(b, c)) == 1:
            out.append((a, b, c, d))
    return out


def mat_mul(field: GF, g, h):
    a, b, c, d = g
    e, f, x, y = h
    return (
        field.add(field.mul(a, e), field.mul(b, x)),
        field.add(field.mul(a, f), field.mul(b, y)),
        field.add(field.mul(c, e), field.mul(d, x)),
        field.add(field.mul(c, f), field.mul(d, y)),
    )


def phi(g) -> int:
    """Lower-left entry."""
    return g[2]


def _diag(field, z):
    return (z, 0, 0, field.inv(z))


def _unipotent(x):
    return (1, x, 0, 1)


def _s_element(field):
    return (0, field.neg(1), 1, 0)


@dataclass(frozen=True)
class PhiReport:
    q: int
    group_order: int
    scaling: bool
    twisted_conjugation: bool
    zero_locus_is_triangular: bool
    one_locus_is_cell: bool
    bi_invariance: bool

    @property
    def ok(self) -> bool:
        return (
            self.scaling
            and self.twisted_conjugation
            and self.zero_locus_is_triangular
            and self.one_locus_is_cell
            and self.bi_invariance
        )


def check_phi(q: int) -> PhiReport:
    """Exhaustively certify the entry map phi on SL2(F_q).

    Checks, over all group elements and all parameters:
    * left and right scaling by the diagonal torus twists phi by z,
    * twisted conjugation g -> t^{-1} g (s t s^{-1}) fixes phi,
    * phi vanishes exactly on the upper triangular subgroup,
    * phi equals 1 exactly on the double cell U s U (and phi(s) = 1),
    * phi is invariant under U on both sides.
    """
    field = GF(q)
    group = sl2_elements(field)
    s = _s_element(field)

    scaling = True
    twisted = True
    for z in field.units:
        t = _diag(field, z)
        t_inv = _diag(field, field.inv(z))
        st = mat_mul(field, mat_mul(field, s, t), _inv2(field, s))
        z_inv = field.inv(z)
        for g in group:
            if phi(mat_mul(field, t, g)) != field.mul(z_inv, phi(g)):
                scaling = False
            if phi(mat_mul(field, g, t)) != field.mul(z, phi(g)):
                scaling = False
            if phi(mat_mul(field, mat_mul(field, t_inv, g), st)) != phi(g):
                twisted = False

    triangular = {
        (a, b, 0, field.inv(a)) for a in field.units for b in field.elements
    }
    zero_locus = {g for g in group if phi(g) == 0}
    zero_ok = zero_locus == triangular

    cell = {
        mat_mul(field, mat_mul(field, _unipotent(x), s), _unipotent(y))
        for x in field.elements
        for y in field.elements
    }
    one_locus = {g for g in group if phi(g) == 1}
    one_ok = one_locus == cell and phi(s) == 1

    biinv = all(
        phi(mat_mul(field, mat_mul(field, _unipotent(x), g), _unipotent(y)))
        == phi(g)
        for g in group
        for x in field.elements
        for y in field.elements
    )

    return PhiReport(q, len(group), scaling, twisted, zero_ok, one_ok, biinv)


def _inv2(field, g):
    a, b, c, d = g
    return (d, field.neg(b), field.neg(c), a)


# -- the plane curve --------------------------------------------------


@dataclass(frozen=True)
class DrinfeldReport:
    q: int
    k: int
    count: int
    mu_order: int
    free: bool
    orbits: int


def drinfeld_points(q: int, k: int = 2) -> DrinfeldReport:
    """Count points of the rank-one curve over F_{q^k} and certify that the
    (q+1)-st roots of unity act freely on them by scaling.

    The curve is x y^q - x^q y = c.  The determinant form on the left takes
    values z with z^q = -z only, so a constant with c^q = -c is the one
    that makes the curve rational over the coefficient field; c = 1 works
    exactly in characteristic 2.  The count does not depend on which
    admissible c is picked (scaling by units permutes them transitively),
    and we fix the least one in table order.  If no nonzero admissible
    constant exists in F_{q^k} (k odd, q odd) the point count is zero.
    """
    if is_prime_power(q) is None:
        raise FieldUnsupported(f"{q} is not a prime power")
    if k < 1:
        raise ValueError("k must be positive")
    field = GF(q**k)
    c = next(
        (z for z in field.units if field.pow(z, q) == field.neg(z)), None
    )
    if c is None:
        pts = []
    else:
        pts = [
            (x, y)
            for x in field.elements
            for y in field.elements
            if field.sub(
                field.mul(x, field.pow(y, q)), field.mul(field.pow(x, q), y)
            )
            == c
        ]
    mu = [z for z in field.units if field.pow(z, q + 1) == 1]
    pt_set = set(pts)
    free = True
    closed = True
    for x, y in pts:
        seen = set()
        for z in mu:
            img = (field.mul(z, x), field.mul(z, y))
            if img not in pt_set:
                closed = False
            if img in seen:
                free = False
            seen.add(img)
    orbits = len(pts) // len(mu) if (free and closed and pts) else 0
    if not pts:
        orbits = 0
    return DrinfeldReport(q, k, len(pts), len(mu), free and closed, orbits)
