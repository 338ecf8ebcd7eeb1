"""Frobenius twists as integer matrices on the cocharacter lattice.

A twist is a matrix F on Y of the form q0 * D with D a finite-order
automorphism permuting the simple coroots (split means D = Id), or an
arbitrary user-supplied integer matrix tagged with its prime.  The key
derived data is the certificate (d, q): the least power of F that acts as
a positive scalar q = p^a.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import IntMatrix, SingularMatrix, inverse_unimodular
from .rootdata import RootDatum, check_mask, check_word, subword, word_matrix


class NotPrimePower(Exception):
    pass


class NoSuchAutomorphism(Exception):
    """The permutation does not extend to a lattice automorphism we know."""


class NoCertificate(Exception):
    """No power of the twist matrix became a positive prime-power scalar."""


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, a) with n == p**a, a >= 1, or None."""
    if n < 2:
        return None
    p = next((f for f in range(2, n + 1) if f * f > n or n % f == 0), n)
    if n % p:
        p = n
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return (p, a) if n == 1 else None


@dataclass(frozen=True)
class FrobeniusTwist:
    matrix: IntMatrix
    p: int
    kind: str  # "split" | "twisted" | "raw"
    q0: int | None = None
    perm: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DQCertificate:
    """matrix**d == q * Id with q a power of p."""

    d: int
    q: int


def make_split(datum: RootDatum, q0: int) -> FrobeniusTwist:
    pp = is_prime_power(q0)
    if pp is None:
        raise NotPrimePower(f"{q0} is not a prime power")
    return FrobeniusTwist(
        q0 * IntMatrix.identity(datum.rank), pp[0], "split", q0=q0
    )


def _finite_order(m: IntMatrix, cap: int = 48) -> int:
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc @ m
    raise NoSuchAutomorphism("candidate automorphism has unbounded order")


def make_twisted(datum: RootDatum, q0: int, perm) -> FrobeniusTwist:
    """Twist by a symmetry of the Cartan matrix.

    The permutation is given by its 1-based images.  It must preserve the
    Cartan matrix, and it must extend to Y in a way the datum knows about:
    either the coroots form a basis of Y (so a permutation matrix in that
    basis works), or the datum supplies an explicit flip extension.  No
    extension is ever invented beyond those two sources.
    """
    pp = is_prime_power(q0)
    if pp is None:
        raise NotPrimePower(f"{q0} is not a prime power")
    n = datum.nletters
    images = tuple(int(x) for x in perm)
    if sorted(images) != list(range(1, n + 1)):
        raise NoSuchAutomorphism(f"{images} is not a permutation of 1..{n}")
    cartan = datum.cartan_matrix()
    for i in range(n):
        for j in range(n):
            if cartan[images[i] - 1, images[j] - 1] != cartan[i, j]:
                raise NoSuchAutomorphism("permutation does not preserve the Cartan matrix")

    coroots = datum.simple_coroots
    if images == tuple(range(1, n + 1)):
        d_mat = IntMatrix.identity(datum.rank)
    elif n == datum.rank and abs(
        IntMatrix.from_columns(coroots).det()
    ) == 1:
        c = IntMatrix.from_columns(coroots)
        c_perm = IntMatrix.from_columns([coroots[img - 1] for img in images])
        d_mat = c_perm @ inverse_unimodular(c)
    elif images == tuple(range(n, 0, -1)) and datum.flip_on_Y is not None:
        d_mat = datum.flip_on_Y
    else:
        raise NoSuchAutomorphism(
            "no extension of the permutation to Y is available for this datum"
        )

    for j in range(n):
        if d_mat.apply(coroots[j]) != coroots[images[j] - 1]:
            raise NoSuchAutomorphism("extension does not permute the coroots")
    _finite_order(d_mat)
    return FrobeniusTwist(q0 * d_mat, pp[0], "twisted", q0=q0, perm=images)


def make_raw(matrix: IntMatrix, p: int) -> FrobeniusTwist:
    if is_prime_power(p) != (p, 1):
        raise NotPrimePower(f"{p} is not prime")
    if matrix.nrows != matrix.ncols:
        raise ValueError("twist matrix must be square")
    if matrix.det() == 0:
        raise SingularMatrix("twist matrix must be nonsingular")
    return FrobeniusTwist(matrix, p, "raw")


def wf_matrix(
    datum: RootDatum, twist: FrobeniusTwist, word, mask=()
) -> IntMatrix:
    """Matrix of (subword of w) composed with F on Y.

    Masked positions are dropped from the word; the empty mask gives the
    full wF, the full mask gives F itself.
    """
    w = check_word(datum, word)
    if twist.matrix.nrows != datum.rank:
        raise ValueError("twist size does not match the datum rank")
    remaining = subword(w, check_mask(w, mask))
    if not remaining:
        return twist.matrix
    return word_matrix(datum, remaining) @ twist.matrix


def discover_dq(wf: IntMatrix, p: int, cap: int = 1000) -> DQCertificate:
    """Least d with wf**d == q * Id, q a positive power of p.

    Scalar powers that are not positive powers of p (for instance -q) are
    passed over, since a later power may still land on one.
    """
    power = wf
    for d in range(1, cap + 1):
        c = power.scalar_value()
        if c is not None and c >= 2:
            pp = is_prime_power(c)
            if pp is not None and pp[0] == p:
                return DQCertificate(d, c)
        power = power @ wf
    raise NoCertificate(f"no scalar p-power within {cap} steps")


def norm_matrix(wf: IntMatrix, d: int) -> IntMatrix:
    """Id + wf + wf**2 + ... + wf**(d-1)."""
    if d < 1:
        raise ValueError("d must be positive")
    acc = IntMatrix.identity(wf.nrows)
    power = IntMatrix.identity(wf.nrows)
    for _ in range(d - 1):
        power = power @ wf
        acc = acc + power
    return acc


# -- serialization ----------------------------------------------------


def twist_to_json(twist: FrobeniusTwist) -> dict:
    out: dict = {"kind": twist.kind, "p": twist.p}
    if twist.q0 is not None:
        out["q0"] = twist.q0
    if twist.perm is not None:
        out["perm"] = list(twist.perm)
    if twist.kind == "raw":
        out["matrix"] = [list(row) for row in twist.matrix.entries]
    return out


def twist_from_json(data: dict, datum: RootDatum) -> FrobeniusTwist:
    kind = data["kind"]
    if kind == "split":
        return make_split(datum, int(data["q0"]))
    if kind == "twisted":
        return make_twisted(datum, int(data["q0"]), data["perm"])
    if kind == "raw":
        return make_raw(
            IntMatrix.from_rows(data["matrix"]), int(data["p"])
        )
    raise ValueError(f"unknown twist kind {kind!r}")
