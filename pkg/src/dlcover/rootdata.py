"""Root data on a cocharacter lattice.

A datum is the rank of the lattice Y plus the lists of simple roots
(characters, i.e. integer covectors on Y) and simple coroots (vectors in
Y).  Only the data needed for reflection actions on Y is kept; there is no
ambient group here, just integer linear algebra.

Indices of simple roots, word letters, and mask positions are 1-based
throughout the public API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .lattice import IntMatrix, Vector, dot


class UnknownPreset(Exception):
    pass


class ImprimitiveCoroot(Exception):
    """A simple coroot is an integer multiple of a shorter lattice vector."""


class BadCartan(Exception):
    """Pairing table violates the Cartan matrix conditions."""


@dataclass(frozen=True)
class RootDatum:
    name: str
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    # Extension of the diagram flip to all of Y, for data whose coroots do
    # not span Y (the general-linear presets).  Never serialized.
    flip_on_Y: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.simple_coroots[0])

    @property
    def nletters(self) -> int:
        return len(self.simple_roots)

    def cartan_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [
                [dot(a, bv) for bv in self.simple_coroots]
                for a in self.simple_roots
            ]
        )


def validate(datum: RootDatum) -> None:
    """Check the Cartan conditions and coroot primitivity; raise on failure."""
    roots, coroots = datum.simple_roots, datum.simple_coroots
    if not roots or len(roots) != len(coroots):
        raise BadCartan("need equally many simple roots and coroots")
    rank = len(coroots[0])
    if any(len(v) != rank for v in coroots) or any(len(v) != rank for v in roots):
        raise BadCartan("root and coroot lengths must all equal the rank")
    for v in coroots:
        if all(x == 0 for x in v):
            raise ImprimitiveCoroot("zero coroot")
        if gcd(*(abs(x) for x in v)) != 1:
            raise ImprimitiveCoroot(f"coroot {v} is not primitive")
    cartan = datum.cartan_matrix()
    n = datum.nletters
    for i in range(n):
        for j in range(n):
            a = cartan[i, j]
            if i == j:
                if a != 2:
                    raise BadCartan(f"diagonal pairing {a} != 2 at {i + 1}")
            else:
                if a > 0:
                    raise BadCartan(f"positive off-diagonal pairing at {i + 1},{j + 1}")
                if (a == 0) != (cartan[j, i] == 0):
                    raise BadCartan(f"asymmetric zero at {i + 1},{j + 1}")
    if datum.flip_on_Y is not None:
        flip = datum.flip_on_Y
        perm = _flip_perm(n)
        for j in range(n):
            if flip.apply(coroots[j]) != coroots[perm[j + 1] - 1]:
                raise BadCartan("flip extension does not permute the coroots")


def _flip_perm(n: int) -> dict[int, int]:
    return {j: n + 1 - j for j in range(1, n + 1)}


def _cartan_preset(name: str, cartan: Sequence[Sequence[int]]) -> RootDatum:
    # coroots are the standard basis, so roots are the Cartan rows
    n = len(cartan)
    coroots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    roots = tuple(tuple(row) for row in cartan)
    return RootDatum(name, roots, coroots)


def _type_a_cartan(n: int) -> list[list[int]]:
    return [
        [2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)]
        for i in range(n)
    ]


def preset(name: str) -> RootDatum:
    """Built-in data: SLn and GLn for n >= 2, Sp4, G2."""
    m = re.fullmatch(r"(SL|GL)(\d+)", name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 2:
            raise UnknownPreset(name)
        if kind == "SL":
            datum = _cartan_preset(name, _type_a_cartan(n - 1))
        else:
            vecs = tuple(
                tuple(int(j == i) - int(j == i + 1) for j in range(n))
                for i in range(n - 1)
            )
            flip = IntMatrix.from_columns(
                [tuple(-int(i == n - 1 - j) for i in range(n)) for j in range(n)]
            )
            datum = RootDatum(name, vecs, vecs, flip_on_Y=flip)
    elif name == "Sp4":
        datum = _cartan_preset(name, [[2, -1], [-2, 2]])
    elif name == "G2":
        datum = _cartan_preset(name, [[2, -1], [-3, 2]])
    else:
        raise UnknownPreset(name)
    validate(datum)
    return datum


# -- reflections and words --------------------------------------------


def reflection_on_Y(datum: RootDatum, j: int) -> IntMatrix:
    """Matrix of the simple reflection s_j on Y: v -> v - <alpha_j, v> alpha_j_vee."""
    if not 1 <= j <= datum.nletters:
        raise ValueError(f"letter {j} out of range")
    root = datum.simple_roots[j - 1]
    coroot = datum.simple_coroots[j - 1]
    n = datum.rank
    return IntMatrix.from_rows(
        [
            [int(i == k) - coroot[i] * root[k] for k in range(n)]
            for i in range(n)
        ]
    )


def check_word(datum: RootDatum, word: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in word)
    if not w:
        raise ValueError("word must be nonempty")
    for x in w:
        if not 1 <= x <= datum.nletters:
            raise ValueError(f"letter {x} out of range 1..{datum.nletters}")
    return w


def check_mask(word: Sequence[int], mask: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(i) for i in mask)
    for i in out:
        if not 1 <= i <= len(word):
            raise ValueError(f"mask position {i} out of range 1..{len(word)}")
    return out


def word_matrix(datum: RootDatum, word: Sequence[int]) -> IntMatrix:
    """Action of s_{w_1} ... s_{w_r} on Y (identity for the empty word)."""
    out = IntMatrix.identity(datum.rank)
    for letter in word:
        out = out @ reflection_on_Y(datum, letter)
    return out


def subword(word: Sequence[int], mask: Iterable[int]) -> tuple[int, ...]:
    """Letters that survive after dropping the masked positions."""
    dropped = check_mask(word, mask)
    return tuple(x for i, x in enumerate(word, start=1) if i not in dropped)


def beta_coroot(datum: RootDatum, word: Sequence[int], i: int) -> Vector:
    """The coroot of letter i of the word, pushed through the prefix:
    s_{w_1} ... s_{w_{i-1}} applied to the coroot of w_i."""
    w = check_word(datum, word)
    if not 1 <= i <= len(w):
        raise ValueError(f"position {i} out of range")
    prefix = word_matrix(datum, w[: i - 1])
    return prefix.apply(datum.simple_coroots[w[i - 1] - 1])


def subword_lattice_generators(
    datum: RootDatum, word: Sequence[int], mask: Iterable[int]
) -> tuple[Vector, ...]:
    """Generators beta_i, one per masked position, in ascending position order."""
    dropped = sorted(check_mask(word, mask))
    return tuple(beta_coroot(datum, word, i) for i in dropped)


# -- serialization ----------------------------------------------------


def datum_to_json(datum: RootDatum) -> dict:
    return {
        "name": datum.name,
        "rank": datum.rank,
        "simple_roots": [list(v) for v in datum.simple_roots],
        "simple_coroots": [list(v) for v in datum.simple_coroots],
    }


def datum_from_json(data: dict) -> RootDatum:
    datum = RootDatum(
        str(data["name"]),
        tuple(tuple(int(x) for x in v) for v in data["simple_roots"]),
        tuple(tuple(int(x) for x in v) for v in data["simple_coroots"]),
    )
    validate(datum)
    if datum.rank != int(data["rank"]):
        raise BadCartan("declared rank does not match the vectors")
    return datum
