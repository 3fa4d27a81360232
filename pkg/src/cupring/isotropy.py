"""Isotropic and 1-isotropic subspaces of ``H^1``.

A nonzero subspace E is isotropic when every product of two of its elements
vanishes, and 1-isotropic when those products span a line in ``H^2``.

Maximality here is certified over Q only: the greedy extension stops when no
rational vector outside E cups to zero with all of E.  Reports say "maximal
among rational subspaces" for that reason.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .linalg import QMatrix, kernel_basis, matrix_rank, rref
from .linforms import evaluate
from .polynomial import Scalar, as_rational
from .resonance import CupData, build_delta

MAXIMALITY_QUALIFIER = "maximal among rational subspaces"


class Subspace:
    """A subspace of Q^n kept in reduced row echelon form.

    Equal subspaces have equal bases, so ``==`` is subspace equality.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        vecs = [[as_rational(v) for v in vec] for vec in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, _ = rref(vecs, ambient) if vecs else ([], [])
        self.ambient = ambient
        self.basis = QMatrix(rows, ambient)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, QMatrix.identity(n).entries)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def span(cls, n: int, *vectors: Sequence) -> "Subspace":
        return cls(n, vectors)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> List[Tuple[Scalar, ...]]:
        return list(self.basis.entries)

    def contains(self, v: Sequence) -> bool:
        return Subspace(self.ambient, self.vectors() + [tuple(v)]).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return Subspace(self.ambient, self.vectors() + other.vectors()).dim == self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace({self.ambient}, {self.basis.tolist()!r})"


def _check_ambient(c: CupData, e: Subspace) -> None:
    if e.ambient != c.n:
        raise ValueError(f"subspace lives in Q^{e.ambient} but H^1 has dimension {c.n}")


def cup_image_dim(c: CupData, e: Subspace) -> int:
    """Dimension of the span of all products ``u u v`` with u, v in E."""
    _check_ambient(c, e)
    if e.dim < 2 or c.m == 0:
        return 0
    vecs = e.vectors()
    rows = [c.cup(u, v) for u, v in combinations(vecs, 2)]
    return matrix_rank(QMatrix(rows, c.m))


def is_isotropic(c: CupData, e: Subspace) -> bool:
    _check_ambient(c, e)
    return e.dim >= 1 and cup_image_dim(c, e) == 0


def is_one_isotropic(c: CupData, e: Subspace) -> bool:
    return cup_image_dim(c, e) == 1


def annihilator(c: CupData, e: Subspace) -> Subspace:
    """All y with ``y u v = 0`` for every v in E.

    The matrix of linear forms evaluated at v sends y to ``v u y``, so this is
    the kernel of those evaluations stacked.
    """
    _check_ambient(c, e)
    if e.dim == 0:
        return Subspace.whole(c.n)
    delta = build_delta(c)
    rows = []
    for v in e.vectors():
        rows.extend(evaluate(delta, v).entries)
    return Subspace(c.n, kernel_basis(QMatrix(rows, c.n)))


def extend_isotropic(c: CupData, e: Subspace | None = None) -> Subspace:
    """Greedily enlarge an isotropic subspace until no rational vector can be added.

    ``span(E, y)`` is isotropic exactly when y cups to zero with a basis of E,
    so each step adjoins the first echelon basis vector of the annihilator
    that is not already in E.  A zero-dimensional E means "start anywhere".
    """
    if e is None:
        e = Subspace.zero(c.n)
    _check_ambient(c, e)
    if e.dim > 0 and not is_isotropic(c, e):
        raise ValueError("extend_isotropic needs an isotropic (or zero) starting subspace")
    current = e
    while True:
        ann = annihilator(c, current)
        if ann.dim == current.dim:
            return current
        extra = next(v for v in ann.vectors() if not current.contains(v))
        current = Subspace(c.n, current.vectors() + [extra])
