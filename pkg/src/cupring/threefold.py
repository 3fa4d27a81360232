"""Alternating 3-forms on ``H^1`` of a closed oriented 3-manifold.

The triple product ``mu(x, y, z) = <x u y u z, [M]>`` is alternating and
determines the whole cup product ``H^1 x H^1 -> H^2``: in the basis of
``H^2`` dual (Kronecker, then Poincare) to e_1..e_n, the structure constants
are simply ``mu[i,j,k] = mu(e_i, e_j, e_k)``.  Hence ``b_2 = b_1`` and the
matrix of linear forms is skew-symmetric.

Reversing the orientation negates every value.  Ranks, parities and
vanishing of minors are insensitive to that sign, so no orientation flag is
carried.  Torsion in ``H^1(M; Z)`` is invisible over Q and ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from .isotropy import Subspace, cup_image_dim
from .linalg import QMatrix, matrix_rank
from .polynomial import Scalar, _norm, as_rational
from .resonance import CupData, ProperResult, r1_is_proper


def _sort_sign(i: int, j: int, k: int) -> Tuple[int, Tuple[int, int, int]]:
    if i == j or j == k or i == k:
        return 0, (i, j, k)
    t = [i, j, k]
    sign = 1
    for a in range(3):
        for b in range(2 - a):
            if t[b] > t[b + 1]:
                t[b], t[b + 1] = t[b + 1], t[b]
                sign = -sign
    return sign, (t[0], t[1], t[2])


class ThreeForm:
    """An alternating 3-form given by its values on increasing index triples (1-based).

    >>> t = ThreeForm(3, {(1, 2, 3): 1})
    >>> t.value(3, 2, 1), t.value(2, 3, 1), t.value(1, 1, 2)
    (-1, 1, 0)
    """

    __slots__ = ("n", "values", "_key")

    def __init__(self, n: int, values: Mapping[Tuple[int, int, int], object] | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        clean: Dict[Tuple[int, int, int], Scalar] = {}
        for key, value in (values or {}).items():
            i, j, k = (int(t) for t in key)
            if not (1 <= i < j < k <= n):
                raise ValueError(f"3-form index ({i},{j},{k}): need 1 <= i < j < k <= n = {n}")
            q = as_rational(value)
            if q:
                clean[(i, j, k)] = q
        self.n = n
        self.values = dict(sorted(clean.items()))
        self._key = (n, tuple(self.values.items()))

    def value(self, i: int, j: int, k: int) -> Scalar:
        sign, key = _sort_sign(i, j, k)
        if not sign:
            return 0
        return sign * self.values.get(key, 0)

    def __call__(self, x: Sequence, y: Sequence, z: Sequence) -> Scalar:
        """Evaluate on three vectors by trilinearity."""
        total = 0
        for (i, j, k), c in self.values.items():
            a, b, d = i - 1, j - 1, k - 1
            det = (x[a] * (y[b] * z[d] - y[d] * z[b])
                   - x[b] * (y[a] * z[d] - y[d] * z[a])
                   + x[d] * (y[a] * z[b] - y[b] * z[a]))
            total += c * det
        return _norm(total)

    def negated(self) -> "ThreeForm":
        return ThreeForm(self.n, {k: -v for k, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThreeForm):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"ThreeForm(n={self.n}, values={self.values!r})"


def change_of_basis_threeform(t: ThreeForm, h1: Sequence[Sequence]) -> ThreeForm:
    """Values of the form on a new basis; row i of ``h1`` is the new e'_i."""
    p = QMatrix(h1, t.n)
    if p.rows != t.n or matrix_rank(p) != t.n:
        raise ValueError("change of basis must be an invertible n x n matrix")
    new = {}
    for i in range(t.n):
        for j in range(i + 1, t.n):
            for k in range(j + 1, t.n):
                v = t(p.row(i), p.row(j), p.row(k))
                if v:
                    new[(i + 1, j + 1, k + 1)] = v
    return ThreeForm(t.n, new)


def cup_from_threeform(t: ThreeForm) -> CupData:
    """Cup-product data in the Poincare/Kronecker dual basis of ``H^2``; m = n."""
    constants = {}
    for i in range(1, t.n + 1):
        for j in range(i + 1, t.n + 1):
            for k in range(1, t.n + 1):
                v = t.value(i, j, k)
                if v:
                    constants[(i, j, k)] = v
    return CupData(t.n, t.n, constants)


@dataclass(frozen=True)
class Prop51Report:
    """Results of the two 3-manifold constraints on the cup product.

    For genuine 3-manifold data the whole ``H^1`` is never 1-isotropic, and
    ``R_1`` is all of ``H^1`` when ``b_1`` is even.  ``violations`` lists any
    constraint the data breaks, which can only happen for corrupt input.
    """

    one_isotropic_violation: bool
    cup_image_dim: int
    b1_parity: str
    r1_full: bool
    r1: ProperResult

    @property
    def even_b1_violation(self) -> bool:
        return self.b1_parity == "even" and not self.r1_full

    @property
    def violations(self) -> Tuple[str, ...]:
        out = []
        if self.one_isotropic_violation:
            out.append("prop-5.1-1")
        if self.even_b1_violation:
            out.append("prop-5.1-2")
        return tuple(out)


def parity(n: int) -> str:
    return "even" if n % 2 == 0 else "odd"


def prop51_check(t: ThreeForm) -> Prop51Report:
    if t.n < 1:
        raise ValueError("b1 = 0: there is no H^1 to test")
    c = cup_from_threeform(t)
    image = cup_image_dim(c, Subspace.whole(c.n))
    r1 = r1_is_proper(c)
    return Prop51Report(
        one_isotropic_violation=image == 1,
        cup_image_dim=image,
        b1_parity=parity(t.n),
        r1_full=not r1.proper,
        r1=r1,
    )
