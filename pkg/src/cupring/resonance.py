"""Cup-product data, the matrix of linear forms it defines, and resonance.

For a cohomology ring with ``H^1`` of dimension n (basis e_1..e_n) and ``H^2``
of dimension m (basis f_1..f_m), write ``e_i u e_j = sum_k mu[i,j,k] f_k``.
The m x n matrix of linear forms with entry ``(k, j) = sum_i mu[i,j,k] x_i``
sends a vector y to the cup product x u y, so the first resonance variety

    R_d = {x : there is a (d+1)-dimensional W with x u W = 0}

is the locus where this matrix has rank at most n - d - 1, i.e. the common
zeros of its (n - d) x (n - d) minors.

All computations are over Q.  Vanishing of minors, ranks of rational
matrices and polynomial identities do not change under the extension Q -> C,
so the answers are the complex ones for rationally defined data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .linalg import QMatrix, determinant as qdet, matrix_rank
from .linforms import IdealGens, LinFormMatrix, iter_minors, minor, minors, evaluate
from .polynomial import Polynomial, Scalar, _norm, as_rational

#: Number of random points tried before falling back to exhaustive expansion.
SAMPLING_TRIALS = 16
#: Fixed seed; sampling only ever proposes candidates, so any seed is sound.
SAMPLING_SEED = 20071001


class CupData:
    """Structure constants of the cup product ``H^1 x H^1 -> H^2``.

    ``constants`` maps 1-based ``(i, j, k)`` with ``i < j`` to ``mu[i,j,k]``;
    zero values are dropped.  Lookups with ``i > j`` follow by antisymmetry.

    >>> c = CupData(4, 1, {(1, 2, 1): 1, (3, 4, 1): 1})
    >>> c.lookup(2, 1, 1)
    -1
    """

    __slots__ = ("n", "m", "constants", "_key")

    def __init__(self, n: int, m: int, constants: Mapping[Tuple[int, int, int], object] | None = None):
        if n < 0 or m < 0:
            raise ValueError("dimensions must be non-negative")
        clean: Dict[Tuple[int, int, int], Scalar] = {}
        for key, value in (constants or {}).items():
            i, j, k = (int(t) for t in key)
            if not (1 <= i < j <= n):
                raise ValueError(f"constant index ({i},{j},{k}): need 1 <= i < j <= n = {n}")
            if not 1 <= k <= m:
                raise ValueError(f"constant index ({i},{j},{k}): need 1 <= k <= m = {m}")
            q = as_rational(value)
            if q:
                clean[(i, j, k)] = q
        self.n = n
        self.m = m
        self.constants = dict(sorted(clean.items()))
        self._key = (n, m, tuple(self.constants.items()))

    def lookup(self, i: int, j: int, k: int) -> Scalar:
        if i == j:
            return 0
        if i < j:
            return self.constants.get((i, j, k), 0)
        return -self.constants.get((j, i, k), 0)

    def cup(self, u: Sequence, v: Sequence) -> Tuple[Scalar, ...]:
        """Coordinates of ``u u v`` in the ``H^2`` basis."""
        out = [0] * self.m
        for (i, j, k), c in self.constants.items():
            w = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]
            if w:
                out[k - 1] += c * w
        return tuple(_norm(x) for x in out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CupData):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CupData(n={self.n}, m={self.m}, constants={self.constants!r})"


def change_of_basis(c: CupData, h1: Sequence[Sequence], h2: Sequence[Sequence] | None = None) -> CupData:
    """Rewrite the data in new bases.

    Row ``i`` of ``h1`` gives the new ``e'_i`` in old coordinates.  ``h2``
    (m x m, invertible) acts on the coefficient vectors: the new constants are
    ``mu'[i,j,:] = mu[i,j,:] @ h2``.  Invertibility is checked.
    """
    p = QMatrix(h1, c.n)
    if p.rows != c.n or matrix_rank(p) != c.n:
        raise ValueError("H^1 change of basis must be an invertible n x n matrix")
    q = QMatrix(h2, c.m) if h2 is not None else QMatrix.identity(c.m)
    if q.rows != c.m or matrix_rank(q) != c.m:
        raise ValueError("H^2 change of basis must be an invertible m x m matrix")
    new = {}
    for i in range(c.n):
        for j in range(i + 1, c.n):
            prod = c.cup(p.row(i), p.row(j))
            for k in range(c.m):
                val = sum(prod[a] * q[a, k] for a in range(c.m))
                if val:
                    new[(i + 1, j + 1, k + 1)] = val
    return CupData(c.n, c.m, new)


@lru_cache(maxsize=512)
def build_delta(c: CupData) -> LinFormMatrix:
    """The m x n matrix with entry ``(k, j) = sum_i mu[i,j,k] x_i``.

    >>> print(build_delta(CupData(4, 1, {(1, 2, 1): 1, (3, 4, 1): 1})).tolist())
    [['-x2', 'x1', '-x4', 'x3']]
    """
    coeffs = [[[c.lookup(i, j, k) for i in range(1, c.n + 1)]
               for j in range(1, c.n + 1)]
              for k in range(1, c.m + 1)]
    return LinFormMatrix([[Polynomial.linear_form(v) for v in row] for row in coeffs], c.n, c.n)


def delta_times_x(c: CupData) -> Tuple[Polynomial, ...]:
    """The polynomial vector obtained by applying the matrix to (x1, ..., xn)."""
    return build_delta(c).apply(Polynomial.variables(c.n))


@dataclass(frozen=True)
class ResonanceReport:
    d: int
    ideal: IdealGens
    full_space: bool
    witness: Optional[Polynomial] = None


def _check_depth(c: CupData, d: int) -> None:
    if not 1 <= d <= c.n - 1:
        raise ValueError(f"depth d = {d} out of range: need 1 <= d <= n - 1 = {c.n - 1}")


def resonance_ideal(c: CupData, d: int = 1) -> ResonanceReport:
    """Generators of the ideal cutting out ``R_d``, with a symbolic fullness test.

    Every generator is expanded and zero-tested, so ``full_space`` is exact.
    """
    _check_depth(c, d)
    ideal = minors(build_delta(c), c.n - d)
    witness = None if ideal.unit else next(ideal.nonzero_generators(), None)
    full = not ideal.unit and witness is None
    return ResonanceReport(d, ideal, full, witness)


def membership(c: CupData, d: int, x: Sequence) -> bool:
    """Is x in ``R_d``?  Decided by the rank of the evaluated matrix."""
    _check_depth(c, d)
    if len(x) != c.n:
        raise ValueError(f"point has length {len(x)}, expected n = {c.n}")
    return matrix_rank(evaluate(build_delta(c), x)) <= c.n - d - 1


@dataclass(frozen=True)
class ProperResult:
    """Outcome of :func:`r1_is_proper`.

    ``witness`` is a nonzero (n-1)-minor (0-based ``rows``/``cols``), and
    ``point`` a rational point where it does not vanish, when one was found.
    """

    proper: bool
    witness: Optional[Polynomial] = None
    rows: Tuple[int, ...] = ()
    cols: Tuple[int, ...] = ()
    point: Optional[Tuple[Scalar, ...]] = None
    method: str = ""


def r1_is_proper(c: CupData, trials: int = SAMPLING_TRIALS, seed: int = SAMPLING_SEED) -> ProperResult:
    """Decide ``R_1 != H^1``, i.e. whether some (n-1)-minor is a nonzero polynomial.

    Random integer points are tried first; at a point where the matrix has
    rank n - 1 the lexicographically first nonvanishing (n-1)-minor is expanded
    symbolically and returned as the witness.  If sampling finds nothing, all
    minors are expanded.  Either way the answer is certified exactly.
    """
    n = c.n
    if n < 1:
        raise ValueError("R_1 needs n >= 1")
    delta = build_delta(c)
    size = n - 1
    if size == 0:
        # the empty minor is the constant 1; R_1 = {0} inside the line H^1
        return ProperResult(True, Polynomial.constant(n, 1), (), (), (0,) * n, "trivial")
    if size > min(c.m, n):
        return ProperResult(False, method="no-minors")

    rng = random.Random(seed)
    bound = 10 * (n - 1) * trials
    for _ in range(trials):
        point = tuple(rng.randint(-bound, bound) for _ in range(n))
        at = evaluate(delta, point)
        if matrix_rank(at) < size:
            continue
        for rows in combinations(range(c.m), size):
            for cols in combinations(range(n), size):
                if qdet(at.submatrix(rows, cols)) != 0:
                    w = minor(delta, rows, cols)
                    if w.is_zero() or w.evaluate(point) == 0:
                        raise AssertionError("sampled minor failed symbolic confirmation")
                    return ProperResult(True, w, rows, cols, point, "sampling")
        raise AssertionError("rank n-1 point without a nonvanishing minor")

    for rows, cols, w in iter_minors(delta, size):
        if not w.is_zero():
            return ProperResult(True, w, rows, cols, nonvanishing_point(w, rng), "exhaustive")
    return ProperResult(False, method="exhaustive")


def nonvanishing_point(p: Polynomial, rng: random.Random | None = None) -> Tuple[int, ...]:
    """An integer point where the nonzero polynomial ``p`` does not vanish.

    Points come from a box of side far larger than the degree, so each draw
    succeeds with probability at least 1 - deg/(box side).
    """
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    rng = rng or random.Random(SAMPLING_SEED)
    bound = 10 * max(p.total_degree(), 1) * SAMPLING_TRIALS
    while True:
        point = tuple(rng.randint(-bound, bound) for _ in range(p.nvars))
        if p.evaluate(point) != 0:
            return point


def r1_is_full(c: CupData) -> bool:
    return not r1_is_proper(c).proper
