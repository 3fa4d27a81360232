"""Built-in examples with their expected invariants.

Every expected record is checked against live computation by the test suite.
Each carries a note on how the value was derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from .fileformat import serialize
from .resonance import CupData
from .threefold import ThreeForm


@dataclass(frozen=True)
class Expected:
    r1_full: bool
    cup_image_dim: int
    parity: str
    verdict: str
    reason: Optional[str]  # first excluding finding, None when not excluded
    derivation: str


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    payload: Union[CupData, ThreeForm]
    expected: Expected

    def export(self) -> str:
        return serialize(self.payload, comment=f"{self.name}: {self.description}")


def _surface(g: int) -> CupData:
    # symplectic basis a_1, b_1, ..., a_g, b_g with a_i u b_i = f
    return CupData(2 * g, 1, {(2 * i - 1, 2 * i, 1): 1 for i in range(1, g + 1)})


def _s1_times_surface(g: int) -> ThreeForm:
    # basis a_1, b_1, ..., a_g, b_g, z with mu(a_i, b_i, z) = 1
    n = 2 * g + 1
    return ThreeForm(n, {(2 * i - 1, 2 * i, n): 1 for i in range(1, g + 1)})


def _entries() -> Dict[str, CorpusEntry]:
    e = []

    e.append(CorpusEntry(
        "torus3", "3-torus T^3, mu(e1,e2,e3) = 1",
        ThreeForm(3, {(1, 2, 3): 1}),
        Expected(False, 3, "odd", "excluded", "hodge-parity",
                 "hand expansion: 2x2 minors include x1^2, x2^2, x3^2; the three products "
                 "e1e2, e1e3, e2e3 are independent dual vectors")))

    e.append(CorpusEntry(
        "surface_g1", "torus T^2 = surface of genus 1",
        _surface(1),
        Expected(False, 1, "even", "not-excluded", None,
                 "hand expansion: the 1x1 minors are the entries -x2, x1 of a 1x2 matrix; "
                 "e1 u e2 = f spans the image")))
    e.append(CorpusEntry(
        "surface_g2", "closed orientable surface of genus 2",
        _surface(2),
        Expected(True, 1, "even", "not-excluded", None,
                 "convention: 3x3 minors of a 1x4 matrix do not exist (zero ideal); "
                 "every product is a multiple of f")))
    e.append(CorpusEntry(
        "surface_g3", "closed orientable surface of genus 3",
        _surface(3),
        Expected(True, 1, "even", "not-excluded", None,
                 "convention: 5x5 minors of a 1x6 matrix do not exist (zero ideal); "
                 "every product is a multiple of f")))

    e.append(CorpusEntry(
        "heisenberg", "Heisenberg nilmanifold, trivial cup product on H^1",
        ThreeForm(2),
        Expected(True, 0, "even", "excluded", "thm-4.1",
                 "trivial: zero matrix, zero products")))

    for k in (1, 2, 3):
        r1_full = k >= 2  # k = 1: the empty minor is 1, so R_1 = {0} in a line
        e.append(CorpusEntry(
            f"connsum_s1s2_{k}", f"connected sum of {k} copies of S^1 x S^2",
            ThreeForm(k),
            Expected(r1_full, 0, "even" if k % 2 == 0 else "odd", "excluded",
                     "thm-4.1" if k == 2 else "hodge-parity",
                     "trivial: zero 3-form; for k >= 2 every (k-1)-minor of the zero matrix vanishes")))

    e.append(CorpusEntry(
        "torus3_sum_s1s2", "T^3 # (S^1 x S^2), mu(e1,e2,e3) = 1 with n = 4",
        ThreeForm(4, {(1, 2, 3): 1}),
        Expected(True, 3, "even", "excluded", "thm-4.1",
                 "hand expansion: all 3x3 minors of the bordered skew matrix vanish; "
                 "image spanned by three dual vectors")))

    e.append(CorpusEntry(
        "s1_times_surface_g1", "S^1 x (surface of genus 1) = T^3",
        _s1_times_surface(1),
        Expected(False, 3, "odd", "excluded", "hodge-parity",
                 "same data as torus3")))
    e.append(CorpusEntry(
        "s1_times_surface_g2", "S^1 x (surface of genus 2)",
        _s1_times_surface(2),
        Expected(False, 5, "odd", "excluded", "hodge-parity",
                 "symbolic brute force: all 25 4x4 minors expanded, all nonzero "
                 "(first is x5^4, the squared Pfaffian of the leading block); "
                 "products a_i b_i, a_i z, b_i z hit five independent dual vectors")))

    return {entry.name: entry for entry in e}


CORPUS: Dict[str, CorpusEntry] = _entries()


class UnknownEntryError(KeyError):
    pass


def corpus_names() -> Tuple[str, ...]:
    return tuple(CORPUS)


def corpus_get(name: str) -> CorpusEntry:
    """Look up an entry; ``surface_g=2`` is accepted for ``surface_g2``."""
    try:
        return CORPUS[name.replace("=", "")]
    except KeyError:
        raise UnknownEntryError(
            f"unknown corpus entry {name!r}; available: {', '.join(CORPUS)}") from None
