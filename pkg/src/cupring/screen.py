"""Kähler screens on cup-product data.

Two necessary conditions for the fundamental group of a compact Kähler
manifold with ``b_1 > 0`` are checked:

* ``hodge-parity``: ``b_1`` is even;
* ``thm-4.1``: if ``R_1`` is all of ``H^1`` then ``H^1`` is 1-isotropic.

Failing either excludes the Kähler property.  Passing both proves nothing;
a "not-excluded" verdict is never a certificate.

For 3-form data the screen also records the two 3-manifold constraints
(``prop-5.1-1``: not 1-isotropic, ``prop-5.1-2``: even ``b_1`` forces
``R_1 = H^1``).  Together they make every 3-form with ``b_1 > 0`` fail one
of the Kähler conditions.

Groups with ``b_1 = 0`` are outside what cup-product data can decide (that
case needs property T arguments) and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .isotropy import Subspace, cup_image_dim
from .polynomial import Polynomial
from .resonance import CupData, ProperResult, r1_is_proper
from .threefold import ThreeForm, cup_from_threeform, parity, prop51_check

EXCLUDED = "excluded"
NOT_EXCLUDED = "not-excluded"

B1_ZERO_MESSAGE = (
    "b1 = 0 is out of scope: cup-product data carries no information there, and the "
    "remaining case rests on Kazhdan property T (Reznikov, Fujiwara), which is not computable "
    "from cohomology rings")


class OutOfScopeError(ValueError):
    pass


@dataclass(frozen=True)
class Finding:
    """One tagged check.  ``excludes`` is True when it rules out the Kähler property."""

    tag: str
    excludes: bool
    detail: str


@dataclass(frozen=True)
class Verdict:
    subject: str
    kahler_possible: str
    threemanifold_consistent: bool
    reasons: Tuple[Finding, ...]
    b1: int
    b2: int
    r1_full: bool
    witness: Optional[Polynomial]
    cup_image_dim: int

    @property
    def parity(self) -> str:
        return parity(self.b1)

    @property
    def excluding_tags(self) -> Tuple[str, ...]:
        return tuple(f.tag for f in self.reasons if f.excludes)

    @property
    def primary_reason(self) -> Optional[str]:
        tags = self.excluding_tags
        return tags[0] if tags else None


def _kahler_findings(n: int, r1_full: bool, image: int) -> list:
    out = []
    if n % 2:
        out.append(Finding("hodge-parity", True, f"b1 = {n} is odd; Kähler groups have even b1"))
    else:
        out.append(Finding("hodge-parity", False, f"b1 = {n} is even"))
    if r1_full and image != 1:
        out.append(Finding(
            "thm-4.1", True,
            f"R1 = H1 but the cup image of H1 has dimension {image}, not 1 (not 1-isotropic)"))
    elif r1_full:
        out.append(Finding("thm-4.1", False, "R1 = H1 and H1 is 1-isotropic"))
    else:
        out.append(Finding("thm-4.1", False, "R1 is a proper subvariety of H1; no constraint"))
    return out


def _verdict(subject: str, c: CupData, findings: list, r1: ProperResult, image: int,
             consistent: bool) -> Verdict:
    excluded = any(f.excludes for f in findings)
    return Verdict(
        subject=subject,
        kahler_possible=EXCLUDED if excluded else NOT_EXCLUDED,
        threemanifold_consistent=consistent,
        reasons=tuple(findings),
        b1=c.n,
        b2=c.m,
        r1_full=not r1.proper,
        witness=r1.witness,
        cup_image_dim=image,
    )


def kahler_screen(c: CupData) -> Verdict:
    """Screen cup-product data with the Kähler necessary conditions.

    ``threemanifold_consistent`` reports whether the data also passes the
    3-manifold constraints (``b2 = b1``, not 1-isotropic, ``R_1`` full when
    ``b_1`` is even); it is a necessary condition, not a realisability test.
    """
    if c.n < 1:
        raise OutOfScopeError(B1_ZERO_MESSAGE)
    r1 = r1_is_proper(c)
    image = cup_image_dim(c, Subspace.whole(c.n))
    findings = _kahler_findings(c.n, not r1.proper, image)
    consistent = c.m == c.n and image != 1 and (c.n % 2 == 1 or not r1.proper)
    return _verdict("cup-data", c, findings, r1, image, consistent)


def threemanifold_kahler_screen(t: ThreeForm) -> Verdict:
    """Screen 3-form data: the 3-manifold constraints, then the Kähler conditions."""
    if t.n < 1:
        raise OutOfScopeError(B1_ZERO_MESSAGE)
    rep = prop51_check(t)
    c = cup_from_threeform(t)
    findings = _kahler_findings(t.n, rep.r1_full, rep.cup_image_dim)
    findings.append(Finding(
        "prop-5.1-1", False,
        f"H1 is not 1-isotropic (cup image dimension {rep.cup_image_dim})"
        if not rep.one_isotropic_violation else
        "VIOLATION: H1 is 1-isotropic, impossible for a closed oriented 3-manifold"))
    if rep.b1_parity == "even":
        findings.append(Finding(
            "prop-5.1-2", False,
            "b1 even and R1 = H1" if rep.r1_full else
            "VIOLATION: b1 even but R1 is proper, impossible for a closed oriented 3-manifold"))
    return _verdict("three-form", c, findings, rep.r1, rep.cup_image_dim, not rep.violations)
