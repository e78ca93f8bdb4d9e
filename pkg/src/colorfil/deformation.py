"""Deforming the model law by a cocycle and checking integrability.

A cochain phi vanishing on the characteristic vector defines the
candidate law mu0 + phi: the model's structure constants plus phi's
values on each basis pair.  For a 2-cocycle phi the deformed bracket
satisfies the Jacobi identity exactly when the quadratic obstruction
phi o phi vanishes, so integrability is decided by re-validating Jacobi
on the deformed algebra directly; this sidesteps any sign convention
for the composition.  First order only: no higher deformation terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (ColorLieAlgebra, NotNilpotent, is_filiform_module,
                      l0_is_filiform, validate_jacobi)
from .cohomology import Cochain2, is_cocycle


class CharacteristicVectorViolation(ValueError):
    """The cochain does not vanish on the characteristic vector."""


class NotACocycle(ValueError):
    """Integrability asked for a cochain that is not a 2-cocycle."""


@dataclass(frozen=True)
class DeformedLaw:
    """A model law, a cochain, and their sum."""

    base: ColorLieAlgebra
    phi: Cochain2
    result: ColorLieAlgebra


def deform(alg: ColorLieAlgebra, phi: Cochain2) -> DeformedLaw:
    """Structure constants of mu0 + phi; no validity claim is made yet."""
    if phi.has_x0_source:
        raise CharacteristicVectorViolation(
            "deformation cochains must vanish on the characteristic vector X0")
    result = alg.with_added_constants(phi.as_constant_additions())
    return DeformedLaw(base=alg, phi=phi, result=result)


def is_integrable(d: DeformedLaw) -> bool:
    """Whether mu0 + phi is again a graded Lie algebra law.

    Requires phi to be a 2-cocycle (rechecked directly through the
    six-term identity; raises NotACocycle otherwise).  For a cocycle the
    Jacobi defect of the deformed bracket is exactly the quadratic term
    phi o phi, so validating Jacobi on the deformed algebra decides
    integrability.
    """
    if not is_cocycle(d.base, d.phi):
        raise NotACocycle("phi fails the 2-cocycle conditions on the base algebra")
    return not validate_jacobi(d.result)


def filiform_check(d: DeformedLaw) -> bool:
    """Whether the deformed algebra is still graded filiform.

    The degree-0 part must be a filiform Lie algebra and every nonzero
    degree must be a filiform module under it; a non-nilpotent result
    fails outright.
    """
    alg = d.result
    try:
        if not l0_is_filiform(alg):
            return False
        for g in alg.grading.elements():
            if g != 0 and not is_filiform_module(alg, g):
                return False
    except NotNilpotent:
        return False
    return True
