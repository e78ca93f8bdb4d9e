"""Cyclic grading groups and commutation factors.

A commutation factor on Z_k is a table of nonzero scalars beta(g, h)
subject to three axioms:

    (1) beta(g, h) * beta(h, g) = 1
    (2) beta(g, h + k) = beta(g, h) * beta(g, k)
    (3) beta(g + h, k) = beta(g, k) * beta(h, k)

These force beta(0, g) = beta(g, 0) = 1 and beta(g, g) = +-1.  Over the
rationals the only factor on Z_3 is the trivial one, so Z_3-graded
bracket algebras with a commutation factor are ordinary graded Lie
algebras; the validator below is nevertheless generic in k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Coeff, as_coeff


class AxiomViolation(ValueError):
    """A commutation-factor axiom fails at a specific pair of degrees."""

    def __init__(self, g: int, h: int, identity: str):
        self.g = g
        self.h = h
        self.identity = identity
        super().__init__(f"commutation factor axiom {identity!r} fails at (g, h) = ({g}, {h})")


@dataclass(frozen=True)
class GradingGroup:
    """The cyclic group Z_k with additive degree arithmetic mod k."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"grading modulus must be >= 1, got {self.modulus}")

    def add(self, g: int, h: int) -> int:
        return (g + h) % self.modulus

    def elements(self) -> range:
        return range(self.modulus)


@dataclass(frozen=True)
class CommutationFactor:
    """A validated commutation factor table on Z_k.

    Construct via :func:`validate_commutation_factor`; the table is a
    k x k tuple-of-tuples with beta(g, h) = table[g][h].
    """

    group: GradingGroup
    table: tuple

    def beta(self, g: int, h: int) -> Coeff:
        k = self.group.modulus
        return self.table[g % k][h % k]

    @property
    def is_trivial(self) -> bool:
        return all(v == 1 for row in self.table for v in row)


def trivial_factor(k: int) -> CommutationFactor:
    """The all-ones commutation factor on Z_k."""
    group = GradingGroup(k)
    return CommutationFactor(group, tuple(tuple(1 for _ in range(k)) for _ in range(k)))


def super_factor() -> CommutationFactor:
    """The Z_2 factor beta(i, j) = (-1)^(i*j) of ordinary superalgebras."""
    return validate_commutation_factor([[1, 1], [1, -1]])


def validate_commutation_factor(table) -> CommutationFactor:
    """Check every axiom instance of a k x k scalar table exhaustively.

    Entries may be ints, Fractions or rational strings.  Raises
    AxiomViolation naming the first failed identity, ValueError on a
    malformed or non-square table.
    """
    rows = [[as_coeff(v) for v in row] for row in table]
    k = len(rows)
    if k < 1 or any(len(row) != k for row in rows):
        raise ValueError("commutation factor table must be square and nonempty")
    for g in range(k):
        for h in range(k):
            if rows[g][h] == 0:
                raise AxiomViolation(g, h, "beta(g,h) != 0")
    group = GradingGroup(k)
    for g in range(k):
        for h in range(k):
            if rows[g][h] * rows[h][g] != 1:
                raise AxiomViolation(g, h, "beta(g,h)*beta(h,g) = 1")
            for j in range(k):
                if rows[g][group.add(h, j)] != rows[g][h] * rows[g][j]:
                    raise AxiomViolation(g, h, "beta(g,h+k) = beta(g,h)*beta(g,k)")
                if rows[group.add(g, h)][j] != rows[g][j] * rows[h][j]:
                    raise AxiomViolation(g, h, "beta(g+h,k) = beta(g,k)*beta(h,k)")
    # Consequences of the axioms; cheap to assert, catastrophic if wrong.
    for g in range(k):
        assert rows[0][g] == 1 and rows[g][0] == 1
        assert rows[g][g] in (1, -1)
    return CommutationFactor(group, tuple(tuple(row) for row in rows))
