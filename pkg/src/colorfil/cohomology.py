"""Degree-0 two-cocycles and their six-block decomposition.

For a Z_3-graded Lie algebra shaped like the model (components of
dimension n+1, m, p with characteristic vector X_0), the space of
infinitesimal deformations is the space of degree-0 2-cocycles that
vanish on X_0.  It splits into six blocks by source/target signature:

    A: Hom(L0 ^ L0, L0)     B: Hom(L0 ^ L1, L1)   C: Hom(L0 ^ L2, L2)
    D: Hom(L1 ^ L1, L2)     E: Hom(L1 ^ L2, L0)   F: Hom(L2 ^ L2, L1)

these being exactly the signatures whose degree balance is 0 mod 3.
X_0 never appears as a source argument, and is additionally excluded
from the targets of the two L0-valued blocks A and E (pass
`allow_x0_target=True` to explore the unconstrained variant).

`assemble_Z2_system` turns the cocycle identity

    (d2 psi)(A0,A1,A2) = [A0,psi(A1,A2)] - [A1,psi(A0,A2)] + [A2,psi(A0,A1)]
                         - psi([A0,A1],A2) + psi([A0,A2],A1) + psi(A0,[A1,A2]) = 0

into one sparse integer constraint matrix: one row per (basis triple,
target component) instance, one column per basis cochain.  The ten
classical condition families correspond to the ten degree shapes of the
triple; the enumeration is generic, so the same assembler validates
cocycles on any algebra with trivial commutation factor, not just the
model.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple

from .algebra import ColorLieAlgebra, Vector
from .linalg import (KernelBasis, SparseIntMatrix, kernel_basis, nullity,
                     primitive_row, rank_certified)
from .scalars import Coeff, as_coeff, coeff_to_string


class DecompositionMismatch(ArithmeticError):
    """Joint kernel dimension differs from the sum over blocks."""


class BlockKind(Enum):
    """The six degree-0 blocks, keyed by (source degrees, target degree)."""

    A = ((0, 0), 0)
    B = ((0, 1), 1)
    C = ((0, 2), 2)
    D = ((1, 1), 2)
    E = ((1, 2), 0)
    F = ((2, 2), 1)

    @property
    def source_degrees(self) -> tuple:
        return self.value[0]

    @property
    def target_degree(self) -> int:
        return self.value[1]

    @property
    def same_family(self) -> bool:
        g1, g2 = self.source_degrees
        return g1 == g2


_BLOCK_BY_SOURCE = {kind.source_degrees: kind for kind in BlockKind}

ALL_BLOCKS = tuple(BlockKind)

# Condition family (1)-(10), keyed by the ascending degree shape of the triple.
CONDITION_BY_SHAPE = {
    (0, 0, 0): 1, (0, 0, 1): 2, (0, 0, 2): 3, (0, 1, 1): 4, (0, 1, 2): 5,
    (0, 2, 2): 6, (1, 1, 1): 7, (1, 1, 2): 8, (1, 2, 2): 9, (2, 2, 2): 10,
}


class ColumnKey(NamedTuple):
    block: BlockKind
    i: int
    j: int
    s: int


class RowLabel(NamedTuple):
    condition: int
    triple: tuple
    target: str


def model_shape(alg: ColorLieAlgebra) -> tuple:
    """(n, m, p) of a model-shaped Z_3 algebra; validates the shape."""
    if alg.grading.modulus != 3:
        raise ValueError("cocycle machinery requires a Z_3-graded algebra")
    if not alg.beta.is_trivial:
        raise ValueError("cocycle machinery requires the trivial commutation factor")
    if alg.dims[0] < 1:
        raise ValueError("degree-0 component must contain the characteristic vector X0")
    return alg.dims[0] - 1, alg.dims[1], alg.dims[2]


class Cochain2:
    """A sparse degree-0 2-cochain on a model-shaped algebra.

    Coefficients are stored per block under canonical keys: same-family
    source pairs with i < j (the swapped pair is the negative), mixed
    pairs with the lower-degree family first.  `vanish_on_x0` forbids
    X_0 as a source argument; `allow_x0_target` re-admits X_0 as a
    target of the A and E blocks.
    """

    def __init__(self, alg: ColorLieAlgebra, coeffs: Mapping | None = None,
                 vanish_on_x0: bool = True, allow_x0_target: bool = False):
        self.alg = alg
        self.nmp = model_shape(alg)
        self.vanish_on_x0 = vanish_on_x0
        self.allow_x0_target = allow_x0_target
        self._data: dict = {}  # (block, i, j) -> {s: coeff}
        if coeffs:
            for (block, i, j, s), c in coeffs.items():
                self.add(block, i, j, s, c)

    # family bookkeeping: degree g holds indices start..start+count-1
    def _family_range(self, g: int, target: bool = False) -> range:
        n, m, p = self.nmp
        if g == 0:
            lo = 0 if (not self.vanish_on_x0 and not target) or \
                      (target and self.allow_x0_target) else 1
            return range(lo, n + 1)
        return range(1, (m if g == 1 else p) + 1)

    def _global(self, g: int, index: int) -> int:
        n, m, _ = self.nmp
        if g == 0:
            return index
        if g == 1:
            return n + 1 + (index - 1)
        return n + 1 + m + (index - 1)

    def _family_index(self, global_idx: int) -> int:
        n, m, _ = self.nmp
        if global_idx <= n:
            return global_idx
        if global_idx <= n + m:
            return global_idx - n
        return global_idx - n - m

    def add(self, block: BlockKind, i: int, j: int, s: int, coeff) -> None:
        """Accumulate a coefficient onto the canonical basis map."""
        coeff = as_coeff(coeff)
        if coeff == 0:
            return
        sign = 1
        if block.same_family:
            if i == j:
                raise ValueError(f"diagonal source pair ({i},{i}) in alternating block {block.name}")
            if i > j:
                i, j = j, i
                sign = -1
        g1, g2 = block.source_degrees
        if i not in self._family_range(g1):
            raise ValueError(f"source index i={i} out of range for block {block.name}")
        if j not in self._family_range(g2):
            raise ValueError(f"source index j={j} out of range for block {block.name}")
        if s not in self._family_range(block.target_degree, target=True):
            raise ValueError(f"target index s={s} out of range for block {block.name}")
        slot = self._data.setdefault((block, i, j), {})
        new = slot.get(s, 0) + sign * coeff
        if new:
            slot[s] = new
        else:
            slot.pop(s, None)
            if not slot:
                del self._data[(block, i, j)]

    def get(self, block: BlockKind, i: int, j: int, s: int) -> Coeff:
        sign = 1
        if block.same_family:
            if i == j:
                return 0
            if i > j:
                i, j, sign = j, i, -1
        return sign * self._data.get((block, i, j), {}).get(s, 0)

    def items(self) -> Iterator:
        """Canonical (ColumnKey, coeff) pairs, deterministic order."""
        for (block, i, j) in sorted(self._data, key=lambda k: (k[0].name, k[1], k[2])):
            for s, c in sorted(self._data[(block, i, j)].items()):
                yield ColumnKey(block, i, j, s), c

    def is_zero(self) -> bool:
        return not self._data

    @property
    def has_x0_source(self) -> bool:
        for (block, i, j) in self._data:
            g1, g2 = block.source_degrees
            if (g1 == 0 and i == 0) or (g2 == 0 and j == 0):
                return True
        return False

    def value_on_pair(self, x: int, y: int) -> Vector:
        """psi(e_x, e_y) as a sparse global vector (skew in x, y)."""
        if x == y:
            return {}
        deg = self.alg.degree_of
        dx, dy = deg(x), deg(y)
        sign = 1
        if (dx, dy) in _BLOCK_BY_SOURCE:
            block = _BLOCK_BY_SOURCE[(dx, dy)]
            i, j = self._family_index(x), self._family_index(y)
        else:
            block = _BLOCK_BY_SOURCE[(dy, dx)]
            i, j = self._family_index(y), self._family_index(x)
            sign = -1
        if block.same_family and i > j:
            i, j = j, i
            sign = -sign
        slot = self._data.get((block, i, j))
        if not slot:
            return {}
        gt = block.target_degree
        return {self._global(gt, s): sign * c for s, c in slot.items()}

    def evaluate(self, x: Mapping, y: Mapping) -> Vector:
        """Bilinear extension of the cochain to sparse vectors."""
        out: Vector = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for t, c in self.value_on_pair(a, b).items():
                    new = out.get(t, 0) + ca * cb * c
                    if new:
                        out[t] = new
                    else:
                        del out[t]
        return out

    def scaled(self, factor) -> "Cochain2":
        factor = as_coeff(factor)
        out = Cochain2(self.alg, vanish_on_x0=self.vanish_on_x0,
                       allow_x0_target=self.allow_x0_target)
        if factor:
            for key, c in self.items():
                out.add(key.block, key.i, key.j, key.s, factor * c)
        return out

    def __add__(self, other: "Cochain2") -> "Cochain2":
        if other.alg is not self.alg and other.nmp != self.nmp:
            raise ValueError("cochains live on different algebras")
        out = Cochain2(self.alg,
                       vanish_on_x0=self.vanish_on_x0 and other.vanish_on_x0,
                       allow_x0_target=self.allow_x0_target or other.allow_x0_target)
        for src in (self, other):
            for key, c in src.items():
                out.add(key.block, key.i, key.j, key.s, c)
        return out

    def as_constant_additions(self) -> dict:
        """Values keyed by canonical global pairs, for deforming a law."""
        out: dict = {}
        for (block, i, j), slot in self._data.items():
            g1, g2 = block.source_degrees
            a, b = self._global(g1, i), self._global(g2, j)
            sign = 1
            if a > b:
                a, b, sign = b, a, -1
            vec = out.setdefault((a, b), {})
            gt = block.target_degree
            for s, c in slot.items():
                t = self._global(gt, s)
                new = vec.get(t, 0) + sign * c
                if new:
                    vec[t] = new
                else:
                    vec.pop(t, None)
        return {pair: vec for pair, vec in out.items() if vec}


def cochain_columns(alg: ColorLieAlgebra, blocks: Iterable = ALL_BLOCKS,
                    vanish_on_x0: bool = True, allow_x0_target: bool = False) -> list:
    """Canonical cochain basis keys for the requested blocks, in order."""
    n, m, p = model_shape(alg)
    counts = {0: n, 1: m, 2: p}
    x_src_lo = 1 if vanish_on_x0 else 0
    x_tgt_lo = 0 if allow_x0_target or not vanish_on_x0 else 1

    def src_range(g):
        return range(x_src_lo, n + 1) if g == 0 else range(1, counts[g] + 1)

    def tgt_range(g):
        return range(x_tgt_lo, n + 1) if g == 0 else range(1, counts[g] + 1)

    keys = []
    for block in sorted(set(blocks), key=lambda b: b.name):
        g1, g2 = block.source_degrees
        if block.same_family:
            pairs = combinations(src_range(g1), 2)
        else:
            pairs = ((i, j) for i in src_range(g1) for j in src_range(g2))
        for i, j in pairs:
            for s in tgt_range(block.target_degree):
                keys.append(ColumnKey(block, i, j, s))
    return keys


@dataclass(frozen=True)
class ConstraintSystem:
    """Sparse encoding of the cocycle conditions for a set of blocks.

    The kernel of `matrix` (columns labelled by `col_keys`) is the
    requested part of the cocycle space.
    """

    matrix: SparseIntMatrix
    col_keys: tuple
    row_labels: tuple
    alg: ColorLieAlgebra
    allow_x0_target: bool

    def nullity(self, primes: tuple | None = None) -> int:
        return nullity(self.matrix, primes)

    def kernel(self) -> KernelBasis:
        return kernel_basis(self.matrix)

    def kernel_cochains(self) -> list:
        """Kernel basis vectors converted to Cochain2 values."""
        out = []
        for vec in self.kernel().vectors:
            coeffs = {self.col_keys[c]: v for c, v in vec.items()}
            out.append(Cochain2(self.alg, coeffs, vanish_on_x0=True,
                                allow_x0_target=self.allow_x0_target))
        return out


def _bracket_table(alg: ColorLieAlgebra) -> dict:
    """All ordered basis pairs with nonzero bracket, as tuples of items."""
    table: dict = {}
    for a, b, vec in alg.nonzero_constants():
        items = tuple(vec.items())
        table[(a, b)] = items
        if a != b:
            # trivial commutation factor: the mirror is the negative
            table[(b, a)] = tuple((t, -c) for t, c in items)
    return table


def _touchable_shapes(requested: set) -> set:
    """Degree shapes of triples whose conditions can involve the blocks."""
    wanted = {b.source_degrees for b in requested}
    shapes = set()
    for shape in CONDITION_BY_SHAPE:
        d0, d1, d2 = shape
        pairs = {tuple(sorted((d1, d2))), tuple(sorted((d0, d2))), tuple(sorted((d0, d1))),
                 tuple(sorted(((d0 + d1) % 3, d2))), tuple(sorted(((d0 + d2) % 3, d1))),
                 tuple(sorted((d0, (d1 + d2) % 3)))}
        if pairs & wanted:
            shapes.add(shape)
    return shapes


def assemble_Z2_system(alg: ColorLieAlgebra, blocks: Iterable = ALL_BLOCKS,
                       allow_x0_target: bool = False) -> ConstraintSystem:
    """Constraint matrix whose kernel is the cocycle space of the blocks.

    Rows are instances of the cocycle identity over canonical basis
    triples (ascending global order; the ten degree shapes reproduce the
    ten classical condition families), projected onto target basis
    elements.  Identical rows are merged; rows are reduced to primitive
    integer form, which leaves the kernel untouched.
    """
    blocks = set(blocks)
    cols = cochain_columns(alg, blocks, allow_x0_target=allow_x0_target)
    col_id = {key: idx for idx, key in enumerate(cols)}
    n_cols = len(cols)

    # psi lookup: ordered global pair -> ((col, target_global, sign), ...)
    pair_map: dict = {}
    tmp = Cochain2(alg, vanish_on_x0=True, allow_x0_target=allow_x0_target)
    for key, idx in col_id.items():
        g1, g2 = key.block.source_degrees
        a = tmp._global(g1, key.i)
        b = tmp._global(g2, key.j)
        t = tmp._global(key.block.target_degree, key.s)
        pair_map.setdefault((a, b), []).append((idx, t, 1))
        pair_map.setdefault((b, a), []).append((idx, t, -1))

    brackets = _bracket_table(alg)
    degrees = [alg.degree_of(i) for i in range(alg.dim)]
    shapes = _touchable_shapes(blocks)
    empty: tuple = ()

    rows: list = []
    row_labels: list = []
    seen: dict = {}

    for a, b, c in combinations(range(alg.dim), 3):
        shape = (degrees[a], degrees[b], degrees[c])
        if shape not in shapes:
            continue
        acc: dict = {}  # (target_global, col) -> coeff

        def ad_term(sign, x, first, second):
            # sign * [x, psi(first, second)]
            for col, tgt, s in pair_map.get((first, second), empty):
                for u, cb in brackets.get((x, tgt), empty):
                    key = (u, col)
                    new = acc.get(key, 0) + sign * s * cb
                    if new:
                        acc[key] = new
                    else:
                        del acc[key]

        def psi_term(sign, bx, by, other, bracket_first):
            # sign * psi([bx, by], other), argument order per bracket_first
            for t, cb in brackets.get((bx, by), empty):
                pair = (t, other) if bracket_first else (other, t)
                for col, tgt, s in pair_map.get(pair, empty):
                    key = (tgt, col)
                    new = acc.get(key, 0) + sign * cb * s
                    if new:
                        acc[key] = new
                    else:
                        del acc[key]

        ad_term(1, a, b, c)
        ad_term(-1, b, a, c)
        ad_term(1, c, a, b)
        psi_term(-1, a, b, c, True)
        psi_term(1, a, c, b, True)
        psi_term(1, b, c, a, False)

        if not acc:
            continue
        by_target: dict = {}
        for (u, col), v in acc.items():
            by_target.setdefault(u, {})[col] = v
        cond = CONDITION_BY_SHAPE[shape]
        for u in sorted(by_target):
            row = primitive_row(by_target[u])
            if not row or row in seen:
                continue
            seen[row] = len(rows)
            rows.append(dict(row))
            row_labels.append(RowLabel(cond, (alg.label(a), alg.label(b), alg.label(c)),
                                       alg.label(u)))

    matrix = SparseIntMatrix(len(rows), n_cols, rows)
    return ConstraintSystem(matrix=matrix, col_keys=tuple(cols),
                            row_labels=tuple(row_labels), alg=alg,
                            allow_x0_target=allow_x0_target)


def _restrict_to_block(system: ConstraintSystem, block: BlockKind) -> SparseIntMatrix:
    """Rows of the joint system projected onto one block's columns.

    Identical to assembling the block alone: every matrix contribution
    lands in the column of the cochain value it multiplies, so dropping
    the other blocks' columns is exactly the single-block system.
    """
    keep = [idx for idx, key in enumerate(system.col_keys) if key.block is block]
    renum = {old: new for new, old in enumerate(keep)}
    rows = []
    for row in system.matrix.rows:
        sub = {renum[c]: v for c, v in row if c in renum}
        if sub:
            rows.append(sub)
    return SparseIntMatrix(len(rows), len(keep), rows)


def block_dims(alg: ColorLieAlgebra, allow_x0_target: bool = False,
               primes: tuple | None = None) -> dict:
    """Per-block cocycle dimensions, cross-checked against the joint system.

    Raises DecompositionMismatch when the joint kernel dimension differs
    from the sum over blocks, which would mean the six-block splitting
    fails for this algebra (it holds for every model algebra).
    """
    joint = assemble_Z2_system(alg, ALL_BLOCKS, allow_x0_target=allow_x0_target)
    dims = {}
    for block in ALL_BLOCKS:
        sub = _restrict_to_block(joint, block)
        dims[block] = sub.n_cols - rank_certified(sub, primes)
    total = joint.nullity(primes)
    if total != sum(dims.values()):
        raise DecompositionMismatch(
            f"joint kernel dimension {total} != block sum {sum(dims.values())} "
            f"at dims {alg.dims}")
    return dims


def delta2(alg: ColorLieAlgebra, psi: Cochain2, triple) -> Vector:
    """(d2 psi) evaluated at three homogeneous basis elements."""
    if not alg.beta.is_trivial:
        raise ValueError("delta2 is implemented for the trivial commutation factor")
    a, b, c = (next(iter(alg.vector(t))) for t in triple)
    out: Vector = {}

    def accumulate(vec: Vector, sign: int):
        for t, v in vec.items():
            new = out.get(t, 0) + sign * v
            if new:
                out[t] = new
            else:
                del out[t]

    accumulate(alg.bracket({a: 1}, psi.value_on_pair(b, c)), 1)
    accumulate(alg.bracket({b: 1}, psi.value_on_pair(a, c)), -1)
    accumulate(alg.bracket({c: 1}, psi.value_on_pair(a, b)), 1)
    accumulate(psi.evaluate(alg.bracket_basis(a, b), {c: 1}), -1)
    accumulate(psi.evaluate(alg.bracket_basis(a, c), {b: 1}), 1)
    accumulate(psi.evaluate({a: 1}, alg.bracket_basis(b, c)), 1)
    return out


def is_cocycle(alg: ColorLieAlgebra, psi: Cochain2) -> bool:
    """Direct check of d2 psi = 0 over all canonical basis triples.

    Independent of the matrix assembly: evaluates the six-term identity
    elementwise, so it re-verifies kernel vectors by a separate route.
    """
    return all(not delta2(alg, psi, triple)
               for triple in combinations(range(alg.dim), 3))


def delta1(alg: ColorLieAlgebra, g_map: Mapping) -> Cochain2:
    """Coboundary of a degree-0 linear map g, as an unconstrained cochain.

    g is given as {basis index or label: sparse vector}; missing basis
    elements map to zero.  The result satisfies d2(d1 g) = 0.
    """
    if not alg.beta.is_trivial:
        raise ValueError("delta1 is implemented for the trivial commutation factor")
    gm: dict = {}
    for key, vec in g_map.items():
        idx = alg.index(key) if isinstance(key, str) else int(key)
        vec = alg.vector(vec)
        for t in vec:
            if alg.degree_of(t) != alg.degree_of(idx):
                raise ValueError("delta1 requires a degree-0 (grading-preserving) map")
        gm[idx] = vec

    def apply_g(vec: Mapping) -> Vector:
        out: Vector = {}
        for i, c in vec.items():
            for t, v in gm.get(i, {}).items():
                new = out.get(t, 0) + c * v
                if new:
                    out[t] = new
                else:
                    del out[t]
        return out

    result = Cochain2(alg, vanish_on_x0=False, allow_x0_target=True)
    for a, b in combinations(range(alg.dim), 2):
        vec: Vector = {}
        for t, v in alg.bracket({a: 1}, gm.get(b, {})).items():
            vec[t] = vec.get(t, 0) + v
        for t, v in alg.bracket({b: 1}, gm.get(a, {})).items():
            vec[t] = vec.get(t, 0) - v
        for t, v in apply_g(alg.bracket_basis(a, b)).items():
            vec[t] = vec.get(t, 0) - v
        vec = {t: v for t, v in vec.items() if v}
        if not vec:
            continue
        da, db = alg.degree_of(a), alg.degree_of(b)
        block = _BLOCK_BY_SOURCE[(da, db)]
        i = result._family_index(a)
        j = result._family_index(b)
        for t, v in vec.items():
            result.add(block, i, j, result._family_index(t), v)
    return result


@dataclass(frozen=True)
class CohomologyReport:
    dim_Z2: int
    dim_B2: int
    dim_H2: int
    per_block: dict


def cohomology_report(alg: ColorLieAlgebra, allow_x0_target: bool = False) -> CohomologyReport:
    """Dimensions of the constrained cocycle, coboundary and quotient spaces.

    Z2 is the kernel of the constraint system (vanishing on X_0, target
    exclusions).  B2 is the part of the image of d1 that happens to lie
    inside the constrained space, computed exactly as
    rank(d1) - rank(d1 projected to the forbidden coordinates); this is
    the only coboundary space contained in Z2, so H2 = Z2/B2 is
    well-formed.
    """
    per_block = block_dims(alg, allow_x0_target=allow_x0_target)
    dim_z2 = sum(per_block.values())

    full_cols = cochain_columns(alg, ALL_BLOCKS, vanish_on_x0=False, allow_x0_target=True)
    col_id = {key: idx for idx, key in enumerate(full_cols)}
    forbidden = set()
    for key, idx in col_id.items():
        g1, g2 = key.block.source_degrees
        if (g1 == 0 and key.i == 0) or (g2 == 0 and key.j == 0):
            forbidden.add(idx)
        elif key.block.target_degree == 0 and key.s == 0 and not allow_x0_target:
            forbidden.add(idx)

    image_rows = []
    forbidden_rows = []
    forb_renum = {c: i for i, c in enumerate(sorted(forbidden))}
    for g in alg.grading.elements():
        comp = list(alg.component_indices(g))
        for u in comp:
            for t in comp:
                db = delta1(alg, {u: {t: 1}})
                row = {col_id[key]: v for key, v in db.items()}
                if row:
                    image_rows.append(dict(primitive_row(row)))
                    frow = {forb_renum[c]: v for c, v in row.items() if c in forbidden}
                    if frow:
                        forbidden_rows.append(dict(primitive_row(frow)))
    full = SparseIntMatrix(len(image_rows), len(full_cols), image_rows)
    proj = SparseIntMatrix(len(forbidden_rows), len(forbidden), forbidden_rows)
    dim_b2 = rank_certified(full) - rank_certified(proj)
    return CohomologyReport(dim_Z2=dim_z2, dim_B2=dim_b2,
                            dim_H2=dim_z2 - dim_b2, per_block=per_block)


# -- serialization ------------------------------------------------------


def cocycle_basis_json(alg: ColorLieAlgebra, block: BlockKind,
                       allow_x0_target: bool = False) -> dict:
    """Kernel basis of one block in the export JSON schema."""
    n, m, p = model_shape(alg)
    system = assemble_Z2_system(alg, {block}, allow_x0_target=allow_x0_target)
    basis = system.kernel()
    vectors = []
    for vec in basis.vectors:
        vectors.append([
            {"i": system.col_keys[c].i, "j": system.col_keys[c].j,
             "s": system.col_keys[c].s, "coeff": coeff_to_string(v)}
            for c, v in vec.items()
        ])
    return {"block": block.name, "n": n, "m": m, "p": p,
            "dim": basis.dim, "basis": vectors}


def cochain_to_json(psi: Cochain2) -> dict:
    n, m, p = psi.nmp
    terms = [{"block": key.block.name, "i": key.i, "j": key.j, "s": key.s,
              "coeff": coeff_to_string(c)} for key, c in psi.items()]
    return {"n": n, "m": m, "p": p, "terms": terms}


def cochain_from_json(alg: ColorLieAlgebra, data: Mapping,
                      allow_x0_target: bool = False) -> Cochain2:
    """Parse a single-cochain document ({"terms": [...]}) onto an algebra."""
    n, m, p = model_shape(alg)
    if not isinstance(data, Mapping) or "terms" not in data:
        raise ValueError("cochain document must be an object with a 'terms' list")
    if tuple(int(data.get(k, v)) for k, v in (("n", n), ("m", m), ("p", p))) != (n, m, p):
        raise ValueError("cochain parameters disagree with the algebra's (n, m, p)")
    psi = Cochain2(alg, vanish_on_x0=True, allow_x0_target=allow_x0_target)
    for term in data["terms"]:
        block = BlockKind[str(term["block"])]
        psi.add(block, int(term["i"]), int(term["j"]), int(term["s"]), as_coeff(term["coeff"]))
    return psi
