"""Construction of the 132 blocks and the block solver.

Fix a point U of the plane and let W be the other twelve points.  Each
nonzero quadratic form q contributes the candidate set of points X in W
with q(X) = 2 q(U); whenever that set has more than three points it is a
block, it then has exactly six points, and the blocks form a Steiner
system S(5, 6, 12) on W.  Every block falls into exactly one of three
shapes, each carrying a re-derivable witness:

* exterior points of a conic whose interior contains U,
* symmetric difference of two lines whose common point is not U and
  which both avoid U,
* union of two lines through U with U removed.

The solver finds the unique block through five given points of W from
the five linear conditions q(d) = 2 q(U) on the six coefficients of q,
without consulting the constructed block list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .checks import IncidenceStructure
from .gf3 import MOD, Mat, det, null_space
from .plane import PLANE, PlaneModel, ProjLine, ProjPoint
from .quadrics import (
    QuadraticForm,
    conic_geometry,
    evaluate,
    form_pair_representatives,
    level_set,
)

DEFAULT_U_INDEX = 4  # the point 1:0:0

Block = tuple[int, ...]


@dataclass(frozen=True)
class ConicExterior:
    """Block = external points of the witness conic; U is internal."""

    form: QuadraticForm


@dataclass(frozen=True)
class SymmetricDifference:
    """Block = symmetric difference of two lines, both avoiding U."""

    lines: tuple[ProjLine, ProjLine]


@dataclass(frozen=True)
class LinePairMinusU:
    """Block = union of two lines through U, with U removed."""

    lines: tuple[ProjLine, ProjLine]


BlockClass = Union[ConicExterior, SymmetricDifference, LinePairMinusU]


@dataclass(frozen=True, eq=False, repr=False)
class WittModel:
    plane: PlaneModel
    u: ProjPoint
    w: tuple[int, ...]
    w_position: dict[int, int]
    blocks: tuple[Block, ...]
    classes: tuple[BlockClass, ...]
    block_position: dict[Block, int]
    five_subset_block: dict[frozenset[int], int]
    local_blocks: tuple[tuple[int, ...], ...]
    local_blockset: frozenset[tuple[int, ...]]

    def __repr__(self) -> str:  # the dict fields drown the useful part
        return f"WittModel(u={self.u}, blocks={len(self.blocks)})"


def block_of_form(
    q: QuadraticForm, u: ProjPoint | None = None, plane: PlaneModel = PLANE
) -> Block | None:
    """Candidate point set of q, or None when it is too small to be a block."""
    if q.is_zero():
        raise ValueError("the zero form defines no block")
    if u is None:
        u = plane.points[DEFAULT_U_INDEX]
    target = (2 * evaluate(q, u)) % MOD
    members = tuple(
        p.index
        for p in plane.points
        if p.index != u.index and evaluate(q, p) == target
    )
    if len(members) <= 3:
        return None
    # sizes 4, 5, or 7+ would break the construction; they never occur
    assert len(members) == 6, f"candidate set of size {len(members)}"
    return members


def _classify_from_form(
    q: QuadraticForm, u: ProjPoint, plane: PlaneModel, block: Block
) -> BlockClass:
    bset = set(block)
    if evaluate(q, u) == 0:
        # U lies on the zero set, which must be a pair of lines through U
        zero = {p.index for p in level_set(q, 0, plane)}
        pair = tuple(ln for ln in plane.lines if set(ln.points) <= zero)
        assert len(pair) == 2
        assert set(pair[0].points) | set(pair[1].points) == bset | {u.index}
        return LinePairMinusU(pair)
    zero = level_set(q, 0, plane)
    if len(zero) == 4:
        geo = conic_geometry(q, plane)
        assert u in geo.internal
        assert {p.index for p in geo.external} == bset
        return ConicExterior(q)
    assert len(zero) == 1
    center = next(iter(zero))
    pair = tuple(
        ln
        for ln in plane.lines_through(center)
        if len(bset.intersection(ln.points)) == 3
    )
    assert len(pair) == 2
    assert set(pair[0].points) ^ set(pair[1].points) == bset
    assert u.index not in set(pair[0].points) | set(pair[1].points)
    return SymmetricDifference(pair)


def construct(u: ProjPoint | None = None, plane: PlaneModel = PLANE) -> WittModel:
    """Build the design for the given removed point (default 1:0:0)."""
    if u is None:
        u = plane.points[DEFAULT_U_INDEX]
    found: dict[Block, QuadraticForm] = {}
    for q in form_pair_representatives():
        b = block_of_form(q, u, plane)
        if b is not None:
            # each block has a unique witness form up to doubling
            assert b not in found
            found[b] = q
    blocks = tuple(sorted(found))
    assert len(blocks) == 132
    classes = tuple(_classify_from_form(found[b], u, plane, b) for b in blocks)
    five: dict[frozenset[int], int] = {}
    for i, b in enumerate(blocks):
        for sub in combinations(b, 5):
            key = frozenset(sub)
            assert key not in five, "a 5-set inside two blocks"
            five[key] = i
    assert len(five) == 792  # C(12,5): every 5-set of W is covered
    w = tuple(p.index for p in plane.points if p.index != u.index)
    w_position = {pt: i for i, pt in enumerate(w)}
    local_blocks = tuple(tuple(w_position[x] for x in b) for b in blocks)
    return WittModel(
        plane=plane,
        u=u,
        w=w,
        w_position=w_position,
        blocks=blocks,
        classes=classes,
        block_position={b: i for i, b in enumerate(blocks)},
        five_subset_block=five,
        local_blocks=local_blocks,
        local_blockset=frozenset(local_blocks),
    )


def classify_block(m: WittModel, b: Iterable[int]) -> BlockClass:
    key = tuple(sorted(b))
    pos = m.block_position.get(key)
    if pos is None:
        raise ValueError(f"{key} is not a block of this design")
    return m.classes[pos]


def rederive_block(cls_: BlockClass, u: ProjPoint, plane: PlaneModel = PLANE) -> Block:
    """Recompute a block from its class witness alone."""
    if isinstance(cls_, ConicExterior):
        geo = conic_geometry(cls_.form, plane)
        if u not in geo.internal:
            raise ValueError("witness conic does not have U as an internal point")
        return tuple(sorted(p.index for p in geo.external))
    if isinstance(cls_, SymmetricDifference):
        r, s = cls_.lines
        if r.index == s.index:
            raise ValueError("witness lines must be distinct")
        if u.index in set(r.points) | set(s.points):
            raise ValueError("witness lines must avoid U")
        return tuple(sorted(set(r.points) ^ set(s.points)))
    if isinstance(cls_, LinePairMinusU):
        g, h = cls_.lines
        if g.index == h.index:
            raise ValueError("witness lines must be distinct")
        union = set(g.points) | set(h.points)
        if u.index not in union:
            raise ValueError("witness line pair must pass through U")
        return tuple(sorted(union - {u.index}))
    raise TypeError(f"unknown block class {cls_!r}")


def _validated_five(
    d: Iterable[int], u: ProjPoint, plane: PlaneModel
) -> tuple[int, ...]:
    pts = tuple(sorted(d))
    if len(pts) != 5 or len(set(pts)) != 5:
        raise ValueError("expected five distinct points")
    if any(not 0 <= x < len(plane.points) for x in pts):
        raise ValueError("point index out of range")
    if u.index in pts:
        raise ValueError("the removed point U cannot lie in a block")
    return pts


def block_through(m: WittModel, d: Iterable[int]) -> Block:
    """The unique block containing five given points of W (by lookup)."""
    pts = _validated_five(d, m.u, m.plane)
    return m.blocks[m.five_subset_block[frozenset(pts)]]


@dataclass(frozen=True)
class BlockSolution:
    """Solver outcome: the block, its witness form, and the case certificate.

    case "A": every solution of the linear system has q(U) != 0; the
    certificate determinant is nonzero and the solution space is a line.
    case "B": some nonzero solution has q(U) = 0; its zero set is a pair
    of lines through U and the determinant is 0.
    """

    case: str
    block: Block
    form: QuadraticForm
    dimension: int
    determinant: int


def _quad_row(v: tuple[int, int, int]) -> tuple[int, ...]:
    x0, x1, x2 = v
    return (
        x0 * x0 % MOD, x0 * x1 % MOD, x0 * x2 % MOD,
        x1 * x1 % MOD, x1 * x2 % MOD, x2 * x2 % MOD,
    )


def solve_block_through(
    d: Iterable[int], u: ProjPoint | None = None, plane: PlaneModel = PLANE
) -> BlockSolution:
    """Find the block through five points by solving for the form directly.

    Each point contributes one condition q(d_k) - 2 q(U) = 0, linear in
    the six coefficients; -2 = 1, so the coefficient of a_ij is
    d_i d_j + u_i u_j.  The case split appends the condition q(U) = 0:
    if the stacked system has a nonzero solution, that solution cuts a
    line pair through U (case B); otherwise the 5x6 system has a unique
    projective solution with q(U) != 0 (case A).
    """
    if u is None:
        u = plane.points[DEFAULT_U_INDEX]
    pts = _validated_five(d, u, plane)
    urow = _quad_row(u.rep)
    rows = [
        tuple((a + b) % MOD for a, b in zip(_quad_row(plane.points[i].rep), urow))
        for i in pts
    ]
    system = Mat.from_rows(rows)
    stacked = Mat.from_rows(rows + [list(urow)])
    if u.index == DEFAULT_U_INDEX:
        # for U = 1:0:0 the condition q(U) = 0 is just a00 = 0, so the
        # certificate is the 5x5 determinant over the remaining columns
        cert = Mat.from_rows([r[1:] for r in rows])
    else:
        cert = stacked
    determinant = det(cert)
    kernel_stacked = null_space(stacked)
    dimension = len(null_space(system))
    if kernel_stacked:
        form = QuadraticForm(kernel_stacked[0])
        assert evaluate(form, u) == 0
        assert determinant == 0
        case = "B"
    else:
        kernel = null_space(system)
        assert len(kernel) == 1
        form = QuadraticForm(kernel[0])
        assert evaluate(form, u) != 0
        assert determinant != 0 and dimension == 1
        case = "A"
    block = block_of_form(form, u, plane)
    assert block is not None and set(pts) <= set(block)
    return BlockSolution(case, block, form, dimension, determinant)


def as_incidence_structure(m: WittModel) -> IncidenceStructure:
    return IncidenceStructure(m.w, m.blocks)
