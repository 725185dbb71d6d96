"""Generic t-design verification by exhaustive counting.

An incidence structure here is a point list plus a block list; blocks
are stored sorted and the block list itself is sorted, so structural
equality of two structures is equality of their canonical forms.  The
verifier takes no shortcuts: it counts, for every t-subset of the
points, the number of blocks containing it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Sequence, Union


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple[Hashable, ...]
    blocks: tuple[tuple[Hashable, ...], ...]

    def __init__(
        self,
        points: Iterable[Hashable],
        blocks: Iterable[Iterable[Hashable]],
    ) -> None:
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        pset = set(pts)
        canon = []
        for b in blocks:
            bt = tuple(sorted(b))
            if len(set(bt)) != len(bt):
                raise ValueError(f"repeated point inside block {bt}")
            if not set(bt) <= pset:
                raise ValueError(f"block {bt} uses points outside the structure")
            canon.append(bt)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "blocks", tuple(sorted(canon)))


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    k: int
    lambda_: int


@dataclass(frozen=True)
class DesignViolation:
    """Concrete counterexample: either a deviant block or a miscovered subset."""

    kind: str  # "block-size" or "coverage"
    witness: tuple[Hashable, ...]
    count: int
    expected: int


VerifyResult = Union[DesignParams, DesignViolation]


def verify_t_design(s: IncidenceStructure, t: int) -> VerifyResult:
    """Check the t-design property by brute force.

    Returns the parameters on success; on failure, returns the first
    block of deviant size or the first t-subset whose coverage differs
    from that of the lexicographically first t-subset.
    """
    if not s.points:
        raise ValueError("structure has no points")
    if not s.blocks:
        raise ValueError("structure has no blocks")
    if t < 1:
        raise ValueError("t must be at least 1")
    k = len(s.blocks[0])
    if t > min(len(b) for b in s.blocks):
        raise ValueError("t exceeds the smallest block size")
    for b in s.blocks:
        if len(b) != k:
            return DesignViolation("block-size", b, len(b), k)
    coverage: Counter = Counter()
    for b in s.blocks:
        for sub in combinations(b, t):
            coverage[sub] += 1
    lam: int | None = None
    for sub in combinations(sorted(s.points), t):
        c = coverage.get(sub, 0)
        if lam is None:
            lam = c
        elif c != lam:
            return DesignViolation("coverage", sub, c, lam)
    assert lam is not None
    if lam == 0:
        # blocks exist but cover no t-subset; impossible once t <= k
        raise AssertionError("zero coverage with nonempty blocks")
    return DesignParams(t, len(s.points), k, lam)


def lambda_cascade(p: DesignParams) -> tuple[int, ...]:
    """lambda_i for i = 0..t; raises when any value is non-integral."""
    out = []
    for i in range(p.t + 1):
        num = p.lambda_ * comb(p.v - i, p.t - i)
        den = comb(p.k - i, p.t - i)
        if num % den:
            raise ValueError(f"lambda_{i} = {num}/{den} is not an integer")
        out.append(num // den)
    return tuple(out)


def derived_design(
    s: IncidenceStructure, fixed: Iterable[Hashable]
) -> IncidenceStructure:
    """Fix points, keep the blocks through all of them, remove the fixed points."""
    fx = set(fixed)
    if not fx <= set(s.points):
        raise ValueError("fixed points must belong to the structure")
    pts = tuple(p for p in s.points if p not in fx)
    blocks = tuple(
        tuple(x for x in b if x not in fx) for b in s.blocks if fx <= set(b)
    )
    return IncidenceStructure(pts, blocks)


def affine_residue(plane, g) -> IncidenceStructure:
    """The affine plane left after deleting a line: 9 points, 12 cut lines."""
    on_g = set(g.points)
    pts = tuple(p.index for p in plane.points if p.index not in on_g)
    pset = set(pts)
    blocks = []
    for ln in plane.lines:
        if ln.index == g.index:
            continue
        cut = tuple(x for x in ln.points if x in pset)
        assert len(cut) == 3  # any other line meets g in exactly one point
        blocks.append(cut)
    return IncidenceStructure(pts, blocks)
