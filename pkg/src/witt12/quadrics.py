"""Quadratic forms on GF(3)^3 and their point sets in the plane.

A form is the coefficient tuple (a00, a01, a02, a11, a12, a22) of
sum(a_ij x_i x_j) over i <= j.  Scaling a vector by 2 leaves the value
unchanged (2^2 = 1), so forms evaluate on projective points directly.
Each nonzero form splits the 13 points into three level sets; the
cardinality signature of that split identifies the form, up to doubling
the coefficients, with exactly one of four canonical shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Sequence

from .gf3 import MOD
from .plane import PLANE, PlaneModel, ProjLine, ProjPoint

COEFF_NAMES = ("a00", "a01", "a02", "a11", "a12", "a22")


@dataclass(frozen=True)
class QuadraticForm:
    coeffs: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 6:
            raise ValueError("a form has six coefficients")
        if any(c not in (0, 1, 2) for c in self.coeffs):
            raise ValueError("coefficients must be reduced scalars")

    @classmethod
    def of(cls, *coeffs: int) -> "QuadraticForm":
        return cls(tuple(c % MOD for c in coeffs))  # type: ignore[arg-type]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "QuadraticForm":
        return cls.of(*coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def doubled(self) -> "QuadraticForm":
        """The form 2q; it has the same zero set and swapped nonzero levels."""
        return QuadraticForm(tuple((2 * c) % MOD for c in self.coeffs))  # type: ignore[arg-type]

    def coeff_str(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def evaluate_vec(q: QuadraticForm, v: Sequence[int]) -> int:
    x0, x1, x2 = v
    a00, a01, a02, a11, a12, a22 = q.coeffs
    return (
        a00 * x0 * x0 + a01 * x0 * x1 + a02 * x0 * x2
        + a11 * x1 * x1 + a12 * x1 * x2 + a22 * x2 * x2
    ) % MOD


def evaluate(q: QuadraticForm, p: ProjPoint) -> int:
    return evaluate_vec(q, p.rep)


def level_set(q: QuadraticForm, t: int, plane: PlaneModel = PLANE) -> frozenset[ProjPoint]:
    """All points where q takes the value t; the zero form is rejected."""
    if q.is_zero():
        raise ValueError("the zero form has no meaningful level sets")
    t = t % MOD
    return frozenset(p for p in plane.points if evaluate(q, p) == t)


def signature(q: QuadraticForm, plane: PlaneModel = PLANE) -> tuple[int, int, int]:
    counts = [0, 0, 0]
    if q.is_zero():
        raise ValueError("the zero form has no meaningful level sets")
    for p in plane.points:
        counts[evaluate(q, p)] += 1
    return counts[0], counts[1], counts[2]


class QuadricType(Enum):
    CONIC = "conic"
    SINGLE_POINT = "single_point"
    LINE_PAIR = "line_pair"
    DOUBLE_LINE = "double_line"

    @property
    def canonical_label(self) -> str:
        return _CANONICAL[self][0]

    @property
    def canonical_shape(self) -> "QuadraticForm":
        return QuadraticForm(_CANONICAL[self][1])


_CANONICAL = {
    QuadricType.CONIC: ("x0^2 + x1^2 + x2^2", (1, 0, 0, 1, 0, 1)),
    QuadricType.SINGLE_POINT: ("x0^2 + x1^2", (1, 0, 0, 1, 0, 0)),
    QuadricType.LINE_PAIR: ("x0^2 - x1^2", (1, 0, 0, 2, 0, 0)),
    QuadricType.DOUBLE_LINE: ("x0^2", (1, 0, 0, 0, 0, 0)),
}

# level-set cardinality signatures; doubling a form swaps levels 1 and 2
_SIGNATURES = {
    (4, 3, 6): QuadricType.CONIC,
    (4, 6, 3): QuadricType.CONIC,
    (1, 6, 6): QuadricType.SINGLE_POINT,
    (7, 3, 3): QuadricType.LINE_PAIR,
    (4, 9, 0): QuadricType.DOUBLE_LINE,
    (4, 0, 9): QuadricType.DOUBLE_LINE,
}


def classify(q: QuadraticForm, plane: PlaneModel = PLANE) -> QuadricType:
    sig = signature(q, plane)
    kind = _SIGNATURES.get(sig)
    if kind is None:
        raise AssertionError(f"unexpected level-set signature {sig}")
    return kind


@dataclass(frozen=True)
class ConicGeometry:
    """A conic's four points, its tangents, and the induced point split."""

    form: QuadraticForm
    conic: tuple[ProjPoint, ...]
    tangents: tuple[ProjLine, ...]
    external: tuple[ProjPoint, ...]
    internal: tuple[ProjPoint, ...]


def conic_geometry(q: QuadraticForm, plane: PlaneModel = PLANE) -> ConicGeometry:
    """Tangent-based split of the off-conic points, cross-checked against levels.

    A tangent meets the conic in exactly one point.  Off-conic points on
    at least one tangent are external (six of them), the rest internal
    (three); the two classes coincide with the nonzero level sets.
    """
    if classify(q, plane) is not QuadricType.CONIC:
        raise ValueError("conic geometry needs a nondegenerate conic form")
    conic_pts = tuple(sorted(level_set(q, 0, plane), key=lambda p: p.index))
    conic_idx = {p.index for p in conic_pts}
    tangents = tuple(
        ln for ln in plane.lines if len(conic_idx.intersection(ln.points)) == 1
    )
    on_tangent = {i for ln in tangents for i in ln.points}
    external = tuple(
        p for p in plane.points if p.index not in conic_idx and p.index in on_tangent
    )
    internal = tuple(
        p for p in plane.points if p.index not in conic_idx and p.index not in on_tangent
    )
    assert len(conic_pts) == 4 and len(tangents) == 4
    assert len(external) == 6 and len(internal) == 3
    lv1, lv2 = level_set(q, 1, plane), level_set(q, 2, plane)
    assert {frozenset(external), frozenset(internal)} == {lv1, lv2}
    return ConicGeometry(q, conic_pts, tangents, external, internal)


@dataclass(frozen=True)
class TableRow:
    label: str
    form: QuadraticForm
    counts: tuple[int, int, int]


def canonical_table(plane: PlaneModel = PLANE) -> tuple[TableRow, ...]:
    """Level-set counts for the four canonical forms, computed fresh."""
    return tuple(
        TableRow(t.canonical_label, t.canonical_shape, signature(t.canonical_shape, plane))
        for t in QuadricType
    )


def all_nonzero_forms() -> Iterator[QuadraticForm]:
    """All 728 nonzero forms in lexicographic coefficient order."""
    for coeffs in product(range(MOD), repeat=6):
        if any(coeffs):
            yield QuadraticForm(coeffs)  # type: ignore[arg-type]


def form_pair_representatives() -> tuple[QuadraticForm, ...]:
    """One representative per {q, 2q} pair: the lexicographically smaller."""
    return tuple(q for q in all_nonzero_forms() if q.coeffs <= q.doubled().coeffs)
