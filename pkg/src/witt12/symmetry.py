"""Collineations of the plane and the automorphism group of the design.

Collineations are invertible 3x3 matrices over GF(3) modulo scalars
(the field is prime, so there is nothing semilinear to add), acting on
row vectors.  Canonical representative: first nonzero entry 1 in
row-major order.

The design's automorphism group is found by exhaustive search over
point-image assignments.  Images of the first five points range over
all ordered 5-tuples; every later image is forced, because a candidate
automorphism must send the unique block over five assigned points to
the unique block over their images, pinning the sixth point.  Where the
forcing chain stalls (the assigned points fill out a single block) the
search branches over all unused images.  Survivors are finally checked
against all 132 blocks, so the forcing is only ever used to discard
candidates, never to admit one.  The layers are evaluated with numpy
over all candidates at once.

Affinities of the 9-point residue of a line are enumerated by a small
backtracking search over point images that requires every completed
line image to be a line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import numpy as np

from .design import WittModel
from .gf3 import MOD, Mat, mat_inv, mat_mul, vec_mat
from .plane import PLANE, PlaneModel, ProjLine, ProjPoint

Perm = tuple[int, ...]

Matrix3 = tuple[tuple[int, int, int], ...]


def _det3(m: Matrix3) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h) % MOD


@dataclass(frozen=True)
class Collineation:
    """Invertible matrix mod scalars; first nonzero entry is 1."""

    matrix: Matrix3

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[int]]) -> "Collineation":
        m = tuple(tuple(x % MOD for x in r) for r in rows)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("expected a 3x3 matrix")
        if _det3(m) == 0:
            raise ValueError("matrix is singular")
        flat = [x for r in m for x in r]
        lead = next(x for x in flat if x)
        if lead == 2:
            m = tuple(tuple((2 * x) % MOD for x in r) for r in m)
        return cls(m)

    @classmethod
    def identity(cls) -> "Collineation":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def apply_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        return vec_mat(v, Mat(self.matrix))

    def apply_point(self, p: ProjPoint, plane: PlaneModel = PLANE) -> ProjPoint:
        return plane.point_from_vec(self.apply_vec(p.rep))

    def point_map(self, plane: PlaneModel = PLANE) -> tuple[int, ...]:
        """Images of all 13 points, by index."""
        return tuple(self.apply_point(p, plane).index for p in plane.points)

    def compose(self, other: "Collineation") -> "Collineation":
        """Apply self first, then other (row-vector action composes left to right)."""
        return Collineation.from_matrix(mat_mul(Mat(self.matrix), Mat(other.matrix)).rows)

    def inverse(self) -> "Collineation":
        return Collineation.from_matrix(mat_inv(Mat(self.matrix)).rows)


@lru_cache(maxsize=2)
def all_collineations(plane: PlaneModel = PLANE) -> tuple[Collineation, ...]:
    """All 5616 collineations, enumerated via canonical matrices."""
    out = []
    for k in range(9):
        for tail in product(range(MOD), repeat=8 - k):
            flat = (0,) * k + (1,) + tail
            m = (flat[0:3], flat[3:6], flat[6:9])
            if _det3(m) != 0:
                out.append(Collineation(m))
    return tuple(out)


def stabilizer_of(plane: PlaneModel, p: ProjPoint) -> tuple[Collineation, ...]:
    """All collineations fixing the given point."""
    rep = p.rep
    return tuple(
        c for c in all_collineations(plane)
        if plane.point_from_vec(c.apply_vec(rep)).index == p.index
    )


def induced_permutation(m: WittModel, c: Collineation) -> Perm:
    """Restriction of a U-fixing collineation to W, in local coordinates."""
    pm = c.point_map(m.plane)
    if pm[m.u.index] != m.u.index:
        raise ValueError("collineation does not fix U")
    return tuple(m.w_position[pm[i]] for i in m.w)


def identity_perm(n: int = 12) -> Perm:
    return tuple(range(n))


def compose_perm(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[x] for x in p)


def invert_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_design_automorphism(m: WittModel, perm: Perm) -> bool:
    return all(
        tuple(sorted(perm[x] for x in b)) in m.local_blockset for b in m.local_blocks
    )


def _forcing_program(m: WittModel) -> list[tuple]:
    """Static schedule: which image is forced next, and from which five points."""
    sixth = {}
    for b in m.local_blocks:
        for x in b:
            rest = tuple(y for y in b if y != x)
            sixth[frozenset(rest)] = x
    assigned = list(range(5))
    aset = set(assigned)
    program: list[tuple] = []
    while len(aset) < 12:
        step = None
        for sub in combinations(sorted(aset), 5):
            x = sixth[frozenset(sub)]
            if x not in aset:
                step = ("force", sub, x)
                break
        if step is None:
            x = min(set(range(12)) - aset)
            step = ("branch", x)
        program.append(step)
        aset.add(step[-1])
    return program


def all_automorphisms(m: WittModel) -> np.ndarray:
    """Every permutation of W preserving the block set, as rows of an array.

    Exhaustive: any block-preserving permutation restricts to one of the
    candidate 5-prefixes, survives each necessary forcing step, and
    passes the final full block check; conversely only permutations
    passing the full check are returned.  Rows are sorted
    lexicographically.
    """
    is_block = np.zeros(1 << 12, dtype=bool)
    for b in m.local_blocks:
        is_block[sum(1 << x for x in b)] = True
    sixth = np.full(1 << 12, -1, dtype=np.int16)
    for b in m.local_blocks:
        bm = sum(1 << x for x in b)
        for x in b:
            sixth[bm ^ (1 << x)] = x

    prefixes = np.fromiter(
        (x for tup in permutations(range(12), 5) for x in tup), dtype=np.int16
    ).reshape(-1, 5)
    n = len(prefixes)
    img = np.full((n, 12), -1, dtype=np.int16)
    img[:, :5] = prefixes
    used = np.zeros(n, dtype=np.int16)
    for c in range(5):
        used |= 1 << prefixes[:, c]

    for step in _forcing_program(m):
        if step[0] == "force":
            _, sub, x = step
            mask = np.zeros(len(img), dtype=np.int16)
            for s in sub:
                mask |= 1 << img[:, s]
            forced = sixth[mask]
            assert (forced >= 0).all()
            keep = ((used >> forced) & 1) == 0
            img, used, forced = img[keep], used[keep], forced[keep]
            img[:, x] = forced
            used |= 1 << forced
        else:
            _, x = step
            avail = ((used[:, None] >> np.arange(12, dtype=np.int16)) & 1) == 0
            ridx, cand = np.nonzero(avail)
            img, used = img[ridx], used[ridx]
            img[:, x] = cand.astype(np.int16)
            used |= (1 << cand).astype(np.int16)

    ok = np.ones(len(img), dtype=bool)
    for b in m.local_blocks:
        bm = np.zeros(len(img), dtype=np.int16)
        for x in b:
            bm |= 1 << img[:, x]
        ok &= is_block[bm]
    result = img[ok]
    order = np.lexsort(tuple(result[:, c] for c in range(11, -1, -1)))
    return result[order]


def group_closure(generators: Sequence[Perm]) -> set[Perm]:
    """The subgroup generated by the given permutations (orbit of products)."""
    if not generators:
        return {identity_perm()}
    ident = identity_perm(len(generators[0]))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = compose_perm(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class GroupSummary:
    order: int
    generators: tuple[Perm, ...]
    sharply_5_transitive: bool


def _generating_pair(elems: list[Perm], order: int) -> tuple[Perm, ...] | None:
    # first element with each possible image of point 0 spreads the
    # candidates across cosets; some pair of those generates quickly
    firsts: list[Perm] = []
    seen_img0 = set()
    for e in elems:
        if e[0] not in seen_img0:
            seen_img0.add(e[0])
            if e != identity_perm(len(e)):
                firsts.append(e)
    for a, b in combinations(firsts, 2):
        if len(group_closure([a, b])) == order:
            return (a, b)
    return None


def automorphism_group(
    m: WittModel, automorphisms: np.ndarray | None = None
) -> GroupSummary:
    """Order, a small generating set, and the sharp 5-transitivity certificate."""
    if automorphisms is None:
        automorphisms = all_automorphisms(m)
    order = len(automorphisms)
    prefixes = np.unique(automorphisms[:, :5], axis=0)
    sharp = order == 12 * 11 * 10 * 9 * 8 and len(prefixes) == order
    elems = [tuple(int(x) for x in row) for row in automorphisms]
    gens = _generating_pair(elems, order)
    if gens is None:
        # fall back to a greedy chain; terminates with few generators
        chain: list[Perm] = []
        have: set[Perm] = {identity_perm()}
        for e in elems:
            if e not in have:
                chain.append(e)
                have = group_closure(chain)
                if len(have) == order:
                    break
        gens = tuple(chain)
    return GroupSummary(order=order, generators=tuple(gens), sharply_5_transitive=sharp)


def elliptic_involution(g: ProjLine, x: ProjPoint, u: ProjPoint) -> dict[int, int]:
    """The fixed-point-free involution of g's four points swapping x and u."""
    on_g = set(g.points)
    if x.index not in on_g or u.index not in on_g:
        raise ValueError("both points must lie on the line")
    if x.index == u.index:
        raise ValueError("the two swapped points must differ")
    y, z = sorted(on_g - {x.index, u.index})
    return {x.index: u.index, u.index: x.index, y: z, z: y}


def _affine_lines_local(plane: PlaneModel, g: ProjLine) -> tuple[tuple[int, ...], list]:
    pts = tuple(p.index for p in plane.points if p.index not in g.points)
    pos = {p: i for i, p in enumerate(pts)}
    lines = []
    for ln in plane.lines:
        if ln.index != g.index:
            lines.append(tuple(sorted(pos[x] for x in ln.points if x in pos)))
    return pts, lines


def affinities(plane: PlaneModel, g: ProjLine) -> tuple[Perm, ...]:
    """All permutations of the 9 off-line points preserving the 12 cut lines.

    Exhaustive backtracking over images in point order; whenever the
    three points of a cut line are all assigned, their images must form
    a cut line.  The check is a necessary condition, so no
    line-preserving permutation is ever pruned.
    """
    pts, lines = _affine_lines_local(plane, g)
    lineset = {frozenset(ln) for ln in lines}
    complete_at: list[list[tuple[int, ...]]] = [[] for _ in range(9)]
    for ln in lines:
        complete_at[max(ln)].append(ln)
    found: list[Perm] = []
    image = [-1] * 9
    used = [False] * 9

    def place(i: int) -> None:
        if i == 9:
            found.append(tuple(image))
            return
        for j in range(9):
            if used[j]:
                continue
            image[i] = j
            if all(
                frozenset(image[x] for x in ln) in lineset for ln in complete_at[i]
            ):
                used[j] = True
                place(i + 1)
                used[j] = False
        image[i] = -1

    place(0)
    return tuple(sorted(found))


def _general_position_frame(plane: PlaneModel, idxs: Sequence[int]) -> tuple[int, ...]:
    from .plane import collinear

    for quad in combinations(idxs, 4):
        pts = [plane.points[i] for i in quad]
        if not any(collinear(a, b, c) for a, b, c in combinations(pts, 3)):
            return quad
    raise AssertionError("no quadrilateral among the affine points")


def _frame_matrix(plane: PlaneModel, frame: Sequence[int]) -> Mat:
    # rows lambda_i * rep(s_i) map the standard frame onto s1..s4
    from .gf3 import solve

    v1, v2, v3, v4 = (plane.points[i].rep for i in frame)
    cols = Mat.from_rows([v1, v2, v3]).transpose()
    lam = solve(cols, v4)
    assert lam is not None and all(lam)
    return Mat.from_rows(
        [[(l * x) % MOD for x in v] for l, v in zip(lam, (v1, v2, v3))]
    )


def collineation_from_frames(
    src: Sequence[int], dst: Sequence[int], plane: PlaneModel = PLANE
) -> Collineation:
    """The unique collineation sending one 4-point frame to another."""
    a = _frame_matrix(plane, src)
    b = _frame_matrix(plane, dst)
    return Collineation.from_matrix(mat_mul(mat_inv(a), b).rows)


def _beta_by_restriction(
    m: WittModel, affine_pts: Sequence[int], automorphisms: np.ndarray
) -> dict[Perm, Perm]:
    """Map each 9-point restriction to the unique automorphism inducing it."""
    wcols = [m.w_position[p] for p in affine_pts]
    sub = automorphisms[:, wcols]
    local_of_w = np.full(12, -1, dtype=np.int64)
    for i, p in enumerate(affine_pts):
        local_of_w[m.w_position[p]] = i
    valid = (local_of_w[sub] >= 0).all(axis=1)
    table: dict[Perm, Perm] = {}
    for row_idx in np.nonzero(valid)[0]:
        key = tuple(int(x) for x in local_of_w[sub[row_idx]])
        assert key not in table, "two automorphisms share a residue restriction"
        table[key] = tuple(int(x) for x in automorphisms[row_idx])
    return table


def extend_affinity(
    m: WittModel,
    g: ProjLine,
    alpha: Perm,
    automorphisms: np.ndarray | None = None,
) -> tuple[Collineation, Perm]:
    """The unique collineation and design automorphism extending an affinity.

    alpha maps positions 0..8 of the off-line points (ascending plane
    index) to positions.  Raises ValueError when alpha does not preserve
    the cut lines or when the model's U is off the line.
    """
    plane = m.plane
    if m.u.index not in g.points:
        raise ValueError("the line must pass through U")
    pts, lines = _affine_lines_local(plane, g)
    if sorted(alpha) != list(range(9)):
        raise ValueError("alpha must be a permutation of 0..8")
    lineset = {frozenset(ln) for ln in lines}
    if any(frozenset(alpha[x] for x in ln) not in lineset for ln in lines):
        raise ValueError("alpha does not preserve the cut lines")
    frame = _general_position_frame(plane, pts)
    dst = tuple(pts[alpha[pts.index(i)]] for i in frame)
    kappa = collineation_from_frames(frame, dst, plane)
    pm = kappa.point_map(plane)
    assert all(pm[p] == pts[alpha[i]] for i, p in enumerate(pts))
    if automorphisms is None:
        automorphisms = all_automorphisms(m)
    table = _beta_by_restriction(m, pts, automorphisms)
    beta = table[alpha]
    return kappa, beta


@dataclass(frozen=True)
class ExtensionReport:
    """Sweep result for one line through U.

    checks counts (alpha, X) pairs tested against the involution
    identity; divergences counts pairs where the collineation and the
    design automorphism move X differently (both are still correct).
    """

    line_index: int
    alpha_count: int
    checks: int
    failures: tuple[tuple, ...]
    divergences: int
    divergence_example: tuple | None


def verify_extension_formula(
    m: WittModel, g: ProjLine, automorphisms: np.ndarray | None = None
) -> ExtensionReport:
    """For every affinity of the residue of g, check X^beta against the
    conjugated involution U^(kappa^-1 gamma_X kappa) for the three
    points X of g other than U."""
    plane = m.plane
    if m.u.index not in g.points:
        raise ValueError("the line must pass through U")
    if automorphisms is None:
        automorphisms = all_automorphisms(m)
    pts, lines = _affine_lines_local(plane, g)
    alphas = affinities(plane, g)
    table = _beta_by_restriction(m, pts, automorphisms)
    frame = _general_position_frame(plane, pts)
    others = sorted(set(g.points) - {m.u.index})
    failures: list[tuple] = []
    divergences = 0
    example = None
    checks = 0
    for alpha in alphas:
        dst = tuple(pts[alpha[pts.index(i)]] for i in frame)
        kappa = collineation_from_frames(frame, dst, plane)
        pm = kappa.point_map(plane)
        pm_inv = kappa.inverse().point_map(plane)
        beta = table.get(alpha)
        if beta is None:
            failures.append((alpha, None, None, None))
            continue
        for x in others:
            gamma = elliptic_involution(g, plane.points[x], m.u)
            rhs = pm[gamma[pm_inv[m.u.index]]]
            lhs = m.w[beta[m.w_position[x]]]
            checks += 1
            if lhs != rhs:
                failures.append((alpha, x, lhs, rhs))
            if pm[x] != lhs:
                divergences += 1
                if example is None:
                    example = (alpha, x, pm[x], lhs)
    return ExtensionReport(
        line_index=g.index,
        alpha_count=len(alphas),
        checks=checks,
        failures=tuple(failures),
        divergences=divergences,
        divergence_example=example,
    )
