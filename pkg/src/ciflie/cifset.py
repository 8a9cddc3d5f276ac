"""CIF sets over a finite superalgebra carrier and their set calculus.

A CIF set is a total table from the carrier's vectors to paired
membership/non-membership degrees, pinned at the zero vector to full
membership (mem TOP, non BOTTOM).  All operations are pure and exact;
sups and infs over decompositions are componentwise maxima/minima over
the finite carrier.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping

from .degrees import (
    BOTTOM,
    CIFDegree,
    Degree,
    EMPTY,
    FULL,
    TOP,
    deg_join,
    deg_leq,
    deg_meet,
)
from .report import Report
from .superalgebra import (
    GradedMap,
    Superalgebra,
    Vector,
    apply_map,
    bracket_eval,
    graded_split,
    space_vectors,
    vec_scale,
    vec_sub,
)


@dataclass(frozen=True)
class CIFSet:
    """Immutable total map from carrier vectors to CIF degrees.

    ``notes`` carries provenance warnings (e.g. a sum of a
    non-homogeneous pair) and never takes part in equality.
    """

    space: Superalgebra
    table: Mapping[Vector, CIFDegree]
    notes: tuple[str, ...] = dc_field(default=(), compare=False)

    def mem(self, x: Vector) -> Degree:
        return self.table[x].mem

    def non(self, x: Vector) -> Degree:
        return self.table[x].non


def make_cifset(
    space: Superalgebra,
    entries: Iterable[tuple[Vector, CIFDegree]],
    default: CIFDegree,
) -> CIFSet:
    """Build a total table: listed vectors get their degree, others the default.

    The zero vector is pinned to (mem TOP, non BOTTOM); an explicit zero
    entry must agree with the pin.  Degree budgets are enforced by the
    CIFDegree constructor.
    """
    vectors = space_vectors(space)
    universe = set(vectors)
    table: dict[Vector, CIFDegree] = {v: default for v in vectors}
    zero = space.zero()
    seen: set[Vector] = set()
    for v, d in entries:
        v = tuple(v)
        if v not in universe:
            raise ValueError(f"vector {v} does not belong to the space")
        if v in seen:
            raise ValueError(f"duplicate entry for vector {v}")
        seen.add(v)
        if v == zero and d != FULL:
            raise ValueError(
                "explicit zero entry must match the pin (mem TOP, non BOTTOM)"
            )
        table[v] = d
    table[zero] = FULL
    return CIFSet(space, table)


def trivial_cifset(space: Superalgebra) -> CIFSet:
    """Full membership at zero, none anywhere else."""
    return make_cifset(space, [], EMPTY)


def is_trivial(A: CIFSet) -> bool:
    zero = A.space.zero()
    return all(
        A.table[v] == EMPTY for v in space_vectors(A.space) if v != zero
    )


def _same_space(A: CIFSet, B: CIFSet) -> Superalgebra:
    if A.space != B.space:
        raise ValueError("CIF sets live on different spaces")
    return A.space


def subset_of(A: CIFSet, B: CIFSet) -> bool:
    """A <= B: memberships rise pointwise, non-memberships fall."""
    _same_space(A, B)
    return all(
        deg_leq(A.mem(x), B.mem(x)) and deg_leq(B.non(x), A.non(x))
        for x in space_vectors(A.space)
    )


def is_homogeneous(A: CIFSet) -> Report:
    """Amplitude order and phase order agree on every pair, on both sides."""
    vectors = space_vectors(A.space)
    for x in vectors:
        dx = A.table[x]
        for y in vectors:
            dy = A.table[y]
            if (dx.mem.r <= dy.mem.r) != (dx.mem.w <= dy.mem.w):
                return Report(False, (f"membership side disagrees at ({x}, {y})",))
            if (dx.non.r <= dy.non.r) != (dx.non.w <= dy.non.w):
                return Report(False, (f"non-membership side disagrees at ({x}, {y})",))
    return Report(True)


def pair_homogeneous(A: CIFSet, B: CIFSet) -> Report:
    """Cross-set version: A's degrees compare consistently against B's."""
    _same_space(A, B)
    vectors = space_vectors(A.space)
    for x in vectors:
        dx = A.table[x]
        for y in vectors:
            dy = B.table[y]
            if (dx.mem.r <= dy.mem.r) != (dx.mem.w <= dy.mem.w):
                return Report(False, (f"membership side disagrees at ({x}, {y})",))
            if (dx.non.r <= dy.non.r) != (dx.non.w <= dy.non.w):
                return Report(False, (f"non-membership side disagrees at ({x}, {y})",))
    return Report(True)


def is_cif_subspace(A: CIFSet) -> Report:
    """Membership superadditive under + and scalars, non-membership dual."""
    alg = A.space
    p = alg.field.p
    vectors = space_vectors(alg)
    for x in vectors:
        for alpha in alg.field.elements:
            ax = vec_scale(p, alpha, x)
            if not deg_leq(A.mem(x), A.mem(ax)):
                return Report(False, (f"scalar (membership): x={x}, alpha={alpha}",))
            if not deg_leq(A.non(ax), A.non(x)):
                return Report(False, (f"scalar (non-membership): x={x}, alpha={alpha}",))
    for x in vectors:
        for y in vectors:
            s = tuple((a + b) % p for a, b in zip(x, y))
            if not deg_leq(deg_meet(A.mem(x), A.mem(y)), A.mem(s)):
                return Report(False, (f"additivity (membership): x={x}, y={y}",))
            if not deg_leq(A.non(s), deg_join(A.non(x), A.non(y))):
                return Report(False, (f"additivity (non-membership): x={x}, y={y}",))
    return Report(True)


def is_z2_graded(A: CIFSet) -> Report:
    """A splits through the grading: its degree at x is the meet/join of
    its degrees at the even and odd parts of x.

    This is the attained form of the direct-sum condition: the component
    extensions vanish off their parity subspaces, so the sup over
    decompositions collapses to the unique graded split.
    """
    alg = A.space
    for x in space_vectors(alg):
        x0, x1 = graded_split(alg, x)
        if A.mem(x) != deg_meet(A.mem(x0), A.mem(x1)):
            return Report(False, (f"membership not graded at x={x}",))
        if A.non(x) != deg_join(A.non(x0), A.non(x1)):
            return Report(False, (f"non-membership not graded at x={x}",))
    return Report(True)


def is_cif_ideal(A: CIFSet) -> Report:
    """Graded CIF subspace absorbing the bracket: the degree of [x, y]
    dominates the join of the degrees of x and y."""
    sub = is_cif_subspace(A)
    if not sub:
        return Report(False, (f"subspace clause: {sub.witness}",))
    graded = is_z2_graded(A)
    if not graded:
        return Report(False, (f"grading clause: {graded.witness}",))
    alg = A.space
    vectors = space_vectors(alg)
    for x in vectors:
        for y in vectors:
            bxy = bracket_eval(alg, x, y)
            if not deg_leq(deg_join(A.mem(x), A.mem(y)), A.mem(bxy)):
                return Report(False, (f"bracket clause (membership): x={x}, y={y}",))
            if not deg_leq(A.non(bxy), deg_meet(A.non(x), A.non(y))):
                return Report(
                    False, (f"bracket clause (non-membership): x={x}, y={y}",)
                )
    return Report(True)


def component_extension(A: CIFSet, parity: int) -> CIFSet:
    """Restrict A to one parity component and extend by no-membership.

    Vectors inside the chosen component keep their degrees, everything
    else drops to (mem BOTTOM, non TOP); the zero pin survives because
    zero lies in both components.
    """
    if parity not in (0, 1):
        raise ValueError("parity must be 0 (even) or 1 (odd)")
    alg = A.space
    table = {}
    for x in space_vectors(alg):
        x0, x1 = graded_split(alg, x)
        inside = (x1 == alg.zero()) if parity == 0 else (x0 == alg.zero())
        table[x] = A.table[x] if inside else EMPTY
    return CIFSet(alg, table)


def cif_sum(A: CIFSet, B: CIFSet) -> CIFSet:
    """Componentwise sup over decompositions x = a + b of the meets.

    On a linear carrier every x decomposes (a = x, b = 0), so the
    "no decomposition" branch of the definition never fires here.  A
    non-homogeneous input pair is accepted; the result then carries a
    provenance note recording that the componentwise reading was used.
    """
    alg = _same_space(A, B)
    p = alg.field.p
    vectors = space_vectors(alg)
    table: dict[Vector, CIFDegree] = {}
    for x in vectors:
        mr = mw = Fraction(0)
        nr = nw = Fraction(1)
        for a in vectors:
            b = vec_sub(p, x, a)
            da, db = A.table[a], B.table[b]
            m = deg_meet(da.mem, db.mem)
            n = deg_join(da.non, db.non)
            if m.r > mr:
                mr = m.r
            if m.w > mw:
                mw = m.w
            if n.r < nr:
                nr = n.r
            if n.w < nw:
                nw = n.w
        table[x] = CIFDegree(Degree(mr, mw), Degree(nr, nw))
    notes = ()
    if not pair_homogeneous(A, B):
        notes = ("sum of a non-homogeneous pair: componentwise reading applied",)
    return CIFSet(alg, table, notes)


def intersection(A: CIFSet, B: CIFSet) -> CIFSet:
    """Pointwise meet of memberships, join of non-memberships."""
    alg = _same_space(A, B)
    table = {
        x: CIFDegree(deg_meet(A.mem(x), B.mem(x)), deg_join(A.non(x), B.non(x)))
        for x in space_vectors(alg)
    }
    return CIFSet(alg, table)


def is_direct_sum(A: CIFSet, B: CIFSet) -> bool:
    """True when A and B overlap only at zero, i.e. their intersection is
    the trivial CIF set."""
    alg = _same_space(A, B)
    zero = alg.zero()
    for x in space_vectors(alg):
        if x == zero:
            continue
        if deg_meet(A.mem(x), B.mem(x)) != BOTTOM:
            return False
        if deg_join(A.non(x), B.non(x)) != TOP:
            return False
    return True


def scalar_action(alpha: int, A: CIFSet) -> CIFSet:
    """alpha A: for alpha != 0 the table pulled back along x -> alpha^{-1} x;
    for alpha = 0 the trivial CIF set."""
    alg = A.space
    p = alg.field.p
    alpha %= p
    if alpha == 0:
        return trivial_cifset(alg)
    inv = alg.field.inv(alpha)
    table = {x: A.table[vec_scale(p, inv, x)] for x in space_vectors(alg)}
    return CIFSet(alg, table)


def image(m: GradedMap, A: CIFSet) -> CIFSet:
    """Push A forward: componentwise max of memberships over each fiber,
    componentwise min of non-memberships; no membership off the image."""
    if A.space != m.source:
        raise ValueError("set does not live on the map's source")
    best: dict[Vector, list[Fraction]] = {}
    for x in space_vectors(m.source):
        y = apply_map(m, x)
        d = A.table[x]
        acc = best.get(y)
        if acc is None:
            best[y] = [d.mem.r, d.mem.w, d.non.r, d.non.w]
        else:
            acc[0] = max(acc[0], d.mem.r)
            acc[1] = max(acc[1], d.mem.w)
            acc[2] = min(acc[2], d.non.r)
            acc[3] = min(acc[3], d.non.w)
    table: dict[Vector, CIFDegree] = {}
    for y in space_vectors(m.target):
        acc = best.get(y)
        if acc is None:
            table[y] = EMPTY
        else:
            table[y] = CIFDegree(Degree(acc[0], acc[1]), Degree(acc[2], acc[3]))
    return CIFSet(m.target, table)


def preimage(m: GradedMap, B: CIFSet) -> CIFSet:
    """Pull B back: table composition with the map."""
    if B.space != m.target:
        raise ValueError("set does not live on the map's target")
    table = {x: B.table[apply_map(m, x)] for x in space_vectors(m.source)}
    return CIFSet(m.source, table)


def table_fingerprint(A: CIFSet) -> str:
    """Canonical one-line rendering of the table, for digests and diffs."""
    parts = []
    for x in space_vectors(A.space):
        d = A.table[x]
        parts.append(
            f"{','.join(map(str, x))}:{d.mem.r},{d.mem.w};{d.non.r},{d.non.w}"
        )
    return "|".join(parts)


def first_difference(A: CIFSet, B: CIFSet) -> Vector | None:
    """First vector (in carrier order) where the two tables disagree."""
    _same_space(A, B)
    for x in space_vectors(A.space):
        if A.table[x] != B.table[x]:
            return x
    return None
