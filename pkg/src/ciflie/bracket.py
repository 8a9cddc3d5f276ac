"""The CIF bracket product [A, B] and its independent cross-check.

The production algorithm is a level-cut ladder: for each achievable
degree threshold, take the span of all crisp brackets [a, b] whose
argument degrees clear it, and read the degree of x off the highest cut
containing x.  The sup over decompositions of unbounded length collapses
to span membership because any span element is a finite combination of
cut generators.

When the achievable degree values form a chain (they always do for
homogeneous input pairs), the ladder runs jointly on amplitude-phase
pairs.  Otherwise amplitude and phase ladders are computed independently
(the componentwise reading of the sup) and the result carries a note.

The oracle is a dynamic-programming fixpoint over single-term values,
sharing no span machinery with the ladder; agreement between the two is
the module's keystone correctness property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cifset import CIFSet, cif_sum, component_extension, is_z2_graded
from .degrees import BOTTOM, CIFDegree, Degree, TOP, deg_join, deg_leq, deg_meet
from .superalgebra import (
    SpanBuilder,
    SubspaceBasis,
    Vector,
    bracket_eval,
    space_vectors,
    vec_scale,
    vec_sub,
)

ORACLE_CARRIER_CAP = 81


@dataclass(frozen=True)
class LevelCutLadder:
    """Thresholds with their cut spans, for one side of a bracket product.

    Membership-side ladders list thresholds in descending order with the
    cut at each threshold spanning the brackets of argument pairs whose
    meet dominates it; the cuts grow as the threshold drops.  The
    non-membership side is dual: ascending thresholds, <=-cuts.
    """

    side: str
    thresholds: tuple[Degree, ...]
    cuts: tuple[SubspaceBasis, ...]


def _degree_pairs(A: CIFSet, B: CIFSet):
    """Per argument pair (a, b): the meet/join degree values and the
    crisp bracket, grouped by value."""
    alg = A.space
    vectors = space_vectors(alg)
    mem_groups: dict[Degree, list[Vector]] = {}
    non_groups: dict[Degree, list[Vector]] = {}
    for a in vectors:
        da = A.table[a]
        for b in vectors:
            db = B.table[b]
            g = bracket_eval(alg, a, b)
            mem_groups.setdefault(deg_meet(da.mem, db.mem), []).append(g)
            non_groups.setdefault(deg_join(da.non, db.non), []).append(g)
    return mem_groups, non_groups


def _is_chain(values: list[Degree]) -> bool:
    ordered = sorted(values, key=lambda d: (d.r, d.w))
    return all(deg_leq(u, v) for u, v in zip(ordered, ordered[1:]))


def _sweep(alg, groups: dict, order: list, default):
    """Assign each carrier vector the first threshold whose accumulated
    cut contains it; ``order`` fixes the sweep direction."""
    builder = SpanBuilder(alg.field, alg.dim)
    unassigned = set(space_vectors(alg))
    assignment = {}
    cuts = []
    for value in order:
        for g in groups[value]:
            builder.add(g)
        cuts.append(builder.to_basis())
        for x in [v for v in unassigned if builder.contains(v)]:
            assignment[x] = value
            unassigned.discard(x)
    for x in unassigned:
        assignment[x] = default
    return assignment, cuts


def mem_level_ladder(A: CIFSet, B: CIFSet) -> LevelCutLadder:
    """Membership-side ladder; requires the achievable meets to be a chain."""
    mem_groups, _ = _degree_pairs(A, B)
    values = list(mem_groups)
    if not _is_chain(values):
        raise ValueError("achievable membership degrees do not form a chain")
    order = sorted(values, key=lambda d: (d.r, d.w), reverse=True)
    _, cuts = _sweep(A.space, mem_groups, order, BOTTOM)
    return LevelCutLadder("mem", tuple(order), tuple(cuts))


def non_level_ladder(A: CIFSet, B: CIFSet) -> LevelCutLadder:
    """Non-membership-side ladder; ascending thresholds, <=-cuts."""
    _, non_groups = _degree_pairs(A, B)
    values = list(non_groups)
    if not _is_chain(values):
        raise ValueError("achievable non-membership degrees do not form a chain")
    order = sorted(values, key=lambda d: (d.r, d.w))
    _, cuts = _sweep(A.space, non_groups, order, TOP)
    return LevelCutLadder("non", tuple(order), tuple(cuts))


def _component_groups(groups: dict, attr: str) -> dict:
    """Merge generator groups keyed by one scalar component of the degree."""
    out: dict[Fraction, list[Vector]] = {}
    for value, gens in groups.items():
        out.setdefault(getattr(value, attr), []).extend(gens)
    return out


def _component_sweep(alg, scalar_groups: dict, descending: bool, default: Fraction):
    """Scalar ladder for one amplitude or phase component."""
    order = sorted(scalar_groups, reverse=descending)
    assignment, _ = _sweep(alg, scalar_groups, order, default)
    return assignment


def bracket_product(A: CIFSet, B: CIFSet, *, _force_componentwise: bool = False) -> CIFSet:
    """The CIF bracket product of A and B.

    The degree at x is the largest threshold whose cut span contains x
    (membership side; dually the smallest on the non-membership side),
    and (mem BOTTOM, non TOP) when x is in no cut, i.e. x is not a
    combination of brackets at all.  The zero vector lies in every span,
    so it picks up the top threshold, which is the pin.
    """
    if A.space != B.space:
        raise ValueError("CIF sets live on different spaces")
    alg = A.space
    mem_groups, non_groups = _degree_pairs(A, B)
    chain = _is_chain(list(mem_groups)) and _is_chain(list(non_groups))
    notes = ()
    if not chain or _force_componentwise:
        if not chain:
            notes = (
                "bracket of a non-homogeneous pair: amplitude and phase "
                "ladders computed independently",
            )
        mem_r = _component_sweep(alg, _component_groups(mem_groups, "r"), True, Fraction(0))
        mem_w = _component_sweep(alg, _component_groups(mem_groups, "w"), True, Fraction(0))
        non_r = _component_sweep(alg, _component_groups(non_groups, "r"), False, Fraction(1))
        non_w = _component_sweep(alg, _component_groups(non_groups, "w"), False, Fraction(1))
        table = {
            x: CIFDegree(
                Degree(mem_r[x], mem_w[x]), Degree(non_r[x], non_w[x])
            )
            for x in space_vectors(alg)
        }
        return CIFSet(alg, table, notes)

    mem_order = sorted(mem_groups, key=lambda d: (d.r, d.w), reverse=True)
    non_order = sorted(non_groups, key=lambda d: (d.r, d.w))
    mem_assign, _ = _sweep(alg, mem_groups, mem_order, BOTTOM)
    non_assign, _ = _sweep(alg, non_groups, non_order, TOP)
    table = {
        x: CIFDegree(mem_assign[x], non_assign[x]) for x in space_vectors(alg)
    }
    return CIFSet(alg, table)


def bracket_product_oracle(
    A: CIFSet, B: CIFSet, *, carrier_cap: int = ORACLE_CARRIER_CAP
) -> CIFSet:
    """Dynamic-programming fixpoint realization of the bracket product.

    Seed every x with the componentwise best over single terms
    x = alpha * [a, b], then close under binary sums, joining meets on
    the membership side and dually on the non-membership side.  The
    closure stabilizes within |V| rounds.  No span machinery is shared
    with the ladder algorithm; on homogeneous inputs the two must agree
    exactly.
    """
    if A.space != B.space:
        raise ValueError("CIF sets live on different spaces")
    alg = A.space
    if alg.size > carrier_cap:
        raise ValueError(
            f"carrier too large for the oracle: {alg.size} > {carrier_cap}"
        )
    p = alg.field.p
    vectors = space_vectors(alg)

    mem: dict[Vector, Degree] = {x: BOTTOM for x in vectors}
    non: dict[Vector, Degree] = {x: TOP for x in vectors}
    for a in vectors:
        da = A.table[a]
        for b in vectors:
            db = B.table[b]
            g = bracket_eval(alg, a, b)
            m = deg_meet(da.mem, db.mem)
            n = deg_join(da.non, db.non)
            for alpha in alg.field.elements:
                x = vec_scale(p, alpha, g)
                mem[x] = deg_join(mem[x], m)
                non[x] = deg_meet(non[x], n)

    for _ in range(alg.size):
        changed = False
        for x in vectors:
            best_m = mem[x]
            best_n = non[x]
            for u in vectors:
                v = vec_sub(p, x, u)
                cand_m = deg_meet(mem[u], mem[v])
                if not deg_leq(cand_m, best_m):
                    best_m = deg_join(best_m, cand_m)
                cand_n = deg_join(non[u], non[v])
                if not deg_leq(best_n, cand_n):
                    best_n = deg_meet(best_n, cand_n)
            if best_m != mem[x] or best_n != non[x]:
                mem[x] = best_m
                non[x] = best_n
                changed = True
        if not changed:
            break

    table = {x: CIFDegree(mem[x], non[x]) for x in vectors}
    return CIFSet(alg, table)


def bracket_graded_parts(A: CIFSet, B: CIFSet) -> tuple[CIFSet, CIFSet]:
    """Even and odd parts of [A, B] via the four component brackets.

    part_0 = [a_0, b_0] + [a_1, b_1] and part_1 = [a_0, b_1] + [a_1, b_0]
    on the component extensions; their sum reproduces the full bracket
    product when A and B are Z2-graded.
    """
    for name, S in (("A", A), ("B", B)):
        rep = is_z2_graded(S)
        if not rep:
            raise ValueError(f"input {name} is not Z2-graded: {rep.witness}")
    a0 = component_extension(A, 0)
    a1 = component_extension(A, 1)
    b0 = component_extension(B, 0)
    b1 = component_extension(B, 1)
    part0 = cif_sum(bracket_product(a0, b0), bracket_product(a1, b1))
    part1 = cif_sum(bracket_product(a0, b1), bracket_product(a1, b0))
    return part0, part1
