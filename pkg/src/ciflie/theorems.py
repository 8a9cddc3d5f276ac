"""Executable catalog of the bracket-product laws.

Each catalog entry generates inputs of the hypothesis class its law
states (arbitrary homogeneous sets, CIF subspaces, graded subspaces or
CIF ideals), evaluates both sides exactly, and reports the first
disagreeing vector as a witness.  Trials are independently seeded, so a
single (seed, trial index) pair replays any failure.

The negative controls run deliberately falsified variants of a few laws
and demand at least one failure each: a harness that cannot fail proves
nothing.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Callable

from .bracket import bracket_graded_parts, bracket_product, bracket_product_oracle
from .cifset import (
    CIFSet,
    cif_sum,
    first_difference,
    image,
    intersection,
    is_cif_ideal,
    is_cif_subspace,
    is_direct_sum,
    is_z2_graded,
    make_cifset,
    preimage,
    scalar_action,
    subset_of,
    table_fingerprint,
    trivial_cifset,
)
from .degrees import EMPTY
from .generators import (
    GenConfig,
    derive_seed,
    gen_anti_hom,
    gen_cif_ideal,
    gen_cif_set,
    gen_cif_subspace,
    gen_pair,
    trial_config,
)
from .superalgebra import SpanBuilder, Superalgebra, bracket_eval, space_vectors


@dataclass(frozen=True)
class TrialFailure:
    seed: int
    inputs_digest: str
    witness: str


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    trials: int
    failures: tuple[TrialFailure, ...]
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures


def _digest(*sets: CIFSet) -> str:
    blob = "&".join(table_fingerprint(s) for s in sets)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _eq_witness(label: str, X: CIFSet, Y: CIFSet) -> str | None:
    diff = first_difference(X, Y)
    if diff is None:
        return None
    return f"{label}: tables differ at x={diff}"


def _subset_witness(label: str, X: CIFSet, Y: CIFSet) -> str | None:
    if subset_of(X, Y):
        return None
    return f"{label}: containment fails"


Runner = Callable[[GenConfig, random.Random], tuple[str | None, str]]


def _run_mylemma_1(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="subspace")
    rep = is_cif_subspace(cif_sum(A, B))
    witness = None if rep.ok else f"A+B not a subspace: {rep.witness}"
    return witness, _digest(A, B)


def _run_sum_ideal(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="ideal")
    rep = is_cif_ideal(cif_sum(A, B))
    witness = None if rep.ok else f"A+B not an ideal: {rep.witness}"
    return witness, _digest(A, B)


def _run_lem_2(cfg, rng):
    B = gen_cif_subspace(cfg, rng)
    A1 = intersection(gen_cif_set(cfg, rng), B)
    A2 = intersection(gen_cif_set(cfg, rng), B)
    witness = _subset_witness("A1+A2 <= B", cif_sum(A1, A2), B)
    return witness, _digest(A1, A2, B)


def _run_lem_1(cfg, rng):
    A2, B2 = gen_pair(cfg, rng, kind="set")
    A1 = intersection(gen_cif_set(cfg, rng), A2)
    B1 = intersection(gen_cif_set(cfg, rng), B2)
    witness = _subset_witness(
        "[A1,B1] <= [A2,B2]", bracket_product(A1, B1), bracket_product(A2, B2)
    )
    return witness, _digest(A1, B1, A2, B2)


def _run_thrm_1(cfg, rng):
    A1, A2 = gen_pair(cfg, rng, kind="set")
    B = gen_cif_set(cfg, rng)
    left = bracket_product(cif_sum(A1, A2), B)
    right = cif_sum(bracket_product(A1, B), bracket_product(A2, B))
    witness = _eq_witness("[A1+A2,B] = [A1,B]+[A2,B]", left, right)
    if witness is None:
        left2 = bracket_product(B, cif_sum(A1, A2))
        right2 = cif_sum(bracket_product(B, A1), bracket_product(B, A2))
        witness = _eq_witness("[B,A1+A2] = [B,A1]+[B,A2]", left2, right2)
    return witness, _digest(A1, A2, B)


def _run_thrm_2(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="subspace")
    alpha = rng.randrange(cfg.algebra.field.p)
    left = bracket_product(scalar_action(alpha, A), B)
    right = scalar_action(alpha, bracket_product(A, B))
    witness = _eq_witness(f"[{alpha}A,B] = {alpha}[A,B]", left, right)
    if witness is None:
        left2 = bracket_product(A, scalar_action(alpha, B))
        witness = _eq_witness(f"[A,{alpha}B] = {alpha}[A,B]", left2, right)
    return witness, _digest(A, B)


def _run_thrm_9(cfg, rng):
    A1, A2 = gen_pair(cfg, rng, kind="subspace")
    B = gen_cif_subspace(cfg, rng)
    p = cfg.algebra.field.p
    alpha, beta = rng.randrange(p), rng.randrange(p)
    left = bracket_product(
        cif_sum(scalar_action(alpha, A1), scalar_action(beta, A2)), B
    )
    right = cif_sum(
        scalar_action(alpha, bracket_product(A1, B)),
        scalar_action(beta, bracket_product(A2, B)),
    )
    witness = _eq_witness(
        f"[{alpha}A1+{beta}A2,B] = {alpha}[A1,B]+{beta}[A2,B]", left, right
    )
    if witness is None:
        left2 = bracket_product(
            B, cif_sum(scalar_action(alpha, A1), scalar_action(beta, A2))
        )
        right2 = cif_sum(
            scalar_action(alpha, bracket_product(B, A1)),
            scalar_action(beta, bracket_product(B, A2)),
        )
        witness = _eq_witness(
            f"[B,{alpha}A1+{beta}A2] = {alpha}[B,A1]+{beta}[B,A2]", left2, right2
        )
    return witness, _digest(A1, A2, B)


def _run_lem_3(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="subspace")
    rep = is_cif_subspace(bracket_product(A, B))
    witness = None if rep.ok else f"[A,B] not a subspace: {rep.witness}"
    return witness, _digest(A, B)


def _run_lem_4(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="graded")
    product = bracket_product(A, B)
    rep = is_z2_graded(product)
    if not rep.ok:
        return f"[A,B] not graded: {rep.witness}", _digest(A, B)
    part0, part1 = bracket_graded_parts(A, B)
    if not is_direct_sum(part0, part1):
        return "graded parts are not a direct sum", _digest(A, B)
    witness = _eq_witness("[A,B] = [A,B]_0 + [A,B]_1", cif_sum(part0, part1), product)
    return witness, _digest(A, B)


def _run_lem_5(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="graded")
    witness = _eq_witness(
        "[A,B] = [B,A]", bracket_product(A, B), bracket_product(B, A)
    )
    return witness, _digest(A, B)


def _run_thrm_3(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="ideal")
    rep = is_cif_ideal(bracket_product(A, B))
    witness = None if rep.ok else f"[A,B] not an ideal: {rep.witness}"
    return witness, _digest(A, B)


def _run_thrm_4(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="ideal")
    phi = gen_anti_hom(cfg, rng)
    left = image(phi, bracket_product(A, B))
    right = bracket_product(image(phi, A), image(phi, B))
    witness = _subset_witness("phi([A,B]) <= [phi(A),phi(B)]", left, right)
    return witness, _digest(A, B)


def _run_preimg_bracket(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="ideal")
    phi = gen_anti_hom(cfg, rng)
    left = preimage(phi, bracket_product(A, B))
    right = bracket_product(preimage(phi, A), preimage(phi, B))
    witness = _subset_witness(
        "phi^-1([A,B]) <= [phi^-1(A),phi^-1(B)]", left, right
    )
    return witness, _digest(A, B)


def _run_thrm_15(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="ideal")
    phi = gen_anti_hom(cfg, rng)
    left = preimage(phi, cif_sum(A, B))
    right = cif_sum(preimage(phi, A), preimage(phi, B))
    witness = _eq_witness("phi^-1(A+B) = phi^-1(A)+phi^-1(B)", left, right)
    return witness, _digest(A, B)


def _run_thrm_11(cfg, rng):
    B = gen_cif_ideal(cfg, rng)
    phi = gen_anti_hom(cfg, rng)
    alpha = rng.randrange(cfg.algebra.field.p)
    left = preimage(phi, scalar_action(alpha, B))
    right = scalar_action(alpha, preimage(phi, B))
    witness = _eq_witness(f"phi^-1({alpha}B) = {alpha}phi^-1(B)", left, right)
    if witness is None and alpha == 0:
        witness = _eq_witness(
            "phi^-1(0B) = trivial", left, trivial_cifset(cfg.algebra)
        )
    return witness, _digest(B)


def _run_thrm_10(cfg, rng):
    A = gen_cif_ideal(cfg, rng)
    phi = gen_anti_hom(cfg, rng)
    alpha = rng.randrange(cfg.algebra.field.p)
    left = image(phi, scalar_action(alpha, A))
    right = scalar_action(alpha, image(phi, A))
    witness = _eq_witness(f"phi({alpha}A) = {alpha}phi(A)", left, right)
    if witness is None and alpha == 0:
        witness = _eq_witness(
            "phi(0A) = trivial", left, trivial_cifset(cfg.algebra)
        )
    return witness, _digest(A)


def _run_cor_image_bilinear(cfg, rng):
    A1, A2 = gen_pair(cfg, rng, kind="subspace")
    B = gen_cif_subspace(cfg, rng)
    phi = gen_anti_hom(cfg, rng)
    p = cfg.algebra.field.p
    alpha, beta = rng.randrange(p), rng.randrange(p)
    combo = cif_sum(scalar_action(alpha, A1), scalar_action(beta, A2))
    left = bracket_product(image(phi, combo), image(phi, B))
    right = cif_sum(
        scalar_action(alpha, bracket_product(image(phi, A1), image(phi, B))),
        scalar_action(beta, bracket_product(image(phi, A2), image(phi, B))),
    )
    witness = _eq_witness(
        f"[phi({alpha}A1+{beta}A2),phi(B)] bilinear", left, right
    )
    if witness is None:
        left2 = bracket_product(image(phi, B), image(phi, combo))
        right2 = cif_sum(
            scalar_action(alpha, bracket_product(image(phi, B), image(phi, A1))),
            scalar_action(beta, bracket_product(image(phi, B), image(phi, A2))),
        )
        witness = _eq_witness(
            f"[phi(B),phi({alpha}A1+{beta}A2)] bilinear", left2, right2
        )
    return witness, _digest(A1, A2, B)


def _run_cor_preimage_bilinear(cfg, rng):
    A1, A2 = gen_pair(cfg, rng, kind="subspace")
    B = gen_cif_subspace(cfg, rng)
    phi = gen_anti_hom(cfg, rng)
    p = cfg.algebra.field.p
    alpha, beta = rng.randrange(p), rng.randrange(p)
    combo = cif_sum(scalar_action(alpha, A1), scalar_action(beta, A2))
    left = bracket_product(preimage(phi, combo), preimage(phi, B))
    right = cif_sum(
        scalar_action(alpha, bracket_product(preimage(phi, A1), preimage(phi, B))),
        scalar_action(beta, bracket_product(preimage(phi, A2), preimage(phi, B))),
    )
    witness = _eq_witness(
        f"[phi^-1({alpha}A1+{beta}A2),phi^-1(B)] bilinear", left, right
    )
    if witness is None:
        left2 = bracket_product(preimage(phi, B), preimage(phi, combo))
        right2 = cif_sum(
            scalar_action(alpha, bracket_product(preimage(phi, B), preimage(phi, A1))),
            scalar_action(beta, bracket_product(preimage(phi, B), preimage(phi, A2))),
        )
        witness = _eq_witness(
            f"[phi^-1(B),phi^-1({alpha}A1+{beta}A2)] bilinear", left2, right2
        )
    return witness, _digest(A1, A2, B)


def _run_oracle_agreement(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="subspace")
    witness = _eq_witness(
        "ladder = fixpoint oracle",
        bracket_product(A, B),
        bracket_product_oracle(A, B),
    )
    return witness, _digest(A, B)


CATALOG: dict[str, tuple[str, Runner]] = {
    "mylemma-1": ("sum of CIF subspaces is a CIF subspace", _run_mylemma_1),
    "sum-ideal": ("sum of CIF ideals is a CIF ideal", _run_sum_ideal),
    "lem-1": ("bracket product is monotone in both arguments", _run_lem_1),
    "lem-2": ("sum of subsets of a subspace stays inside it", _run_lem_2),
    "lem-3": ("bracket product of subspaces is a subspace", _run_lem_3),
    "lem-4": ("bracket product of graded subspaces is graded", _run_lem_4),
    "lem-5": ("bracket product of graded subspaces is symmetric", _run_lem_5),
    "thrm-1": ("bracket product distributes over sums", _run_thrm_1),
    "thrm-2": ("bracket product respects scalar action", _run_thrm_2),
    "thrm-3": ("bracket product of ideals is an ideal", _run_thrm_3),
    "thrm-4": ("image of a bracket is inside the bracket of images", _run_thrm_4),
    "thrm-9": ("bracket product is bilinear", _run_thrm_9),
    "thrm-10": ("image commutes with scalar action", _run_thrm_10),
    "thrm-11": ("preimage commutes with scalar action", _run_thrm_11),
    "thrm-15": ("preimage distributes over sums", _run_thrm_15),
    "preimg-bracket": (
        "preimage of a bracket is inside the bracket of preimages",
        _run_preimg_bracket,
    ),
    "cor-image-bilinear": (
        "bracket of images is bilinear in the mapped arguments",
        _run_cor_image_bilinear,
    ),
    "cor-preimage-bilinear": (
        "bracket of preimages is bilinear in the pulled-back arguments",
        _run_cor_preimage_bilinear,
    ),
    "oracle": ("ladder and fixpoint oracle agree", _run_oracle_agreement),
}

THEOREM_IDS = tuple(k for k in CATALOG if k != "oracle")

# The source material labels some conclusions with a predicate it never
# defines; only the self-contained containment/equality claims are
# checkable.  The id stays callable so reports are explicit about it.
ANTI_IDEAL_STUB = "anti-ideal"


def check_theorem(theorem_id: str, cfg: GenConfig, trials: int) -> TheoremReport:
    """Run ``trials`` seeded instances of one catalog law."""
    if theorem_id == ANTI_IDEAL_STUB:
        return TheoremReport(
            theorem_id,
            0,
            (),
            note="anti-ideal predicate unspecified in the source material; "
            "the related containment claims run as thrm-4 and preimg-bracket",
        )
    if theorem_id not in CATALOG:
        raise KeyError(f"unknown theorem id: {theorem_id}")
    _, runner = CATALOG[theorem_id]
    failures: list[TrialFailure] = []
    for index in range(trials):
        tcfg = trial_config(cfg, index)
        rng = random.Random(tcfg.seed)
        witness, digest = runner(tcfg, rng)
        if witness is not None:
            failures.append(TrialFailure(tcfg.seed, digest, witness))
    return TheoremReport(theorem_id, trials, tuple(sorted(failures, key=lambda f: f.seed)))


def _nonideal_graded_subspace(alg: Superalgebra, rng: random.Random):
    """A crisp graded subspace not closed under bracketing, if one exists."""
    from .generators import _random_homogeneous_vector

    for _ in range(200):
        gens = [
            _random_homogeneous_vector(alg, rng)
            for _ in range(rng.randint(1, alg.dim))
        ]
        builder = SpanBuilder(alg.field, alg.dim)
        for g in gens:
            builder.add(g)
        basis = builder.to_basis()
        if not 0 < basis.rank < alg.dim:
            continue
        for w in basis.rows:
            for j in range(alg.dim):
                if not basis.contains(bracket_eval(alg, w, alg.basis(j))):
                    return basis
    return None


def _control_lem1_reversed(cfg, rng):
    A2, B2 = gen_pair(cfg, rng, kind="set")
    A1 = intersection(gen_cif_set(cfg, rng), A2)
    B1 = intersection(gen_cif_set(cfg, rng), B2)
    return not subset_of(bracket_product(A2, B2), bracket_product(A1, B1))


def _control_absorption_reversed(cfg, rng):
    A, B = gen_pair(cfg, rng, kind="subspace")
    return not subset_of(cif_sum(A, B), A)


def _control_subset_reversed(cfg, rng):
    B = gen_cif_set(cfg, rng)
    A = intersection(gen_cif_set(cfg, rng), B)
    if first_difference(A, B) is None:
        return False
    return not subset_of(B, A)


def _control_ideal_on_nonideal(cfg, rng):
    alg = cfg.algebra
    basis = _nonideal_graded_subspace(alg, rng)
    if basis is None:
        return None
    top = cfg.degree_pool[-1]
    entries = [
        (x, top)
        for x in space_vectors(alg)
        if x != alg.zero() and basis.contains(x)
    ]
    bad = make_cifset(alg, entries, EMPTY)
    return not is_cif_ideal(bad).ok


def _control_graded_on_nongraded(cfg, rng):
    alg = cfg.algebra
    evens = [i for i in range(alg.dim) if alg.parity[i] == 0]
    odds = [i for i in range(alg.dim) if alg.parity[i] == 1]
    if not evens or not odds:
        return None
    e, f = alg.basis(evens[0]), alg.basis(odds[0])
    mixed = tuple((a + b) % alg.field.p for a, b in zip(e, f))
    hi, lo = cfg.degree_pool[-1], cfg.degree_pool[0]
    bad = make_cifset(alg, [(e, hi), (f, hi), (mixed, lo)], EMPTY)
    return not is_z2_graded(bad).ok


NEGATIVE_CONTROLS: dict[str, Callable] = {
    "lem1-reversed": _control_lem1_reversed,
    "absorption-reversed": _control_absorption_reversed,
    "subset-reversed": _control_subset_reversed,
    "ideal-on-nonideal": _control_ideal_on_nonideal,
    "graded-on-nongraded": _control_graded_on_nongraded,
}


def negative_controls(cfg: GenConfig, trials: int = 200) -> TheoremReport:
    """Mutation-test the harness: each falsified law must fail somewhere.

    A control that never records a failure within the trial budget is
    itself reported as a failure.  Controls with no possible witness on
    the given algebra (say, the grading mutation on a single-parity
    carrier) are skipped and noted.
    """
    failures: list[TrialFailure] = []
    notes: list[str] = []
    total = 0
    for name, control in NEGATIVE_CONTROLS.items():
        ccfg = GenConfig(
            derive_seed(cfg.seed, _name_tag(name)),
            cfg.algebra,
            cfg.chain_length,
            cfg.degree_pool,
        )
        falsified_at: int | None = None
        applicable = True
        for index in range(trials):
            tcfg = trial_config(ccfg, index)
            rng = random.Random(tcfg.seed)
            outcome = control(tcfg, rng)
            total += 1
            if outcome is None:
                applicable = False
                break
            if outcome:
                falsified_at = tcfg.seed
                break
        if not applicable:
            notes.append(f"{name}: not applicable on this algebra")
        elif falsified_at is None:
            failures.append(
                TrialFailure(
                    cfg.seed,
                    "-",
                    f"control {name} produced no failure in {trials} trials",
                )
            )
        else:
            notes.append(f"{name}: falsified at seed {falsified_at}")
    return TheoremReport(
        "neg-controls", total, tuple(failures), note="; ".join(notes)
    )


def _name_tag(name: str) -> int:
    return int.from_bytes(hashlib.sha256(name.encode()).digest()[:4], "big")
