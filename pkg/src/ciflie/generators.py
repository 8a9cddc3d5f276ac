"""Seeded generators for valid CIF subspaces, ideals and anti-homomorphisms.

All generated sets draw their degrees from one shared pool: a strictly
increasing chain of membership degrees paired with a strictly decreasing
chain of non-membership degrees.  Any family of sets valued in the same
pool (plus the zero pin and the no-membership degree) is automatically
homogeneous and pairwise homogeneous, which is exactly the standing
assumption the sup/inf operations downstream rely on.

Sets are built as level cuts over descending chains of crisp subspaces
(crisp graded ideals for the ideal generator): the deeper a vector sits
in the chain, the higher its membership.  This construction is sound by
design, and the suite re-checks soundness with the defining predicates.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .cifset import CIFSet, make_cifset
from .degrees import CIFDegree, Degree, EMPTY, FULL
from .superalgebra import (
    GradedMap,
    SpanBuilder,
    SubspaceBasis,
    Superalgebra,
    Vector,
    bracket_eval,
    graded_split,
    space_vectors,
    validate_map,
)


def derive_seed(seed: int, index: int) -> int:
    """Deterministic, well-spread sub-seed; stable across platforms."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


_POOL_GRID = 60


def make_degree_pool(rng: random.Random, length: int) -> tuple[CIFDegree, ...]:
    """A chain of CIF degrees: memberships strictly rising in amplitude
    and phase, non-memberships strictly falling, budgets respected."""
    if length < 1:
        raise ValueError("pool length must be positive")
    rs = sorted(rng.sample(range(1, _POOL_GRID), length))
    ws = sorted(rng.sample(range(1, _POOL_GRID), length))
    whs = sorted(rng.sample(range(1, _POOL_GRID), length), reverse=True)
    shrink = Fraction(rng.randrange(1, _POOL_GRID), _POOL_GRID)
    pool = []
    for i in range(length):
        r = Fraction(rs[i], _POOL_GRID)
        w = Fraction(ws[i], _POOL_GRID)
        rh = (1 - r) * shrink
        wh = Fraction(whs[i], _POOL_GRID)
        pool.append(CIFDegree(Degree(r, w), Degree(rh, wh)))
    return tuple(pool)


def _check_pool_chain(pool: tuple[CIFDegree, ...]) -> None:
    for lo, hi in zip(pool, pool[1:]):
        if not (lo.mem.r < hi.mem.r and lo.mem.w < hi.mem.w):
            raise ValueError("pool memberships must strictly increase")
        if not (lo.non.r > hi.non.r and lo.non.w > hi.non.w):
            raise ValueError("pool non-memberships must strictly decrease")


@dataclass(frozen=True)
class GenConfig:
    """Reproducible generation context: seed, carrier and degree pool."""

    seed: int
    algebra: Superalgebra
    chain_length: int = 3
    degree_pool: tuple[CIFDegree, ...] = ()

    def __post_init__(self) -> None:
        if not 2 <= self.chain_length <= 4:
            raise ValueError("chain_length must be in 2..4")
        if self.degree_pool:
            _check_pool_chain(self.degree_pool)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def make_config(seed: int, algebra: Superalgebra, chain_length: int = 3) -> GenConfig:
    """Config with a pool derived deterministically from the seed."""
    rng = random.Random(derive_seed(seed, 0))
    pool = make_degree_pool(rng, chain_length)
    return GenConfig(seed, algebra, chain_length, pool)


def trial_config(cfg: GenConfig, index: int) -> GenConfig:
    """Per-trial config: derived seed and a fresh pool for that seed."""
    seed = derive_seed(cfg.seed, index + 1)
    rng = random.Random(derive_seed(seed, 0))
    pool = make_degree_pool(rng, cfg.chain_length)
    return GenConfig(seed, cfg.algebra, cfg.chain_length, pool)


def _random_vector(alg: Superalgebra, rng: random.Random) -> Vector:
    return tuple(rng.randrange(alg.field.p) for _ in range(alg.dim))


def _random_homogeneous_vector(alg: Superalgebra, rng: random.Random) -> Vector:
    v = _random_vector(alg, rng)
    even, odd = graded_split(alg, v)
    return even if rng.random() < 0.5 else odd


def crisp_ideal_closure(alg: Superalgebra, gens: list[Vector]) -> SubspaceBasis:
    """Smallest subspace containing the generators and closed under
    bracketing with the whole algebra."""
    builder = SpanBuilder(alg.field, alg.dim)
    queue = list(gens)
    while queue:
        v = queue.pop()
        if builder.add(v):
            for j in range(alg.dim):
                queue.append(bracket_eval(alg, v, alg.basis(j)))
                queue.append(bracket_eval(alg, alg.basis(j), v))
    return builder.to_basis()


def _random_chain(
    alg: Superalgebra,
    rng: random.Random,
    max_depth: int,
    graded: bool,
    ideal: bool,
) -> list[SubspaceBasis]:
    """Descending chain W_1 >= ... >= W_k of crisp subspaces (k possibly 0),
    built deepest-first so inclusions hold by construction."""
    depth = rng.randint(0, max_depth)
    chains: list[SubspaceBasis] = []
    gens: list[Vector] = []
    sample = _random_homogeneous_vector if (graded or ideal) else _random_vector
    for _ in range(depth):
        for _ in range(rng.randint(0, 2)):
            gens.append(sample(alg, rng))
        if ideal:
            basis = crisp_ideal_closure(alg, gens)
            gens = list(basis.rows)
        else:
            builder = SpanBuilder(alg.field, alg.dim)
            for g in gens:
                builder.add(g)
            basis = builder.to_basis()
        chains.append(basis)
    chains.reverse()
    return chains


def _levelcut_set(
    alg: Superalgebra, chain: list[SubspaceBasis], pool: tuple[CIFDegree, ...]
) -> CIFSet:
    entries = []
    zero = alg.zero()
    for x in space_vectors(alg):
        if x == zero:
            continue
        depth = 0
        for level, basis in enumerate(chain, start=1):
            if basis.contains(x):
                depth = level
        if depth:
            entries.append((x, pool[depth - 1]))
    return make_cifset(alg, entries, EMPTY)


def gen_cif_subspace(
    cfg: GenConfig, rng: random.Random | None = None, *, graded: bool = False
) -> CIFSet:
    """Level-cut CIF subspace over a random chain of crisp subspaces.

    With ``graded=True`` the chain members are spans of homogeneous
    vectors, so the output is additionally Z2-graded.
    """
    rng = rng or cfg.rng()
    chain = _random_chain(cfg.algebra, rng, len(cfg.degree_pool), graded, False)
    return _levelcut_set(cfg.algebra, chain, cfg.degree_pool)


def gen_cif_ideal(cfg: GenConfig, rng: random.Random | None = None) -> CIFSet:
    """Level-cut CIF ideal over a random chain of crisp graded ideals."""
    rng = rng or cfg.rng()
    chain = _random_chain(cfg.algebra, rng, len(cfg.degree_pool), True, True)
    return _levelcut_set(cfg.algebra, chain, cfg.degree_pool)


def gen_cif_set(cfg: GenConfig, rng: random.Random | None = None) -> CIFSet:
    """Arbitrary homogeneous CIF set: a random pool-valued table.

    No subspace structure is imposed; homogeneity comes from the shared
    pool chain alone.
    """
    rng = rng or cfg.rng()
    alg = cfg.algebra
    choices: list[CIFDegree] = [EMPTY, *cfg.degree_pool, FULL]
    entries = []
    zero = alg.zero()
    for x in space_vectors(alg):
        if x == zero:
            continue
        entries.append((x, rng.choice(choices)))
    return make_cifset(alg, entries, EMPTY)


_PAIR_KINDS = ("set", "subspace", "graded", "ideal")


def gen_pair(
    cfg: GenConfig, rng: random.Random | None = None, kind: str = "subspace"
) -> tuple[CIFSet, CIFSet]:
    """Two independently sampled sets sharing the config's degree pool,
    hence a homogeneous pair."""
    if kind not in _PAIR_KINDS:
        raise ValueError(f"kind must be one of {_PAIR_KINDS}")
    rng = rng or cfg.rng()
    if kind == "set":
        return gen_cif_set(cfg, rng), gen_cif_set(cfg, rng)
    if kind == "subspace":
        return gen_cif_subspace(cfg, rng), gen_cif_subspace(cfg, rng)
    if kind == "graded":
        return (
            gen_cif_subspace(cfg, rng, graded=True),
            gen_cif_subspace(cfg, rng, graded=True),
        )
    return gen_cif_ideal(cfg, rng), gen_cif_ideal(cfg, rng)


class GenExhausted(RuntimeError):
    """Raised when no anti-homomorphism is found within the trial budget."""


def _random_graded_invertible(
    alg: Superalgebra, rng: random.Random
) -> tuple[Vector, ...] | None:
    """One sampling attempt at a grading-preserving invertible matrix."""
    rows: list[Vector] = []
    for i in range(alg.dim):
        row = tuple(
            rng.randrange(alg.field.p) if alg.parity[k] == alg.parity[i] else 0
            for k in range(alg.dim)
        )
        rows.append(row)
    builder = SpanBuilder(alg.field, alg.dim)
    for row in rows:
        builder.add(row)
    if builder.rank != alg.dim:
        return None
    return tuple(rows)


def gen_anti_hom(
    cfg: GenConfig, rng: random.Random | None = None, attempts: int = 200
) -> GradedMap:
    """A surjective anti-homomorphism of the config's algebra onto itself.

    Samples grading-preserving invertible matrices and keeps the first
    one that validates; falls back to minus the identity, which is also
    validated rather than assumed (and to the identity on algebras whose
    bracket vanishes).  Raises GenExhausted only if nothing validates,
    which no algebra passing validation can trigger.
    """
    rng = rng or cfg.rng()
    alg = cfg.algebra
    for _ in range(attempts):
        rows = _random_graded_invertible(alg, rng)
        if rows is None:
            continue
        candidate = GradedMap(alg, alg, rows, kind="anti")
        rep = validate_map(candidate)
        if rep.ok and rep.surjective:
            return candidate
    p = alg.field.p
    for diag in ((p - 1), 1):
        rows = tuple(
            tuple(diag if k == i else 0 for k in range(alg.dim))
            for i in range(alg.dim)
        )
        candidate = GradedMap(alg, alg, rows, kind="anti")
        rep = validate_map(candidate)
        if rep.ok and rep.surjective:
            return candidate
    raise GenExhausted(
        f"no anti-homomorphism found within {attempts} attempts"
    )


__all__ = [
    "GenConfig",
    "GenExhausted",
    "crisp_ideal_closure",
    "derive_seed",
    "gen_anti_hom",
    "gen_cif_ideal",
    "gen_cif_set",
    "gen_cif_subspace",
    "gen_pair",
    "make_config",
    "make_degree_pool",
    "trial_config",
]
