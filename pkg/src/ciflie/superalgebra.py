"""Finite-dimensional Z2-graded vector spaces over a prime field.

Vectors are coordinate tuples reduced mod p, subspaces are reduced
row-echelon bases, and the bracket is the bilinear extension of a
structure-constant table c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k.
Dimensions stay small (at most 6) so every subspace, fiber and sup/inf
downstream can be enumerated outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .report import MapReport, Report

Vector = tuple[int, ...]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
MAX_DIM = 6


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a small prime p."""

    p: int

    def __post_init__(self) -> None:
        if self.p not in _SMALL_PRIMES:
            raise ValueError(f"modulus must be a prime in 2..13, got {self.p}")

    def reduce(self, a: int) -> int:
        return a % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    @property
    def elements(self) -> range:
        return range(self.p)


def vec_add(p: int, u: Vector, v: Vector) -> Vector:
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_sub(p: int, u: Vector, v: Vector) -> Vector:
    return tuple((a - b) % p for a, b in zip(u, v))


def vec_scale(p: int, k: int, v: Vector) -> Vector:
    return tuple((k * a) % p for a in v)


def vec_neg(p: int, v: Vector) -> Vector:
    return tuple((-a) % p for a in v)


@dataclass(frozen=True)
class Superalgebra:
    """A Z2-graded space with a bracket given by structure constants.

    ``parity[i]`` is 0 for even basis vectors and 1 for odd ones; the
    even/odd coordinate subspaces house the grading V = V_0 + V_1.
    Construction checks shape and coefficient ranges only; the algebra
    axioms are the business of :func:`validate_superalgebra`.
    """

    field: PrimeField
    dim: int
    parity: tuple[int, ...]
    structure: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 1..{MAX_DIM}, got {self.dim}")
        if len(self.parity) != self.dim or any(b not in (0, 1) for b in self.parity):
            raise ValueError("parity must be a tuple of dim bits")
        if len(self.structure) != self.dim:
            raise ValueError("structure table must have shape dim x dim x dim")
        for row in self.structure:
            if len(row) != self.dim:
                raise ValueError("structure table must have shape dim x dim x dim")
            for cell in row:
                if len(cell) != self.dim:
                    raise ValueError("structure table must have shape dim x dim x dim")
                if any(not (0 <= c < self.field.p) for c in cell):
                    raise ValueError("structure constants must be reduced mod p")

    def zero(self) -> Vector:
        return (0,) * self.dim

    def basis(self, i: int) -> Vector:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    @property
    def size(self) -> int:
        return self.field.p ** self.dim


@lru_cache(maxsize=32)
def space_vectors(alg: Superalgebra) -> tuple[Vector, ...]:
    """All vectors of the carrier in lexicographic order (zero first)."""
    return tuple(itertools.product(range(alg.field.p), repeat=alg.dim))


def abelian_superalgebra(field: PrimeField, parity: Sequence[int]) -> Superalgebra:
    dim = len(parity)
    zero_cell = (0,) * dim
    table = tuple(tuple(zero_cell for _ in range(dim)) for _ in range(dim))
    return Superalgebra(field, dim, tuple(parity), table)


def superalgebra_from_pairs(
    field: PrimeField,
    parity: Sequence[int],
    pairs: Mapping[tuple[int, int], Sequence[int]],
) -> Superalgebra:
    """Build an algebra from constants on basis pairs i <= j.

    The i > j entries are filled by super skew-symmetry,
    [b_j, b_i] = -(-1)^{parity_i * parity_j} [b_i, b_j], which keeps the
    table consistent by construction.
    """
    dim = len(parity)
    p = field.p
    cells: list[list[Vector]] = [[(0,) * dim] * dim for _ in range(dim)]
    for (i, j), coeffs in pairs.items():
        if not (0 <= i <= j < dim):
            raise ValueError(f"pair ({i}, {j}) must satisfy 0 <= i <= j < dim")
        if len(coeffs) != dim:
            raise ValueError(f"pair ({i}, {j}) needs {dim} constants")
        cell = tuple(c % p for c in coeffs)
        cells[i][j] = cell
        if i != j:
            sign = 1 if (parity[i] and parity[j]) else -1
            cells[j][i] = tuple((sign * c) % p for c in cell)
    table = tuple(tuple(row) for row in cells)
    return Superalgebra(field, dim, tuple(parity), table)


def bracket_eval(alg: Superalgebra, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants to arbitrary vectors."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError("dimension mismatch")
    p = alg.field.p
    out = [0] * alg.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = alg.structure[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            coef = (xi * yj) % p
            cell = row[j]
            for k in range(alg.dim):
                if cell[k]:
                    out[k] = (out[k] + coef * cell[k]) % p
    return tuple(out)


def graded_split(alg: Superalgebra, x: Vector) -> tuple[Vector, Vector]:
    """Split x = x_0 + x_1 into its even and odd coordinate parts."""
    if len(x) != alg.dim:
        raise ValueError("dimension mismatch")
    even = tuple(c if alg.parity[i] == 0 else 0 for i, c in enumerate(x))
    odd = tuple(c if alg.parity[i] == 1 else 0 for i, c in enumerate(x))
    return even, odd


def is_homogeneous_vector(alg: Superalgebra, x: Vector) -> bool:
    even, odd = graded_split(alg, x)
    return even == alg.zero() or odd == alg.zero()


def validate_superalgebra(alg: Superalgebra) -> Report:
    """Check grading compatibility, super skew-symmetry and graded Jacobi.

    One witness is reported per violated axiom; an empty report confirms
    validity.  Violations are report content, never exceptions.
    """
    failures: list[str] = []
    p = alg.field.p
    n = alg.dim

    for i in range(n):
        for j in range(n):
            want = (alg.parity[i] + alg.parity[j]) % 2
            cell = alg.structure[i][j]
            bad = [k for k in range(n) if cell[k] and alg.parity[k] != want]
            if bad:
                failures.append(
                    f"grading: [b{i}, b{j}] has a component of wrong parity "
                    f"at coordinate {bad[0]}"
                )
                break
        else:
            continue
        break

    for i in range(n):
        done = False
        for j in range(n):
            sign = (-1) ** (alg.parity[i] * alg.parity[j])
            lhs = bracket_eval(alg, alg.basis(i), alg.basis(j))
            rhs = bracket_eval(alg, alg.basis(j), alg.basis(i))
            total = tuple((a + sign * b) % p for a, b in zip(lhs, rhs))
            if total != alg.zero():
                failures.append(
                    f"super skew-symmetry: [b{i}, b{j}] + "
                    f"(-1)^({alg.parity[i]}*{alg.parity[j]}) [b{j}, b{i}] != 0"
                )
                done = True
                break
        if done:
            break

    # Jacobi in Leibniz form: ad(b_i) is a superderivation of the bracket.
    for i, j, k in itertools.product(range(n), repeat=3):
        bi, bj, bk = alg.basis(i), alg.basis(j), alg.basis(k)
        lhs = bracket_eval(alg, bi, bracket_eval(alg, bj, bk))
        first = bracket_eval(alg, bracket_eval(alg, bi, bj), bk)
        second = bracket_eval(alg, bj, bracket_eval(alg, bi, bk))
        sign = (-1) ** (alg.parity[i] * alg.parity[j])
        rhs = tuple((a + sign * b) % p for a, b in zip(first, second))
        if lhs != rhs:
            failures.append(
                f"graded Jacobi: witness basis triple (b{i}, b{j}, b{k})"
            )
            break

    return Report(ok=not failures, failures=tuple(failures))


class SpanBuilder:
    """Incremental echelon accumulator for spans over F_p.

    Rows are kept with normalized pivots keyed by pivot column, so
    membership tests are a single reduction pass.
    """

    def __init__(self, field: PrimeField, dim: int) -> None:
        self.field = field
        self.dim = dim
        self._rows: dict[int, tuple[int, ...]] = {}

    def _reduce(self, v: Sequence[int]) -> list[int]:
        p = self.field.p
        work = [c % p for c in v]
        for col in sorted(self._rows):
            if work[col]:
                factor = work[col]
                row = self._rows[col]
                for k in range(col, self.dim):
                    work[k] = (work[k] - factor * row[k]) % p
        return work

    def add(self, v: Sequence[int]) -> bool:
        """Insert v into the span; True if the rank grew."""
        work = self._reduce(v)
        pivot = next((k for k, c in enumerate(work) if c), None)
        if pivot is None:
            return False
        inv = self.field.inv(work[pivot])
        self._rows[pivot] = tuple((inv * c) % self.field.p for c in work)
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return all(c == 0 for c in self._reduce(v))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def to_basis(self) -> "SubspaceBasis":
        p = self.field.p
        pivots = sorted(self._rows)
        rows = [list(self._rows[c]) for c in pivots]
        # Back-eliminate above each pivot for the reduced echelon form.
        for idx in range(len(pivots) - 1, -1, -1):
            col = pivots[idx]
            for above in range(idx):
                factor = rows[above][col]
                if factor:
                    for k in range(col, self.dim):
                        rows[above][k] = (rows[above][k] - factor * rows[idx][k]) % p
        return SubspaceBasis(self.field, self.dim, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SubspaceBasis:
    """Reduced row-echelon basis of a subspace of F_p^dim."""

    field: PrimeField
    dim: int
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        last_pivot = -1
        for row in self.rows:
            if len(row) != self.dim:
                raise ValueError("basis row has wrong length")
            pivot = next((k for k, c in enumerate(row) if c), None)
            if pivot is None:
                raise ValueError("basis rows must be nonzero")
            if pivot <= last_pivot:
                raise ValueError("pivot columns must strictly increase")
            if row[pivot] != 1:
                raise ValueError("pivots must be normalized to 1")
            for other in self.rows:
                if other is not row and other[pivot] != 0:
                    raise ValueError("basis must be fully reduced")
            last_pivot = pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v: Vector) -> bool:
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        p = self.field.p
        work = [c % p for c in v]
        for row in self.rows:
            pivot = next(k for k, c in enumerate(row) if c)
            if work[pivot]:
                factor = work[pivot]
                for k in range(pivot, self.dim):
                    work[k] = (work[k] - factor * row[k]) % p
        return all(c == 0 for c in work)

    def members(self) -> Iterable[Vector]:
        """Enumerate every vector of the spanned subspace."""
        p = self.field.p
        if not self.rows:
            yield (0,) * self.dim
            return
        for coeffs in itertools.product(range(p), repeat=len(self.rows)):
            acc = [0] * self.dim
            for c, row in zip(coeffs, self.rows):
                if c:
                    for k in range(self.dim):
                        acc[k] = (acc[k] + c * row[k]) % p
            yield tuple(acc)


def span_closure(alg: Superalgebra, gens: Iterable[Vector]) -> SubspaceBasis:
    """Reduced row-echelon basis of the linear span of the generators."""
    builder = SpanBuilder(alg.field, alg.dim)
    for g in gens:
        if len(g) != alg.dim:
            raise ValueError("generator has wrong length")
        builder.add(g)
    return builder.to_basis()


@dataclass(frozen=True)
class GradedMap:
    """A linear map given by basis images; optionally an anti-homomorphism.

    ``matrix[i]`` holds the target coordinates of the image of source
    basis vector i.  Construction checks shapes and coefficient ranges;
    grading preservation and the anti condition are checked by
    :func:`validate_map`.
    """

    source: Superalgebra
    target: Superalgebra
    matrix: tuple[Vector, ...]
    kind: str = "plain"

    def __post_init__(self) -> None:
        if self.kind not in ("plain", "anti"):
            raise ValueError("kind must be 'plain' or 'anti'")
        if self.source.field != self.target.field:
            raise ValueError("source and target must share the ground field")
        if len(self.matrix) != self.source.dim:
            raise ValueError("matrix must have one row per source basis vector")
        p = self.source.field.p
        for row in self.matrix:
            if len(row) != self.target.dim:
                raise ValueError("matrix row has wrong length")
            if any(not (0 <= c < p) for c in row):
                raise ValueError("matrix entries must be reduced mod p")


def apply_map(m: GradedMap, x: Vector) -> Vector:
    if len(x) != m.source.dim:
        raise ValueError("dimension mismatch")
    p = m.source.field.p
    out = [0] * m.target.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = m.matrix[i]
        for k in range(m.target.dim):
            if row[k]:
                out[k] = (out[k] + xi * row[k]) % p
    return tuple(out)


def is_surjective(m: GradedMap) -> bool:
    builder = SpanBuilder(m.target.field, m.target.dim)
    for row in m.matrix:
        builder.add(row)
    return builder.rank == m.target.dim


def validate_map(m: GradedMap) -> MapReport:
    """Check grading preservation and, for kind 'anti', the anti condition.

    The anti condition phi([x, y]) = -[phi(x), phi(y)] is checked on all
    basis pairs; bilinearity extends it to arbitrary vectors.  Matrix
    well-formedness is enforced at construction.  Surjectivity is
    reported as a flag rather than a failure.
    """
    failures: list[str] = []
    for i in range(m.source.dim):
        alpha = m.source.parity[i]
        bad = [
            k
            for k in range(m.target.dim)
            if m.matrix[i][k] and m.target.parity[k] != alpha
        ]
        if bad:
            failures.append(
                f"grading: image of b{i} (parity {alpha}) has support at "
                f"target coordinate {bad[0]} (parity {m.target.parity[bad[0]]})"
            )
    if m.kind == "anti":
        p = m.source.field.p
        for i in range(m.source.dim):
            for j in range(m.source.dim):
                lhs = apply_map(m, bracket_eval(m.source, m.source.basis(i), m.source.basis(j)))
                rhs = vec_neg(p, bracket_eval(m.target, m.matrix[i], m.matrix[j]))
                if lhs != rhs:
                    failures.append(
                        f"anti condition: phi([b{i}, b{j}]) != -[phi(b{i}), phi(b{j})]"
                    )
                    break
            else:
                continue
            break
    return MapReport(ok=not failures, surjective=is_surjective(m), failures=tuple(failures))


def fiber(m: GradedMap, y: Vector) -> list[Vector]:
    """All source vectors mapping to y, via a particular solution + kernel.

    Returns the empty list when y is outside the image.  The result is
    sorted, so fibers enumerate deterministically.
    """
    if len(y) != m.target.dim:
        raise ValueError("dimension mismatch")
    p = m.source.field.p
    n = m.source.dim
    # Equations over the unknown x: sum_i x_i * matrix[i][k] = y[k].
    rows = [[m.matrix[i][k] for i in range(n)] + [y[k] % p] for k in range(m.target.dim)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot_row = next((q for q in range(r, len(rows)) if rows[q][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = m.source.field.inv(rows[r][col])
        rows[r] = [(inv * c) % p for c in rows[r]]
        for q in range(len(rows)):
            if q != r and rows[q][col]:
                factor = rows[q][col]
                rows[q] = [(a - factor * b) % p for a, b in zip(rows[q], rows[r])]
        pivots.append(col)
        r += 1
    for q in range(r, len(rows)):
        if rows[q][n]:
            return []
    particular = [0] * n
    for idx, col in enumerate(pivots):
        particular[col] = rows[idx][n]
    free = [col for col in range(n) if col not in pivots]
    kernel: list[Vector] = []
    for col in free:
        vec = [0] * n
        vec[col] = 1
        for idx, pcol in enumerate(pivots):
            vec[pcol] = (-rows[idx][col]) % p
        kernel.append(tuple(vec))
    out = []
    for coeffs in itertools.product(range(p), repeat=len(kernel)):
        x = list(particular)
        for c, vec in zip(coeffs, kernel):
            if c:
                for k in range(n):
                    x[k] = (x[k] + c * vec[k]) % p
        out.append(tuple(x))
    return sorted(set(out))
