"""Line-oriented specification language for algebras, CIF sets and maps.

One statement per line, ``#`` starts a comment, rationals are written
``num/den`` or as bare integers.  The grammar:

    field INT
    space NAME dim INT parity BIT...
    bracket NAME i j -> c_1 ... c_n        # 0-based, i <= j only
    cifset NAME on SPACE default R W RH WH
    entry NAME v_1 ... v_n deg R W RH WH
    map NAME SPACE -> SPACE kind {plain|anti} rows c ... / c ... / ...

Structure constants are declared on basis pairs i <= j; the remaining
entries are filled by super skew-symmetry so inconsistent tables cannot
be written.  Semantic checks (degree budgets, the zero pin, reference
and shape errors) run at load and carry line numbers.  Algebra axioms
and map conditions are not load errors; they are what ``validate``
reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .degrees import CIFDegree, Degree, FULL
from .superalgebra import (
    GradedMap,
    PrimeField,
    Superalgebra,
    Vector,
    space_vectors,
    superalgebra_from_pairs,
)
from .cifset import CIFSet, make_cifset


class SpecError(Exception):
    """A located load error: line number plus message."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class WorkspaceSet:
    space: str
    default: CIFDegree
    cifset: CIFSet


@dataclass(frozen=True)
class WorkspaceMap:
    source: str
    target: str
    map: GradedMap


@dataclass(frozen=True)
class Workspace:
    field: PrimeField
    algebras: dict[str, Superalgebra]
    sets: dict[str, WorkspaceSet]
    maps: dict[str, WorkspaceMap]


def _parse_rational(token: str, line: int, what: str) -> Fraction:
    try:
        if "/" in token:
            num_s, den_s = token.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den <= 0:
                raise ValueError
            value = Fraction(num, den)
        else:
            value = Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise SpecError(line, f"{what}: '{token}' is not a rational") from None
    return value


def _parse_degree4(tokens: list[str], line: int) -> CIFDegree:
    if len(tokens) != 4:
        raise SpecError(line, f"expected 4 rationals for a degree, got {len(tokens)}")
    vals = [_parse_rational(t, line, "degree component") for t in tokens]
    try:
        return CIFDegree(Degree(vals[0], vals[1]), Degree(vals[2], vals[3]))
    except ValueError as exc:
        raise SpecError(line, str(exc)) from None


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SpecError(line, f"{what}: '{token}' is not an integer") from None


def _check_name(token: str, line: int) -> str:
    if not token or not (token[0].isalpha() or token[0] == "_"):
        raise SpecError(line, f"invalid name '{token}'")
    if not all(c.isalnum() or c == "_" for c in token):
        raise SpecError(line, f"invalid name '{token}'")
    return token


class _Loader:
    def __init__(self) -> None:
        self.field: PrimeField | None = None
        self.space_decls: dict[str, tuple[int, tuple[int, ...]]] = {}
        self.pairs: dict[str, dict[tuple[int, int], tuple[int, ...]]] = {}
        self.set_decls: dict[str, tuple[str, CIFDegree]] = {}
        self.entries: dict[str, dict[Vector, CIFDegree]] = {}
        self.map_decls: dict[str, tuple[str, str, str, tuple[Vector, ...]]] = {}

    def _need_field(self, line: int) -> PrimeField:
        if self.field is None:
            raise SpecError(line, "a field statement must come first")
        return self.field

    def stmt_field(self, args: list[str], line: int) -> None:
        if self.field is not None:
            raise SpecError(line, "duplicate field statement")
        if len(args) != 1:
            raise SpecError(line, "usage: field INT")
        p = _parse_int(args[0], line, "field modulus")
        try:
            self.field = PrimeField(p)
        except ValueError as exc:
            raise SpecError(line, str(exc)) from None

    def stmt_space(self, args: list[str], line: int) -> None:
        self._need_field(line)
        if len(args) < 4 or args[1] != "dim" or args[3] != "parity":
            raise SpecError(line, "usage: space NAME dim INT parity BIT...")
        name = _check_name(args[0], line)
        if name in self.space_decls:
            raise SpecError(line, f"duplicate space '{name}'")
        dim = _parse_int(args[2], line, "dim")
        bits = args[4:]
        if len(bits) != dim:
            raise SpecError(line, f"expected {dim} parity bits, got {len(bits)}")
        parity = []
        for b in bits:
            if b not in ("0", "1"):
                raise SpecError(line, f"parity bit must be 0 or 1, got '{b}'")
            parity.append(int(b))
        if not 1 <= dim <= 6:
            raise SpecError(line, f"dim must be in 1..6, got {dim}")
        self.space_decls[name] = (dim, tuple(parity))
        self.pairs[name] = {}

    def stmt_bracket(self, args: list[str], line: int) -> None:
        field = self._need_field(line)
        if len(args) < 4 or args[3] != "->":
            raise SpecError(line, "usage: bracket NAME i j -> c_1 ... c_n")
        name = args[0]
        if name not in self.space_decls:
            raise SpecError(line, f"unknown space '{name}'")
        dim, _ = self.space_decls[name]
        i = _parse_int(args[1], line, "basis index")
        j = _parse_int(args[2], line, "basis index")
        if not 0 <= i < dim or not 0 <= j < dim:
            raise SpecError(line, f"basis indices must be in 0..{dim - 1}")
        if i > j:
            raise SpecError(
                line, "structure constants are declared on pairs i <= j only"
            )
        coeffs = args[4:]
        if len(coeffs) != dim:
            raise SpecError(line, f"expected {dim} constants, got {len(coeffs)}")
        if (i, j) in self.pairs[name]:
            raise SpecError(line, f"duplicate bracket declaration for ({i}, {j})")
        cell = tuple(
            _parse_int(c, line, "structure constant") % field.p for c in coeffs
        )
        self.pairs[name][(i, j)] = cell

    def stmt_cifset(self, args: list[str], line: int) -> None:
        self._need_field(line)
        if len(args) != 8 or args[1] != "on" or args[3] != "default":
            raise SpecError(line, "usage: cifset NAME on SPACE default R W RH WH")
        name = _check_name(args[0], line)
        if name in self.set_decls:
            raise SpecError(line, f"duplicate cifset '{name}'")
        space = args[2]
        if space not in self.space_decls:
            raise SpecError(line, f"unknown space '{space}'")
        default = _parse_degree4(args[4:], line)
        self.set_decls[name] = (space, default)
        self.entries[name] = {}

    def stmt_entry(self, args: list[str], line: int) -> None:
        field = self._need_field(line)
        if len(args) < 2:
            raise SpecError(line, "usage: entry NAME v_1 ... v_n deg R W RH WH")
        name = args[0]
        if name not in self.set_decls:
            raise SpecError(line, f"unknown cifset '{name}'")
        space, _ = self.set_decls[name]
        dim, _ = self.space_decls[space]
        if len(args) != 1 + dim + 1 + 4 or args[1 + dim] != "deg":
            raise SpecError(line, "usage: entry NAME v_1 ... v_n deg R W RH WH")
        coords = tuple(
            _parse_int(c, line, "coordinate") % field.p for c in args[1 : 1 + dim]
        )
        degree = _parse_degree4(args[2 + dim :], line)
        if coords in self.entries[name]:
            raise SpecError(line, f"duplicate entry for vector {coords}")
        if coords == (0,) * dim and degree != FULL:
            raise SpecError(
                line, "zero entry must match the pin (mem 1/1 1/1, non 0/1 0/1)"
            )
        self.entries[name][coords] = degree

    def stmt_map(self, args: list[str], line: int) -> None:
        field = self._need_field(line)
        if (
            len(args) < 7
            or args[2] != "->"
            or args[4] != "kind"
            or args[6] != "rows"
        ):
            raise SpecError(
                line,
                "usage: map NAME SPACE -> SPACE kind {plain|anti} rows c ... / ...",
            )
        name = _check_name(args[0], line)
        if name in self.map_decls:
            raise SpecError(line, f"duplicate map '{name}'")
        src, tgt = args[1], args[3]
        for space in (src, tgt):
            if space not in self.space_decls:
                raise SpecError(line, f"unknown space '{space}'")
        kind = args[5]
        if kind not in ("plain", "anti"):
            raise SpecError(line, f"kind must be 'plain' or 'anti', got '{kind}'")
        src_dim, _ = self.space_decls[src]
        tgt_dim, _ = self.space_decls[tgt]
        rows: list[list[int]] = [[]]
        for token in args[7:]:
            if token == "/":
                rows.append([])
            else:
                rows[-1].append(_parse_int(token, line, "matrix entry") % field.p)
        if len(rows) != src_dim:
            raise SpecError(line, f"expected {src_dim} rows, got {len(rows)}")
        for row in rows:
            if len(row) != tgt_dim:
                raise SpecError(
                    line, f"each row needs {tgt_dim} entries, got {len(row)}"
                )
        self.map_decls[name] = (src, tgt, kind, tuple(tuple(r) for r in rows))

    def build(self) -> Workspace:
        if self.field is None:
            raise SpecError(0, "missing field statement")
        algebras: dict[str, Superalgebra] = {}
        for name, (dim, parity) in self.space_decls.items():
            algebras[name] = superalgebra_from_pairs(
                self.field, parity, self.pairs[name]
            )
        sets: dict[str, WorkspaceSet] = {}
        for name, (space, default) in self.set_decls.items():
            cif = make_cifset(
                algebras[space], list(self.entries[name].items()), default
            )
            sets[name] = WorkspaceSet(space, default, cif)
        maps: dict[str, WorkspaceMap] = {}
        for name, (src, tgt, kind, rows) in self.map_decls.items():
            maps[name] = WorkspaceMap(
                src, tgt, GradedMap(algebras[src], algebras[tgt], rows, kind)
            )
        return Workspace(self.field, algebras, sets, maps)


_STATEMENTS = {
    "field": _Loader.stmt_field,
    "space": _Loader.stmt_space,
    "bracket": _Loader.stmt_bracket,
    "cifset": _Loader.stmt_cifset,
    "entry": _Loader.stmt_entry,
    "map": _Loader.stmt_map,
}


def parse_spec(text: str) -> Workspace:
    """Parse a document; any problem raises a SpecError with its line."""
    loader = _Loader()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        keyword, args = tokens[0], tokens[1:]
        handler = _STATEMENTS.get(keyword)
        if handler is None:
            raise SpecError(lineno, f"unknown statement '{keyword}'")
        try:
            handler(loader, args, lineno)
        except SpecError:
            raise
        except Exception as exc:  # total parser: never crash on bad input
            raise SpecError(lineno, f"malformed statement: {exc}") from None
    try:
        return loader.build()
    except SpecError:
        raise
    except Exception as exc:
        raise SpecError(0, f"inconsistent document: {exc}") from None


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _degree4(d: CIFDegree) -> str:
    return f"{_rat(d.mem.r)} {_rat(d.mem.w)} {_rat(d.non.r)} {_rat(d.non.w)}"


def serialize(ws: Workspace) -> str:
    """Canonical text form; parse(serialize(ws)) == ws.

    Names are emitted sorted, structure rows only for i <= j pairs with a
    nonzero constant, and set entries only where they differ from the
    declared default (the zero pin is implicit).
    """
    lines = [f"field {ws.field.p}"]
    for name in sorted(ws.algebras):
        alg = ws.algebras[name]
        bits = " ".join(str(b) for b in alg.parity)
        lines.append(f"space {name} dim {alg.dim} parity {bits}")
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                cell = alg.structure[i][j]
                if any(cell):
                    coeffs = " ".join(str(c) for c in cell)
                    lines.append(f"bracket {name} {i} {j} -> {coeffs}")
    for name in sorted(ws.sets):
        entry = ws.sets[name]
        lines.append(
            f"cifset {name} on {entry.space} default {_degree4(entry.default)}"
        )
        alg = ws.algebras[entry.space]
        zero = alg.zero()
        for v in space_vectors(alg):
            if v == zero:
                continue
            d = entry.cifset.table[v]
            if d != entry.default:
                coords = " ".join(str(c) for c in v)
                lines.append(f"entry {name} {coords} deg {_degree4(d)}")
    for name in sorted(ws.maps):
        decl = ws.maps[name]
        rows = " / ".join(
            " ".join(str(c) for c in row) for row in decl.map.matrix
        )
        lines.append(
            f"map {name} {decl.source} -> {decl.target} kind {decl.map.kind} rows {rows}"
        )
    return "\n".join(lines) + "\n"
