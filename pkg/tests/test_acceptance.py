"""Acceptance suite: one test per criterion, at the stated scale.

Each test prints a single pass line (visible with -s or in captured
output); a failing assertion is the fail line.  Time budgets are part of
the criteria and asserted, not just observed.
"""

import json
import random
import time

from ciflie import (
    FULL,
    THEOREM_IDS,
    bracket_eval,
    bracket_product,
    bracket_product_oracle,
    check_theorem,
    cif_sum,
    deg_join,
    deg_leq,
    deg_meet,
    first_difference,
    gen_anti_hom,
    gen_pair,
    image,
    is_trivial,
    make_config,
    negative_controls,
    parse_spec,
    run_cli,
    scalar_action,
    serialize,
    space_vectors,
    trivial_cifset,
)
from ciflie.specfile import SpecError
from ciflie.theorems import NEGATIVE_CONTROLS
from helpers import gen_fuzz_document, gen_workspace

H_DOC = """\
field 3
space H dim 2 parity 0 1
bracket H 1 1 -> 1 0
cifset A on H default 0/1 0/1 1/1 1/1
entry A 0 1 deg 2/3 1/2 1/4 1/3
entry A 0 2 deg 2/3 1/2 1/4 1/3
cifset B on H default 0/1 0/1 1/1 1/1
entry B 0 1 deg 1/3 1/4 1/2 1/2
entry B 0 2 deg 1/3 1/4 1/2 1/2
"""


def _report(number: int, text: str) -> None:
    print(f"[acceptance] criterion {number}: PASS - {text}")


def test_criterion_1_oracle_equivalence(H, L3):
    start = time.monotonic()
    mismatches = 0
    for alg, pairs, base in ((H, 500, 10_000), (L3, 100, 20_000)):
        for i in range(pairs):
            cfg = make_config(base + i, alg)
            A, B = gen_pair(cfg, kind="subspace")
            if first_difference(
                bracket_product(A, B), bracket_product_oracle(A, B)
            ) is not None:
                mismatches += 1
    elapsed = time.monotonic() - start
    assert mismatches == 0
    assert elapsed < 60, f"oracle sweep took {elapsed:.1f}s"
    _report(1, f"500 H + 100 dim-3 pairs, 0 mismatches, {elapsed:.1f}s")


def test_criterion_2_theorem_catalog(H, L3):
    start = time.monotonic()
    failed = []
    for theorem_id in THEOREM_IDS:
        for alg, trials in ((H, 200), (L3, 50)):
            report = check_theorem(theorem_id, make_config(7, alg), trials)
            if not report.passed:
                failed.append((theorem_id, alg.dim, report.failures[:2]))
    elapsed = time.monotonic() - start
    assert not failed, failed
    assert elapsed < 600, f"catalog took {elapsed:.1f}s"
    _report(
        2,
        f"{len(THEOREM_IDS)} theorem ids x (200 H + 50 dim-3) trials, {elapsed:.1f}s",
    )


def test_criterion_3_negative_controls(H):
    report = negative_controls(make_config(5, H), trials=200)
    assert report.passed, report.failures
    for name in NEGATIVE_CONTROLS:
        assert f"{name}: falsified at seed" in report.note
    _report(3, f"{len(NEGATIVE_CONTROLS)} mutated laws, each falsified")


def test_criterion_4_remark_bounds(H, L3):
    checked = 0
    for alg, pairs, base in ((H, 200, 40_000), (L3, 50, 50_000)):
        for i in range(pairs):
            cfg = make_config(base + i, alg)
            A, B = gen_pair(cfg, kind="set")
            K = bracket_product(A, B)
            for x in space_vectors(alg):
                for y in space_vectors(alg):
                    bxy = bracket_eval(alg, x, y)
                    assert deg_leq(deg_meet(A.mem(x), B.mem(y)), K.mem(bxy))
                    assert deg_leq(K.non(bxy), deg_join(A.non(x), B.non(y)))
                    checked += 1
    _report(4, f"remark bounds exact on {checked} vector pairs")


def test_criterion_5_conventions(H):
    zero = H.zero()
    count = 0
    for i in range(50):
        cfg = make_config(60_000 + i, H)
        rng = random.Random(cfg.seed)
        A, B = gen_pair(cfg, rng, kind="subspace")
        phi = gen_anti_hom(cfg, rng)
        results = [
            bracket_product(A, B),
            cif_sum(A, B),
            scalar_action(rng.randrange(1, 3), A),
            image(phi, A),
        ]
        for result in results:
            assert result.table[zero] == FULL
            count += 1
        assert scalar_action(0, A) == trivial_cifset(H)
        assert scalar_action(0, B) == trivial_cifset(H)
    _report(5, f"zero pin on {count} computed tables; 0*A trivial exactly")


def test_criterion_6_abelian_degenerate(AB2):
    assert AB2.field.p == 3 and AB2.size == 9
    triv = trivial_cifset(AB2)
    for i in range(100):
        cfg = make_config(70_000 + i, AB2)
        A, B = gen_pair(cfg, kind="set")
        K = bracket_product(A, B)
        # exhaustive over all of F_3^2, both sides of every degree
        for x in space_vectors(AB2):
            assert K.table[x] == triv.table[x]
        assert is_trivial(K)
    _report(6, "bracket over the abelian F_3^2 algebra is trivial, 100 pairs")


def test_criterion_7_parser_and_format(tmp_path):
    crashes = 0
    for i in range(1000):
        doc = gen_fuzz_document(random.Random(80_000 + i))
        try:
            parse_spec(doc)
        except SpecError:
            pass
        except Exception:
            crashes += 1
    assert crashes == 0

    for i in range(200):
        ws = gen_workspace(random.Random(90_000 + i))
        assert parse_spec(serialize(ws)) == ws

    spec_path = tmp_path / "h.spec"
    spec_path.write_text(H_DOC, encoding="utf-8")
    outs = []
    for name in ("one.json", "two.json"):
        out = tmp_path / name
        rc = run_cli(
            [
                "compute",
                "bracket",
                str(spec_path),
                "--left",
                "A",
                "--right",
                "B",
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    json.loads(outs[0])
    _report(7, "1000 fuzz cases, 200 round-trips, byte-identical JSON")
