import random

import pytest

from ciflie import (
    EMPTY,
    FULL,
    GradedMap,
    abelian_superalgebra,
    cif_degree,
    cif_sum,
    component_extension,
    first_difference,
    image,
    intersection,
    is_cif_ideal,
    is_cif_subspace,
    is_direct_sum,
    is_homogeneous,
    is_trivial,
    is_z2_graded,
    make_cifset,
    pair_homogeneous,
    preimage,
    scalar_action,
    space_vectors,
    subset_of,
    trivial_cifset,
)
from ciflie.generators import make_config, gen_cif_subspace, gen_pair

E, F = (1, 0), (0, 1)
D_MAIN = cif_degree("2/3", "1/2", "1/4", "1/3")


def two_level_on_f(H):
    """Membership (2/3,1/2) on span(f) off zero, nothing elsewhere."""
    return make_cifset(H, [(F, D_MAIN), ((0, 2), D_MAIN)], EMPTY)


def test_make_cifset_trivial(H):
    triv = make_cifset(H, [], EMPTY)
    assert triv.table[(0, 0)] == FULL
    assert all(triv.table[v] == EMPTY for v in space_vectors(H) if v != (0, 0))
    assert is_trivial(triv)


def test_make_cifset_single_entry(H):
    A = make_cifset(H, [(F, D_MAIN)], EMPTY)
    assert A.table[F] == D_MAIN
    assert A.table[(0, 2)] == EMPTY
    assert A.table[(0, 0)] == FULL


def test_make_cifset_budget_error(H):
    with pytest.raises(ValueError):
        cif_degree("3/4", "1/2", "1/2", "0")


def test_make_cifset_zero_pin_conflict(H):
    with pytest.raises(ValueError):
        make_cifset(H, [((0, 0), EMPTY)], EMPTY)
    # an explicit pin-matching zero entry is accepted
    A = make_cifset(H, [((0, 0), FULL)], EMPTY)
    assert A.table[(0, 0)] == FULL


def test_make_cifset_vector_outside_space(H):
    with pytest.raises(ValueError):
        make_cifset(H, [((0, 1, 0), D_MAIN)], EMPTY)
    with pytest.raises(ValueError):
        make_cifset(H, [((0, 7), D_MAIN)], EMPTY)


def test_subset_reflexive(H):
    A = two_level_on_f(H)
    assert subset_of(A, A)


def test_trivial_below_everything(H):
    triv = trivial_cifset(H)
    A = two_level_on_f(H)
    assert subset_of(triv, A)
    assert not subset_of(A, triv)


def test_subset_space_mismatch(H, L3):
    with pytest.raises(ValueError):
        subset_of(trivial_cifset(H), trivial_cifset(L3))


def test_homogeneous_when_phase_tracks_amplitude(H):
    A = make_cifset(
        H,
        [(F, cif_degree("1/2", "1/2", "1/4", "1/4"))],
        cif_degree("1/3", "1/3", "1/2", "1/2"),
    )
    assert is_homogeneous(A).ok


def test_homogeneous_witness(H):
    A = make_cifset(
        H,
        [
            (E, cif_degree("1/2", "1/4", "0", "0")),
            (F, cif_degree("1/3", "1/3", "0", "0")),
        ],
        EMPTY,
    )
    rep = is_homogeneous(A)
    assert not rep.ok
    assert "membership" in rep.witness


def test_pair_homogeneous_specializes(H):
    for A in (two_level_on_f(H), trivial_cifset(H)):
        assert pair_homogeneous(A, A).ok == is_homogeneous(A).ok


def test_trivial_is_subspace_and_ideal(H):
    triv = trivial_cifset(H)
    assert is_cif_subspace(triv).ok
    assert is_cif_ideal(triv).ok


def test_crisp_subspace_levelcut_is_subspace(H):
    # full membership exactly on span(f)
    A = make_cifset(H, [(F, FULL), ((0, 2), FULL)], EMPTY)
    assert is_cif_subspace(A).ok


def test_subspace_scalar_witness(H):
    A = make_cifset(
        H,
        [
            (F, cif_degree("1/2", "1/2", "0", "0")),
            ((0, 2), cif_degree("1/4", "1/4", "0", "0")),
        ],
        EMPTY,
    )
    rep = is_cif_subspace(A)
    assert not rep.ok


def test_graded_subspace_on_abelian_is_ideal(AB2):
    A = make_cifset(
        AB2, [(E, cif_degree("1/2", "1/2", "1/4", "1/4")), ((2, 0), cif_degree("1/2", "1/2", "1/4", "1/4"))], EMPTY
    )
    assert is_z2_graded(A).ok
    assert is_cif_ideal(A).ok


def ideal_counterexample(H):
    """Graded subspace on H that is not an ideal: high on the odd line,
    low elsewhere, so [f, f] = e drops below f's degree."""
    hi = cif_degree("2/3", "2/3", "1/4", "1/4")
    lo = cif_degree("1/3", "1/3", "1/2", "1/2")
    entries = []
    for v in space_vectors(H):
        if v == (0, 0):
            continue
        entries.append((v, hi if v in (F, (0, 2)) else lo))
    return make_cifset(H, entries, EMPTY)


def test_ideal_counterexample_on_h(H):
    A = ideal_counterexample(H)
    assert is_cif_subspace(A).ok
    assert is_z2_graded(A).ok
    rep = is_cif_ideal(A)
    assert not rep.ok
    assert "bracket clause" in rep.witness


def test_graded_examples(H):
    assert is_z2_graded(trivial_cifset(H)).ok
    # full membership exactly on the even component
    A = make_cifset(H, [(E, FULL), ((2, 0), FULL)], EMPTY)
    assert is_z2_graded(A).ok


def test_graded_witness(H):
    d = cif_degree("1/2", "1/2", "1/4", "1/4")
    lo = cif_degree("1/4", "1/4", "1/2", "1/2")
    A = make_cifset(H, [(E, d), (F, d), ((1, 1), lo)], EMPTY)
    rep = is_z2_graded(A)
    assert not rep.ok
    assert "(1, 1)" in rep.witness


def test_component_extension_examples(H):
    triv = trivial_cifset(H)
    assert component_extension(triv, 0) == triv
    assert component_extension(triv, 1) == triv

    A = make_cifset(H, [(F, cif_degree("1/2", "1/2", "1/4", "1/4"))], EMPTY)
    even = component_extension(A, 0)
    assert is_trivial(even)
    odd = component_extension(A, 1)
    assert odd.table[F] == cif_degree("1/2", "1/2", "1/4", "1/4")
    assert odd.table[E] == EMPTY


def test_component_extensions_form_direct_sum(H):
    cfg = make_config(23, H)
    for i in range(10):
        A = gen_cif_subspace(make_config(i, H))
        assert is_direct_sum(component_extension(A, 0), component_extension(A, 1))


def test_cif_sum_trivial_neutral(H):
    cfg = make_config(5, H)
    A = gen_cif_subspace(cfg)
    assert cif_sum(A, trivial_cifset(H)) == A
    assert cif_sum(trivial_cifset(H), A) == A


def test_cif_sum_contains_arguments(H):
    cfg = make_config(6, H)
    A = gen_cif_subspace(cfg)
    S = cif_sum(A, A)
    assert subset_of(A, S)


def test_cif_sum_enumerated_example(F3):
    # frozen by enumerating all three decompositions of each point of F_3
    line = abelian_superalgebra(F3, (0,))
    dA = cif_degree("1/2", "1/2", "1/4", "1/4")
    dB = cif_degree("1/3", "1/3", "1/2", "1/2")
    A = make_cifset(line, [((1,), dA)], EMPTY)
    B = make_cifset(line, [((2,), dB)], EMPTY)
    S = cif_sum(A, B)
    assert S.table[(0,)] == FULL
    assert S.table[(1,)] == dA
    assert S.table[(2,)] == dB


def test_cif_sum_flags_non_homogeneous_pair(H):
    A = make_cifset(H, [(E, cif_degree("1/2", "1/4", "0", "0"))], EMPTY)
    B = make_cifset(H, [(E, cif_degree("1/4", "1/2", "0", "0"))], EMPTY)
    assert not pair_homogeneous(A, B).ok
    S = cif_sum(A, B)
    assert any("non-homogeneous" in n for n in S.notes)
    # notes never affect equality
    assert S == cif_sum(A, B)


def test_direct_sum_examples(H):
    triv = trivial_cifset(H)
    assert is_direct_sum(triv, triv)
    A = two_level_on_f(H)
    assert not is_direct_sum(A, A)


def test_scalar_action_examples(H):
    A = two_level_on_f(H)
    assert scalar_action(1, A) == A
    assert scalar_action(0, A) == trivial_cifset(H)
    # over F_3, 2^{-1} = 2, so (2A)(f) = A(2f)
    assert scalar_action(2, A).table[F] == A.table[(0, 2)]


def test_scalar_action_group_law(H):
    rng = random.Random(2)
    for i in range(10):
        A = gen_cif_subspace(make_config(i, H))
        for alpha in (1, 2):
            for beta in (1, 2):
                lhs = scalar_action(alpha, scalar_action(beta, A))
                rhs = scalar_action((alpha * beta) % 3, A)
                assert lhs == rhs


def test_intersection_examples(H):
    A = two_level_on_f(H)
    triv = trivial_cifset(H)
    assert intersection(A, A) == A
    assert intersection(A, triv) == triv
    ext0 = component_extension(A, 0)
    ext1 = component_extension(A, 1)
    assert is_trivial(intersection(ext0, ext1))


def test_image_preimage_identity(H):
    ident = GradedMap(H, H, ((1, 0), (0, 1)))
    A = two_level_on_f(H)
    assert image(ident, A) == A
    assert preimage(ident, A) == A


def test_preimage_zero_map(H):
    zero = GradedMap(H, H, ((0, 0), (0, 0)))
    B = two_level_on_f(H)
    P = preimage(zero, B)
    assert all(P.table[v] == FULL for v in space_vectors(H))


def test_image_under_diag_map(H):
    phi = GradedMap(H, H, ((2, 0), (0, 1)), kind="anti")
    A = make_cifset(H, [(F, D_MAIN)], EMPTY)
    img = image(phi, A)
    assert img.table[F] == D_MAIN
    assert img.table[(0, 2)] == EMPTY
    assert img.table[(0, 0)] == FULL


def test_image_of_trivial_under_surjection_is_trivial(H):
    phi = GradedMap(H, H, ((2, 0), (0, 2)))
    assert is_trivial(image(phi, trivial_cifset(H)))


def test_image_preimage_monotone(H):
    phi = GradedMap(H, H, ((2, 0), (0, 2)))
    for i in range(8):
        cfg = make_config(i, H)
        A, B = gen_pair(cfg, kind="set")
        small = intersection(A, B)
        assert subset_of(image(phi, small), image(phi, A))
        assert subset_of(preimage(phi, small), preimage(phi, A))


def test_zero_pin_always_present(H):
    for i in range(5):
        A = gen_cif_subspace(make_config(i, H))
        assert A.table[(0, 0)] == FULL


def test_first_difference(H):
    A = two_level_on_f(H)
    B = trivial_cifset(H)
    assert first_difference(A, A) is None
    assert first_difference(A, B) == (0, 1)
