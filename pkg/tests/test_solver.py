"""Coloring systems, exact counting/enumeration, and the brute-force oracle."""

import itertools
from math import gcd

import pytest

from quandlecolor import (
    AlexanderParams,
    CapExceededError,
    Coloring,
    ColoringSystem,
    alexander,
    brute_force_colorings,
    build_system,
    catalog,
    count_solutions,
    enumerate_solutions,
    extract,
    parse_relations_file,
    reidemeister_r2,
    system_smith_form,
    takasaki,
    trivial,
)

from conftest import modular_solutions


def test_build_system_hopf_sum_coefficient_pattern():
    p = extract(catalog("hopf_sum"))
    t = 2
    sys = build_system(p, AlexanderParams(3, t))
    assert sys.rows == 4 and sys.cols == 4
    assert sys.matrix == (
        (1 - t, -1, t, 0),
        (0, t, -1, 1 - t),
        (t - 1, 0, 1 - t, 0),
        (0, 0, 1 - t, t - 1),
    )


def test_build_system_trefoil_rows_collapse_to_sum_zero():
    # at (n,t) = (3,2) every relation rearranges to x1 + x2 + x3 = 0 (mod 3)
    p = extract(catalog("trefoil"))
    sys = build_system(p, AlexanderParams(3, 2))
    for row in sys.matrix:
        assert sorted(v % 3 for v in row) == [2, 2, 2]
        assert sum(row) == 0


def test_build_system_negative_relation_uses_t_inverse():
    p = extract(parse_relations_file("x1 = x1 / x2\nx2 = x2 / x1\n"))
    params = AlexanderParams(5, 2)
    tinv = pow(2, -1, 5)
    sys = build_system(p, params)
    assert sys.matrix[0] == (tinv - 1, 1 - tinv)


def test_build_system_empty_presentation():
    p = extract(catalog("unlink2"))
    sys = build_system(p, AlexanderParams(3, 2))
    assert sys.rows == 0 and sys.cols == 2
    assert count_solutions(sys, 3) == 9


def test_row_sums_vanish_for_all_catalog_systems():
    for name in ("hopf", "trefoil", "hopf_sum", "allen_swenberg"):
        p = extract(catalog(name))
        for n, t in ((3, 2), (4, 3), (12, 7)):
            sys = build_system(p, AlexanderParams(n, t))
            for row in sys.matrix:
                assert sum(row) == 0
            # hence the all-equal assignment is always a solution
            for c in range(n):
                assert all(sum(v * c for v in row) % n == 0 for row in sys.matrix)


def test_count_trefoil_9():
    p = extract(catalog("trefoil"))
    assert count_solutions(build_system(p, AlexanderParams(3, 2)), 3) == 9


@pytest.mark.parametrize("n", (2, 3, 5, 7))
def test_count_hopf_sum_and_allen_swenberg_prime_grid(n):
    for name in ("hopf_sum", "allen_swenberg"):
        p = extract(catalog(name))
        for t in range(2, n):
            if gcd(n, t) == 1:
                assert count_solutions(build_system(p, AlexanderParams(n, t)), n) == n


def test_count_diagonal_system_mod_4():
    sys = ColoringSystem(2, 2, ((2, 0), (0, 2)))
    # oracle: all 16 pairs by hand; solutions are x, y in {0, 2}
    brute = modular_solutions(sys.matrix, 2, 4)
    assert brute == {(0, 0), (0, 2), (2, 0), (2, 2)}
    assert count_solutions(sys, 4) == 4


def test_enumerate_trefoil_exact_set():
    p = extract(catalog("trefoil"))
    sols = enumerate_solutions(build_system(p, AlexanderParams(3, 2)), 3)
    expected = {
        (0, 0, 0), (1, 1, 1), (2, 2, 2),
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
    }
    assert {c.colors for c in sols} == expected
    assert sols == sorted(sols, key=lambda c: c.colors)


def test_enumerate_hopf_sum_trivial_solutions_only():
    p = extract(catalog("hopf_sum"))
    sols = enumerate_solutions(build_system(p, AlexanderParams(3, 2)), 3)
    assert {c.colors for c in sols} == {(0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)}


def test_enumerate_cap_exceeded():
    p = extract(catalog("trefoil"))
    with pytest.raises(CapExceededError) as exc:
        enumerate_solutions(build_system(p, AlexanderParams(3, 2)), 3, cap=1)
    assert exc.value.count == 9
    assert exc.value.cap == 1


def test_enumerate_matches_exhaustive_modular_solutions():
    p = extract(catalog("hopf_sum"))
    for n, t in ((4, 3), (6, 5), (5, 2)):
        sys = build_system(p, AlexanderParams(n, t))
        assert {c.colors for c in enumerate_solutions(sys, n)} == modular_solutions(
            sys.matrix, sys.cols, n
        )


def test_coloring_image_size():
    assert Coloring((0, 0, 0)).image_size == 1
    assert Coloring((0, 1, 2)).image_size == 3
    assert Coloring((1, 2, 1)).assignment() == {1: 1, 2: 2, 3: 1}
    assert Coloring((1, 2, 1)).color_of(2) == 2


def test_brute_force_trefoil_matches_enumeration():
    p = extract(catalog("trefoil"))
    q = alexander(3, 2)
    brute = brute_force_colorings(p, q)
    linear = enumerate_solutions(build_system(p, q.alexander), 3)
    assert [c.colors for c in brute] == [c.colors for c in linear]


def test_brute_force_trivial_quandle_counts_classes():
    for name in ("unknot", "unlink2", "hopf", "trefoil", "hopf_sum"):
        p = extract(catalog(name))
        from quandlecolor import trivial_t_classes

        k = len(trivial_t_classes(p))
        for m in (2, 3, 5):
            assert len(brute_force_colorings(p, trivial(m))) == m**k


def test_brute_force_unknot_any_quandle():
    p = extract(catalog("unknot"))
    for q in (trivial(4), takasaki(6), alexander(5, 3)):
        sols = brute_force_colorings(p, q)
        assert len(sols) == q.order
        assert {c.colors for c in sols} == {(c,) for c in range(q.order)}


def test_brute_force_cap():
    p = extract(catalog("unlink2"))
    with pytest.raises(CapExceededError):
        brute_force_colorings(p, trivial(5), cap=10)


def test_brute_force_handles_negative_relations():
    d = reidemeister_r2(catalog("unlink2"), 1, 2)
    p = extract(d)
    for n, t in ((3, 2), (4, 3), (5, 3)):
        q = alexander(n, t)
        brute = {c.colors for c in brute_force_colorings(p, q)}
        linear = {
            c.colors for c in enumerate_solutions(build_system(p, q.alexander), n)
        }
        assert brute == linear


def test_oracle_equivalence_small_grid(small_catalog):
    # full grid lives in the acceptance suite; spot-check the machinery here
    for name, d in small_catalog.items():
        p = extract(d)
        for n, t in ((2, 1), (3, 2), (4, 3), (5, 2)):
            q = alexander(n, t)
            brute = {c.colors for c in brute_force_colorings(p, q)}
            linear = {
                c.colors for c in enumerate_solutions(build_system(p, q.alexander), n)
            }
            assert brute == linear, (name, n, t)


def test_smith_reconstruction_for_catalog_systems():
    for name in ("hopf", "trefoil", "hopf_sum", "allen_swenberg"):
        p = extract(catalog(name))
        for n, t in ((3, 2), (4, 3)):
            sys = build_system(p, AlexanderParams(n, t))
            snf = system_smith_form(sys)
            u = [list(r) for r in snf.row_transform]
            v = [list(r) for r in snf.col_transform]
            a = [list(r) for r in sys.matrix]
            ua = [
                [sum(x * y for x, y in zip(row, col)) for col in zip(*a)] for row in u
            ]
            uav = [
                [sum(x * y for x, y in zip(row, col)) for col in zip(*v)] for row in ua
            ]
            assert tuple(tuple(r) for r in uav) == snf.diagonal_matrix()
            for da, db in zip(snf.diagonal, snf.diagonal[1:]):
                assert db % da == 0


def test_count_is_invariant_under_row_shuffles_of_catalog_system():
    p = extract(catalog("hopf_sum"))
    sys = build_system(p, AlexanderParams(4, 3))
    base = count_solutions(sys, 4)
    assert base == 16
    for perm in itertools.permutations(range(4)):
        shuffled = ColoringSystem(4, 4, tuple(sys.matrix[i] for i in perm))
        assert count_solutions(shuffled, 4) == base


def test_count_equals_enumeration_length():
    for name in ("hopf", "trefoil", "hopf_sum", "unlink2"):
        p = extract(catalog(name))
        for n, t in ((2, 1), (3, 2), (4, 3), (6, 5)):
            sys = build_system(p, AlexanderParams(n, t))
            assert count_solutions(sys, n) == len(enumerate_solutions(sys, n))


def test_counts_can_exceed_machine_words():
    # 60 unconstrained arcs over Z_10: count is 10**60
    p = extract(parse_relations_file("circles: 60\n"))
    sys = build_system(p, AlexanderParams(10, 3))
    assert count_solutions(sys, 10) == 10**60
