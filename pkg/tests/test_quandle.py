"""Tables, axiom validation, and the Alexander/Takasaki constructors."""

import pytest

from quandlecolor import (
    AlexanderParams,
    IdempotenceError,
    NotAUnitError,
    QuandleTableError,
    RightInvertibilityError,
    SelfDistributivityError,
    alexander,
    parse_quandle_file,
    render_quandle_file,
    takasaki,
    trivial,
    validate,
)

from conftest import all_quandle_tables


def test_takasaki_closed_form():
    q = takasaki(5)
    for x in range(5):
        for y in range(5):
            assert q.op[x][y] == (2 * y - x) % 5


def test_takasaki_axioms_by_hand():
    # independent exhaustive re-check of all 125 triples at n=5
    op = [[(2 * y - x) % 5 for y in range(5)] for x in range(5)]
    for x in range(5):
        assert op[x][x] == x
        for y in range(5):
            assert sorted(op[r][y] for r in range(5)) == list(range(5))
            for z in range(5):
                assert op[op[x][y]][z] == op[op[x][z]][op[y][z]]
    validate(op)  # and the library agrees


def test_alexander_3_2_matches_takasaki():
    q = alexander(3, 2)
    for x in range(3):
        for y in range(3):
            assert q.op[x][y] == (2 * x + 2 * y) % 3
    assert q.op == takasaki(3).op


def test_alexander_t1_is_trivial():
    q = alexander(5, 1)
    assert q.op == trivial(5).op
    assert q.op[3][4] == 3


def test_takasaki_2_is_trivial():
    assert takasaki(2).op == trivial(2).op


def test_alexander_rejects_non_unit():
    with pytest.raises(NotAUnitError):
        alexander(4, 2)
    with pytest.raises(NotAUnitError):
        AlexanderParams(6, 3)
    with pytest.raises(NotAUnitError):
        AlexanderParams(5, 0)


def test_params_normalize_t():
    p = AlexanderParams(5, -1)
    assert p.t == 4
    assert p.s == (1 - 4) % 5
    assert (p.t * p.t_inverse) % 5 == 1


def test_validate_idempotence_witness():
    op = [[1, 0], [1, 1]]  # op[0][0] != 0
    with pytest.raises(IdempotenceError) as exc:
        validate(op)
    assert exc.value.witness == (0,)


def test_validate_column_bijection_witness():
    op = [[int(c) for c in row] for row in (takasaki(3).op)]
    op[0][1] = op[1][1]  # duplicate in column 1
    with pytest.raises(RightInvertibilityError) as exc:
        validate(op)
    assert exc.value.witness == (1,)


def test_validate_distributivity_witness():
    # keep axioms 1 and 2 intact (swap two values inside one column)
    op = [list(row) for row in takasaki(4).op]
    col = [op[x][1] for x in range(4)]
    op[0][1], op[3][1] = col[3], col[0]
    with pytest.raises(SelfDistributivityError) as exc:
        validate(op)
    assert len(exc.value.witness) == 3


def test_validate_shape_and_range_errors():
    with pytest.raises(QuandleTableError):
        validate([[0, 1]])
    with pytest.raises(QuandleTableError):
        validate([[0, 5], [0, 1]])


def test_dual_consistency():
    quandles = [takasaki(6), alexander(5, 3), alexander(8, 3), trivial(4)]
    for q in quandles:
        m = q.order
        for x in range(m):
            for y in range(m):
                assert q.dual[q.op[x][y]][y] == x
                assert q.op[q.dual[x][y]][y] == x


def test_alexander_dual_closed_form():
    q = alexander(7, 3)
    tinv = pow(3, -1, 7)
    for x in range(7):
        for y in range(7):
            assert q.dual[x][y] == (tinv * x + (1 - tinv) * y) % 7


def test_apply_positive_negative():
    q = alexander(5, 2)
    assert q.apply(1, 3) == q.op[1][3]
    assert q.apply(1, 3, positive=False) == q.dual[1][3]


def test_involutory_examples():
    assert alexander(5, 2).is_involutory() is False
    # witness from the closed form: ((0 > 1) > 1) = 2*(2*0 - 1) - 1 = ...
    q = alexander(5, 2)
    assert q.op[q.op[0][1]][1] != 0
    for n in range(2, 31):
        assert takasaki(n).is_involutory()


def test_involutory_iff_t_squared_is_one_small():
    from math import gcd

    for n in range(2, 13):
        for t in range(1, n):
            if gcd(n, t) != 1:
                continue
            assert alexander(n, t).is_involutory() == ((t * t) % n == 1), (n, t)


def test_composite_modulus_extra_involutory_units():
    # beyond t = +/- 1: composite moduli have more square roots of 1
    assert alexander(8, 3).is_involutory()
    assert alexander(8, 5).is_involutory()
    assert alexander(12, 5).is_involutory()


def test_exhaustive_small_tables_match_validate():
    # every axiom-complying table of small order validates; the labeled
    # counts (1, 1, 5: trivial, trivial, and 3 iso classes) pin the search
    for m, expected in ((1, 1), (2, 1), (3, 5)):
        tables = all_quandle_tables(m)
        assert len(tables) == expected
        for op in tables:
            validate(op)


def test_quandle_file_round_trip():
    q = takasaki(4)
    text = render_quandle_file(q)
    q2 = parse_quandle_file(text)
    assert q2.op == q.op
    assert q2.dual == q.dual


def test_quandle_file_errors():
    with pytest.raises(QuandleTableError):
        parse_quandle_file("3\n0 1 2\n")
    with pytest.raises(QuandleTableError):
        parse_quandle_file("order: 2\n0 0\n")
    with pytest.raises(QuandleTableError):
        parse_quandle_file("order: 2\n0 0 0\n1 1\n")
    with pytest.raises(QuandleTableError):
        parse_quandle_file("order: 2\n0 x\n1 1\n")
