"""Root-of-unity representations: tableau bookkeeping, operator assembly,
relation residuals, irreducibility, and the JSON interchange formats.

The l-coordinate oracle values are recomputed inline from the shift rules
(l = m + p - i for even rows 2p, l = m + p - i + 1 for odd rows 2p+1) so the
tests stay independent of the implementation's own l_value.
"""

from __future__ import annotations

import json

import pytest

from uqson import jsonio
from uqson.coeffring import RootOfUnity
from uqson.errors import (
    DegenerateDenominator,
    DegenerateParameter,
    DimensionMismatch,
    IndexOutOfRange,
    RankMismatch,
    TopRowShift,
)
from uqson.reps import (
    ParamsOmega,
    Tableau,
    assert_generic,
    build_representation,
    commutant_dimension,
    enumerate_tableaux,
    l_value,
    m_value,
    num_positive_roots,
    operator_even,
    operator_odd,
    parameter_count,
    random_generic_params,
    relation_residual,
    shift_tableau,
    tableau_index,
    variable_slots,
)


def worst_residual(omega):
    report = relation_residual(build_representation(omega), omega.root)
    return max(entry["residual"] for entry in report)


# -- tableau bookkeeping -------------------------------------------------------


def test_variable_slot_inventory():
    assert variable_slots(3) == ((1, 2),)
    assert variable_slots(4) == ((1, 3), (1, 2))
    assert variable_slots(5) == ((1, 4), (2, 4), (1, 3), (1, 2))
    assert num_positive_roots(3) == 1
    assert num_positive_roots(4) == 2
    assert num_positive_roots(5) == 4
    assert num_positive_roots(6) == 6
    for n in range(3, 9):
        assert parameter_count(n) == n * (n - 1) // 2


def test_tableau_validation():
    Tableau(4, 3, (0, 2))
    with pytest.raises(ValueError):
        Tableau(4, 3, (0,))  # wrong slot count
    with pytest.raises(ValueError):
        Tableau(4, 3, (0, 3))  # offset out of range
    with pytest.raises(ValueError):
        Tableau(4, 3, (0, -1))


def test_enumeration_count_and_index_round_trip():
    omega = random_generic_params(5, 3, 11)
    tabs = enumerate_tableaux(omega)
    assert len(tabs) == 3 ** num_positive_roots(5)
    for pos, tab in enumerate(tabs):
        assert tableau_index(tab) == pos


def test_m_and_l_values_against_shift_rules():
    omega = random_generic_params(4, 3, 5)
    tab = Tableau(4, 3, (2, 1))
    h13, h12 = omega.h[(1, 3)], omega.h[(1, 2)]
    assert m_value(omega, tab, 1, 3) == h13 + 2
    assert m_value(omega, tab, 1, 2) == h12 + 1
    assert m_value(omega, tab, 1, 4) == omega.m_top[0]
    assert m_value(omega, tab, 2, 4) == omega.m_top[1]
    # even row 2p: l = m + p - i; odd row 2p+1: l = m + p - i + 1
    assert l_value(omega, tab, 1, 2) == (h12 + 1) + 1 - 1
    assert l_value(omega, tab, 1, 3) == (h13 + 2) + 1 - 1 + 1
    assert l_value(omega, tab, 1, 4) == omega.m_top[0] + 2 - 1
    assert l_value(omega, tab, 2, 4) == omega.m_top[1] + 2 - 2
    with pytest.raises(IndexOutOfRange):
        m_value(omega, tab, 3, 4)
    with pytest.raises(IndexOutOfRange):
        l_value(omega, tab, 2, 2)


def test_shift_wraps_cyclically_and_top_row_is_fixed():
    omega = random_generic_params(4, 3, 5)
    tab = Tableau(4, 3, (0, 2))
    up = shift_tableau(omega, tab, 1, 2, +1)
    assert up.offsets == (0, 0)  # 2 + 1 wraps to 0 at k = 3
    down = shift_tableau(omega, tab, 1, 3, -1)
    assert down.offsets == (2, 2)
    with pytest.raises(TopRowShift):
        shift_tableau(omega, tab, 1, 4, +1)
    with pytest.raises(ValueError):
        shift_tableau(omega, tab, 1, 2, 2)


# -- parameter container --------------------------------------------------------


def test_params_structural_validation():
    base = random_generic_params(4, 3, 1)
    with pytest.raises(RankMismatch):
        ParamsOmega(n=2, root=base.root, m_top=(), h={}, c={})
    with pytest.raises(ValueError):
        ParamsOmega(n=4, root=base.root, m_top=base.m_top[:1], h=base.h, c=base.c)
    missing_h = dict(base.h)
    missing_h.pop((1, 2))
    with pytest.raises(ValueError):
        ParamsOmega(n=4, root=base.root, m_top=base.m_top, h=missing_h, c=base.c)
    extra_c = dict(base.c)
    extra_c[(9, 9)] = 1.0
    with pytest.raises(ValueError):
        ParamsOmega(n=4, root=base.root, m_top=base.m_top, h=base.h, c=extra_c)
    zero_c = dict(base.c)
    zero_c[(1, 2)] = 0.0
    with pytest.raises(DegenerateParameter):
        ParamsOmega(n=4, root=base.root, m_top=base.m_top, h=base.h, c=zero_c)
    assert base.dimension() == 9


def test_assert_generic_flags_each_condition():
    base = random_generic_params(5, 3, 2)

    # same-row difference an integer
    h = dict(base.h)
    h[(1, 4)] = h[(2, 4)] + 2.0
    with pytest.raises(DegenerateParameter):
        assert_generic(ParamsOmega(n=5, root=base.root, m_top=base.m_top, h=h, c=base.c))
    # same-row sum an integer
    h = dict(base.h)
    h[(1, 4)] = 3.0 - h[(2, 4)]
    with pytest.raises(DegenerateParameter):
        assert_generic(ParamsOmega(n=5, root=base.root, m_top=base.m_top, h=h, c=base.c))
    # h_{p,2p+1} half-integral
    h = dict(base.h)
    h[(1, 3)] = 0.5
    with pytest.raises(DegenerateParameter):
        assert_generic(ParamsOmega(n=5, root=base.root, m_top=base.m_top, h=h, c=base.c))
    # near-zero c (passes construction, fails the margin check)
    c = dict(base.c)
    c[(1, 2)] = 1e-4
    with pytest.raises(DegenerateParameter):
        assert_generic(ParamsOmega(n=5, root=base.root, m_top=base.m_top, h=base.h, c=c))
    assert assert_generic(base) is True


def test_random_generic_params_is_deterministic():
    a = random_generic_params(4, 3, 42)
    b = random_generic_params(4, 3, 42)
    assert a == b
    assert a != random_generic_params(4, 3, 43)
    assert random_generic_params(3, 5, 1, t=2).root == RootOfUnity(5, 2)


# -- operators -------------------------------------------------------------------


def test_generator_order_and_names():
    omega = random_generic_params(5, 3, 3)
    ops = build_representation(omega)
    assert [op.name for op in ops] == ["I21", "I32", "I43", "I54"]
    assert all(op.dim == 81 for op in ops)


def test_sparsity_bounds():
    omega = random_generic_params(5, 3, 9)
    # odd family: at most 2p entries per column (one up, one down per j <= p)
    assert operator_odd(omega, 1).max_column_nonzeros() <= 2
    assert operator_odd(omega, 2).max_column_nonzeros() <= 4
    # even family: 2(p-1) shifts plus one diagonal entry
    assert operator_even(omega, 1).max_column_nonzeros() <= 1
    assert operator_even(omega, 2).max_column_nonzeros() <= 3


def test_odd_operator_generic_column_count_is_exactly_2p():
    # generic parameters keep every shift coefficient nonzero
    omega = random_generic_params(5, 3, 9)
    assert operator_odd(omega, 2).max_column_nonzeros() == 4


def test_rank3_even_operator_is_purely_diagonal():
    omega = random_generic_params(3, 5, 4)
    op = operator_even(omega, 1)
    assert all(r == c for r, c, _ in op.entries)


@pytest.mark.parametrize(
    "n,k,expected",
    [(3, 3, 3), (3, 5, 5), (4, 3, 9), (5, 3, 81)],
)
def test_dimension_law_buildable_cases(n, k, expected):
    omega = random_generic_params(n, k, 77)
    ops = build_representation(omega)
    assert ops[0].dim == expected == omega.dimension()


def test_dimension_law_order_two_basis_exists_but_operators_degenerate():
    omega = random_generic_params(4, 2, 77)
    assert len(enumerate_tableaux(omega)) == 4 == omega.dimension()
    with pytest.raises(DegenerateDenominator):
        build_representation(omega)


@pytest.mark.parametrize(
    "n,k,tol",
    [(3, 3, 1e-9), (3, 5, 1e-9), (4, 3, 1e-9), (5, 3, 1e-7)],
)
def test_relation_residuals_single_seed(n, k, tol):
    omega = random_generic_params(n, k, 123)
    assert worst_residual(omega) < tol


def test_relation_report_names():
    omega = random_generic_params(4, 3, 123)
    report = relation_residual(build_representation(omega), omega.root)
    assert [e["relation"] for e in report] == [
        "serre-a[2]", "serre-b[2]", "serre-a[3]", "serre-b[3]", "commute[2,4]",
    ]


def test_t_variants_give_valid_representations():
    for t in (1, 2, 3, 4):
        omega = random_generic_params(3, 5, 7, t=t)
        assert worst_residual(omega) < 1e-9
    for t in (1, 2):
        omega = random_generic_params(5, 3, 7, t=t)
        assert worst_residual(omega) < 1e-7


@pytest.mark.parametrize("n,k", [(3, 3), (4, 3)])
def test_commutant_is_one_dimensional(n, k):
    omega = random_generic_params(n, k, 31)
    assert commutant_dimension(build_representation(omega)) == 1


def test_commutant_rejects_mixed_dimensions():
    a = build_representation(random_generic_params(3, 3, 1))
    b = build_representation(random_generic_params(3, 5, 1))
    with pytest.raises(DimensionMismatch):
        commutant_dimension(a + b)
    with pytest.raises(DimensionMismatch):
        relation_residual(a + b, RootOfUnity(3))


def test_diagonal_vanishes_exactly_where_l_is_zero():
    # with h(1,2) = 0 the column family at offset 0 has l_{1,2} = 0, which
    # kills the diagonal coefficient of the rank-3 even operator exactly
    base = random_generic_params(4, 3, 6)
    h = dict(base.h)
    h[(1, 2)] = 0.0
    omega = ParamsOmega(n=4, root=base.root, m_top=base.m_top, h=h, c=base.c)
    op = operator_even(omega, 1)
    diag_cols = {c for r, c, _ in op.entries if r == c}
    tabs = enumerate_tableaux(omega)
    slot = variable_slots(4).index((1, 2))
    for col, tab in enumerate(tabs):
        if tab.offsets[slot] == 0:
            assert col not in diag_cols
        else:
            assert col in diag_cols


# -- JSON interchange -------------------------------------------------------------


def test_params_json_round_trip():
    omega = random_generic_params(4, 5, 13, t=2)
    data = json.loads(jsonio.dumps_json(jsonio.params_to_json(omega)))
    back = jsonio.params_from_json(data)
    assert back == omega
    assert back.root.t == 2


def test_rep_json_round_trip():
    ops = build_representation(random_generic_params(3, 3, 13))
    data = json.loads(jsonio.dumps_json(jsonio.rep_to_json(ops)))
    back = jsonio.rep_from_json(data)
    assert back == ops


def test_dumps_json_is_byte_deterministic():
    omega = random_generic_params(4, 3, 13)
    blob = jsonio.dumps_json(jsonio.params_to_json(omega))
    assert blob == jsonio.dumps_json(jsonio.params_to_json(omega))
    assert blob.endswith("\n")
    # key order is canonical regardless of insertion order
    assert json.dumps(json.loads(blob), indent=2, sort_keys=True) + "\n" == blob


def test_malformed_files_raise_value_error():
    with pytest.raises(ValueError):
        jsonio.params_from_json({"n": 4})
    with pytest.raises(ValueError):
        jsonio.rep_from_json({"dim": 3})
    with pytest.raises(ValueError):
        jsonio.complex_from_json({"re": 1.0})
    with pytest.raises(ValueError):
        jsonio.complex_from_json({"re": 1.0, "im": 0.0, "abs": 1.0})
