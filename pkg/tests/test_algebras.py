import pytest

from findim import GF, QQ, NotFiniteDimensionalError, Quiver, Relation, build_algebra
from util import a2, dual_numbers, k_algebra, nakayama3


def test_base_field_algebra():
    a = k_algebra()
    assert a.dim == 1
    assert a.nilpotency == 1


def test_a2_basis():
    a = a2()
    assert a.dim == 3
    assert a.nilpotency == 2
    assert a.basis_by_pair[(0, 1)]  # the arrow path class


def test_dual_numbers():
    a = dual_numbers()
    assert a.dim == 2
    assert a.nilpotency == 2


def test_nakayama3():
    a = nakayama3()
    assert a.dim == 6
    assert a.nilpotency == 2


def test_loop_without_relation_is_infinite_dimensional():
    q = Quiver(1, [("x", 0, 0)])
    with pytest.raises(NotFiniteDimensionalError):
        build_algebra(q, [], GF(2), 5)


def test_relation_admissibility():
    q = Quiver(1, [("x", 0, 0)])
    with pytest.raises(ValueError):
        Relation(q, [(1, ["x"])])  # length-1 term
    with pytest.raises(ValueError):
        Relation(q, [])


def test_relation_parallel_check():
    q = Quiver(3, [("a", 0, 1), ("b", 1, 2), ("d", 2, 2)])
    with pytest.raises(ValueError):
        Relation(q, [(1, ["a", "b"]), (1, ["d", "d"])])  # 0->2 vs 2->2
    with pytest.raises(ValueError):
        Relation(q, [(1, ["b", "a"])])  # not composable


def test_projectives_and_simples_a2():
    a = a2()
    assert a.projective(0).dims == [1, 1]
    assert a.projective(1).dims == [0, 1]
    assert a.simple(0).dims == [1, 0]
    assert a.simple(1).dims == [0, 1]


def test_projectives_nakayama():
    a = nakayama3()
    # uniserial of length 2: P_i has top S_i and socle S_{i+1}
    assert a.projective(0).dims == [1, 1, 0]
    assert a.projective(1).dims == [0, 1, 1]
    assert a.projective(2).dims == [1, 0, 1]


def test_opposite_algebra():
    a = a2()
    op = a.opposite()
    assert op.dim == 3
    assert op.projective(1).dims == [1, 1]  # roles of source and sink swap


def test_dual_module():
    a = a2()
    d = a.dual_module(a.simple(0))
    assert d.algebra is a.opposite()
    assert d.dims == [1, 0]


def test_rational_coefficients():
    q = Quiver(1, [("x", 0, 0)])
    a = build_algebra(q, [Relation(q, [(1, ["x", "x"])])], QQ, 3)
    assert a.dim == 2


def test_commutative_square_with_commutativity_relation():
    q = Quiver(
        4,
        [("a", 0, 1), ("b", 0, 2), ("c", 1, 3), ("d", 2, 3)],
    )
    rel = Relation(q, [(1, ["a", "c"]), (-1, ["b", "d"])])
    alg = build_algebra(q, [rel], GF(3), 4)
    # 4 idempotents + 4 arrows + 1 path class of length two
    assert alg.dim == 9
