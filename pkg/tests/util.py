"""Shared builders for the algebras used across the test suite."""

from findim import GF, QQ, Quiver, Relation, build_algebra


def k_algebra(field=None):
    """The base field as an algebra: one vertex, no arrows."""
    return build_algebra(Quiver(1, []), [], field or GF(2), 1)


def a2(field=None):
    """Path algebra of the quiver 0 --a--> 1 (hereditary, gl.dim 1)."""
    return build_algebra(Quiver(2, [("a", 0, 1)]), [], field or GF(2), 4)


def dual_numbers(field=None):
    """k[x]/(x^2): one loop with a square-zero relation."""
    q = Quiver(1, [("x", 0, 0)])
    return build_algebra(q, [Relation(q, [(1, ["x", "x"])])], field or GF(2), 3)


def nakayama3(field=None):
    """Cyclic Nakayama algebra on 3 vertices with rad^2 = 0 (self-injective)."""
    q = Quiver(
        3,
        [("a0", 0, 1), ("a1", 1, 2), ("a2", 2, 0)],
    )
    rels = [
        Relation(q, [(1, ["a0", "a1"])]),
        Relation(q, [(1, ["a1", "a2"])]),
        Relation(q, [(1, ["a2", "a0"])]),
    ]
    return build_algebra(q, rels, field or GF(2), 4)
