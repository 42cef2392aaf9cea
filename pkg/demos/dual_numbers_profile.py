"""The algebra k[x]/(x^2): infinite global dimension, finitistic dimension 0.

Every non-projective module has a periodic resolution (Omega S = S), so the
finitistic-dimension search excludes them all with explicit witnesses and the
regularity check flags the algebra as non-regular.
"""

from findim import GF, Quiver, Relation, build_algebra, findim_estimate, proj_dim, regularity_check


def main():
    q = Quiver(1, [("x", 0, 0)])
    algebra = build_algebra(q, [Relation(q, [(1, ["x", "x"])])], GF(2), 3)

    s = algebra.simple(0)
    res = proj_dim(s, 8)
    print(f"pd of the simple: {res.describe()} (witness Omega^{res.witness[1]} = Omega^{res.witness[0]})")

    rep = findim_estimate(algebra, 3, 8)
    print(
        f"findim estimate: {rep.best}; {rep.modules_seen} modules seen, "
        f"{rep.excluded} excluded, {rep.excluded_periodic} with periodicity witnesses"
    )

    reg = regularity_check(algebra, 3, 8)
    print(f"regular up to bound: {reg['regular_up_to_bound']}")
    print(f"gl.dim estimate: {reg['gl_dim_estimate']}")


if __name__ == "__main__":
    main()
