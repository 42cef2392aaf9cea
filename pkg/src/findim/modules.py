"""Finite-dimensional modules over a path algebra and their homological data.

A module is a representation: one fiber dimension per vertex and one exact
matrix per arrow.  On top of that this file provides Hom spaces (solved as
commutation linear systems), projective covers, syzygies, minimal
projective resolutions with a cutoff, and projective/injective dimension.

Projective modules appear in two flavours: as plain Modules, and as
"projective sums" described by a tuple of vertices (i1, ..., ik) standing
for Ae_{i1} + ... + Ae_{ik}.  Maps out of a projective sum are determined
by generator images, which keeps all Hom computations out of projectives
cheap and canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix, column_space_basis, kernel_basis, rank, solve, solve_matrix


class Module:
    """Representation of a quiver algebra: dims per vertex, matrix per arrow."""

    def __init__(self, algebra, dims: Sequence[int], arrow_mats: Dict[str, Matrix], check: bool = True):
        self.algebra = algebra
        self.dims = list(dims)
        if len(self.dims) != algebra.num_vertices or any(d < 0 for d in self.dims):
            raise ValueError("bad dimension vector")
        self.arrow_mats = dict(arrow_mats)
        for a in algebra.quiver.arrows:
            m = self.arrow_mats.get(a.id)
            if m is None:
                m = Matrix.zeros(algebra.field, self.dims[a.target], self.dims[a.source])
                self.arrow_mats[a.id] = m
            if (m.rows, m.cols) != (self.dims[a.target], self.dims[a.source]):
                raise ValueError(f"arrow {a.id!r}: matrix shape does not match dims")
        if check:
            self._check_relations()

    def _check_relations(self):
        for rel in self.algebra.relations:
            acc = None
            for coeff, arrows in rel.terms:
                term = self._act_arrows(arrows).scale(coeff)
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                raise ValueError("relations do not vanish on the module")

    def _act_arrows(self, arrows: Sequence[int]) -> Matrix:
        q = self.algebra.quiver
        src = q.arrows[arrows[0]].source
        m = Matrix.identity(self.algebra.field, self.dims[src])
        for k in arrows:
            m = self.arrow_mats[q.arrows[k].id] @ m
        return m

    def act_path(self, path) -> Matrix:
        """Matrix of the action of a path, from its source fiber to target."""
        src, arrows = path
        if not arrows:
            return Matrix.identity(self.algebra.field, self.dims[src])
        return self._act_arrows(arrows)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other):
        return (
            isinstance(other, Module)
            and self.algebra is other.algebra
            and self.dims == other.dims
            and all(
                self.arrow_mats[a.id] == other.arrow_mats[a.id]
                for a in self.algebra.quiver.arrows
            )
        )

    def __hash__(self):
        return hash((tuple(self.dims),))

    def __repr__(self):
        return f"Module(dims={self.dims})"


class ModuleMap:
    """A homomorphism of modules: one matrix per vertex, commuting with arrows."""

    def __init__(self, source: Module, target: Module, mats: Sequence[Matrix], check: bool = True):
        if source.algebra is not target.algebra:
            raise ValueError("source and target over different algebras")
        self.source = source
        self.target = target
        self.mats = list(mats)
        for v in range(source.algebra.num_vertices):
            m = self.mats[v]
            if (m.rows, m.cols) != (target.dims[v], source.dims[v]):
                raise ValueError(f"vertex {v}: matrix shape mismatch")
        if check and not self.commutes():
            raise ValueError("map does not commute with the arrow actions")

    def commutes(self) -> bool:
        for a in self.source.algebra.quiver.arrows:
            lhs = self.mats[a.target] @ self.source.arrow_mats[a.id]
            rhs = self.target.arrow_mats[a.id] @ self.mats[a.source]
            if lhs != rhs:
                return False
        return True

    @classmethod
    def zero(cls, source: Module, target: Module) -> "ModuleMap":
        f = source.algebra.field
        return cls(
            source,
            target,
            [
                Matrix.zeros(f, target.dims[v], source.dims[v])
                for v in range(source.algebra.num_vertices)
            ],
            check=False,
        )

    @classmethod
    def identity(cls, m: Module) -> "ModuleMap":
        f = m.algebra.field
        return cls(m, m, [Matrix.identity(f, d) for d in m.dims], check=False)

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self after first."""
        if first.target is not self.source and first.target.dims != self.source.dims:
            raise ValueError("maps not composable")
        return ModuleMap(
            first.source,
            self.target,
            [self.mats[v] @ first.mats[v] for v in range(len(self.mats))],
            check=False,
        )

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.source,
            self.target,
            [a + b for a, b in zip(self.mats, other.mats)],
            check=False,
        )

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.source,
            self.target,
            [a - b for a, b in zip(self.mats, other.mats)],
            check=False,
        )

    def __neg__(self) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [-a for a in self.mats], check=False)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(
            self.source, self.target, [m.scale(c) for m in self.mats], check=False
        )

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleMap)
            and self.source.dims == other.source.dims
            and self.target.dims == other.target.dims
            and self.mats == other.mats
        )

    def is_surjective(self) -> bool:
        return all(rank(m) == m.rows for m in self.mats)

    def is_injective(self) -> bool:
        return all(rank(m) == m.cols for m in self.mats)

    def is_isomorphism(self) -> bool:
        return all(m.rows == m.cols and rank(m) == m.rows for m in self.mats)


def direct_sum_modules(algebra, mods: Sequence[Module]) -> Tuple[Module, List[List[int]]]:
    """Degreewise direct sum; returns (module, per-summand fiber offsets)."""
    f = algebra.field
    nv = algebra.num_vertices
    dims = [sum(m.dims[v] for m in mods) for v in range(nv)]
    offsets: List[List[int]] = []
    acc = [0] * nv
    for m in mods:
        offsets.append(acc[:])
        for v in range(nv):
            acc[v] += m.dims[v]
    mats = {}
    for a in algebra.quiver.arrows:
        mats[a.id] = Matrix.block_diag(f, [m.arrow_mats[a.id] for m in mods])
        # block_diag loses the shape when all summands are empty at a vertex
        if (mats[a.id].rows, mats[a.id].cols) != (dims[a.target], dims[a.source]):
            mats[a.id] = Matrix.zeros(f, dims[a.target], dims[a.source])
    return Module(algebra, dims, mats, check=False), offsets


# -- Hom spaces --------------------------------------------------------------


def hom_space(m: Module, n: Module) -> List[ModuleMap]:
    """Basis of Hom_A(m, n), solved from the commutation linear system."""
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    alg = m.algebra
    f = alg.field
    nv = alg.num_vertices
    # unknowns: entries of f_v (n.dims[v] x m.dims[v]), vertex by vertex, row-major
    var_offset = []
    nvars = 0
    for v in range(nv):
        var_offset.append(nvars)
        nvars += n.dims[v] * m.dims[v]

    def var(v, r, c):
        return var_offset[v] + r * m.dims[v] + c

    rows: List[List] = []
    zero = f.zero()
    for a in alg.quiver.arrows:
        i, j = a.source, a.target
        ma, na = m.arrow_mats[a.id], n.arrow_mats[a.id]
        # (n_a @ f_i - f_j @ m_a)[r][c] = 0 for r < n.dims[j], c < m.dims[i]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [zero] * nvars
                for k in range(n.dims[i]):
                    if na.data[r][k] != 0:
                        row[var(i, k, c)] = f.add(row[var(i, k, c)], na.data[r][k])
                for k in range(m.dims[j]):
                    if ma.data[k][c] != 0:
                        row[var(j, r, k)] = f.sub(row[var(j, r, k)], ma.data[k][c])
                if any(x != 0 for x in row):
                    rows.append(row)
    sys_mat = Matrix(f, len(rows), nvars, rows)
    kb = kernel_basis(sys_mat)
    basis = []
    for col in range(kb.cols):
        vec = kb.col(col)
        mats = []
        for v in range(nv):
            d_n, d_m = n.dims[v], m.dims[v]
            mats.append(
                Matrix(
                    f,
                    d_n,
                    d_m,
                    [
                        vec[var_offset[v] + r * d_m : var_offset[v] + (r + 1) * d_m]
                        for r in range(d_n)
                    ],
                )
            )
        basis.append(ModuleMap(m, n, mats, check=False))
    return basis


def map_coordinates(f_map: ModuleMap, basis: List[ModuleMap]) -> Optional[List]:
    """Coordinates of a module map in a given Hom basis (None if outside)."""
    fld = f_map.source.algebra.field
    flat = lambda g: [x for mat in g.mats for row in mat.data for x in row]
    cols = [flat(b) for b in basis]
    target = flat(f_map)
    a = Matrix(fld, len(target), len(cols), [[c[i] for c in cols] for i in range(len(target))])
    return solve(a, target)


# -- projective sums and Yoneda-style maps ----------------------------------


def projsum_module(algebra, verts: Sequence[int]) -> Tuple[Module, List[List[int]]]:
    """The module Ae_{i1} + ... + Ae_{ik} with per-summand fiber offsets."""
    return direct_sum_modules(algebra, [algebra.projective(i) for i in verts])


def _trivial_path_pos(algebra, i: int) -> int:
    """Position of the class of e_i inside the fiber of Ae_i at vertex i."""
    for pos, k in enumerate(algebra.basis_by_pair.get((i, i), [])):
        if len(algebra.basis_path(k)[1]) == 0:
            return pos
    raise RuntimeError("idempotent path missing from basis")


def map_from_generator_images(
    algebra, verts: Sequence[int], target: Module, images: Sequence[Sequence]
) -> ModuleMap:
    """The unique map from the projective sum sending each generator e_{i_k}
    to the given vector in the target fiber at i_k."""
    src, offsets = projsum_module(algebra, verts)
    f = algebra.field
    nv = algebra.num_vertices
    mats = [Matrix.zeros(f, target.dims[v], src.dims[v]) for v in range(nv)]
    for k, i in enumerate(verts):
        img = list(images[k])
        if len(img) != target.dims[i]:
            raise ValueError(f"generator image {k} has wrong length")
        for v in range(nv):
            fiber = algebra.basis_by_pair.get((i, v), [])
            for pos, bidx in enumerate(fiber):
                path = algebra.basis_path(bidx)
                vec = target.act_path(path).apply(img)
                colidx = offsets[k][v] + pos
                for r in range(target.dims[v]):
                    mats[v].data[r][colidx] = vec[r]
    return ModuleMap(src, target, mats, check=False)


def generator_positions(algebra, verts: Sequence[int]) -> List[Tuple[int, int]]:
    """For each summand: (vertex, column index of its generator in that fiber)."""
    _, offsets = projsum_module(algebra, verts)
    return [
        (i, offsets[k][i] + _trivial_path_pos(algebra, i))
        for k, i in enumerate(verts)
    ]


def yoneda_coordinates(algebra, verts: Sequence[int], f_map: ModuleMap) -> List:
    """Generator images of a map out of a projective sum, concatenated.

    This is the coordinate vector in the canonical basis of
    Hom(projsum, target), of dimension sum_k dim(target at i_k).
    """
    out: List = []
    for i, col in generator_positions(algebra, verts):
        out.extend(f_map.mats[i].col(col))
    return out


def yoneda_dim(algebra, verts: Sequence[int], target: Module) -> int:
    return sum(target.dims[i] for i in verts)


# -- radical, top, covers ----------------------------------------------------


def radical_basis(m: Module) -> List[Matrix]:
    """Per vertex, a matrix whose columns span rad(M) = sum of arrow images."""
    alg = m.algebra
    f = alg.field
    out = []
    for v in range(alg.num_vertices):
        cols = [m.arrow_mats[a.id] for a in alg.quiver.arrows if a.target == v]
        stacked = Matrix.hstack(f, cols, rows=m.dims[v]) if cols else Matrix.zeros(f, m.dims[v], 0)
        out.append(column_space_basis(stacked))
    return out


def top_dims(m: Module) -> List[int]:
    rad = radical_basis(m)
    return [m.dims[v] - rad[v].cols for v in range(m.algebra.num_vertices)]


def projective_cover(m: Module) -> Tuple[Module, ModuleMap, List[int]]:
    """Minimal projective cover (P, P -> M, vertex list of the summands).

    P is the projective sum with one summand Ae_v per basis vector of the
    top of M at v; the map hits chosen lifts of a basis of the top.
    """
    if m.is_zero():
        raise ValueError("zero module has no projective cover here")
    alg = m.algebra
    f = alg.field
    rad = radical_basis(m)
    verts: List[int] = []
    images: List[List] = []
    for v in range(alg.num_vertices):
        span = rad[v]
        chosen: List[List] = []
        for e in range(m.dims[v]):
            cand = [f.one() if r == e else f.zero() for r in range(m.dims[v])]
            test = Matrix.hstack(
                f,
                [span]
                + [Matrix.column(f, c) for c in chosen]
                + [Matrix.column(f, cand)],
            )
            if rank(test) > span.cols + len(chosen):
                chosen.append(cand)
        for c in chosen:
            verts.append(v)
            images.append(c)
    cover = map_from_generator_images(alg, verts, m, images)
    return cover.source, cover, verts


def kernel_of(f_map: ModuleMap) -> Tuple[Module, ModuleMap]:
    """Kernel of a module map as a representation, with its inclusion."""
    alg = f_map.source.algebra
    fld = alg.field
    nv = alg.num_vertices
    kbs = [kernel_basis(f_map.mats[v]) for v in range(nv)]
    dims = [kbs[v].cols for v in range(nv)]
    mats = {}
    for a in alg.quiver.arrows:
        i, j = a.source, a.target
        moved = f_map.source.arrow_mats[a.id] @ kbs[i]
        x = solve_matrix(kbs[j], moved)
        if x is None:
            raise RuntimeError("kernel is not arrow-stable; inconsistent map")
        mats[a.id] = x
    ker = Module(alg, dims, mats, check=False)
    incl = ModuleMap(ker, f_map.source, kbs, check=False)
    return ker, incl


def syzygy(m: Module) -> Module:
    """Kernel of the projective cover of m."""
    _, cover, _ = projective_cover(m)
    return kernel_of(cover)[0]


def submodule_closure(m: Module, gens: Sequence[Matrix]) -> List[Matrix]:
    """Smallest per-vertex column spans containing gens and arrow-stable."""
    alg = m.algebra
    f = alg.field
    spans = [column_space_basis(g) for g in gens]
    changed = True
    while changed:
        changed = False
        for a in alg.quiver.arrows:
            i, j = a.source, a.target
            if spans[i].cols == 0:
                continue
            moved = m.arrow_mats[a.id] @ spans[i]
            combined = column_space_basis(Matrix.hstack(f, [spans[j], moved]))
            if combined.cols > spans[j].cols:
                spans[j] = combined
                changed = True
    return spans


def quotient_module(m: Module, sub: Sequence[Matrix]) -> Tuple[Module, ModuleMap]:
    """The quotient of m by an arrow-stable per-vertex span, with projection.

    Coset representatives are the first standard basis vectors outside the
    span, so the construction is deterministic.
    """
    alg = m.algebra
    f = alg.field
    nv = alg.num_vertices
    reps: List[Matrix] = []
    for v in range(nv):
        span = sub[v]
        chosen = []
        for c in range(m.dims[v]):
            e = Matrix.zeros(f, m.dims[v], 1)
            e.data[c][0] = f.one()
            cand = Matrix.hstack(f, [span, e])
            if rank(cand) > span.cols:
                span = cand
                chosen.append(c)
        rep = Matrix.zeros(f, m.dims[v], len(chosen))
        for k, c in enumerate(chosen):
            rep.data[c][k] = f.one()
        reps.append(rep)
    dims = [reps[v].cols for v in range(nv)]
    # projection: coordinates of each standard basis vector modulo the span
    projs: List[Matrix] = []
    for v in range(nv):
        basis = Matrix.hstack(f, [sub[v], reps[v]], rows=m.dims[v])
        sol = solve_matrix(basis, Matrix.identity(f, m.dims[v]))
        proj = Matrix(
            f,
            dims[v],
            m.dims[v],
            [sol.data[sub[v].cols + r] for r in range(dims[v])],
        )
        projs.append(proj)
    mats = {}
    for a in alg.quiver.arrows:
        i, j = a.source, a.target
        mats[a.id] = projs[j] @ (m.arrow_mats[a.id] @ reps[i])
    q = Module(alg, dims, mats, check=False)
    return q, ModuleMap(m, q, projs, check=False)


# -- isomorphism testing -----------------------------------------------------


def modules_isomorphic(
    m: Module, n: Module, search_bound: int = 2**16
) -> Optional[bool]:
    """Exhaustive invertibility search in Hom(m, n) over a finite field.

    Returns True/False when decided, None when the number of candidates
    p^dim Hom exceeds search_bound or the field is infinite.
    """
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    f = m.algebra.field
    basis = hom_space(m, n)
    if len(basis) == 0:
        return False
    if f.is_rational or f.p ** len(basis) > search_bound:
        return None
    p = f.p
    coeffs = [0] * len(basis)
    total = p ** len(basis)
    for idx in range(1, total):
        x = idx
        for k in range(len(basis)):
            coeffs[k] = x % p
            x //= p
        cand = None
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            term = basis[k].scale(c)
            cand = term if cand is None else cand + term
        if cand is not None and cand.is_isomorphism():
            return True
    return False


# -- resolutions and dimensions ---------------------------------------------


@dataclass
class PdResult:
    """Projective (or injective) dimension with cutoff semantics.

    kind is "finite", "at_least_cutoff", or "infinite_periodic"; the last
    carries a pair (a, b) with syzygy(a) isomorphic to syzygy(b), a < b,
    which proves the resolution never terminates.
    """

    kind: str
    value: Optional[int] = None
    witness: Optional[Tuple[int, int]] = None

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def le(self, n: int) -> bool:
        """Whether the dimension is known to be <= n."""
        return self.is_finite and self.value <= n

    def describe(self) -> str:
        if self.kind == "finite":
            return f"Finite({self.value})"
        if self.kind == "infinite_periodic":
            a, b = self.witness
            return f"AtLeastCutoff; periodic (Omega^{b} ~ Omega^{a})"
        return "AtLeastCutoff"

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.value is not None:
            out["value"] = self.value
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass
class ResolutionReport:
    """A minimal projective resolution, possibly truncated at the cutoff."""

    module: Module
    terms: List[Module]
    term_verts: List[List[int]]
    differentials: List[ModuleMap]  # d_k : terms[k] -> terms[k-1], k >= 1
    augmentation: Optional[ModuleMap]  # terms[0] -> module
    status: PdResult


def minimal_resolution(m: Module, cutoff: int, iso_bound: int = 2**16) -> ResolutionReport:
    """Iterate projective covers and syzygies up to the cutoff.

    Status is Finite(n) when the n-th syzygy vanishes with n <= cutoff; a
    pair of isomorphic syzygies upgrades AtLeastCutoff to a periodicity
    proof of infinite projective dimension.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if m.is_zero():
        return ResolutionReport(m, [], [], [], None, PdResult("finite", 0))
    terms: List[Module] = []
    term_verts: List[List[int]] = []
    diffs: List[ModuleMap] = []
    aug: Optional[ModuleMap] = None
    syzygies: List[Module] = [m]  # Omega^0, Omega^1, ...
    current = m
    prev_incl: Optional[ModuleMap] = None
    for k in range(cutoff + 1):
        proj, cover, verts = projective_cover(current)
        terms.append(proj)
        term_verts.append(verts)
        if k == 0:
            aug = cover
        else:
            diffs.append(prev_incl.compose(cover))
        ker, incl = kernel_of(cover)
        if ker.is_zero():
            return ResolutionReport(m, terms, term_verts, diffs, aug, PdResult("finite", k))
        for j, old in enumerate(syzygies):
            iso = modules_isomorphic(old, ker, iso_bound)
            if iso:
                return ResolutionReport(
                    m,
                    terms,
                    term_verts,
                    diffs,
                    aug,
                    PdResult("infinite_periodic", None, (j, k + 1)),
                )
        syzygies.append(ker)
        current = ker
        prev_incl = incl
    return ResolutionReport(m, terms, term_verts, diffs, aug, PdResult("at_least_cutoff"))


def proj_dim(m: Module, cutoff: int, iso_bound: int = 2**16) -> PdResult:
    return minimal_resolution(m, cutoff, iso_bound).status


def inj_dim(m: Module, cutoff: int, iso_bound: int = 2**16) -> PdResult:
    """Injective dimension, via the projective dimension of the dual over A^op."""
    return proj_dim(m.algebra.dual_module(m), cutoff, iso_bound)
