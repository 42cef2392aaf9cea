"""Small finitistic dimension estimation, generation-level certificates,
and the ghost-map oracle for projective dimension.

A ThickCertificate is a machine-checkable construction tree showing that a
complex can be assembled from shifted summands of the free module in a
bounded number of cone steps.  Every step stores the complex it produces,
so the verifier recomputes each construction bit-exactly and any tampering
is reported with the offending step index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .linalg import Matrix, solve_matrix
from .modules import (
    Module,
    ModuleMap,
    PdResult,
    minimal_resolution,
    proj_dim,
    projsum_module,
)
from .complexes import (
    ChainMap,
    Complex,
    Homotopy,
    cohomology,
    cohomology_dims,
    cone,
    direct_sum,
    induced_cohomology_zero,
    is_acyclic,
    null_homotopy,
    projsum_complex,
    shift,
    standardize_perfect,
    stalk_complex,
    stupid_truncate,
    zero_module,
)


from .invariants import ResolutionCutoffError


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured search-space budget."""


# -- module enumeration and finitistic dimension -----------------------------


def _dim_vectors(num_vertices: int, max_total: int) -> Iterator[Tuple[int, ...]]:
    rng = range(max_total + 1)
    for dims in itertools.product(rng, repeat=num_vertices):
        if sum(dims) <= max_total:
            yield dims


def enumerate_modules(
    algebra, max_total_dim: int, budget: int = 10**6
) -> Iterator[Module]:
    """Every representation with total dimension <= max_total_dim, exactly.

    Yields, in a fixed deterministic order, each tuple of arrow matrices
    over GF(p) satisfying the relations; no isomorphism deduplication.
    Raises BudgetExceededError when some dimension vector alone would
    require more than `budget` matrix-tuple candidates.
    """
    p = algebra.field.p
    if p is None:
        raise ValueError("module enumeration needs a finite field")
    for dims in _dim_vectors(algebra.num_vertices, max_total_dim):
        yield from _modules_with_dims(algebra, dims, budget)


def _modules_with_dims(algebra, dims, budget) -> Iterator[Module]:
    p = algebra.field.p
    arrows = algebra.quiver.arrows
    entries = sum(dims[a.target] * dims[a.source] for a in arrows)
    if p**entries > budget:
        raise BudgetExceededError(
            f"dimension vector {list(dims)}: search space {p}^{entries} "
            f"= {p**entries} exceeds budget {budget}"
        )
    shapes = [(dims[a.target], dims[a.source]) for a in arrows]
    for flat in itertools.product(range(p), repeat=entries):
        mats = {}
        pos = 0
        for a, (r, c) in zip(arrows, shapes):
            mats[a.id] = Matrix(
                algebra.field, r, c, [list(flat[pos + i * c : pos + (i + 1) * c]) for i in range(r)]
            )
            pos += r * c
        try:
            yield Module(algebra, list(dims), mats, check=True)
        except ValueError:
            continue


@dataclass
class FinDimReport:
    """Result of maximizing finite projective dimensions over a module search."""

    field_desc: str
    max_total_dim: int
    cutoff: int
    best: int
    witness_dims: Optional[List[int]]
    witness_resolution: Optional[List[List[int]]]
    modules_seen: int
    excluded: int  # AtLeastCutoff: membership in the finite-pd class undetermined
    excluded_periodic: int  # of those, proven infinite by a periodicity witness
    exhaustive: bool
    skipped_dim_vectors: List[List[int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "field": self.field_desc,
            "max_total_dim": self.max_total_dim,
            "cutoff": self.cutoff,
            "best": self.best,
            "witness_dims": self.witness_dims,
            "witness_resolution": self.witness_resolution,
            "modules_seen": self.modules_seen,
            "excluded": self.excluded,
            "excluded_periodic": self.excluded_periodic,
            "exhaustive": self.exhaustive,
            "skipped_dim_vectors": self.skipped_dim_vectors,
        }


def findim_estimate(
    algebra, max_total_dim: int, cutoff: int, budget: int = 10**6
) -> FinDimReport:
    """max{pd M : M enumerated, pd finite} — a certified lower bound for
    the supremum of finite projective dimensions, attained exactly when the
    true maximizer fits within the enumeration bound."""
    best = 0
    witness_dims: Optional[List[int]] = None
    witness_res: Optional[List[List[int]]] = None
    seen = 0
    excluded = 0
    excluded_periodic = 0
    exhaustive = True
    skipped: List[List[int]] = []
    for dims in _dim_vectors(algebra.num_vertices, max_total_dim):
        try:
            mods = list(_modules_with_dims(algebra, dims, budget))
        except BudgetExceededError:
            exhaustive = False
            skipped.append(list(dims))
            continue
        for m in mods:
            seen += 1
            res = minimal_resolution(m, cutoff)
            if res.status.is_finite:
                if witness_dims is None or res.status.value > best:
                    best = res.status.value
                    witness_dims = list(m.dims)
                    witness_res = [list(t.dims) for t in res.terms]
            else:
                excluded += 1
                if res.status.kind == "infinite_periodic":
                    excluded_periodic += 1
    return FinDimReport(
        field_desc=repr(algebra.field),
        max_total_dim=max_total_dim,
        cutoff=cutoff,
        best=best,
        witness_dims=witness_dims,
        witness_resolution=witness_res,
        modules_seen=seen,
        excluded=excluded,
        excluded_periodic=excluded_periodic,
        exhaustive=exhaustive,
        skipped_dim_vectors=skipped,
    )


def finitistic_generator(algebra, d: int) -> Complex:
    """The complex A + shift(A, d): the free module in degrees 0 and -d.

    Its self-Hom support is {-d, 0, d}, so its amplitude is exactly d.
    """
    ax = projsum_complex(algebra, tuple(range(algebra.num_vertices)), 0)
    if d == 0:
        return direct_sum(algebra, [ax, ax])
    return direct_sum(algebra, [ax, shift(ax, d)])


def regularity_check(algebra, max_total_dim: int, cutoff: int, budget: int = 10**6) -> dict:
    """Evidence for regularity up to the bound: does every enumerated
    module have finite projective dimension?  Includes the global-dimension
    estimate max{pd S_i} over the simples."""
    flagged = 0
    seen = 0
    exhaustive = True
    skipped: List[List[int]] = []
    for dims in _dim_vectors(algebra.num_vertices, max_total_dim):
        try:
            mods = list(_modules_with_dims(algebra, dims, budget))
        except BudgetExceededError:
            exhaustive = False
            skipped.append(list(dims))
            continue
        for m in mods:
            seen += 1
            if not proj_dim(m, cutoff).is_finite:
                flagged += 1
    gl = [proj_dim(algebra.simple(i), cutoff) for i in range(algebra.num_vertices)]
    if all(r.is_finite for r in gl):
        gl_estimate = {"kind": "finite", "value": max(r.value for r in gl)}
    else:
        gl_estimate = {"kind": "at_least_cutoff"}
    return {
        "max_total_dim": max_total_dim,
        "cutoff": cutoff,
        "modules_seen": seen,
        "flagged_infinite_or_undecided": flagged,
        "regular_up_to_bound": flagged == 0,
        "gl_dim_estimate": gl_estimate,
        "exhaustive": exhaustive,
        "skipped_dim_vectors": skipped,
    }


# -- certificate data model --------------------------------------------------


@dataclass
class LeafStep:
    summand: int
    shift: int
    obj: Complex = None
    level: int = 1


@dataclass
class SumStep:
    parts: List[int]
    obj: Complex = None
    level: int = 0


@dataclass
class ConeStep:
    u: int
    v: int
    map: ChainMap = None
    obj: Complex = None
    level: int = 0


@dataclass
class RetractStep:
    z: int
    p: ChainMap = None
    s: ChainMap = None
    h: Homotopy = None
    obj: Complex = None
    level: int = 0


CertStep = object  # any of the four step dataclasses


@dataclass
class ThickCertificate:
    """A construction tree witnessing generation level over the free module."""

    generator: str  # only "A" is supported
    steps: List[CertStep]
    level: int
    compare: ChainMap  # final object -> target, must be a quasi-isomorphism

    @property
    def final_object(self) -> Complex:
        return self.steps[-1].obj if self.steps else None


def leaf_object(algebra, summand: int, k: int) -> Complex:
    """shift^k of the projective Ae_i as a stalk: one term in degree -k."""
    return shift(projsum_complex(algebra, (summand,), 0), k)


@dataclass
class VerificationResult:
    ok: bool
    diagnostics: List[str]

    def __bool__(self):
        return self.ok


def verify_certificate(
    cert: ThickCertificate, target: Complex, algebra
) -> VerificationResult:
    """Recompute every step bit-exactly and check the level bookkeeping and
    the final comparison quasi-isomorphism.  Failures are diagnostics, not
    exceptions."""
    diags: List[str] = []

    def fail(msg: str) -> VerificationResult:
        diags.append(msg)
        return VerificationResult(False, diags)

    if cert.generator != "A":
        return fail(f"unsupported generator {cert.generator!r}")
    for idx, step in enumerate(cert.steps):
        if isinstance(step, LeafStep):
            if not (0 <= step.summand < algebra.num_vertices):
                return fail(f"step {idx}: leaf summand out of range")
            expect = leaf_object(algebra, step.summand, step.shift)
            if step.obj != expect:
                return fail(f"step {idx}: leaf object does not match its descriptor")
            if step.level != 1:
                return fail(f"step {idx}: leaf level must be 1")
        elif isinstance(step, SumStep):
            if any(not (0 <= j < idx) for j in step.parts):
                return fail(f"step {idx}: sum references a non-earlier step")
            expect = direct_sum(algebra, [cert.steps[j].obj for j in step.parts])
            if step.obj != expect:
                return fail(f"step {idx}: sum object does not recompute")
            want = max((cert.steps[j].level for j in step.parts), default=0)
            if step.level != want:
                return fail(f"step {idx}: sum level should be {want}")
        elif isinstance(step, ConeStep):
            if not (0 <= step.u < idx and 0 <= step.v < idx):
                return fail(f"step {idx}: cone references a non-earlier step")
            uo, vo = cert.steps[step.u].obj, cert.steps[step.v].obj
            if cert.steps[step.u].level != 1:
                return fail(f"step {idx}: cone source must have level 1")
            if step.map.source != uo or step.map.target != vo:
                return fail(f"step {idx}: cone map endpoints do not match")
            if not step.map.commutes():
                return fail(f"step {idx}: cone map is not a chain map")
            expect = cone(step.map)
            if step.obj != expect:
                return fail(f"step {idx}: cone object does not recompute")
            want = cert.steps[step.v].level + 1
            if step.level != want:
                return fail(f"step {idx}: cone level should be {want}")
        elif isinstance(step, RetractStep):
            if not (0 <= step.z < idx):
                return fail(f"step {idx}: retract references a non-earlier step")
            zo = cert.steps[step.z].obj
            if step.p.source != zo or step.p.target != step.obj:
                return fail(f"step {idx}: retract projection endpoints wrong")
            if step.s.source != step.obj or step.s.target != zo:
                return fail(f"step {idx}: retract section endpoints wrong")
            if not (step.p.commutes() and step.s.commutes()):
                return fail(f"step {idx}: retract maps are not chain maps")
            diff = step.p.compose(step.s) - ChainMap.identity(step.obj)
            if not step.h.certifies(diff):
                return fail(f"step {idx}: homotopy does not certify the retraction")
            if step.level != cert.steps[step.z].level:
                return fail(f"step {idx}: retract level must equal its source's")
        else:
            return fail(f"step {idx}: unknown step kind")
    if cert.steps:
        final = cert.steps[-1].obj
        want = cert.steps[-1].level
    else:
        final = Complex(algebra, {}, {}, proj_verts={}, check=False)
        want = 0
    if cert.level != want:
        return fail(f"declared level {cert.level} but construction gives {want}")
    if cert.compare.source != final:
        return fail("comparison map does not start at the final object")
    if cert.compare.target != target:
        return fail("comparison map does not end at the target")
    if not cert.compare.commutes():
        return fail("comparison map is not a chain map")
    if not is_acyclic(cone(cert.compare)):
        return fail("comparison map is not a quasi-isomorphism")
    diags.append(f"ok: level {cert.level}, {len(cert.steps)} steps")
    return VerificationResult(True, diags)


# -- certificate builders ----------------------------------------------------


def certificate_from_resolution(
    m: Module, cutoff: int, truncate_at: Optional[int] = None
) -> ThickCertificate:
    """Level pd+1 certificate for a module stalk, by iterated cones on the
    minimal resolution differentials.

    `truncate_at` deliberately stops the build early, producing an invalid
    certificate (a negative control for the verifier); leave it None for
    real use.
    """
    algebra = m.algebra
    target = stalk_complex(m, 0)
    if m.is_zero():
        compare = ChainMap.zero(Complex(algebra, {}, {}, proj_verts={}, check=False), target)
        return ThickCertificate("A", [], 0, compare)
    res = minimal_resolution(m, cutoff)
    if not res.status.is_finite:
        raise ResolutionCutoffError("pd not finite within cutoff")
    n = res.status.value
    stop = n if truncate_at is None else min(truncate_at, n)
    steps: List[CertStep] = []

    def add(step) -> int:
        steps.append(step)
        return len(steps) - 1

    def leaf_sum(verts: Sequence[int], k: int) -> int:
        idxs = []
        for i in verts:
            idxs.append(add(LeafStep(i, k, leaf_object(algebra, i, k), 1)))
        obj = direct_sum(algebra, [steps[j].obj for j in idxs])
        return add(SumStep(idxs, obj, 1))

    cur = leaf_sum(res.term_verts[0], 0)
    for k in range(1, stop + 1):
        u = leaf_sum(res.term_verts[k], k - 1)
        phi = ChainMap(
            steps[u].obj,
            steps[cur].obj,
            {-(k - 1): res.differentials[k - 1]},
            check=False,
        )
        obj = cone(phi)
        cur = add(ConeStep(u, cur, phi, obj, steps[cur].level + 1))
    compare = ChainMap(steps[cur].obj, target, {0: res.augmentation}, check=False)
    return ThickCertificate("A", steps, steps[cur].level, compare)


# -- minimal models of perfect complexes -------------------------------------


def _select(mat: Matrix, rows: List[int], cols: List[int]) -> Matrix:
    return Matrix(
        mat.field,
        len(rows),
        len(cols),
        [[mat.data[r][c] for c in cols] for r in rows],
    )


def _block_indices(algebra, verts: Sequence[int]) -> List[List[List[int]]]:
    """Per summand, per vertex: the coordinate indices of its block."""
    _, offsets = projsum_module(algebra, verts)
    out = []
    for k, i in enumerate(verts):
        p = algebra.projective(i)
        out.append(
            [
                list(range(offsets[k][v], offsets[k][v] + p.dims[v]))
                for v in range(algebra.num_vertices)
            ]
        )
    return out


def minimize_perfect(x: Complex) -> Tuple[Complex, ChainMap]:
    """Strip contractible two-term summands until every differential is
    radical-valued.  Returns (x_min, f) with f: x_min -> x a quasi-iso.

    A differential component between summands Ae_i -> Ae_i whose trivial-path
    coefficient is nonzero is an isomorphism on that pair; eliminating it is
    exact Gaussian elimination at the level of the algebra.
    """
    from .modules import _trivial_path_pos, generator_positions

    if x.proj_verts is None:
        x, pre = standardize_perfect(x)
    else:
        pre = ChainMap.identity(x)
    algebra = x.algebra
    fld = algebra.field
    nv = algebra.num_vertices
    cur = x
    total = pre
    while True:
        found = None
        for n in sorted(cur.diffs):
            sv = cur.proj_verts[n]
            tv = cur.proj_verts[n + 1]
            spos = generator_positions(algebra, sv)
            tpos = generator_positions(algebra, tv)
            d = cur.diff(n)
            for g, (i, colg) in enumerate(spos):
                for gp, (j, rowg) in enumerate(tpos):
                    if i == j and d.mats[i].data[rowg][colg] != 0:
                        found = (n, g, gp)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            break
        n, g, gp = found
        sv = cur.proj_verts[n]
        tv = cur.proj_verts[n + 1]
        sblocks = _block_indices(algebra, sv)
        tblocks = _block_indices(algebra, tv)
        keep_s = [k for k in range(len(sv)) if k != g]
        keep_t = [k for k in range(len(tv)) if k != gp]
        srows_a = sblocks[g]
        srows_b = [sum((sblocks[k][v] for k in keep_s), []) for v in range(nv)]
        trows_c = tblocks[gp]
        trows_d = [sum((tblocks[k][v] for k in keep_t), []) for v in range(nv)]
        d = cur.diff(n)
        alpha = [_select(d.mats[v], trows_c[v], srows_a[v]) for v in range(nv)]
        beta = [_select(d.mats[v], trows_c[v], srows_b[v]) for v in range(nv)]
        gamma = [_select(d.mats[v], trows_d[v], srows_a[v]) for v in range(nv)]
        delta = [_select(d.mats[v], trows_d[v], srows_b[v]) for v in range(nv)]
        ainv = []
        for v in range(nv):
            inv = solve_matrix(alpha[v], Matrix.identity(fld, alpha[v].rows))
            if inv is None:
                raise RuntimeError("expected invertible elimination block")
            ainv.append(inv)
        new_sv = tuple(sv[k] for k in keep_s)
        new_tv = tuple(tv[k] for k in keep_t)
        new_src, _ = projsum_module(algebra, new_sv)
        new_tgt, _ = projsum_module(algebra, new_tv)
        new_terms = dict(cur.terms)
        new_diffs = dict(cur.diffs)
        new_pv = dict(cur.proj_verts)
        new_terms[n] = new_src
        new_terms[n + 1] = new_tgt
        new_pv[n] = new_sv
        new_pv[n + 1] = new_tv
        new_diffs[n] = ModuleMap(
            new_src,
            new_tgt,
            [delta[v] - (gamma[v] @ (ainv[v] @ beta[v])) for v in range(nv)],
            check=False,
        )
        if n - 1 in cur.diffs:
            dm = cur.diff(n - 1)
            new_diffs[n - 1] = ModuleMap(
                dm.source,
                new_src,
                [_select(dm.mats[v], srows_b[v], list(range(dm.mats[v].cols))) for v in range(nv)],
                check=False,
            )
        if n + 1 in cur.diffs:
            dp = cur.diff(n + 1)
            new_diffs[n + 1] = ModuleMap(
                new_tgt,
                dp.target,
                [_select(dp.mats[v], list(range(dp.mats[v].rows)), trows_d[v]) for v in range(nv)],
                check=False,
            )
        nxt = Complex(algebra, new_terms, new_diffs, proj_verts=new_pv, check=False)
        # quasi-iso nxt -> cur: [-alpha^{-1} beta; id] at n, [0; id] at n+1
        comps: Dict[int, ModuleMap] = {}
        for deg in nxt.terms:
            if deg == n:
                mats = []
                for v in range(nv):
                    full = Matrix.zeros(fld, cur.term(n).dims[v], new_src.dims[v])
                    ab = -(ainv[v] @ beta[v])
                    for r_i, r in enumerate(srows_a[v]):
                        full.data[r] = ab.data[r_i][:]
                    for r_i, r in enumerate(srows_b[v]):
                        for c in range(new_src.dims[v]):
                            full.data[r][c] = fld.one() if c == r_i else fld.zero()
                    mats.append(full)
                comps[deg] = ModuleMap(new_src, cur.term(n), mats, check=False)
            elif deg == n + 1:
                mats = []
                for v in range(nv):
                    full = Matrix.zeros(fld, cur.term(n + 1).dims[v], new_tgt.dims[v])
                    for r_i, r in enumerate(trows_d[v]):
                        full.data[r][r_i] = fld.one()
                    mats.append(full)
                comps[deg] = ModuleMap(new_tgt, cur.term(n + 1), mats, check=False)
            else:
                comps[deg] = ModuleMap.identity(cur.term(deg))
        step_map = ChainMap(nxt, cur, comps, check=False)
        total = total.compose(step_map)
        cur = nxt
    return cur, total


def certificate_for_hom_p(y: Complex, d: int, cutoff: int) -> ThickCertificate:
    """Generation-level certificate for any perfect complex whose cohomology
    modules have finite projective dimension (each checked within the cutoff).

    The complex is replaced by its minimal model; the model's terms are
    peeled off bottom-up by cones on its own differentials, one level per
    nonzero term, with disconnected segments summed at level = max.  For
    cohomology spread over p degrees with projective dimensions <= d the
    resulting level is at most p + d.
    """
    algebra = y.algebra
    if is_acyclic(y):
        compare = ChainMap.zero(Complex(algebra, {}, {}, proj_verts={}, check=False), y)
        return ThickCertificate("A", [], 0, compare)
    for n in sorted(cohomology_dims(y)):
        status = proj_dim(cohomology(y, n), cutoff)
        if not status.is_finite:
            raise ResolutionCutoffError(
                f"cohomology in degree {n} has undecided projective dimension "
                f"within cutoff {cutoff}"
            )
    zmin, qiso = minimize_perfect(y)
    steps: List[CertStep] = []

    def add(step) -> int:
        steps.append(step)
        return len(steps) - 1

    def leaf_sum(verts: Sequence[int], k: int) -> Tuple[int, Complex]:
        idxs = [add(LeafStep(i, k, leaf_object(algebra, i, k), 1)) for i in verts]
        obj = direct_sum(algebra, [steps[j].obj for j in idxs])
        return add(SumStep(idxs, obj, 1)), obj

    # peel each contiguous run of nonzero terms from the top term downward
    support = zmin.support
    runs: List[List[int]] = []
    for deg in support:
        if runs and runs[-1][-1] == deg - 1:
            runs[-1].append(deg)
        else:
            runs.append([deg])
    run_tops: List[int] = []
    for run in runs:
        top = run[-1]
        cur, _ = leaf_sum(zmin.proj_verts[top], -top)
        for j in reversed(run[:-1]):
            u, uobj = leaf_sum(zmin.proj_verts[j], -(j + 1))
            phi = ChainMap(uobj, steps[cur].obj, {j + 1: zmin.diff(j)}, check=False)
            cur = add(ConeStep(u, cur, phi, cone(phi), steps[cur].level + 1))
        run_tops.append(cur)
    if len(run_tops) == 1:
        final = run_tops[0]
    else:
        obj = direct_sum(algebra, [steps[j].obj for j in run_tops])
        final = add(
            SumStep(run_tops, obj, max(steps[j].level for j in run_tops))
        )
    compare = ChainMap(steps[final].obj, y, qiso.comps, check=False)
    return ThickCertificate("A", steps, steps[final].level, compare)


# -- ghost maps --------------------------------------------------------------


def _resolution_complex(m: Module, terms_needed: int, cutoff: int) -> Complex:
    """The minimal resolution as a perfect complex in degrees -K..0,
    truncated to `terms_needed` terms when it does not stop.

    Built by direct cover iteration (never stopping early on periodicity)
    so the window maps below always see genuine resolution differentials.
    """
    from .modules import kernel_of, projective_cover

    algebra = m.algebra
    terms = {}
    diffs = {}
    pv = {}
    current = m
    prev_incl = None
    for k in range(terms_needed + 1):
        if current.is_zero():
            break
        proj, cover, verts = projective_cover(current)
        terms[-k] = proj
        pv[-k] = tuple(verts)
        if k > 0:
            diffs[-k] = prev_incl.compose(cover)
        ker, incl = kernel_of(cover)
        current = ker
        prev_incl = incl
    return Complex(algebra, terms, diffs, proj_verts=pv, check=False)


def _window(x: Complex, lo: int, hi: int) -> Complex:
    return stupid_truncate(stupid_truncate(x, "ge", lo), "le", hi)


def ghost_maps(
    m: Module, n: int, cutoff: int
) -> Tuple[List[ChainMap], ChainMap]:
    """The chain of n ghost maps between windows of the resolution of m,
    and their composite.

    phi_i maps the window [-n-i, -i+1] to the window [-n-i-1, -i] by the
    identity in every shared degree.  Each phi_i induces zero on cohomology
    (asserted), so the composite is a composite of n ghosts.
    """
    if n < 1:
        raise ValueError("need at least one ghost map")
    q = _resolution_complex(m, 2 * n + 1, cutoff)
    maps: List[ChainMap] = []
    for i in range(1, n + 1):
        src = _window(q, -n - i, -i + 1)
        tgt = _window(q, -n - i - 1, -i)
        comps = {
            deg: ModuleMap.identity(src.terms[deg])
            for deg in src.terms
            if deg in tgt.terms
        }
        phi = ChainMap(src, tgt, comps, check=False)
        if not phi.commutes():
            raise RuntimeError("ghost window map fails to be a chain map")
        if not induced_cohomology_zero(phi):
            raise RuntimeError("ghost map is not ghost")
        maps.append(phi)
    composite = maps[0]
    for phi in maps[1:]:
        composite = phi.compose(composite)
    return maps, composite


def ghost_pd_oracle(m: Module, n: int, cutoff: int) -> bool:
    """True iff proj_dim(m) <= n, decided without computing the dimension.

    The composite of n+1 ghost maps starting from the resolution window
    [-n-2, 0] is null-homotopic exactly when the projective dimension is
    at most n: for minimal resolutions a homotopy at the deepest shared
    degree would force an identity to factor through radical-valued maps.
    """
    if n < 1:
        raise ValueError("oracle needs n >= 1")
    if m.is_zero():
        return True
    _, composite = ghost_maps(m, n + 1, cutoff)
    return null_homotopy(composite) is not None
