"""Bounded cochain complexes of modules: shifts, cones, truncations,
cohomology, Hom complexes, and the null-homotopy decision procedure.

Sign conventions, fixed once for bit-exact tests:

* d_{shift(X,k)} = (-1)^k d_X, with shift(X,k)^n = X^{n+k};
* cone(f: X -> Y)^n = Y^n + X^{n+1} with differential [[d_Y, f], [0, -d_X]];
* the Hom complex differential is delta(g) = d_Y o g - (-1)^n g o d_X.

A complex may carry "projective descriptors": per degree, the tuple of
vertices (i1, ..., ik) exhibiting the term as the standard projective sum
Ae_{i1} + ... + Ae_{ik}.  All constructors propagate descriptors, and the
Hom machinery uses them to work in generator-image coordinates.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix, kernel_basis, rank, solve, solve_matrix, column_space_basis
from .modules import (
    Module,
    ModuleMap,
    direct_sum_modules,
    hom_space,
    map_coordinates,
    map_from_generator_images,
    projective_cover,
    projsum_module,
    yoneda_coordinates,
    yoneda_dim,
)


class NotPerfectError(ValueError):
    """A complex was required to consist of projective terms but does not."""


def zero_module(algebra) -> Module:
    return Module(algebra, [0] * algebra.num_vertices, {}, check=False)


class Complex:
    """Bounded cochain complex of modules with degree +1 differentials."""

    def __init__(
        self,
        algebra,
        terms: Dict[int, Module],
        diffs: Dict[int, ModuleMap],
        proj_verts: Optional[Dict[int, Tuple[int, ...]]] = None,
        check: bool = True,
    ):
        self.algebra = algebra
        self.terms = {n: m for n, m in terms.items() if not m.is_zero()}
        self.diffs = {
            n: d for n, d in diffs.items() if n in self.terms and n + 1 in self.terms
        }
        self.proj_verts = (
            {n: tuple(v) for n, v in proj_verts.items() if n in self.terms}
            if proj_verts is not None
            else None
        )
        if check:
            self._validate()

    def _validate(self):
        for n, d in self.diffs.items():
            if d.source.dims != self.term(n).dims or d.target.dims != self.term(n + 1).dims:
                raise ValueError(f"differential at degree {n} has wrong endpoints")
        for n in self.diffs:
            if n + 1 in self.diffs:
                if not self.diffs[n + 1].compose(self.diffs[n]).is_zero():
                    raise ValueError(f"d o d != 0 at degree {n}")
        if self.proj_verts is not None:
            for n in self.terms:
                if n not in self.proj_verts:
                    raise ValueError(f"missing projective descriptor at degree {n}")

    # -- access ------------------------------------------------------------

    def term(self, n: int) -> Module:
        return self.terms.get(n) or zero_module(self.algebra)

    def diff(self, n: int) -> ModuleMap:
        d = self.diffs.get(n)
        if d is None:
            d = ModuleMap.zero(self.term(n), self.term(n + 1))
        return d

    @property
    def support(self) -> List[int]:
        return sorted(self.terms)

    @property
    def is_zero_complex(self) -> bool:
        return not self.terms

    @property
    def min_deg(self) -> Optional[int]:
        return min(self.terms) if self.terms else None

    @property
    def max_deg(self) -> Optional[int]:
        return max(self.terms) if self.terms else None

    @property
    def is_perfect(self) -> bool:
        return self.proj_verts is not None

    def __eq__(self, other):
        if not isinstance(other, Complex) or self.algebra is not other.algebra:
            return False
        if set(self.terms) != set(other.terms):
            return False
        for n in self.terms:
            if self.terms[n] != other.terms[n]:
                return False
            if self.diff(n) != other.diff(n):
                return False
        return True

    def __repr__(self):
        if self.is_zero_complex:
            return "Complex(0)"
        dims = {n: self.terms[n].total_dim for n in self.support}
        return f"Complex({dims})"


class ChainMap:
    """Degreewise module maps commuting with the differentials."""

    def __init__(
        self,
        source: Complex,
        target: Complex,
        comps: Dict[int, ModuleMap],
        check: bool = True,
    ):
        self.source = source
        self.target = target
        self.comps = {
            n: f
            for n, f in comps.items()
            if n in source.terms and n in target.terms and not f.is_zero()
        }
        if check and not self.commutes():
            raise ValueError("components do not commute with the differentials")

    def comp(self, n: int) -> ModuleMap:
        f = self.comps.get(n)
        if f is None:
            f = ModuleMap.zero(self.source.term(n), self.target.term(n))
        return f

    def commutes(self) -> bool:
        degs = set(self.source.terms) | set(self.target.terms)
        for n in degs:
            lhs = self.target.diff(n).compose(self.comp(n))
            rhs = self.comp(n + 1).compose(self.source.diff(n))
            if not (lhs - rhs).is_zero():
                return False
        return True

    @classmethod
    def zero(cls, source: Complex, target: Complex) -> "ChainMap":
        return cls(source, target, {}, check=False)

    @classmethod
    def identity(cls, x: Complex) -> "ChainMap":
        return cls(x, x, {n: ModuleMap.identity(x.terms[n]) for n in x.terms}, check=False)

    def compose(self, first: "ChainMap") -> "ChainMap":
        degs = set(first.source.terms)
        return ChainMap(
            first.source,
            self.target,
            {n: self.comp(n).compose(first.comp(n)) for n in degs},
            check=False,
        )

    def __add__(self, other: "ChainMap") -> "ChainMap":
        degs = set(self.comps) | set(other.comps)
        return ChainMap(
            self.source,
            self.target,
            {n: self.comp(n) + other.comp(n) for n in degs},
            check=False,
        )

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        degs = set(self.comps) | set(other.comps)
        return ChainMap(
            self.source,
            self.target,
            {n: self.comp(n) - other.comp(n) for n in degs},
            check=False,
        )

    def scale(self, c) -> "ChainMap":
        return ChainMap(
            self.source,
            self.target,
            {n: f.scale(c) for n, f in self.comps.items()},
            check=False,
        )

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.comps.values())

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return False
        degs = set(self.comps) | set(other.comps)
        return all((self.comp(n) - other.comp(n)).is_zero() for n in degs)


class Homotopy:
    """Degree -1 maps h^n : X^n -> Y^{n-1} witnessing a null-homotopy."""

    def __init__(self, source: Complex, target: Complex, maps: Dict[int, ModuleMap]):
        self.source = source
        self.target = target
        self.maps = dict(maps)

    def map_at(self, n: int) -> ModuleMap:
        h = self.maps.get(n)
        if h is None:
            h = ModuleMap.zero(self.source.term(n), self.target.term(n - 1))
        return h

    def certifies(self, f: ChainMap) -> bool:
        """Whether f = d_Y o h + h o d_X degreewise."""
        degs = set(self.source.terms) | set(self.target.terms) | set(f.comps)
        for n in degs:
            built = self.target.diff(n - 1).compose(self.map_at(n)) + self.map_at(
                n + 1
            ).compose(self.source.diff(n))
            if not (f.comp(n) - built).is_zero():
                return False
        return True


# -- constructors ------------------------------------------------------------


def stalk_complex(m: Module, degree: int = 0, verts: Optional[Sequence[int]] = None) -> Complex:
    pv = {degree: tuple(verts)} if verts is not None else None
    return Complex(m.algebra, {degree: m}, {}, proj_verts=pv, check=False)


def projsum_complex(algebra, verts: Sequence[int], degree: int = 0) -> Complex:
    mod, _ = projsum_module(algebra, verts)
    return stalk_complex(mod, degree, verts=tuple(verts))


def shift(x: Complex, k: int) -> Complex:
    """shift(x, k)^n = x^{n+k} with differentials scaled by (-1)^k."""
    if k == 0:
        return x
    sign = 1 if k % 2 == 0 else -1
    terms = {n - k: m for n, m in x.terms.items()}
    diffs = {}
    for n, d in x.diffs.items():
        diffs[n - k] = d if sign == 1 else d.scale(-1)
    pv = {n - k: v for n, v in x.proj_verts.items()} if x.proj_verts is not None else None
    return Complex(x.algebra, terms, diffs, proj_verts=pv, check=False)


def shift_chain_map(f: ChainMap, k: int) -> ChainMap:
    comps = {n - k: g for n, g in f.comps.items()}
    return ChainMap(shift(f.source, k), shift(f.target, k), comps, check=False)


def direct_sum(algebra, xs: Sequence[Complex]) -> Complex:
    """Degreewise direct sum; the empty sum is the zero complex."""
    for x in xs:
        if x.algebra is not algebra:
            raise ValueError("complexes over different algebras")
    degs = sorted({n for x in xs for n in x.terms})
    terms: Dict[int, Module] = {}
    diffs: Dict[int, ModuleMap] = {}
    for n in degs:
        terms[n], _ = direct_sum_modules(algebra, [x.term(n) for x in xs])
    for n in degs:
        if n + 1 in terms:
            src, tgt = terms[n], terms[n + 1]
            mats = [
                Matrix.block_diag(algebra.field, [x.diff(n).mats[v] for x in xs])
                for v in range(algebra.num_vertices)
            ]
            for v in range(algebra.num_vertices):
                if (mats[v].rows, mats[v].cols) != (tgt.dims[v], src.dims[v]):
                    mats[v] = Matrix.zeros(algebra.field, tgt.dims[v], src.dims[v])
            diffs[n] = ModuleMap(src, tgt, mats, check=False)
    pv = None
    if all(x.proj_verts is not None for x in xs):
        pv = {n: sum((tuple(x.proj_verts.get(n, ())) for x in xs), ()) for n in degs}
    return Complex(algebra, terms, diffs, proj_verts=pv, check=False)


def cone_with_triangle(f: ChainMap) -> Tuple[Complex, ChainMap, ChainMap]:
    """The mapping cone together with the triangle maps Y -> cone -> shift(X,1).

    cone^n = Y^n + X^{n+1}, differential [[d_Y, f^{n+1}], [0, -d_X^{n+1}]].
    """
    x, y = f.source, f.target
    alg = x.algebra
    fld = alg.field
    nv = alg.num_vertices
    degs = sorted(set(y.terms) | {n - 1 for n in x.terms})
    terms: Dict[int, Module] = {}
    for n in degs:
        terms[n], _ = direct_sum_modules(alg, [y.term(n), x.term(n + 1)])
    diffs: Dict[int, ModuleMap] = {}
    for n in degs:
        if n + 1 not in terms:
            continue
        src, tgt = terms[n], terms[n + 1]
        dy = y.diff(n)
        dx = x.diff(n + 1)
        fc = f.comp(n + 1)
        mats = []
        for v in range(nv):
            top = Matrix.hstack(fld, [dy.mats[v], fc.mats[v]], rows=dy.mats[v].rows)
            bot = Matrix.hstack(
                fld,
                [Matrix.zeros(fld, dx.mats[v].rows, dy.mats[v].cols), -dx.mats[v]],
                rows=dx.mats[v].rows,
            )
            mats.append(Matrix.vstack(fld, [top, bot], cols=src.dims[v]))
        diffs[n] = ModuleMap(src, tgt, mats, check=False)
    pv = None
    if x.proj_verts is not None and y.proj_verts is not None:
        pv = {
            n: tuple(y.proj_verts.get(n, ())) + tuple(x.proj_verts.get(n + 1, ()))
            for n in degs
        }
    c = Complex(alg, terms, diffs, proj_verts=pv, check=False)
    # inclusion of y and projection onto shift(x, 1)
    incl_comps = {}
    for n in y.terms:
        tgt = c.term(n)
        mats = []
        for v in range(nv):
            m = Matrix.zeros(fld, tgt.dims[v], y.term(n).dims[v])
            for i in range(y.term(n).dims[v]):
                m.data[i][i] = fld.one()
            mats.append(m)
        incl_comps[n] = ModuleMap(y.term(n), tgt, mats, check=False)
    incl = ChainMap(y, c, incl_comps, check=False)
    sx = shift(x, 1)
    proj_comps = {}
    for n in sx.terms:
        src = c.term(n)
        mats = []
        for v in range(nv):
            yd = y.term(n).dims[v]
            m = Matrix.zeros(fld, sx.term(n).dims[v], src.dims[v])
            for i in range(sx.term(n).dims[v]):
                m.data[i][yd + i] = fld.one()
            mats.append(m)
        proj_comps[n] = ModuleMap(src, sx.term(n), mats, check=False)
    proj = ChainMap(c, sx, proj_comps, check=False)
    return c, incl, proj


def cone(f: ChainMap) -> Complex:
    return cone_with_triangle(f)[0]


def stupid_truncate(x: Complex, mode: str, k: int) -> Complex:
    """Brutal truncation keeping degrees <= k ('le') or >= k ('ge')."""
    if mode not in ("le", "ge"):
        raise ValueError("mode must be 'le' or 'ge'")
    keep = (lambda n: n <= k) if mode == "le" else (lambda n: n >= k)
    terms = {n: m for n, m in x.terms.items() if keep(n)}
    diffs = {n: d for n, d in x.diffs.items() if keep(n) and keep(n + 1)}
    pv = (
        {n: v for n, v in x.proj_verts.items() if keep(n)}
        if x.proj_verts is not None
        else None
    )
    return Complex(x.algebra, terms, diffs, proj_verts=pv, check=False)


# -- cohomology --------------------------------------------------------------


def cohomology_dims(x: Complex) -> Dict[int, int]:
    """Total dimension of H^n for every degree, computed vertexwise."""
    out: Dict[int, int] = {}
    for n in x.support:
        total = 0
        for v in range(x.algebra.num_vertices):
            dn = x.diff(n).mats[v]
            dprev = x.diff(n - 1).mats[v]
            total += (dn.cols - rank(dn)) - rank(dprev)
        if total:
            out[n] = total
    return out


def is_acyclic(x: Complex) -> bool:
    return not cohomology_dims(x)


def induced_cohomology_zero(f: ChainMap) -> bool:
    """Whether a chain map induces zero on all cohomology (a ghost map)."""
    from .linalg import in_span

    x, y = f.source, f.target
    for n in sorted(set(x.terms)):
        for v in range(x.algebra.num_vertices):
            z = kernel_basis(x.diff(n).mats[v])
            if z.cols == 0:
                continue
            bound = column_space_basis(y.diff(n - 1).mats[v])
            fv = f.comp(n).mats[v]
            for c in range(z.cols):
                if not in_span(bound, fv.apply(z.col(c))):
                    return False
    return True


def cohomology(x: Complex, n: int) -> Module:
    """H^n(x) = ker d^n / im d^{n-1} as a representation."""
    alg = x.algebra
    fld = alg.field
    nv = alg.num_vertices
    term = x.term(n)
    cycles = []  # per vertex: basis of ker d^n
    bounds = []  # per vertex: basis of im d^{n-1}
    reps = []  # per vertex: chosen coset representatives (columns in the term)
    for v in range(nv):
        z = kernel_basis(x.diff(n).mats[v])
        b = column_space_basis(x.diff(n - 1).mats[v])
        chosen_cols = []
        span = b
        for c in range(z.cols):
            cand = Matrix.hstack(fld, [span, Matrix(fld, z.rows, 1, [[z.data[r][c]] for r in range(z.rows)])])
            if rank(cand) > span.cols:
                span = cand
                chosen_cols.append(c)
        rep = Matrix(
            fld,
            term.dims[v],
            len(chosen_cols),
            [[z.data[r][c] for c in chosen_cols] for r in range(term.dims[v])],
        )
        cycles.append(z)
        bounds.append(b)
        reps.append(rep)
    dims = [reps[v].cols for v in range(nv)]
    mats = {}
    for a in alg.quiver.arrows:
        i, j = a.source, a.target
        moved = term.arrow_mats[a.id] @ reps[i]
        # express each column modulo boundaries: solve [bounds | reps] and
        # keep the reps part
        basis = Matrix.hstack(fld, [bounds[j], reps[j]], rows=term.dims[j])
        sol = solve_matrix(basis, moved)
        if sol is None:
            raise RuntimeError("arrow action does not preserve cycles")
        mat = Matrix(
            fld,
            dims[j],
            dims[i],
            [sol.data[bounds[j].cols + r] for r in range(dims[j])],
        )
        mats[a.id] = mat
    return Module(alg, dims, mats, check=False)


# -- recognizing complexes of projectives ------------------------------------


def standardize_perfect(x: Complex) -> Tuple[Complex, ChainMap]:
    """Exhibit every term as a standard projective sum.

    Returns (x_std, iso) where x_std carries projective descriptors and iso
    is a degreewise isomorphism x_std -> x.  Raises NotPerfectError when a
    term is not projective.
    """
    if x.proj_verts is not None:
        return x, ChainMap.identity(x)
    alg = x.algebra
    fld = alg.field
    isos: Dict[int, ModuleMap] = {}
    verts: Dict[int, Tuple[int, ...]] = {}
    for n, m in x.terms.items():
        p, cover, vlist = projective_cover(m)
        if p.dims != m.dims or not cover.is_isomorphism():
            raise NotPerfectError(f"term in degree {n} is not projective")
        isos[n] = cover
        verts[n] = tuple(vlist)
    terms = {n: isos[n].source for n in x.terms}
    diffs: Dict[int, ModuleMap] = {}
    for n in x.diffs:
        inv_mats = [
            solve_matrix(isos[n + 1].mats[v], Matrix.identity(fld, isos[n + 1].mats[v].rows))
            for v in range(alg.num_vertices)
        ]
        inv = ModuleMap(x.term(n + 1), terms[n + 1], inv_mats, check=False)
        diffs[n] = inv.compose(x.diff(n).compose(isos[n]))
    std = Complex(alg, terms, diffs, proj_verts=verts, check=False)
    iso = ChainMap(std, x, isos, check=False)
    return std, iso


# -- Hom complexes -----------------------------------------------------------


class HomComplex:
    """The Hom complex of a perfect complex x into any complex y.

    Degree n is the sum over k of Hom_A(x^k, y^{k+n}), coordinatized by
    generator images of the projective sums x^k.  H^n has the dimension of
    the degree-n morphisms x -> shift(y, n) in the homotopy category.
    """

    def __init__(self, x: Complex, y: Complex):
        if x.proj_verts is None:
            x, _ = standardize_perfect(x)
        self.x = x
        self.y = y
        self.algebra = x.algebra
        self.field = x.algebra.field
        self._blocks: Dict[int, List[Tuple[int, int]]] = {}  # n -> [(k, dim)]
        if x.terms and y.terms:
            lo = y.min_deg - x.max_deg
            hi = y.max_deg - x.min_deg
        else:
            lo, hi = 0, -1
        self._lo, self._hi = lo, hi
        for n in range(lo, hi + 1):
            blocks = []
            for k in x.support:
                if k + n in y.terms:
                    d = yoneda_dim(self.algebra, x.proj_verts[k], y.term(k + n))
                    blocks.append((k, d))
            self._blocks[n] = blocks
        self._diff_cache: Dict[int, Matrix] = {}

    def dim(self, n: int) -> int:
        return sum(d for _, d in self._blocks.get(n, []))

    @property
    def degrees(self) -> List[int]:
        return [n for n in range(self._lo, self._hi + 1) if self.dim(n) > 0]

    # coordinates <-> collections of per-degree module maps

    def decode(self, n: int, coords: Sequence) -> Dict[int, ModuleMap]:
        out: Dict[int, ModuleMap] = {}
        pos = 0
        for k, d in self._blocks.get(n, []):
            verts = self.x.proj_verts[k]
            tgt = self.y.term(k + n)
            images = []
            for i in verts:
                images.append(coords[pos : pos + tgt.dims[i]])
                pos += tgt.dims[i]
            out[k] = map_from_generator_images(self.algebra, verts, tgt, images)
        return out

    def encode(self, n: int, maps: Dict[int, ModuleMap]) -> List:
        coords: List = []
        for k, d in self._blocks.get(n, []):
            f = maps.get(k)
            if f is None:
                coords.extend([self.field.zero()] * d)
            else:
                coords.extend(
                    yoneda_coordinates(self.algebra, self.x.proj_verts[k], f)
                )
        return coords

    def diff_matrix(self, n: int) -> Matrix:
        """Matrix of delta(g) = d_y o g - (-1)^n g o d_x from degree n."""
        if n in self._diff_cache:
            return self._diff_cache[n]
        rows = self.dim(n + 1)
        cols = self.dim(n)
        out = Matrix.zeros(self.field, rows, cols)
        sign = 1 if n % 2 == 0 else -1
        col = 0
        for k, d in self._blocks.get(n, []):
            for j in range(d):
                unit = [self.field.zero()] * d
                unit[j] = self.field.one()
                # a single-block map g^k : x^k -> y^{k+n}
                partial = self.decode_block(n, k, unit)
                image: Dict[int, ModuleMap] = {}
                up = self.y.diff(k + n).compose(partial)
                if not up.is_zero():
                    image[k] = up
                back = partial.compose(self.x.diff(k - 1))
                if not back.is_zero():
                    term = back if sign == -1 else back.scale(-1)
                    # delta(g)^{k-1} = -(-1)^n g^k o d_x^{k-1}
                    image[k - 1] = image.get(k - 1, ModuleMap.zero(back.source, back.target)) + term
                vec = self.encode(n + 1, image)
                for r in range(rows):
                    out.data[r][col] = vec[r]
                col += 1
        self._diff_cache[n] = out
        return out

    def decode_block(self, n: int, k: int, coords: Sequence) -> ModuleMap:
        verts = self.x.proj_verts[k]
        tgt = self.y.term(k + n)
        images = []
        pos = 0
        for i in verts:
            images.append(list(coords[pos : pos + tgt.dims[i]]))
            pos += tgt.dims[i]
        return map_from_generator_images(self.algebra, verts, tgt, images)

    def cohomology_dim(self, n: int) -> int:
        dn = self.diff_matrix(n)
        dprev = self.diff_matrix(n - 1)
        return (dn.cols - rank(dn)) - rank(dprev)

    def cohomology_dims(self) -> Dict[int, int]:
        out = {}
        for n in range(self._lo, self._hi + 1):
            d = self.cohomology_dim(n)
            if d:
                out[n] = d
        return out


def hom_complex(x: Complex, y: Complex) -> HomComplex:
    """Hom complex; requires (or recognizes) projective terms in x."""
    return HomComplex(x, y)


def chain_map_basis(x: Complex, y: Complex) -> List[ChainMap]:
    """Basis of the space of chain maps x -> y (degree-0 cycles of Hom)."""
    hc = HomComplex(x, y)
    xs = hc.x  # standardized
    kb = kernel_basis(hc.diff_matrix(0))
    out = []
    for c in range(kb.cols):
        comps = hc.decode(0, kb.col(c))
        out.append(ChainMap(xs, y, comps, check=False))
    return out


# -- null-homotopy -----------------------------------------------------------


class _HomCoords:
    """Coordinate system on Hom_A(src, tgt), Yoneda-style when possible."""

    def __init__(self, algebra, src: Module, tgt: Module, verts: Optional[Tuple[int, ...]]):
        self.algebra = algebra
        self.src = src
        self.tgt = tgt
        self.verts = verts
        if verts is not None:
            self.dim = yoneda_dim(algebra, verts, tgt)
            self.basis = None
        else:
            self.basis = hom_space(src, tgt)
            self.dim = len(self.basis)

    def to_map(self, coords: Sequence) -> ModuleMap:
        if self.verts is not None:
            images = []
            pos = 0
            for i in self.verts:
                images.append(list(coords[pos : pos + self.tgt.dims[i]]))
                pos += self.tgt.dims[i]
            return map_from_generator_images(self.algebra, self.verts, self.tgt, images)
        acc = ModuleMap.zero(self.src, self.tgt)
        for c, b in zip(coords, self.basis):
            if c != 0:
                acc = acc + b.scale(c)
        return acc

    def coords_of(self, f: ModuleMap) -> Optional[List]:
        if self.verts is not None:
            return yoneda_coordinates(self.algebra, self.verts, f)
        return map_coordinates(f, self.basis)


def null_homotopy(f: ChainMap) -> Optional[Homotopy]:
    """Solve f = d_Y o h + h o d_X exactly; a witness or None.

    Free variables of the linear system are pinned to zero, so the witness
    is deterministic.
    """
    x, y = f.source, f.target
    alg = x.algebra
    fld = alg.field
    degs = sorted(set(x.terms) | set(y.terms) | set(f.comps))
    if not degs:
        return Homotopy(x, y, {})
    lo, hi = degs[0] - 1, degs[-1] + 1

    def xverts(n):
        return x.proj_verts.get(n) if x.proj_verts is not None else None

    # unknown blocks: h^n : x^n -> y^{n-1}
    h_sys: Dict[int, _HomCoords] = {}
    offsets: Dict[int, int] = {}
    nvars = 0
    for n in range(lo, hi + 1):
        if x.term(n).is_zero() or y.term(n - 1).is_zero():
            continue
        sysn = _HomCoords(alg, x.term(n), y.term(n - 1), xverts(n))
        if sysn.dim == 0:
            continue
        h_sys[n] = sysn
        offsets[n] = nvars
        nvars += sysn.dim

    # equation blocks: coordinates in Hom(x^n, y^n)
    eq_sys: Dict[int, _HomCoords] = {}
    eq_offsets: Dict[int, int] = {}
    neqs = 0
    for n in range(lo, hi + 1):
        if x.term(n).is_zero() or y.term(n).is_zero():
            if not f.comp(n).is_zero():
                return None
            continue
        sysn = _HomCoords(alg, x.term(n), y.term(n), xverts(n))
        eq_sys[n] = sysn
        eq_offsets[n] = neqs
        neqs += sysn.dim

    big = Matrix.zeros(fld, neqs, nvars)
    rhs: List = [fld.zero()] * neqs
    for n, sysn in eq_sys.items():
        coords = sysn.coords_of(f.comp(n))
        if coords is None:
            return None
        rhs[eq_offsets[n] : eq_offsets[n] + sysn.dim] = coords
    for n, hs in h_sys.items():
        for j in range(hs.dim):
            unit = [fld.zero()] * hs.dim
            unit[j] = fld.one()
            hmap = hs.to_map(unit)
            # contribution d_Y^{n-1} o h^n to equation n
            if n in eq_sys:
                up = y.diff(n - 1).compose(hmap)
                c_up = eq_sys[n].coords_of(up)
                if c_up is None:
                    return None
                for r, val in enumerate(c_up):
                    big.data[eq_offsets[n] + r][offsets[n] + j] = val
            # contribution h^n o d_X^{n-1} to equation n-1
            if n - 1 in eq_sys:
                back = hmap.compose(x.diff(n - 1))
                c_back = eq_sys[n - 1].coords_of(back)
                if c_back is None:
                    return None
                for r, val in enumerate(c_back):
                    prev = big.data[eq_offsets[n - 1] + r][offsets[n] + j]
                    big.data[eq_offsets[n - 1] + r][offsets[n] + j] = fld.add(prev, val)
    sol = solve(big, rhs)
    if sol is None:
        return None
    maps: Dict[int, ModuleMap] = {}
    for n, hs in h_sys.items():
        block = sol[offsets[n] : offsets[n] + hs.dim]
        if any(c != 0 for c in block):
            maps[n] = hs.to_map(block)
    h = Homotopy(x, y, maps)
    if not h.certifies(f):
        raise RuntimeError("homotopy solver produced an invalid witness")
    return h
