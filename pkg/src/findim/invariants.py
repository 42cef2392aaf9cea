"""Derived invariants of perfect complexes: Hom-support, the diameter
h(x, y), hom^p membership, amplitude, and homological-finiteness probes.

For a perfect complex x and any bounded complex y, the degree-n maps
x -> shift(y, n) in the derived category are the n-th cohomology of the
Hom complex, and the support of that cohomology is finite.  All values
here are exact dimensions, never samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix
from .modules import (
    Module,
    minimal_resolution,
    projsum_module,
    quotient_module,
    radical_basis,
    submodule_closure,
)
from .complexes import (
    ChainMap,
    Complex,
    chain_map_basis,
    cone,
    direct_sum,
    hom_complex,
    projsum_complex,
    shift,
    stalk_complex,
)


class ResolutionCutoffError(ValueError):
    """A module failed to resolve within the requested cutoff."""


@dataclass
class HomSupport:
    """Nonzero values of degree n -> dim Hom(x, shift(y, n))."""

    dims: Dict[int, int] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.dims

    @property
    def min(self) -> Optional[int]:
        return min(self.dims) if self.dims else None

    @property
    def max(self) -> Optional[int]:
        return max(self.dims) if self.dims else None

    def to_json(self) -> dict:
        return {str(n): d for n, d in sorted(self.dims.items())}


def resolve_to_perfect(m: Module, cutoff: int) -> Complex:
    """The minimal resolution of m as a perfect complex in degrees -n..0.

    Quasi-isomorphic to m placed in degree 0.  Raises ResolutionCutoffError
    ("pd at least cutoff") when the resolution does not terminate.
    """
    if m.is_zero():
        return Complex(m.algebra, {}, {}, proj_verts={}, check=False)
    res = minimal_resolution(m, cutoff)
    if not res.status.is_finite:
        raise ResolutionCutoffError("pd at least cutoff")
    terms = {-k: res.terms[k] for k in range(len(res.terms))}
    diffs = {-k: res.differentials[k - 1] for k in range(1, len(res.terms))}
    pv = {-k: tuple(res.term_verts[k]) for k in range(len(res.terms))}
    return Complex(m.algebra, terms, diffs, proj_verts=pv, check=False)


def algebra_complex(algebra, degree: int = 0) -> Complex:
    """The free module of rank one as a stalk complex."""
    return projsum_complex(algebra, tuple(range(algebra.num_vertices)), degree)


def hom_support(x: Complex, y: Complex) -> HomSupport:
    """Degrees n with Hom(x, shift(y, n)) nonzero, with dimensions."""
    return HomSupport(hom_complex(x, y).cohomology_dims())


def h_value(x: Complex, y: Complex) -> int:
    """Diameter of the Hom-support: 0 when empty, else max - min + 1.

    This is the least n such that any two support degrees i, j satisfy
    |i - j| < n.
    """
    s = hom_support(x, y)
    if s.is_empty:
        return 0
    return s.max - s.min + 1


def in_hom_p(x: Complex, y: Complex, p: int) -> bool:
    return h_value(x, y) <= p


def amplitude(x: Complex) -> int:
    """Largest |n| with Hom(x, shift(x, n)) nonzero; 0 for empty support."""
    s = hom_support(x, x)
    if s.is_empty:
        return 0
    return max(abs(n) for n in s.dims)


def is_homologically_finite(
    x: Complex, probes: Sequence[Complex]
) -> Tuple[bool, List[int]]:
    """h(x, y) for each probe; finite for bounded complexes, so always True.

    The point of the report is the list of per-probe values.
    """
    values = [h_value(x, y) for y in probes]
    return True, values


def invariants_report(x: Complex, y: Optional[Complex] = None) -> dict:
    """JSON-ready summary {"support": .., "h": .., "amplitude": ..}."""
    other = y if y is not None else x
    return {
        "support": hom_support(x, other).to_json(),
        "h": h_value(x, other),
        "amplitude": amplitude(x),
    }


# -- seeded samplers ---------------------------------------------------------


def random_scalar(fld, rng: random.Random):
    if fld.p is not None:
        return rng.randrange(fld.p)
    return Fraction(rng.randint(-3, 3))


def random_nonzero_scalar(fld, rng: random.Random):
    if fld.p is not None:
        return rng.randrange(1, fld.p)
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))


def random_module(algebra, rng: random.Random, max_gens: int = 2) -> Module:
    """A random quotient of a small projective sum by a radical submodule."""
    nv = algebra.num_vertices
    verts = tuple(rng.randrange(nv) for _ in range(rng.randint(1, max_gens)))
    p, _ = projsum_module(algebra, verts)
    rad = radical_basis(p)
    gens = []
    for v in range(nv):
        cols = []
        for c in range(rad[v].cols):
            if rng.random() < 0.5:
                vec = [
                    algebra.field.mul(random_nonzero_scalar(algebra.field, rng), x)
                    for x in rad[v].col(c)
                ]
                cols.append(vec)
        if cols:
            gens.append(
                Matrix(
                    algebra.field,
                    p.dims[v],
                    len(cols),
                    [[col[r] for col in cols] for r in range(p.dims[v])],
                )
            )
        else:
            gens.append(Matrix.zeros(algebra.field, p.dims[v], 0))
    sub = submodule_closure(p, gens)
    q, _ = quotient_module(p, sub)
    return q


def random_chain_map(x: Complex, y: Complex, rng: random.Random) -> ChainMap:
    """A random field-linear combination of a chain-map basis (may be zero)."""
    basis = chain_map_basis(x, y)
    acc = ChainMap.zero(basis[0].source if basis else x, y)
    for b in basis:
        c = random_scalar(x.algebra.field, rng)
        if c != 0:
            acc = acc + b.scale(c)
    return acc


def random_perfect_complex(
    algebra,
    rng: random.Random,
    max_pieces: int = 3,
    max_shift: int = 3,
    cutoff: int = 8,
) -> Complex:
    """A seeded random perfect complex with spread-out support.

    Pieces are shifted resolutions of random finite-dimensional modules
    (falling back to projectives when a sample has infinite projective
    dimension); with probability one half, two pieces are glued by the
    cone of a random chain map instead of a plain direct sum.
    """
    pieces: List[Complex] = []
    for _ in range(rng.randint(1, max_pieces)):
        base = None
        for _attempt in range(4):
            m = random_module(algebra, rng)
            if m.is_zero():
                continue
            try:
                base = resolve_to_perfect(m, cutoff)
                break
            except ResolutionCutoffError:
                continue
        if base is None:
            base = projsum_complex(algebra, (rng.randrange(algebra.num_vertices),))
        pieces.append(shift(base, rng.randint(-max_shift, max_shift)))
    while len(pieces) > 1 and rng.random() < 0.5:
        a = pieces.pop(rng.randrange(len(pieces)))
        b = pieces.pop(rng.randrange(len(pieces)))
        f = random_chain_map(shift(b, -1), a, rng)
        pieces.append(cone(f))
    if len(pieces) == 1:
        return pieces[0]
    return direct_sum(algebra, pieces)
