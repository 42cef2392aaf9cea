"""JSON interchange for algebras, modules, complexes, and certificates.

Schemas (all exact; rationals are encoded as "a/b" strings, GF(p) scalars
as plain ints):

* algebra:     {"field": "Q" | {"gfp": p}, "vertices": v,
                "arrows": [{"id": s, "from": i, "to": j}],
                "relations": [[{"coeff": c, "path": [arrow ids]}, ...]],
                "max_len": n}
* module:      {"dim_vector": [...], "arrows": {arrow-id: [[row-major]]}}
* complex:     {"terms": {degree: module | {"proj": [multiplicities]}},
                "differentials": {degree: [per-vertex matrices]}}
* chain map:   {degree: [per-vertex matrices]}     (homotopies likewise)
* certificate: {"generator": "A", "level": n, "steps": [...],
                "compare": {"map": chain-map}}
  where each step is one of
    {"leaf": {"summand": i, "shift": k}, "object": complex}
    {"sum": [indices], "object": complex}
    {"cone": {"u": i, "v": j, "map": chain-map}, "object": complex}
    {"retract": {"z": i, "p": m, "s": m, "h": m}, "object": complex}

`dumps` is canonical (sorted keys, fixed separators), so identical data
always produces byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List

from .linalg import GF, QQ, Field, Matrix
from .algebras import FDAlgebra, Quiver, Relation, build_algebra
from .modules import Module, ModuleMap, projsum_module
from .complexes import ChainMap, Complex, Homotopy
from .certificates import (
    ConeStep,
    LeafStep,
    RetractStep,
    SumStep,
    ThickCertificate,
)


class ParseError(ValueError):
    """An input document does not match its schema."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- scalars and matrices ----------------------------------------------------


def scalar_to_json(field: Field, x):
    if field.is_rational:
        return str(x) if x.denominator != 1 else str(x.numerator)
    return x


def scalar_from_json(field: Field, v):
    try:
        return field.coerce(v)
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad scalar {v!r}: {e}") from e


def matrix_to_json(m: Matrix) -> List[List]:
    return [[scalar_to_json(m.field, x) for x in row] for row in m.data]


def matrix_from_json(field: Field, rows: int, cols: int, data) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"expected {rows} matrix rows, got {data!r}")
    try:
        return Matrix(field, rows, cols, [[scalar_from_json(field, x) for x in r] for r in data])
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- fields and algebras -----------------------------------------------------


def field_to_json(field: Field):
    return "Q" if field.is_rational else {"gfp": field.p}


def field_from_json(doc) -> Field:
    if doc == "Q":
        return QQ
    if isinstance(doc, dict) and "gfp" in doc:
        try:
            return GF(int(doc["gfp"]))
        except ValueError as e:
            raise ParseError(str(e)) from e
    raise ParseError(f"bad field descriptor {doc!r}")


def algebra_to_json(a: FDAlgebra) -> dict:
    return {
        "field": field_to_json(a.field),
        "vertices": a.num_vertices,
        "arrows": [
            {"id": ar.id, "from": ar.source, "to": ar.target} for ar in a.quiver.arrows
        ],
        "relations": [
            [
                {
                    "coeff": scalar_to_json(a.field, coeff),
                    "path": [a.quiver.arrows[k].id for k in arrows],
                }
                for coeff, arrows in rel.terms
            ]
            for rel in a.relations
        ],
        "max_len": a.max_len,
    }


def algebra_from_json(doc: dict) -> FDAlgebra:
    try:
        field = field_from_json(doc["field"])
        quiver = Quiver(
            int(doc["vertices"]),
            [(ar["id"], int(ar["from"]), int(ar["to"])) for ar in doc.get("arrows", [])],
        )
        relations = [
            Relation(
                quiver,
                [
                    (scalar_from_json(field, t["coeff"]), list(t["path"]))
                    for t in rel
                ],
            )
            for rel in doc.get("relations", [])
        ]
        return build_algebra(quiver, relations, field, int(doc["max_len"]))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad algebra document: {e}") from e


# -- modules -----------------------------------------------------------------


def module_to_json(m: Module) -> dict:
    return {
        "dim_vector": list(m.dims),
        "arrows": {
            a.id: matrix_to_json(m.arrow_mats[a.id]) for a in m.algebra.quiver.arrows
        },
    }


def module_from_json(algebra: FDAlgebra, doc: dict) -> Module:
    try:
        dims = [int(d) for d in doc["dim_vector"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad module document: {e}") from e
    if len(dims) != algebra.num_vertices:
        raise ParseError("dim_vector length does not match the algebra")
    arrows_doc = doc.get("arrows", {})
    mats = {}
    for a in algebra.quiver.arrows:
        if a.id in arrows_doc:
            mats[a.id] = matrix_from_json(
                algebra.field, dims[a.target], dims[a.source], arrows_doc[a.id]
            )
    try:
        return Module(algebra, dims, mats, check=True)
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- complexes ---------------------------------------------------------------


def _mults_to_verts(mults: List[int]):
    verts = []
    for v, k in enumerate(mults):
        verts.extend([v] * int(k))
    return tuple(verts)


def _verts_to_mults(verts, num_vertices: int) -> List[int]:
    mults = [0] * num_vertices
    for v in verts:
        mults[v] += 1
    return mults


def complex_to_json(x: Complex) -> dict:
    terms: Dict[str, object] = {}
    for n, m in x.terms.items():
        verts = x.proj_verts.get(n) if x.proj_verts is not None else None
        if verts is not None and tuple(sorted(verts)) == tuple(verts):
            terms[str(n)] = {"proj": _verts_to_mults(verts, x.algebra.num_vertices)}
        else:
            terms[str(n)] = module_to_json(m)
    diffs = {
        str(n): [matrix_to_json(mat) for mat in d.mats] for n, d in x.diffs.items()
    }
    return {"terms": terms, "differentials": diffs}


def complex_from_json(algebra: FDAlgebra, doc: dict) -> Complex:
    terms: Dict[int, Module] = {}
    pv: Dict[int, tuple] = {}
    all_proj = True
    try:
        for key, tdoc in doc.get("terms", {}).items():
            n = int(key)
            if isinstance(tdoc, dict) and "proj" in tdoc:
                verts = _mults_to_verts(tdoc["proj"])
                terms[n], _ = projsum_module(algebra, verts)
                pv[n] = verts
            else:
                terms[n] = module_from_json(algebra, tdoc)
                all_proj = False
        diffs: Dict[int, ModuleMap] = {}
        for key, mats_doc in doc.get("differentials", {}).items():
            n = int(key)
            if n not in terms or n + 1 not in terms:
                continue
            src, tgt = terms[n], terms[n + 1]
            mats = [
                matrix_from_json(algebra.field, tgt.dims[v], src.dims[v], mats_doc[v])
                for v in range(algebra.num_vertices)
            ]
            diffs[n] = ModuleMap(src, tgt, mats, check=False)
        x = Complex(algebra, terms, diffs, proj_verts=pv if all_proj else None)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad complex document: {e}") from e
    for n, d in x.diffs.items():
        if not d.commutes():
            raise ParseError(f"differential at degree {n} is not a module map")
    return x


# -- chain maps and homotopies -----------------------------------------------


def chain_map_to_json(f: ChainMap) -> dict:
    return {
        str(n): [matrix_to_json(m) for m in g.mats] for n, g in f.comps.items()
    }


def chain_map_from_json(
    source: Complex, target: Complex, doc: dict, check: bool = True
) -> ChainMap:
    comps: Dict[int, ModuleMap] = {}
    algebra = source.algebra
    try:
        for key, mats_doc in doc.items():
            n = int(key)
            src, tgt = source.term(n), target.term(n)
            mats = [
                matrix_from_json(algebra.field, tgt.dims[v], src.dims[v], mats_doc[v])
                for v in range(algebra.num_vertices)
            ]
            comps[n] = ModuleMap(src, tgt, mats, check=False)
    except (TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad chain map document: {e}") from e
    f = ChainMap(source, target, comps, check=False)
    if check and not f.commutes():
        raise ParseError("chain map does not commute with the differentials")
    return f


def homotopy_to_json(h: Homotopy) -> dict:
    return {
        str(n): [matrix_to_json(m) for m in g.mats] for n, g in h.maps.items()
    }


def homotopy_from_json(source: Complex, target: Complex, doc: dict) -> Homotopy:
    maps: Dict[int, ModuleMap] = {}
    algebra = source.algebra
    try:
        for key, mats_doc in doc.items():
            n = int(key)
            src, tgt = source.term(n), target.term(n - 1)
            mats = [
                matrix_from_json(algebra.field, tgt.dims[v], src.dims[v], mats_doc[v])
                for v in range(algebra.num_vertices)
            ]
            maps[n] = ModuleMap(src, tgt, mats, check=False)
    except (TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad homotopy document: {e}") from e
    return Homotopy(source, target, maps)


# -- certificates ------------------------------------------------------------


def certificate_to_json(cert: ThickCertificate, target: Complex) -> dict:
    steps = []
    for step in cert.steps:
        entry = {"object": complex_to_json(step.obj), "level": step.level}
        if isinstance(step, LeafStep):
            entry["leaf"] = {"summand": step.summand, "shift": step.shift}
        elif isinstance(step, SumStep):
            entry["sum"] = list(step.parts)
        elif isinstance(step, ConeStep):
            entry["cone"] = {
                "u": step.u,
                "v": step.v,
                "map": chain_map_to_json(step.map),
            }
        elif isinstance(step, RetractStep):
            entry["retract"] = {
                "z": step.z,
                "p": chain_map_to_json(step.p),
                "s": chain_map_to_json(step.s),
                "h": homotopy_to_json(step.h),
            }
        else:
            raise ValueError("unknown step kind")
        steps.append(entry)
    return {
        "generator": cert.generator,
        "level": cert.level,
        "steps": steps,
        "compare": chain_map_to_json(cert.compare),
        "target": complex_to_json(target),
    }


def certificate_from_json(
    algebra: FDAlgebra, doc: dict, target: Complex = None
) -> ThickCertificate:
    try:
        steps = []
        zero = Complex(algebra, {}, {}, proj_verts={}, check=False)
        for idx, entry in enumerate(doc["steps"]):
            obj = complex_from_json(algebra, entry["object"])
            level = int(entry["level"])
            if "leaf" in entry:
                steps.append(
                    LeafStep(int(entry["leaf"]["summand"]), int(entry["leaf"]["shift"]), obj, level)
                )
            elif "sum" in entry:
                steps.append(SumStep([int(j) for j in entry["sum"]], obj, level))
            elif "cone" in entry:
                u, v = int(entry["cone"]["u"]), int(entry["cone"]["v"])
                if not (0 <= u < idx and 0 <= v < idx):
                    raise ParseError(f"step {idx}: cone reference out of range")
                cm = chain_map_from_json(
                    steps[u].obj, steps[v].obj, entry["cone"]["map"], check=False
                )
                steps.append(ConeStep(u, v, cm, obj, level))
            elif "retract" in entry:
                z = int(entry["retract"]["z"])
                if not (0 <= z < idx):
                    raise ParseError(f"step {idx}: retract reference out of range")
                p = chain_map_from_json(steps[z].obj, obj, entry["retract"]["p"], check=False)
                s = chain_map_from_json(obj, steps[z].obj, entry["retract"]["s"], check=False)
                h = homotopy_from_json(obj, obj, entry["retract"]["h"])
                steps.append(RetractStep(z, p, s, h, obj, level))
            else:
                raise ParseError(f"step {idx}: unknown step kind")
        final = steps[-1].obj if steps else zero
        if target is None:
            target = complex_from_json(algebra, doc["target"])
        compare = chain_map_from_json(final, target, doc["compare"], check=False)
        return ThickCertificate(str(doc["generator"]), steps, int(doc["level"]), compare)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad certificate document: {e}") from e
