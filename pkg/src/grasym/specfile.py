"""Canonical file formats: algebra spec files and certificate files.

Serialization is canonical JSON (sorted keys, no whitespace variance, scalars
in canonical form, structure constants sorted by (i,j,k)), so equal algebras
produce byte-identical files and a content hash identifies an algebra.  A spec
file carries a field block, a group block, and either a raw structure-constant
block or a named constructor block that re-runs the corresponding builder.
"""

from __future__ import annotations

import hashlib
import json

from . import algebras
from .algebras import GradedAlgebra, validate_algebra
from .errors import ParseError, ValidationError
from .fields import Field, make_field, scalar_from_json
from .groups import (
    GroupTable,
    cyclic_group,
    cyclic_product_group,
    dihedral_group,
    group_from_table,
    symmetric_group_3,
)
from .linalg import Matrix
from .symmetry import LinearFunctional, SymmetryVerdict


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- field and group blocks ---------------------------------------------------------

def field_from_dict(d: dict) -> Field:
    try:
        char = int(d["char"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad field block: {exc}") from exc
    modulus = d.get("modulus")
    return make_field(char, modulus)


def group_to_dict(g: GroupTable) -> dict:
    if g.kind is not None:
        name = g.kind[0]
        if name == "cyclic":
            return {"kind": "cyclic", "n": g.kind[1]}
        if name == "product":
            return {"kind": "product", "orders": list(g.kind[1])}
        if name == "dihedral":
            return {"kind": "dihedral", "n": g.kind[1]}
        if name == "sym3":
            return {"kind": "sym3"}
    return g.to_dict()


def group_from_dict(d: dict) -> GroupTable:
    if "kind" in d:
        kind = d["kind"]
        if kind == "cyclic":
            return cyclic_group(int(d["n"]))
        if kind == "product":
            return cyclic_product_group([int(x) for x in d["orders"]])
        if kind == "dihedral":
            return dihedral_group(int(d["n"]))
        if kind == "sym3":
            return symmetric_group_3()
        raise ParseError(f"unknown group kind {kind!r}")
    try:
        return group_from_table(d["table"], d.get("labels"))
    except KeyError as exc:
        raise ParseError("group block needs a kind or a table") from exc


# -- algebra spec files -----------------------------------------------------------------

def algebra_to_dict(a: GradedAlgebra) -> dict:
    """Raw canonical form; round-trips every constructor output bit-exactly."""
    sc_rows = []
    for (i, j) in sorted(a.sc):
        for k, c in a.sc[(i, j)]:
            sc_rows.append([i, j, k, c.to_json()])
    block = {
        "dim": a.dim,
        "degrees": list(a.degree),
        "unit": [c.to_json() for c in a.unit],
        "sc": sc_rows,
    }
    if a.labels is not None:
        block["labels"] = list(a.labels)
    return {"field": a.field.to_dict(), "group": group_to_dict(a.group),
            "algebra": block}


def _raw_algebra_from_dict(d: dict) -> GradedAlgebra:
    field = field_from_dict(d["field"])
    group = group_from_dict(d["group"])
    block = d["algebra"]
    try:
        dim = int(block["dim"])
        degrees = [int(g) for g in block["degrees"]]
        unit = [scalar_from_json(field, v) for v in block["unit"]]
        sc: dict = {}
        for row in block["sc"]:
            i, j, k, c = row
            sc.setdefault((int(i), int(j)), []).append(
                (int(k), scalar_from_json(field, c)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad algebra block: {exc}") from exc
    if len(degrees) != dim:
        raise ParseError("degree list length does not match dim")
    a = GradedAlgebra(field, group, degrees, sc, unit, labels=block.get("labels"))
    report = validate_algebra(a)
    if not report.ok:
        raise ValidationError(report)
    return a


def _build_constructor(d: dict) -> GradedAlgebra:
    block = d["constructor"]
    name = block.get("name")
    if name == "group_algebra":
        return algebras.group_algebra(field_from_dict(d["field"]),
                                      group_from_dict(d["group"]))
    if name == "cyclic_algebra":
        return algebras.cyclic_algebra(int(block["p"]))
    if name == "quaternion_algebra":
        field = field_from_dict(d["field"])
        return algebras.quaternion_algebra(field,
                                           scalar_from_json(field, block["a"]),
                                           scalar_from_json(field, block["b"]))
    if name == "sweedler_algebra":
        return algebras.sweedler_algebra(field_from_dict(d["field"]))
    if name == "matrix_algebra":
        return algebras.matrix_algebra(field_from_dict(d["field"]), int(block["n"]))
    if name == "good_matrix_algebra":
        field = field_from_dict(d["field"])
        group = group_from_dict(d["group"])
        delta = algebras.field_as_algebra(field, field, group)
        return algebras.good_matrix_algebra(int(block["n"]),
                                            [int(s) for s in block["sigmas"]], delta)
    if name == "trivial_extension":
        return algebras.trivial_extension(algebra_from_dict(block["base"]))
    if name == "ungrade":
        return algebras.ungrade(algebra_from_dict(block["base"]))
    if name == "scalar_extension":
        return algebras.scalar_extension(algebra_from_dict(block["base"]),
                                         int(block["m"]))
    if name == "direct_product":
        factors = [algebra_from_dict(f) for f in block["factors"]]
        out = factors[0]
        for f in factors[1:]:
            out = algebras.direct_product(out, f)
        return out
    if name == "tensor_product":
        factors = [algebra_from_dict(f) for f in block["factors"]]
        out = factors[0]
        for f in factors[1:]:
            out = algebras.tensor_product(out, f)
        return out
    if name == "frobenius_crossed_product":
        return frobenius_crossed_product(
            int(block["char"]), block.get("ext_modulus"),
            group_from_dict(d["group"]),
            [int(x) for x in block["sigma_powers"]],
            block.get("alpha_unit"))
    raise ParseError(f"unknown constructor {name!r}")


def frobenius_crossed_product(char: int, ext_modulus, group: GroupTable,
                              sigma_powers, alpha_unit=None) -> GradedAlgebra:
    """Crossed product of a finite field by Frobenius powers with a unit twist.

    sigma_powers lists the Frobenius exponent for each non-identity group
    element; alpha_unit, when given, is the coefficient tuple of a unit u used
    as alpha(g,h) = u for g,h both non-identity (alpha is 1 against e).
    """
    base = make_field(char)
    ext = make_field(char, ext_modulus) if ext_modulus else base
    d = algebras.field_as_algebra(ext, base)
    if len(sigma_powers) != group.order - 1:
        raise ParseError("need one Frobenius power per non-identity element")
    sigma = {0: Matrix.identity(base, d.dim)}
    for g in range(1, group.order):
        if ext == base:
            sigma[g] = Matrix.identity(base, d.dim)
        else:
            sigma[g] = algebras.frobenius_matrix(ext, sigma_powers[g - 1])
    if alpha_unit is None:
        u = tuple(d.unit)
    else:
        u = tuple(scalar_from_json(base, c) for c in alpha_unit)
        u = u + (base.zero(),) * (d.dim - len(u))
    alpha = {}
    e = group.identity
    for g in range(group.order):
        for h in range(group.order):
            alpha[(g, h)] = u if (g != e and h != e) else tuple(d.unit)
    spec = algebras.CrossedProductSpec(coeff=d, group=group, sigma=sigma, alpha=alpha)
    return algebras.crossed_product(spec)


def algebra_from_dict(d: dict) -> GradedAlgebra:
    if not isinstance(d, dict):
        raise ParseError("algebra spec must be a JSON object")
    if "constructor" in d:
        return _build_constructor(d)
    if "algebra" in d:
        return _raw_algebra_from_dict(d)
    raise ParseError("spec needs an 'algebra' or 'constructor' block")


def parse_algebra_file(path: str) -> GradedAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return algebra_from_dict(data)


def write_algebra_file(a: GradedAlgebra, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(algebra_to_dict(a)) + "\n")


def algebra_hash(a: GradedAlgebra) -> str:
    return hashlib.sha256(canonical_json(algebra_to_dict(a)).encode()).hexdigest()


# -- certificates -----------------------------------------------------------------------

def certificate_to_dict(a: GradedAlgebra, verdict: SymmetryVerdict) -> dict:
    return {
        "algebra_sha256": algebra_hash(a),
        "mode": verdict.mode,
        "status": verdict.status,
        "witness": None if verdict.witness is None
        else [c.to_json() for c in verdict.witness.coords],
        "refutation": verdict.refutation,
        "extension_degree": verdict.extension_degree,
        "gram_rank": verdict.gram_rank,
        "trace_space_dim": verdict.trace_space_dim,
    }


def write_certificate_file(a: GradedAlgebra, verdict: SymmetryVerdict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(certificate_to_dict(a, verdict)) + "\n")


def load_certificate_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def functional_from_certificate(a: GradedAlgebra, cert: dict) -> LinearFunctional:
    coords = [scalar_from_json(a.field, v) for v in cert["witness"]]
    return LinearFunctional(a, coords)
