"""Command-line front end.

Scenarios are JSON files describing one computation each; `run` executes a
scenario (by path, or by the name of a bundled one) and prints a
human-readable report, or the same data as JSON with --json.  Exit codes:
0 success, 1 malformed input or failed validation, 2 internal inconsistency
(a consistency identity such as the eigentable sum failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

import jsonschema

from . import beauville, covers, fermat, linsys, piclattice, proofcheck
from .grouplib import Automorphism, element_name, make_group

BUILTIN_ORDER = ("inoue7", "beauville8", "inoue-z24", "fermat-z52", "proofcheck-all")


class ScenarioError(Exception):
    def __init__(self, message: str, exit_code: int = 1):
        super().__init__(message)
        self.exit_code = exit_code


_COEFF_MAP = {"type": "object", "additionalProperties": {"type": "integer"}}
_NAME_LIST = {"type": "array", "items": {"type": "string"}, "minItems": 1}
_DIVISOR = {"oneOf": [_COEFF_MAP, _NAME_LIST]}
_ELEMENT = {"type": "array", "items": {"type": "integer"}, "minItems": 1}
_BRANCH_ENTRY = {
    "type": "object",
    "required": ["element"],
    "properties": {
        "element": _ELEMENT,
        "degree": {"type": "integer", "minimum": 0},
        "points": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}
_CURVE = {
    "type": "object",
    "required": ["branch", "line_bundles"],
    "properties": {
        "branch": {"type": "array", "items": _BRANCH_ENTRY},
        "line_bundles": {"type": "array", "items": {"type": "integer"}},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "z22-surface-cover": {
        "type": "object",
        "required": ["kind", "branch", "line_bundles"],
        "properties": {
            "kind": {"const": "z22-surface-cover"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "blowup_points": {"const": 6},
            "point_configuration": {"const": "quadrilateral"},
            "branch": {
                "type": "object",
                "required": ["D1", "D2", "D3"],
                "properties": {"D1": _DIVISOR, "D2": _DIVISOR, "D3": _DIVISOR},
                "additionalProperties": False,
            },
            "line_bundles": {
                "type": "object",
                "required": ["L1", "L2"],
                "properties": {"L1": _COEFF_MAP, "L2": _COEFF_MAP},
                "additionalProperties": False,
            },
        },
        "additionalProperties": False,
    },
    "product-quotient": {
        "type": "object",
        "required": ["kind", "group", "automorphism", "curve1", "curve2"],
        "properties": {
            "kind": {"const": "product-quotient"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "group": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1},
            "automorphism": {"type": "array", "items": _ELEMENT},
            "curve1": _CURVE,
            "curve2": _CURVE,
        },
        "additionalProperties": False,
    },
    "fermat": {
        "type": "object",
        "required": ["kind"],
        "properties": {
            "kind": {"const": "fermat"},
            "name": {"type": "string"},
            "description": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "proofcheck": {
        "type": "object",
        "required": ["kind"],
        "properties": {
            "kind": {"const": "proofcheck"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "checks": {
                "type": "array",
                "items": {"enum": ["case-table", "reider", "lemma32"]},
                "minItems": 1,
            },
        },
        "additionalProperties": False,
    },
    "double-cover": {
        "type": "object",
        "required": ["kind", "cases"],
        "properties": {
            "kind": {"const": "double-cover"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "cases": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "required": ["label", "chi_base", "pg_base", "K2_base",
                                 "M_sq", "M_K", "h0_K_plus_M"],
                    "properties": {
                        "label": {"type": "string"},
                        "chi_base": {"type": "integer"},
                        "pg_base": {"type": "integer", "minimum": 0},
                        "K2_base": {"type": "integer"},
                        "M_sq": {"type": "integer"},
                        "M_K": {"type": "integer"},
                        "h0_K_plus_M": {"type": "integer", "minimum": 0},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "linsys": {
        "type": "object",
        "required": ["kind", "systems"],
        "properties": {
            "kind": {"const": "linsys"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "configuration": {"const": "quadrilateral"},
            "points": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "array",
                    "items": {"oneOf": [{"type": "integer"}, {"type": "string"}]},
                    "minItems": 3, "maxItems": 3,
                },
            },
            "labels": {"type": "array", "items": {"type": "string"}},
            "systems": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "properties": {
                        "degree": {"type": "integer", "minimum": 0},
                        "multiplicities": {"type": "object",
                                           "additionalProperties": {"type": "integer", "minimum": 0}},
                        "class": _COEFF_MAP,
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "lattice": {
        "type": "object",
        "required": ["kind", "operations"],
        "properties": {
            "kind": {"const": "lattice"},
            "name": {"type": "string"},
            "description": {"type": "string"},
            "blowup_points": {"type": "integer", "minimum": 0},
            "lattice": {"const": "quadric"},
            "operations": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "required": ["op"],
                    "properties": {
                        "op": {"enum": ["intersect", "pullback", "canonical",
                                        "negative-definite", "divisible"]},
                        "a": _COEFF_MAP,
                        "b": _COEFF_MAP,
                        "degree": {"type": "integer", "minimum": 1},
                        "k": {"type": "integer", "minimum": 2},
                        "gram": {"type": "array",
                                 "items": {"type": "array", "items": {"type": "integer"}}},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}


def validate_payload(payload) -> str:
    if not isinstance(payload, dict):
        raise ScenarioError("scenario must be a JSON object")
    kind = payload.get("kind")
    if kind not in SCHEMAS:
        raise ScenarioError(
            f"$.kind: unknown scenario kind {kind!r}; expected one of {sorted(SCHEMAS)}")
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(payload), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ScenarioError(f"{err.json_path}: {err.message}")
    return kind


# ---------------------------------------------------------------- z22 cover

def _resolve_divisor(spec, catalog):
    named = catalog.named()
    if isinstance(spec, list):
        parts = []
        for name in spec:
            if name not in named:
                raise ScenarioError(f"unknown catalog divisor {name!r}")
            parts.append(named[name])
        return sum(parts, catalog.lattice.zero()), tuple(parts)
    return catalog.lattice.cls(spec), None


def run_z22(payload, verbose=False):
    catalog = piclattice.quadrilateral_catalog()
    cfg = linsys.quadrilateral_config()
    branch, components = [], []
    for key in ("D1", "D2", "D3"):
        cls, parts = _resolve_divisor(payload["branch"][key], catalog)
        branch.append(cls)
        components.append(parts)
    comps = tuple(components) if all(p is not None for p in components) else None
    L1 = catalog.lattice.cls(payload["line_bundles"]["L1"])
    L2 = catalog.lattice.cls(payload["line_bundles"]["L2"])
    data = covers.BranchDataSurface(catalog.lattice, branch, (L1, L2), components=comps)

    validation = covers.validate_building_data(data)
    result = {"kind": "z22-surface-cover",
              "validation": {"ok": validation.ok,
                             "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                                        for c in validation.checks]}}
    lines = [f"building data: {'valid' if validation.ok else 'INVALID'}"]
    if verbose:
        lines += [f"  check {c.name}: {'ok' if c.passed else 'FAIL ' + c.detail}"
                  for c in validation.checks]
    if not validation.ok:
        fail = validation.first_failure()
        lines.append(f"failed relation: {fail.name} ({fail.detail})")
        raise ScenarioError("\n".join(lines))

    def h0(cls):
        return linsys.h0_class(cfg, cls)

    report = covers.z22_bicanonical_report(data, h0)
    dims = [dim for _, _, dim in report.eigentable]
    kernel_names = [covers.z22_element_name(g) for g in report.kernel.elements()]
    nonzero = [covers.z22_element_name(g) for g in report.kernel.elements() if not g.is_zero()]
    result.update({
        "K2_cover": report.invariants.K2,
        "K2": report.K2_minimal,
        "chi": report.invariants.chi,
        "pg": report.invariants.pg,
        "q": report.invariants.q,
        "p2": report.p2,
        "bicanonical_class_downstairs": str(report.total_class),
        "eigentable": [{"character": label, "class": str(cls), "dimension": dim}
                       for label, cls, dim in report.eigentable],
        "kernel": kernel_names,
        "verdict": {"birational": report.verdict.birational,
                    "degree": report.verdict.degree,
                    "composed_with": nonzero},
    })
    lines.append(f"cover invariants before contraction: K²={report.invariants.K2}, "
                 f"χ={report.invariants.chi}, p_g={report.invariants.pg}, q={report.invariants.q}")
    lines.append(f"bicanonical class downstairs: {report.total_class}")
    dims_str = ",".join(str(d) for d in dims)
    if report.verdict.birational:
        tail = "bicanonical birational, degree 1"
    else:
        tail = (f"bicanonical composed with {', '.join(nonzero)}, "
                f"degree {report.verdict.degree}")
    k2_text = (f"K²={report.K2_minimal}" if report.K2_minimal is not None
               else f"K²(cover)={report.invariants.K2}")
    lines.append(f"{k2_text}, p_g={report.invariants.pg}, "
                 f"p₂={report.p2}, eigentable ({dims_str}), {tail}")
    return result, lines


# ---------------------------------------------------------- product quotient

def _build_curve(group, spec):
    entries = {}
    for item in spec["branch"]:
        gamma = group.element(item["element"])
        if "points" in item and "degree" in item:
            raise ScenarioError("give either points or a degree for a branch divisor, not both")
        if "points" in item:
            value = tuple(item["points"])
        elif "degree" in item:
            value = item["degree"]
        else:
            raise ScenarioError("a branch entry needs points or a degree")
        if gamma in entries:
            raise ScenarioError(f"duplicate branch element {item['element']}")
        entries[gamma] = value
    return covers.BranchDataP1(group, entries, line_bundles=spec["line_bundles"])


def run_product_quotient(payload, verbose=False):
    group = make_group(payload["group"])
    if len(payload["automorphism"]) != group.rank:
        raise ScenarioError("automorphism needs one image per group generator")
    psi = Automorphism.from_images(group, payload["automorphism"])
    curve1 = _build_curve(group, payload["curve1"])
    curve2 = _build_curve(group, payload["curve2"])

    lines = []
    for name, data in (("curve 1", curve1), ("curve 2", curve2)):
        validation = covers.validate_building_data(data)
        if verbose:
            for gamma, degree in data.sorted_entries():
                lines.append(f"  {name} branch divisor at {list(gamma.coords)}: degree {degree}")
            lines += [f"  {name} check {c.name}: {'ok' if c.passed else 'FAIL ' + c.detail}"
                      for c in validation.checks]
        if not validation.ok:
            fail = validation.first_failure()
            raise ScenarioError(
                f"{name} building data invalid: {fail.name} ({fail.detail})")

    report = beauville.bicanonical_report(
        beauville.ProductQuotientSpec(group, psi, curve1, curve2))
    dims = sorted((e.dimension for e in report.entries), reverse=True)
    nonzero_dims = [d for d in dims if d > 0]
    kernel_names = [element_name(g) for g in report.kernel.elements()]
    result = {
        "kind": "product-quotient",
        "group": list(group.moduli),
        "genera": list(report.genera),
        "invariants": {"K2": report.invariants.K2, "chi": report.invariants.chi,
                       "pg": report.invariants.pg, "q": report.invariants.q},
        "free": True,
        "bidegree": list(report.bidegree),
        "eigentable": [{"character": list(e.character.coords),
                        "bidegree": list(e.bidegree), "dimension": e.dimension}
                       for e in report.entries],
        "p2": report.p2,
        "kernel": kernel_names,
        "verdict": {"birational": report.verdict.birational,
                    "degree": report.verdict.degree},
    }
    lines.append(f"group of order {group.order}; genera ({report.genera[0]},{report.genera[1]})")
    lines.append("graph action: free")
    lines.append(f"2K bidegree: ({report.bidegree[0]},{report.bidegree[1]})")
    lines.append("eigentable {" + ",".join(str(d) for d in nonzero_dims)
                 + "}, sum " + str(report.p2))
    if verbose:
        for e in report.entries:
            lines.append(f"  character {e.character.coords}: eigensheaf bidegree "
                         f"{e.bidegree}, dimension {e.dimension}")
    if report.verdict.birational:
        lines.append("kernel trivial, bicanonical birational")
    else:
        lines.append("kernel {" + ", ".join(kernel_names) + "}, degree "
                     + str(report.verdict.degree))
    return result, lines


# -------------------------------------------------------------------- fermat

def run_fermat(payload, verbose=False):
    report = fermat.fermat_report()
    kernel_names = [element_name(g) for g in report.kernel.elements()]
    result = {
        "kind": "fermat",
        "invariants": {"K2": report.invariants.K2, "chi": report.invariants.chi,
                       "pg": report.invariants.pg, "q": report.invariants.q},
        "free": report.action_free,
        "invariant_monomials": [{"monomial": str(m),
                                 "exponents": [m.i, m.j, m.alpha, m.beta]}
                                for m in report.monomials],
        "weight_identity": report.weight_identity,
        "ratio_identities": [{"name": name, "verified": ok}
                             for name, ok in report.ratio_checks],
        "lattice_membership": [{"name": name, "contained": ok}
                               for name, ok in report.lattice_memberships],
        "kernel": kernel_names,
        "verdict": "birational" if report.verdict.birational
                   else f"composed with subgroup of order {report.kernel.order}",
    }
    lines = [
        f"invariants: K²={report.invariants.K2}, χ={report.invariants.chi}, "
        f"p_g={report.invariants.pg}, q={report.invariants.q}",
        "graph action: free",
        f"invariant bicanonical monomials ({len(report.monomials)}): "
        + ", ".join(str(m) for m in report.monomials),
        f"weight formula derivation: {'verified' if report.weight_identity else 'FAILED'}",
    ]
    for name, ok in report.ratio_checks:
        lines.append(f"ratio identity {name}: {'verified' if ok else 'FAILED'}")
    for name, ok in report.lattice_memberships:
        lines.append(f"{name} in the invariant-ratio lattice: {str(ok).lower()}")
    lines.append("residual kernel: "
                 + ("trivial" if report.kernel.is_trivial()
                    else "{" + ", ".join(kernel_names) + "}"))
    lines.append(f"verdict: {result['verdict']}")
    if not (report.weight_identity and all(ok for _, ok in report.ratio_checks)):
        raise ScenarioError("\n".join(lines), exit_code=2)
    return result, lines


# ---------------------------------------------------------------- proofcheck

def run_proofcheck(payload, verbose=False):
    checks = payload.get("checks", ["case-table", "reider", "lemma32"])
    result = {"kind": "proofcheck"}
    lines = []
    if "case-table" in checks:
        records = proofcheck.run_case_table()
        result["case_table"] = [
            {"label": r.label, "K2": r.invariants.K2, "chi": r.invariants.chi,
             "pg": r.invariants.pg, "q": r.invariants.q,
             "bound_holds": r.bound_holds, "contradiction": r.contradiction}
            for r in records]
        lines.append("double-cover case table:")
        for r in records:
            lines.append(
                f"  {r.label}: (K²,χ,p_g,q) = {r.invariants.as_tuple()}; "
                f"bound K²≥16(q−1): {str(r.bound_holds).lower()} "
                f"→ {'contradiction' if r.contradiction else 'no contradiction'}")
    if "reider" in checks:
        multiples = sorted(proofcheck.reider_enumeration(9))
        result["reider_multiples"] = multiples
        lines.append("reider enumeration for K²=9: admissible multiples {"
                     + ",".join(map(str, multiples)) + "}")
    if "lemma32" in checks:
        rep = proofcheck.lemma32_cases()
        result["rational_curve_case"] = {
            "K_L0": rep.K_L0, "L0_sq": rep.L0_sq,
            "cases": [{"a": c.a, "theta_C": c.theta_C, "C_sq": c.C_sq,
                       "consistent": c.consistent} for c in rep.cases],
            "excluded_negative_definite": rep.excluded_negative_definite,
        }
        lines.append(f"pullback of the two-point line: K·L₀={rep.K_L0}, "
                     f"L₀²={rep.L0_sq}")
        for c in rep.cases:
            lines.append(f"  a={c.a}: θC={c.theta_C}, C²={c.C_sq} "
                         f"({'consistent' if c.consistent else 'INCONSISTENT'})")
        lines.append("excluded Gram matrix negative definite: "
                     + str(rep.excluded_negative_definite).lower())
    all_ok = (all(r["contradiction"] for r in result.get("case_table", []))
              and result.get("reider_multiples", [1]) == [1]
              and result.get("rational_curve_case",
                             {"excluded_negative_definite": True})["excluded_negative_definite"])
    result["ok"] = all_ok
    lines.append("proof skeleton verified" if all_ok else "PROOF SKELETON CHECK FAILED")
    if not all_ok:
        raise ScenarioError("\n".join(lines), exit_code=2)
    return result, lines


# -------------------------------------------------------------- double cover

def run_double_cover(payload, verbose=False):
    result = {"kind": "double-cover", "cases": []}
    lines = []
    for case in payload["cases"]:
        cover = covers.DoubleCoverInput(
            case["label"], case["chi_base"], case["pg_base"], case["K2_base"],
            case["M_sq"], case["M_K"], case["h0_K_plus_M"])
        try:
            inv = covers.double_cover_invariants(cover)
        except covers.InvalidCoverData as exc:
            raise ScenarioError(f"case {case['label']}: {exc}")
        bound = proofcheck.check_corollary(inv.K2, inv.q) if inv.q >= 0 else None
        result["cases"].append({"label": case["label"], "K2": inv.K2, "chi": inv.chi,
                                "pg": inv.pg, "q": inv.q, "bound_holds": bound})
        bound_text = ("n/a (q < 0)" if bound is None
                      else f"K²≥16(q−1): {str(bound).lower()}")
        lines.append(f"{case['label']}: (K²,χ,p_g,q) = {inv.as_tuple()}; {bound_text}")
    return result, lines


# --------------------------------------------------------------------- linsys

def _linsys_config(payload):
    if "points" in payload:
        pts = tuple(linsys.ProjectivePoint.of(*coords) for coords in payload["points"])
        labels = tuple(payload.get("labels",
                                   [f"P{i}" for i in range(1, len(pts) + 1)]))
        return linsys.PointConfig(pts, labels)
    return linsys.quadrilateral_config()


def run_linsys(payload, verbose=False):
    cfg = _linsys_config(payload)
    lat = piclattice.make_blowup_lattice(cfg.n_points)
    result = {"kind": "linsys", "systems": []}
    lines = []
    for spec in payload["systems"]:
        trace: list[str] = []
        if "class" in spec:
            cls = lat.cls(spec["class"])
            value = linsys.h0_class(cfg, cls, trace=trace)
            desc = str(cls)
        elif "degree" in spec and "multiplicities" in spec:
            mult = [0] * cfg.n_points
            for label, m in spec["multiplicities"].items():
                try:
                    mult[cfg.index_of(label)] = m
                except ValueError:
                    raise ScenarioError(f"unknown point label {label!r}")
            value = linsys.h0_fat_points(cfg, linsys.FatPointSystem(spec["degree"], tuple(mult)))
            desc = (f"degree {spec['degree']} with multiplicities "
                    + ",".join(map(str, mult)))
        else:
            raise ScenarioError("a system needs a class, or a degree with multiplicities")
        result["systems"].append({"system": desc, "h0": value, "notes": trace})
        lines.append(f"h⁰({desc}) = {value}")
        if verbose:
            lines += [f"  note: {t}" for t in trace]
    return result, lines


# -------------------------------------------------------------------- lattice

def run_lattice(payload, verbose=False):
    if payload.get("lattice") == "quadric":
        lat = piclattice.make_quadric_lattice()
    else:
        lat = piclattice.make_blowup_lattice(payload.get("blowup_points", 6))
    result = {"kind": "lattice", "operations": []}
    lines = []
    for op in payload["operations"]:
        kind = op["op"]
        if kind == "intersect":
            a, b = lat.cls(op["a"]), lat.cls(op["b"])
            value = a.dot(b)
            desc = f"({a}) . ({b}) = {value}"
        elif kind == "pullback":
            a, b = lat.cls(op["a"]), lat.cls(op["b"])
            value = piclattice.pullback_numerics(op["degree"], a, b)
            desc = f"degree {op['degree']} pullback of ({a}) . ({b}) = {value}"
        elif kind == "canonical":
            value = str(piclattice.canonical_class(lat))
            desc = f"canonical class = {value}"
        elif kind == "negative-definite":
            value = piclattice.is_negative_definite(op["gram"])
            desc = f"negative definite: {str(value).lower()}"
        elif kind == "divisible":
            value = piclattice.is_divisible_by(lat.cls(op["a"]), op["k"])
            desc = f"({lat.cls(op['a'])}) divisible by {op['k']}: {str(value).lower()}"
        else:  # unreachable behind the schema
            raise ScenarioError(f"unknown lattice operation {kind!r}")
        result["operations"].append({"op": kind, "result": value})
        lines.append(desc)
    return result, lines


RUNNERS = {
    "z22-surface-cover": run_z22,
    "product-quotient": run_product_quotient,
    "fermat": run_fermat,
    "proofcheck": run_proofcheck,
    "double-cover": run_double_cover,
    "linsys": run_linsys,
    "lattice": run_lattice,
}


def builtin_scenario_text(name: str) -> str:
    return (resources.files("bicanonical") / "scenarios" / f"{name}.json").read_text("utf-8")


def load_scenario(arg: str) -> dict:
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
        source = arg
    elif arg in BUILTIN_ORDER:
        text = builtin_scenario_text(arg)
        source = f"builtin scenario {arg!r}"
    else:
        raise ScenarioError(f"no such file or builtin scenario: {arg!r}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}")


def run_scenario(payload: dict, verbose: bool = False):
    kind = validate_payload(payload)
    try:
        result, lines = RUNNERS[kind](payload, verbose=verbose)
    except covers.InvalidCoverData as exc:
        raise ScenarioError(f"validation failed: {exc}", exit_code=1)
    except covers.InternalInconsistency as exc:
        raise ScenarioError(f"internal inconsistency: {exc}", exit_code=2)
    except (piclattice.LatticeMismatch, ValueError) as exc:
        raise ScenarioError(f"validation failed: {exc}", exit_code=1)
    name = payload.get("name")
    if name:
        result["scenario"] = name
        lines = [f"scenario: {name} ({kind})"] + lines
    else:
        lines = [f"scenario kind: {kind}"] + lines
    return result, lines


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bicanonical",
        description="Exact computations for abelian covers and bicanonical maps "
                    "of surfaces with p_g = 0.")
    sub = parser.add_subparsers(dest="command", required=True)
    run_parser = sub.add_parser("run", help="run a scenario file or a builtin scenario")
    run_parser.add_argument("scenario", help="path to a scenario JSON file, or a builtin name")
    run_parser.add_argument("--json", action="store_true", dest="as_json",
                            help="emit the machine-readable report")
    run_parser.add_argument("--verbose", action="store_true",
                            help="include per-check and per-character detail")
    sub.add_parser("list-builtin", help="list the bundled scenarios")

    args = parser.parse_args(argv)
    if args.command == "list-builtin":
        for name in BUILTIN_ORDER:
            print(name)
        return 0

    try:
        payload = load_scenario(args.scenario)
        result, lines = run_scenario(payload, verbose=args.verbose)
    except ScenarioError as exc:
        print(f"error: {exc}")
        return exc.exit_code
    if args.as_json:
        print(json.dumps(result, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
