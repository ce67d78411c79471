"""Command-line surface: group-spec parsing, reports, JSON output.

Group specs follow the grammar ``atom ("x" atom)*`` with atoms C<n>, Q8,
D<n>, S3 and E2^<k>; whitespace is ignored and products associate left.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .backend import BACKEND
from .criterion import (
    CriterionReport,
    bounded_unit_search,
    criterion,
    find_counterexample,
)
from .groups import (
    ENUMERATION_LIMIT,
    FiniteGroup,
    GroupElement,
    Subgroup,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    elementary_abelian2,
    quaternion8,
    symmetric3,
)
from .ring import (
    RingElement,
    VerificationError,
    canonical_text,
    commutator_nonzero,
    is_symmetric,
    one,
    star,
)
from .units import (
    HoechsmannParams,
    bicyclic,
    hoechsmann,
    noncommuting_pair,
    noncommuting_pair_diagnostics,
    symmetric_products,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PREDICTION_FALSE = 10
EXIT_NO_COUNTEREXAMPLE = 11


class GroupSpecError(ValueError):
    """A group spec failed to parse; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_ATOM_RE = re.compile(r"C(\d+)|Q8|D(\d+)|S3|E2\^(\d+)")


def _build_atom(text: str, pos: int) -> FiniteGroup:
    m = _ATOM_RE.fullmatch(text)
    if m is None:
        raise GroupSpecError(f"unrecognized group atom {text!r}", pos)
    try:
        if m.group(1) is not None:
            return cyclic(int(m.group(1)))
        if m.group(2) is not None:
            return dihedral(int(m.group(2)))
        if m.group(3) is not None:
            return elementary_abelian2(int(m.group(3)))
        if text == "Q8":
            return quaternion8()
        return symmetric3()
    except ValueError as exc:
        raise GroupSpecError(str(exc), pos) from None


def parse_group_spec(text: str) -> FiniteGroup:
    """Build the group denoted by a spec string such as "Q8xC3"."""
    stripped = "".join(text.split())
    if not stripped:
        raise GroupSpecError("empty group spec", 0)
    group = None
    pos = 0
    for chunk in stripped.split("x"):
        if not chunk:
            raise GroupSpecError("empty atom", pos)
        atom = _build_atom(chunk, pos)
        group = atom if group is None else direct_product(group, atom)
        if group.order > ENUMERATION_LIMIT:
            raise GroupSpecError(
                f"group order {group.order} exceeds the {ENUMERATION_LIMIT} guard", pos
            )
        pos += len(chunk) + 1
    return group


def _element_terms(w: RingElement) -> list[list[str]]:
    return [[w.group.names[i], str(c)] for i, c in enumerate(w.coeffs) if c]


def _witness_text(witness: Subgroup | GroupElement | None, group: FiniteGroup) -> str:
    if witness is None:
        return "none"
    if isinstance(witness, Subgroup):
        return "subgroup {" + ", ".join(group.names[i] for i in witness.elements) + "}"
    return f"element {witness.name}"


def _witness_json(witness, group):
    if witness is None:
        return None
    if isinstance(witness, Subgroup):
        return {"kind": "non-normal-subgroup", "elements": [group.names[i] for i in witness.elements]}
    return {"kind": "odd-order-element", "element": witness.name}


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _passfail(flag: bool) -> str:
    return "pass" if flag else "fail"


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _criterion_payload(report: CriterionReport, spec: str, group: FiniteGroup) -> dict:
    return {
        "command": "criterion",
        "group": {"spec": spec, "order": group.order},
        "parameters": {},
        "results": {
            "is_abelian": report.flags.is_abelian,
            "is_hamiltonian": report.flags.is_hamiltonian,
            "is_hamiltonian_2group": report.flags.is_hamiltonian_2group,
            "all_subgroups_normal": report.flags.all_subgroups_normal,
            "branch": report.branch,
            "witness": _witness_json(report.witness, group),
        },
        "verdicts": {"prediction": report.prediction},
    }


def _cmd_criterion(args) -> int:
    group = parse_group_spec(args.spec)
    report = criterion(group, args.spec)
    lines = [
        f"group: {args.spec} (order {group.order})",
        f"abelian: {_yesno(report.flags.is_abelian)}",
        f"hamiltonian: {_yesno(report.flags.is_hamiltonian)}",
        f"hamiltonian 2-group: {_yesno(report.flags.is_hamiltonian_2group)}",
        f"all subgroups normal: {_yesno(report.flags.all_subgroups_normal)}",
        f"branch: {report.branch}",
        f"witness: {_witness_text(report.witness, group)}",
        f"symmetric units form a group: {_yesno(report.prediction)}",
    ]
    _emit(args, lines, _criterion_payload(report, args.spec, group))
    return EXIT_OK if report.prediction else EXIT_PREDICTION_FALSE


def _cmd_counterexample(args) -> int:
    group = parse_group_spec(args.spec)
    report = criterion(group, args.spec)
    if report.prediction:
        print(
            f"no counterexample: symmetric units of {args.spec} form a group "
            f"(branch {report.branch})",
            file=sys.stderr,
        )
        return EXIT_NO_COUNTEREXAMPLE
    pair = find_counterexample(group, args.spec)
    s1, s2 = pair.s1.unit, pair.s2.unit
    comm = s1 * s2 - s2 * s1
    lines = [
        f"group: {args.spec} (order {group.order})",
        f"construction: {pair.construction}",
        "parameters: " + " ".join(f"{k}={v}" for k, v in pair.parameters.items()),
        f"s1: {canonical_text(s1)}",
        f"s2: {canonical_text(s2)}",
        f"commutator: {canonical_text(comm)}",
        f"noncommuting: {_yesno(pair.commutator_nonzero)}",
    ]
    payload = {
        "command": "counterexample",
        "group": {"spec": args.spec, "order": group.order},
        "parameters": {k: (v if isinstance(v, (int, bool)) else str(v)) for k, v in pair.parameters.items()},
        "results": {
            "construction": pair.construction,
            "s1": _element_terms(s1),
            "s2": _element_terms(s2),
            "commutator": _element_terms(comm),
        },
        "verdicts": {
            "s1_symmetric": is_symmetric(s1),
            "s2_symmetric": is_symmetric(s2),
            "commutator_nonzero": pair.commutator_nonzero,
        },
    }
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    p = args.p
    pair = noncommuting_pair(p)
    params = pair.parameters
    spec = f"Q8xC{p}"
    group = pair.s1.unit.group
    s1, s2 = pair.s1.unit, pair.s2.unit
    verdicts = {
        "s1_symmetric": star(s1) == s1,
        "s2_symmetric": star(s2) == s2,
        "s1_unit": pair.s1.unit * pair.s1.inverse == one(group),
        "s2_unit": pair.s2.unit * pair.s2.inverse == one(group),
        "noncommuting": commutator_nonzero(s1, s2),
    }
    lines = [
        f"group: {spec} (order {group.order})",
        f"construction: {pair.construction}",
    ]
    lines += [f"{k}: {params[k]}" for k in ("p", "n", "i", "j", "k", "scalar", "multiplier_exponent")]
    lines += [f"s1: {canonical_text(s1)}", f"s2: {canonical_text(s2)}"]
    lines += [f"{k}: {_passfail(v)}" for k, v in verdicts.items()]
    results = {
        "parameters": dict(params),
        "s1": _element_terms(s1),
        "s2": _element_terms(s2),
    }
    if p != 3:
        diag = noncommuting_pair_diagnostics(p)
        verdicts["residue_check"] = diag.residue_check
        lines += [
            f"u2: {canonical_text(diag.u2)}",
            f"v2: {canonical_text(diag.v2)}",
            f"u3: {canonical_text(diag.u3)}",
            f"v3: {canonical_text(diag.v3)}",
            f"residue_check: {_passfail(diag.residue_check)}",
        ]
        results.update(
            {
                "u2": _element_terms(diag.u2),
                "v2": _element_terms(diag.v2),
                "u3": _element_terms(diag.u3),
                "v3": _element_terms(diag.v3),
            }
        )
    payload = {
        "command": "reproduce",
        "group": {"spec": spec, "order": group.order},
        "parameters": dict(params),
        "results": results,
        "verdicts": verdicts,
    }
    _emit(args, lines, payload)
    return EXIT_OK if all(verdicts.values()) else EXIT_FAILURE


def _cmd_hoechsmann(args) -> int:
    group = parse_group_spec(args.spec)
    x = group.element_named(args.element)
    params = HoechsmannParams(x, element_order(x), args.i, args.j, args.k)
    cert = hoechsmann(params)
    lines = [
        f"group: {args.spec} (order {group.order})",
        f"element: {args.element}",
        f"parameters: n={params.n} i={params.i} j={params.j} k={params.k} scalar={params.scalar}",
        f"unit: {canonical_text(cert.unit)}",
        f"inverse: {canonical_text(cert.inverse)}",
    ]
    payload = {
        "command": "hoechsmann",
        "group": {"spec": args.spec, "order": group.order},
        "parameters": {
            "element": args.element,
            "n": params.n,
            "i": params.i,
            "j": params.j,
            "k": params.k,
            "scalar": params.scalar,
        },
        "results": {
            "unit": _element_terms(cert.unit),
            "inverse": _element_terms(cert.inverse),
        },
        "verdicts": {"certified": True},
    }
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_bicyclic(args) -> int:
    group = parse_group_spec(args.spec)
    x = group.element_named(args.x)
    y = group.element_named(args.y)
    cert = bicyclic(x, y)
    uus, usu = symmetric_products(cert)
    commute = not commutator_nonzero(uus.unit, usu.unit)
    lines = [
        f"group: {args.spec} (order {group.order})",
        f"x: {args.x}",
        f"y: {args.y}",
        f"unit: {canonical_text(cert.unit)}",
        f"inverse: {canonical_text(cert.inverse)}",
        f"uu*: {canonical_text(uus.unit)}",
        f"u*u: {canonical_text(usu.unit)}",
        f"uu* and u*u commute: {_yesno(commute)}",
    ]
    payload = {
        "command": "bicyclic",
        "group": {"spec": args.spec, "order": group.order},
        "parameters": {"x": args.x, "y": args.y},
        "results": {
            "unit": _element_terms(cert.unit),
            "inverse": _element_terms(cert.inverse),
            "uu_star": _element_terms(uus.unit),
            "u_star_u": _element_terms(usu.unit),
        },
        "verdicts": {"products_commute": commute},
    }
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_search_units(args) -> int:
    group = parse_group_spec(args.spec)
    result = bounded_unit_search(group, args.bound)
    lines = [
        f"group: {args.spec} (order {group.order})",
        f"bound: {result.bound}",
        f"units found: {len(result.units_found)}",
    ]
    lines += [f"unit: {canonical_text(c.unit)}" for c in result.units_found]
    lines.append(f"all trivial: {_yesno(result.all_trivial)}")
    payload = {
        "command": "search-units",
        "group": {"spec": args.spec, "order": group.order},
        "parameters": {"bound": result.bound},
        "results": {
            "count": len(result.units_found),
            "units": [_element_terms(c.unit) for c in result.units_found],
        },
        "verdicts": {"all_trivial": result.all_trivial},
    }
    _emit(args, lines, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zgring",
        description="Exact unit computations in integral group rings of finite groups.",
    )
    parser.add_argument(
        "--backend-info",
        action="store_true",
        help="print which kernel backend is active and exit",
    )
    sub = parser.add_subparsers(dest="command")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("criterion", _cmd_criterion, "decide whether the symmetric units form a group")
    sp.add_argument("spec")

    sp = add("counterexample", _cmd_counterexample, "construct noncommuting symmetric units")
    sp.add_argument("spec")

    sp = add("reproduce", _cmd_reproduce, "run the Q8xCp noncommuting-pair computation")
    sp.add_argument("--p", type=int, required=True, help="odd prime (3..13)")

    sp = add("hoechsmann", _cmd_hoechsmann, "build a Hoechsmann unit")
    sp.add_argument("spec")
    sp.add_argument("--element", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("bicyclic", _cmd_bicyclic, "build a bicyclic unit and its symmetric products")
    sp.add_argument("spec")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)

    sp = add("search-units", _cmd_search_units, "exhaustive unit search in a coefficient box")
    sp.add_argument("spec")
    sp.add_argument("--bound", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        sys.stdout.write(f"backend: {BACKEND}\n")
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    raise SystemExit(main())
