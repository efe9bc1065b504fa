"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 a verification failed,
2 usage or parse error, 3 a size cap or rewrite budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from typing import Sequence

from . import __version__
from .bricks import BrickSpace, compositions, verify_brick_theorems
from .config import FORMATS, SUITES, RunConfig, apply_env, parse_int_list
from .garnir import COLUMN, ROW, GarnirError, garnir_data
from .ground import GroundError
from .klr import KlrError
from .modules import laurent_to_json, laurent_to_text
from .perms import POLICY, BudgetExceeded
from .report import Report
from .soundness import engine_soundness, rewriter_confluence
from .specht import ResourceCap, SpechtError, SpechtModule, garnir_element
from .tableaux import ParseError, parse_node, parse_shape, parse_tableau
from .verify import (
    dual_degree_formula,
    bruhat_adjacent_filter,
    verify_duality,
    verify_induction,
    verify_sign_twist,
    verify_specht,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    """A required option is missing or inconsistent."""


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--e", type=int, help="quiver parameter e (0 or at least 2)")
    parser.add_argument("--charge", help="multicharge, comma separated, e.g. 0,1")
    parser.add_argument("--shape", help='multipartition, components separated by "|", e.g. "3,1|2,2"')
    parser.add_argument("--orientation", choices=(ROW, COLUMN), help="row or column modules")
    parser.add_argument("--out", help="write the output to this file instead of stdout")
    parser.add_argument("--format", choices=FORMATS, help="output format")
    parser.add_argument("--cap", type=int, help="largest permutation module to build")
    parser.add_argument("--budget", type=int, help="rewrite step budget")
    parser.add_argument("--seed", type=int, help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrspecht", description="Graded Specht modules of cyclotomic KLR algebras."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", help="standard basis and graded character of a Specht module")
    _common(p)

    p = sub.add_parser("garnir", help="Garnir belt, bricks and Garnir element at a node")
    _common(p)
    p.add_argument("--node", required=True, help="node as row,col,component")

    for name in ("verify", "verify-braid"):
        p = sub.add_parser(name, help="run verification suites")
        _common(p)
        if name == "verify":
            p.add_argument("--suite", choices=SUITES, help="which suite to run")
        p.add_argument("--k", type=int, help="number of bricks for the braid suite")
        p.add_argument("--lambda", dest="lam", help="composition of k for the braid suite")

    p = sub.add_parser("straighten", help="expand a strict tableau in the standard basis")
    _common(p)
    p.add_argument("--tableau", required=True, help='rows separated by "|", components by ";"')
    return parser


def config_from_args(args: argparse.Namespace, environ: dict | None = None) -> RunConfig:
    """Defaults, then KLRSPECHT_ environment variables, then explicit flags."""
    config = apply_env(RunConfig(), environ)
    updates = {}
    for key in ("e", "shape", "orientation", "out", "format", "cap", "budget", "seed", "k", "node", "tableau"):
        value = getattr(args, key, None)
        if value is not None:
            updates[key] = value
    if getattr(args, "charge", None) is not None:
        updates["charge"] = parse_int_list(args.charge)
    if getattr(args, "lam", None) is not None:
        updates["lam"] = parse_int_list(args.lam)
    if args.command == "verify-braid":
        updates["suite"] = "braid"
    elif getattr(args, "suite", None) is not None:
        updates["suite"] = args.suite
    return replace(config, **updates)


def _header(config: RunConfig, command: str) -> dict:
    return {
        "version": __version__,
        "policy": POLICY,
        "command": command,
        "ground": config.ground.to_json(),
    }


def _shape(config: RunConfig):
    if config.shape is None:
        raise UsageError("--shape is required for this command")
    mu = parse_shape(config.shape)
    if mu.level != len(config.charge):
        raise UsageError(f"shape has {mu.level} components but --charge has {len(config.charge)} entries")
    return mu


# ---------------------------------------------------------------------------
# Commands


def cmd_character(config: RunConfig) -> tuple[dict, int]:
    mu = _shape(config)
    S = SpechtModule(mu, config.ground, config.orientation, config.specht)
    basis = [
        {"tableau": t.to_text(), "degree": deg, "residues": list(res)}
        for t, deg, res in zip(S.standard_tableaux, S.basis_degrees, S.basis_residues)
    ]
    char = [
        {"degree": deg, "residues": list(res), "multiplicity": mult}
        for deg, res, mult in S.character().to_rows()
    ]
    gdim = S.graded_dimension()
    out = {
        "shape": mu.to_text(),
        "orientation": config.orientation,
        "rank": S.rank,
        "basis": basis,
        "character": char,
        "gradeddim": laurent_to_json(gdim),
        "gradeddim_text": laurent_to_text(gdim),
    }
    return out, EXIT_OK


def cmd_garnir(config: RunConfig) -> tuple[dict, int]:
    mu = _shape(config)
    node = parse_node(config.node or "")
    data = garnir_data(mu, node, config.orientation, config.ground)
    elem = garnir_element(mu, node, config.orientation, config.ground, config.budget)
    out = data.to_json() | {
        "shape": mu.to_text(),
        "coset_count": len(data.coset_perms),
        "element": str(elem.element),
        "element_terms": len(elem.element.terms),
        "element_degree": elem.degree,
    }
    return out, EXIT_OK


def _braid_reports(config: RunConfig) -> list[Report]:
    if config.lam is not None:
        lams = [config.lam]
        if config.k is not None and sum(config.lam) != config.k:
            raise UsageError(f"--lambda {config.lam} is not a composition of --k {config.k}")
    elif config.k is not None:
        lams = compositions(config.k)
    else:
        raise UsageError("the braid suite needs --k or --lambda")
    i = config.charge[0] if config.charge else 0
    return [
        verify_brick_theorems(BrickSpace(config.e, lam, config.orientation, i, config.budget))
        for lam in lams
    ]


def cmd_verify(config: RunConfig) -> tuple[dict, int]:
    g = config.ground
    suite = config.suite
    reports: list[Report] = []
    wants = (lambda name: suite in (name, "all"))
    mu = parse_shape(config.shape) if config.shape is not None else None
    if mu is not None and mu.level != g.level:
        raise UsageError(f"shape has {mu.level} components but --charge has {g.level} entries")
    if suite in ("sign-twist", "duality", "induction") and mu is None:
        raise UsageError(f"the {suite} suite needs --shape")
    if wants("relations"):
        if mu is None:
            reports.append(engine_soundness(max_d=5, per_family=50, seed=config.seed))
            reports.append(rewriter_confluence(count=200, seed=config.seed))
        else:
            orients = (ROW, COLUMN) if suite == "all" else (config.orientation,)
            for o in orients:
                reports.append(verify_specht(SpechtModule(mu, g, o, config.specht)))
    if suite == "braid" or (suite == "all" and (config.k is not None or config.lam is not None)):
        reports.extend(_braid_reports(config))
    if mu is not None:
        if wants("sign-twist"):
            reports.append(verify_sign_twist(mu, g, config.specht))
        if wants("duality"):
            reports.append(verify_duality(mu, g, config.specht))
            reports.append(dual_degree_formula(mu, g, config.specht))
        if wants("induction"):
            reports.append(verify_induction(mu, g, config.specht))
        if suite == "all":
            reports.append(bruhat_adjacent_filter(mu))
    passed = all(r.passed for r in reports)
    first = next((r for r in reports if not r.passed), None)
    out = {
        "suite": suite,
        "passed": passed,
        "reports": [r.to_json() for r in reports],
    }
    if first is not None:
        fail = first.first_failure()
        out["first_failure"] = {"report": first.title, "check": fail.name if fail else None}
    return out, EXIT_OK if passed else EXIT_FAIL


def cmd_straighten(config: RunConfig) -> tuple[dict, int]:
    t = parse_tableau(config.tableau or "")
    if t.shape.level != config.ground.level:
        raise UsageError(
            f"tableau has {t.shape.level} components but --charge has {config.ground.level} entries"
        )
    strict = t.is_row_strict() if config.orientation == ROW else t.is_column_strict()
    if not strict:
        raise ParseError(f"{t.to_text()} is not {config.orientation}-strict")
    S = SpechtModule(t.shape, config.ground, config.orientation, config.specht)
    expansion = S.straighten(t)
    terms = [
        {"tableau": s.to_text(), "coefficient": c, "degree": S.tableau_degree(s)}
        for s, c in sorted(expansion.items(), key=lambda kv: kv[0].reading_word())
    ]
    out = {
        "tableau": t.to_text(),
        "orientation": config.orientation,
        "standard": t.is_standard(),
        "expansion": terms,
    }
    return out, EXIT_OK


COMMANDS = {
    "character": cmd_character,
    "garnir": cmd_garnir,
    "verify": cmd_verify,
    "verify-braid": cmd_verify,
    "straighten": cmd_straighten,
}


# ---------------------------------------------------------------------------
# Rendering


def _csv(command: str, payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if command == "character":
        writer.writerow(["degree", "residues", "multiplicity"])
        for row in payload["character"]:
            writer.writerow([row["degree"], " ".join(map(str, row["residues"])), row["multiplicity"]])
    elif command in ("verify", "verify-braid"):
        writer.writerow(["report", "check", "passed", "detail"])
        for rep in payload["reports"]:
            for c in rep["checks"]:
                writer.writerow([rep["title"], c["name"], c["passed"], c.get("detail", "")])
    elif command == "straighten":
        writer.writerow(["tableau", "coefficient", "degree"])
        for row in payload["expansion"]:
            writer.writerow([row["tableau"], row["coefficient"], row["degree"]])
    else:
        writer.writerow(["key", "value"])
        for key, value in payload.items():
            writer.writerow([key, json.dumps(value)])
    return buf.getvalue()


def _text(command: str, payload: dict) -> str:
    lines = []
    if command == "character":
        lines.append(f"shape {payload['shape']} ({payload['orientation']}), rank {payload['rank']}")
        for b in payload["basis"]:
            lines.append(f"  {b['tableau']:<24} deg {b['degree']:>3}  i = {' '.join(map(str, b['residues']))}")
        lines.append(f"graded dimension: {payload['gradeddim_text']}")
    elif command in ("verify", "verify-braid"):
        for rep in payload["reports"]:
            status = "PASS" if rep["passed"] else "FAIL"
            lines.append(f"{status} {rep['title']}")
            for c in rep["checks"]:
                if not c["passed"]:
                    lines.append(f"    failed {c['name']}: {json.dumps(c.get('witness'))}")
        lines.append("all passed" if payload["passed"] else "verification failed")
    elif command == "straighten":
        lines.append(f"{payload['tableau']} ->")
        if not payload["expansion"]:
            lines.append("  0")
        for row in payload["expansion"]:
            lines.append(f"  {row['coefficient']:+d} * {row['tableau']}  (deg {row['degree']})")
    else:
        for key, value in payload.items():
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def render(config: RunConfig, command: str, payload: dict) -> str:
    if config.format == "json":
        return json.dumps(_header(config, command) | payload, indent=2) + "\n"
    if config.format == "csv":
        return _csv(command, payload)
    return _text(command, payload)


def main(argv: Sequence[str] | None = None, environ: dict | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = config_from_args(args, environ)
        payload, code = COMMANDS[args.command](config)
    except (ResourceCap, BudgetExceeded) as exc:
        print(f"klrspecht: resource limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SpechtError as exc:
        print(f"klrspecht: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ParseError, GroundError, GarnirError, KlrError, ValueError) as exc:
        print(f"klrspecht: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(config, args.command, payload)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
