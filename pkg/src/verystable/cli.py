"""Command-line front end.

Every subcommand is turned into a :class:`Scenario` and run through
:func:`run_scenario`, so single commands and ``batch`` lines behave the same.

Exit codes: 0 success (very stable / all table rows match), 3 negative
outcome of a successful run (wobbly, table mismatch), 1 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import equivmult, hecke, rootsys
from .polyfactor import NotPolynomial, to_polynomial

COMMANDS = ("classify", "mult", "dynkin", "witness", "minuscule", "table1", "feasible")

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE = 0, 1, 3


@dataclass(frozen=True)
class Scenario:
    command: str
    type: str
    divisor: str | None = None
    coweight: str | None = None
    genus: tuple[int, ...] = (2,)
    basis: str = "coweight"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.basis not in ("coweight", "coroot"):
            raise ValueError(f"unknown basis {self.basis!r}")
        g = self.genus
        genus = (g,) if isinstance(g, int) else tuple(int(x) for x in g)
        if not genus:
            raise ValueError("empty genus list")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "type", "+".join(str(t) for t in rootsys.parse_type(self.type)))

    @classmethod
    def from_dict(cls, d: dict) -> Scenario:
        unknown = set(d) - {"command", "type", "divisor", "coweight", "genus", "basis"}
        if unknown:
            raise ValueError(f"unknown scenario keys {sorted(unknown)}")
        if "command" not in d or "type" not in d:
            raise ValueError("scenario needs 'command' and 'type'")
        return cls(**d)

    def to_dict(self) -> dict:
        out = {"command": self.command, "type": self.type, "genus": list(self.genus), "basis": self.basis}
        if self.divisor is not None:
            out["divisor"] = self.divisor
        if self.coweight is not None:
            out["coweight"] = self.coweight
        return out


def _coweight(rs: rootsys.RootSystem, text: str | None, basis: str) -> rootsys.Coweight:
    if text is None:
        raise ValueError("missing coweight")
    text = text.strip()
    coords = tuple(int(x) for x in text.split(",")) if text else (0,) * rs.rank
    if len(coords) != rs.rank:
        raise ValueError(f"coweight {text!r} has {len(coords)} coordinates, {rs.name} has rank {rs.rank}")
    if basis == "coroot":
        return rs.from_coroot_basis(coords)
    return rootsys.Coweight(coords)


def _divisor(rs: rootsys.RootSystem, text: str | None, basis: str) -> hecke.MultiplicityDivisor:
    # parse coordinates first so that a non-dominant coroot-basis entry is
    # judged after conversion
    entries = {}
    for chunk in (text or "").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        label, sep, coords = chunk.partition(":")
        if not sep or not label.strip():
            raise ValueError(f"malformed divisor entry {chunk!r}")
        if label.strip() in entries:
            raise ValueError(f"duplicate point label {label.strip()!r}")
        entries[label.strip()] = _coweight(rs, coords, basis)
    return hecke.MultiplicityDivisor(entries)


def _witness_json(root: rootsys.Root, co: rootsys.Coweight) -> dict:
    return {"alpha_coroot_coords": list(co.coords), "root_coords": list(root.simple_coords)}


def run_scenario(sc: Scenario) -> tuple[dict, int]:
    """Execute one scenario; raises ``ValueError`` on bad input."""
    rs = rootsys.build(sc.type)
    if sc.command == "classify":
        verdict = hecke.classify(rs, _divisor(rs, sc.divisor, sc.basis))
        return verdict.to_json(), EXIT_OK if verdict.very_stable else EXIT_NEGATIVE

    if sc.command == "table1":
        rows = equivmult.table1(rs, sc.genus)
        ok = all(r["matches_table1"] and r["matches_dynkin"] for r in rows)
        return {"rows": rows}, EXIT_OK if ok else EXIT_NEGATIVE

    if sc.command == "minuscule" and sc.coweight is None:
        return {"minuscule_fundamentals": sorted(rootsys.minuscule_fundamentals(rs))}, EXIT_OK

    mu = _coweight(rs, sc.coweight, sc.basis)
    if sc.command == "minuscule":
        return {"coweight": list(mu.coords), "minuscule": rootsys.is_minuscule(rs, mu)}, EXIT_OK
    if sc.command == "mult":
        return equivmult.multiplicity_report(rs, mu, sc.genus), EXIT_OK
    if sc.command == "dynkin":
        d = equivmult.dynkin_polynomial(rs, mu)
        p = to_polynomial(d)
        return {
            "coweight": list(mu.coords),
            "factored": d.render(),
            "polynomial_coeffs": "not_polynomial" if isinstance(p, NotPolynomial) else list(p.coeffs),
            "weyl_dimension": equivmult.weyl_dimension(rs, mu),
        }, EXIT_OK
    if sc.command == "witness":
        root, co = hecke.wobbly_witness(rs, mu)
        return {"coweight": list(mu.coords), **_witness_json(root, co)}, EXIT_OK
    if sc.command == "feasible":
        dec = hecke.component_feasible(rs, mu)
        return {
            "coweight": list(mu.coords),
            "feasible": dec is not None,
            "decomposition": None if dec is None else {str(k): v for k, v in dec.items()},
        }, EXIT_OK if dec is not None else EXIT_NEGATIVE
    raise AssertionError(sc.command)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _pretty(sc: Scenario, result: dict) -> str:
    lines = [f"{sc.command} {sc.type}"]
    if "rows" in result:
        lines.append(f"{'i':>3}  {'table':>5}  {'dynkin':>6}  m(t)")
        for r in result["rows"]:
            lines.append(
                f"{r['index']:>3}  {str(r['matches_table1']):>5}  {str(r['matches_dynkin']):>6}  {r['factored']}"
            )
        return "\n".join(lines)
    for k in sorted(result):
        lines.append(f"  {k}: {result[k]}")
    return "\n".join(lines)


def _run_one(sc: Scenario, pretty: bool) -> int:
    try:
        result, code = run_scenario(sc)
    except (ValueError, IndexError) as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    print(_pretty(sc, result) if pretty else dumps(result))
    return code


def _batch_line(line: str) -> tuple[str, bool]:
    try:
        sc = Scenario.from_dict(json.loads(line))
        result, code = run_scenario(sc)
    except (ValueError, TypeError, IndexError, json.JSONDecodeError) as exc:
        return dumps({"error": str(exc), "input": line.strip(), "ok": False}), False
    return dumps({"exit": code, "ok": True, "result": result, "scenario": sc.to_dict()}), True


def run_batch(path: str, jobs: int = 1, out=None) -> int:
    out = out or sys.stdout
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(_batch_line, lines))
    else:
        results = [_batch_line(ln) for ln in lines]
    failed = 0
    for text, ok in results:
        print(text, file=out)
        failed += not ok
    print(f"batch: {len(results)} scenarios, {failed} failed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, nargs="+", help="curve genus (default 2; table1: 2 3)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    common.set_defaults(pretty=False)
    common.add_argument(
        "--basis", choices=("coweight", "coroot"), default="coweight",
        help="basis of input coordinates (default: fundamental coweights)",
    )

    p = argparse.ArgumentParser(prog="verystable", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="very stable or wobbly, with witnesses")
    s.add_argument("type")
    s.add_argument("divisor", help='e.g. "c1:1,0;c2:0,1"')
    for name, help_ in [
        ("mult", "virtual equivariant multiplicity"),
        ("dynkin", "Dynkin polynomial and Weyl dimension"),
        ("witness", "wobbly witness coroot for a non-minuscule coweight"),
        ("feasible", "decompose into minuscule fundamental coweights"),
    ]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("type")
        s.add_argument("coweight", help='comma-separated, e.g. "1,0,0"')
    s = sub.add_parser("minuscule", parents=[common], help="minuscule test or list")
    s.add_argument("type")
    s.add_argument("coweight", nargs="?")
    s = sub.add_parser("table1", parents=[common], help="recompute minuscule multiplicity table rows")
    s.add_argument("type")
    s = sub.add_parser("batch", help="run a JSON-lines scenario file")
    s.add_argument("file")
    s.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        try:
            return run_batch(args.file, args.jobs)
        except OSError as exc:
            print(dumps({"error": str(exc)}), file=sys.stderr)
            return EXIT_INPUT
    genus = args.genus or ([2, 3] if args.command == "table1" else [2])
    try:
        sc = Scenario(
            command=args.command,
            type=args.type,
            divisor=getattr(args, "divisor", None),
            coweight=getattr(args, "coweight", None),
            genus=tuple(genus),
            basis=args.basis,
        )
    except ValueError as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    return _run_one(sc, args.pretty)


if __name__ == "__main__":
    sys.exit(main())
