"""Command line: orbit tables, spectra and the verification suites.

    smallorbits orbits --n 4
    smallorbits spectrum --n 4 --orbit 3,2,2,1 --psi 3 --cutoff 4
    smallorbits verify matchup --n 4 --cutoff 8

Exit status: 0 when every check passed (findings included), 1 when a check
failed, 2 for bad arguments, 3 when a capacity bound was hit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import oracle, rootsys, spectra, verify
from .orbits import (OrbitError, component_group, enumerate_small_orbits,
                     infinitesimal_character_for, parse_orbit)

SCHEMA_VERSION = "1.0"
SUITES = ("matchup", "oracle", "clifford", "bgg", "pinrep", "all")


def load_schema() -> dict:
    from importlib import resources
    return json.loads(resources.files("smallorbits").joinpath("report_schema.json").read_text())


def make_report(command: str, inputs: dict, results: list, findings: list,
                header: Optional[str] = None, timing: Optional[dict] = None) -> dict:
    failed = sum(1 for r in results if r.get("ok") is False)
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "summary": {"items": len(results), "passed": len(results) - failed,
                    "failed": failed, "findings": len(findings)},
        "findings": findings,
    }
    if header is not None:
        rep["header"] = header
    if timing is not None:
        rep["timing"] = timing
    return rep


# ---------------------------------------------------------------------------
# commands

def cmd_orbits(n: int) -> dict:
    if not 2 <= n <= 16:
        raise OrbitError("n must satisfy 2 <= n <= 16")
    rows = []
    for label, case, dim in enumerate_small_orbits(n):
        lam = infinitesimal_character_for(label)
        rows.append({
            "item": str(label),
            "partition": label.spec(),
            "case": case,
            "dim": dim,
            "A_SO": component_group(label, "SO").group_type,
            "A_Spin": component_group(label, "Spin").group_type,
            "lambda_O": str(lam),
        })
    return make_report("orbits", {"n": n}, rows, [])


def cmd_spectrum(n: int, orbit: str, psi: Optional[str], xi: Optional[str], cutoff,
                 kind: str = "sum") -> dict:
    label = parse_orbit(orbit, n)
    if (psi is None) == (xi is None):
        raise spectra.SelectorError("give exactly one of --psi or --xi")
    fam = spectra.regular_section_family(label, psi) if psi is not None else spectra.unipotent_family(label, xi)
    weights = spectra.enumerate_family(fam, cutoff, kind)
    rows = [{"item": str(w), "weight": [str(c) for c in w.coords], "dim": rootsys.weyl_dim(w)} for w in weights]
    inputs = {"n": n, "orbit": label.spec(), "psi": psi, "xi": xi, "cutoff": str(Fraction(cutoff)), "cutoff_kind": kind}
    return make_report("spectrum", inputs, rows, [], header=fam.describe())


def cmd_verify(suite: str, n: Optional[int], cutoff, p: Optional[int] = None, max_dim: Optional[int] = None,
               samples: int = 500, timing: bool = False) -> dict:
    if suite not in SUITES:
        raise spectra.SelectorError(f"unknown suite {suite!r}")
    results, findings, times = [], [], {}
    plan = [suite] if suite != "all" else ["matchup", "clifford", "bgg", "pinrep", "oracle"]
    for name in plan:
        t0 = time.perf_counter()
        if name == "matchup":
            r, f = verify.suite_matchup(n or 4, 8 if cutoff is None else cutoff)
        elif name == "oracle":
            nn = n or 4
            if suite == "all" and nn > 4:
                continue
            r, f = verify.suite_oracle(nn, 4 if cutoff is None else cutoff, max_dim or oracle.D_MAT)
        elif name == "clifford":
            r, f = verify.suite_clifford(n or 4)
        elif name == "bgg":
            nn = n or 4
            if suite == "all" and (nn % 2 or nn < 4):
                continue
            r, f = verify.suite_bgg(nn, samples)
        else:
            r, f = verify.suite_pinrep([p] if p else (2, 3, 4), max_dim or rootsys.D_CHAR)
        for item in r:
            item.setdefault("suite", name)
        results += r
        findings += f
        times[name] = round(time.perf_counter() - t0, 3)
    inputs = {"suite": suite, "n": n, "cutoff": None if cutoff is None else str(cutoff), "p": p,
              "max_dim": max_dim, "samples": samples}
    return make_report("verify", inputs, results, findings, timing=times if timing else None)


# ---------------------------------------------------------------------------
# rendering

def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return str(v)


def _table_block(out, rows) -> None:
    cols = list(rows[0])
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def render_table(rep: dict) -> str:
    out = io.StringIO()
    if rep.get("header"):
        out.write(rep["header"] + "\n")
    # consecutive rows with the same fields share one block
    block: list = []
    for r in rep["results"]:
        if block and list(r) != list(block[0]):
            _table_block(out, block)
            out.write("\n")
            block = []
        block.append(r)
    if block:
        _table_block(out, block)
    s = rep["summary"]
    out.write(f"items {s['items']}  passed {s['passed']}  failed {s['failed']}  findings {s['findings']}\n")
    for f in rep["findings"]:
        out.write(f"finding [{f['id']}] {f['message']}\n")
    for k, v in (rep.get("timing") or {}).items():
        out.write(f"time {k}: {v}s\n")
    return out.getvalue()


def render_csv(rep: dict) -> str:
    out = io.StringIO()
    rows = rep["results"]
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return out.getvalue()


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return render_csv(rep)
    return render_table(rep)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smallorbits", description="Small nilpotent orbits of so(2n) and their K-spectra.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("orbits", help="table of small orbits")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("spectrum", help="enumerate a K-type family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orbit", required=True, help="parts, e.g. 3,2,2,1 or 2,2,2,2:I")
    p.add_argument("--psi")
    p.add_argument("--xi")
    p.add_argument("--cutoff", type=Fraction, default=Fraction(4))
    p.add_argument("--cutoff-kind", choices=("sum", "a1"), default="sum")
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", choices=SUITES)
    p.add_argument("--suite", dest="suite_opt", choices=SUITES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--cutoff", type=Fraction)
    p.add_argument("--max-dim", type=int)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--timing", action="store_true", help="include wall-clock times (breaks byte-identical output)")
    common(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "orbits":
            rep = cmd_orbits(args.n)
        elif args.command == "spectrum":
            rep = cmd_spectrum(args.n, args.orbit, args.psi, args.xi, args.cutoff, args.cutoff_kind)
        else:
            suite = args.suite_opt or args.suite
            if suite is None:
                ap.error("verify needs a suite")
            rep = cmd_verify(suite, args.n, args.cutoff, args.p, args.max_dim, args.samples, args.timing)
    except rootsys.CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except (OrbitError, spectra.SelectorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(rep, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if rep["summary"]["failed"] else 0


if __name__ == "__main__":
    sys.exit(main())
