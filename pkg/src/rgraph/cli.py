"""Command-line front end: ``rgraph eval|table|check|unlinked``.

Exit codes are 0 on success, 1 when a comparison or property check
fails, and 2 when an input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence, TextIO

from .diagram import (
    Diagram,
    DiagramError,
    _INVERSE_KINDS,
    applicable_moves,
    apply_move,
    faces,
    parse_diagram,
    random_move,
    render,
    validate,
)
from .invariant import InvariantReport, evaluate, r_graph
from .oracles import screen_unlinked, skein_relation_check
from .polyring import format_value

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

EXPECTED_FILE = "expected.txt"


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    paths: list[str]
    format: str = "text"
    seed: int = 0
    iters: int = 100
    corpus: str | None = None


def load_diagram(path: str | Path) -> Diagram:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        d = parse_diagram(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from exc
    problems = validate(d)
    if problems:
        raise InputError(f"{path}: " + "; ".join(problems))
    return d


def report_fields(rep: InvariantReport) -> list[str]:
    """Canonical R followed by its values at 2, 1 and -1."""
    return [rep.r.format()] + [format_value(v) for v in rep.values()]


def report_json(rep: InvariantReport) -> dict:
    return {
        "num": rep.r.num.ascending(),
        "den_pow_l1": rep.r.den_a,
        "den_pow_l2": rep.r.den_b,
        "special": {k: format_value(v) for k, v in zip(("2", "1", "-1"), rep.values())},
    }


# -- eval ------------------------------------------------------------------


def cmd_eval(cfg: CliConfig, out: TextIO) -> int:
    results = []
    for path in cfg.paths:
        rep = evaluate(load_diagram(path))
        if cfg.format == "json":
            results.append({"file": path, **report_json(rep)})
            continue
        r, at2, at1, atm1 = report_fields(rep)
        if len(cfg.paths) > 1:
            print(f"{path}:", file=out)
        print(f"R = {r}", file=out)
        print(f"R(2) = {at2}\nR(1) = {at1}\nR(-1) = {atm1}", file=out)
    if cfg.format == "json":
        payload = results[0] if len(results) == 1 else results
        if isinstance(payload, dict):
            payload.pop("file")
        print(json.dumps(payload), file=out)
    return EXIT_OK


# -- table -----------------------------------------------------------------


def read_expectations(path: Path) -> dict[str, list[str]]:
    """Tab-separated rows: file, R, R(2), R(1), R(-1); ``#`` starts a comment."""
    rows: dict[str, list[str]] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise InputError(f"{path}:{lineno}: expected 5 tab-separated fields")
        rows[fields[0]] = [f.strip() for f in fields[1:]]
    return rows


def default_corpus() -> Path:
    return Path(str(resources.files("rgraph") / "data" / "gallery"))


def table_rows(corpus: Path) -> list[dict]:
    """One dict per row with ``status`` in pass, fail or skipped."""
    expect_path = corpus / EXPECTED_FILE
    if not expect_path.is_file():
        raise InputError(f"{corpus}: no {EXPECTED_FILE}")
    expected = read_expectations(expect_path)
    files = sorted(p.name for p in corpus.glob("*.pd"))
    names = list(expected) + [f for f in files if f not in expected]
    rows = []
    for name in names:
        row = {"file": name, "expected": expected.get(name)}
        if name not in files:
            row.update(status="skipped", reason="no diagram file")
        elif name not in expected:
            row.update(status="skipped", reason="no expectation")
        if "status" in row:
            rows.append(row)
            continue
        got = report_fields(evaluate(load_diagram(corpus / name)))
        row.update(got=got, status="pass" if got == expected[name] else "fail")
        rows.append(row)
    return rows


def cmd_table(cfg: CliConfig, out: TextIO) -> int:
    corpus = Path(cfg.corpus) if cfg.corpus else default_corpus()
    rows = table_rows(corpus)
    if cfg.format == "json":
        print(json.dumps(rows), file=out)
    else:
        for row in rows:
            tag = row["status"].upper()
            if row["status"] == "skipped":
                print(f"{tag:7} {row['file']}  ({row['reason']})", file=out)
            elif row["status"] == "pass":
                print(f"{tag:7} {row['file']}  " + "  ".join(row["got"]), file=out)
            else:
                print(f"{tag:7} {row['file']}", file=out)
                print("        expected " + "  ".join(row["expected"]), file=out)
                print("        got      " + "  ".join(row["got"]), file=out)
        counts = {s: sum(r["status"] == s for r in rows) for s in ("pass", "fail", "skipped")}
        print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped", file=out)
    return EXIT_FAIL if any(r["status"] == "fail" for r in rows) else EXIT_OK


# -- check -----------------------------------------------------------------


def _skein_sample(d: Diagram, rng: random.Random, count: int) -> list[tuple[str, bool]]:
    sides_by_face = [f for f in faces(d) if len(f) >= 2] if d.nodes else []
    checks = []
    for _ in range(count if sides_by_face else 0):
        face = rng.choice(sides_by_face)
        e, f = rng.sample(face, 2)
        checks.append((f"cubic_R at ({e.label}, {f.label})", skein_relation_check("cubic_R", d, e, f)))
        if not d.n_vertices:
            ok = skein_relation_check("quadratic_bracket", d, e, f)
            checks.append((f"quadratic_bracket at ({e.label}, {f.label})", ok))
    return checks


def invariance_run(d: Diagram, seed: int, iters: int):
    """Random walk checking R after every move and one inverse per growing move.

    Returns ``(ok, trace, counterexample)`` where a counterexample is the
    diagram and single move that changed R.
    """
    rng = random.Random(seed)
    target = r_graph(d)
    max_nodes = len(d.nodes) + 8
    trace: list[str] = []
    current = d
    for step in range(iters):
        m = random_move(current, rng, max_nodes=max_nodes)
        if m is None:
            trace.append(f"{step}: no applicable move")
            break
        nxt = apply_move(current, m)
        trace.append(f"{step}: {m}")
        if r_graph(nxt) != target or validate(nxt):
            return False, trace, (current, m)
        inverse = _INVERSE_KINDS.get(m.move)
        options = applicable_moves(nxt, [inverse]) if inverse else []
        if options:
            back = rng.choice(options)
            if r_graph(apply_move(nxt, back)) != target:
                trace.append(f"{step}: inverse {back}")
                return False, trace, (nxt, back)
        current = nxt
    return True, trace, None


def cmd_check(cfg: CliConfig, out: TextIO) -> int:
    status = EXIT_OK
    for path in cfg.paths:
        d = load_diagram(path)
        ok, trace, bad = invariance_run(d, cfg.seed, cfg.iters)
        skein = _skein_sample(d, random.Random(cfg.seed), 3)
        print(f"{path}: R = {r_graph(d).format()}", file=out)
        print(f"  moves: {len(trace)} applied, {'invariant' if ok else 'VIOLATION'}", file=out)
        if not ok:
            status = EXIT_FAIL
            print("  trace:", file=out)
            for line in trace:
                print(f"    {line}", file=out)
            before, move = bad
            print(f"  counterexample: {move} on", file=out)
            for line in render(before).splitlines():
                print(f"    {line}", file=out)
        for name, passed in skein:
            print(f"  skein {name}: {'ok' if passed else 'MISMATCH'}", file=out)
            if not passed:
                status = EXIT_FAIL
    return status


# -- unlinked --------------------------------------------------------------


def cmd_unlinked(cfg: CliConfig, out: TextIO) -> int:
    for path in cfg.paths:
        report = screen_unlinked(load_diagram(path))
        if cfg.format == "json":
            rows = [{"components": n, "num": r.ascending(), "crossings": link.n_crossings} for link, r, n in report.links]
            print(json.dumps({"file": path, "verdict": report.verdict, "links": rows}), file=out)
            continue
        print(f"{path}:", file=out)
        for link, r, n in report.links:
            print(f"  {n} component(s), {link.n_crossings} crossing(s): R = {r.format()}", file=out)
        print(f"  verdict: {report.verdict}", file=out)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "check": cmd_check, "unlinked": cmd_unlinked}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgraph", description="Invariant R(L) of links and 4-valent embedded graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", parents=[fmt], help="print R and its values at 2, 1, -1")
    p.add_argument("paths", nargs="+", metavar="FILE")

    p = sub.add_parser("table", parents=[fmt], help="compare a corpus against expected.txt")
    p.add_argument("--corpus", help="directory of .pd files (default: bundled table)")

    p = sub.add_parser("check", help="random-move invariance and skein checks")
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=100)

    p = sub.add_parser("unlinked", parents=[fmt], help="screen constituent links")
    p.add_argument("paths", nargs="+", metavar="FILE")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    cfg = CliConfig(
        command=args.command,
        paths=getattr(args, "paths", []),
        format=getattr(args, "format", "text"),
        seed=getattr(args, "seed", 0),
        iters=getattr(args, "iters", 100),
        corpus=getattr(args, "corpus", None),
    )
    if cfg.seed < 0 or cfg.iters < 0:
        print("rgraph: --seed and --iters must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[cfg.command](cfg, out)
    except InputError as exc:
        print(f"rgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
