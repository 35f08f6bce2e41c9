"""``xmodc <command> <file> [--oracle] [--seed N] [--budget N] [--format text|json]``.

Exit status is 0 when every check passes, 1 when a check fails or a search
budget runs out, and 2 when the input cannot be read or does not suit the
command.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from . import reporting as rp
from .errors import (
    AxiomViolation,
    BudgetExceeded,
    CheckFailure,
    NotLie,
    ParseError,
    XmodError,
)

COMMANDS = ("verify", "centre", "invariants", "cohomology", "norrie", "drinfeld-check", "lie-centre", "report")

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class InputMismatch(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xmodc", description="Centres of crossed modules of groups and Lie algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="JSON input; bare names are also looked up in the bundled corpus")
    p.add_argument("--oracle", action="store_true", help="also run the independent brute-force cross-checks")
    p.add_argument("--seed", type=int, default=1, help="first seed for the randomised choices (default 1)")
    p.add_argument("--budget", type=int, default=None, help="node budget for the exhaustive searches")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def sections_for(command: str, inp, opts: rp.Options) -> list:
    kind = inp.kind
    allowed = {"group": rp.GROUP_COMMANDS, "xmod": rp.XMOD_COMMANDS, "lie_xmod": rp.LIE_COMMANDS}[kind]
    if command not in allowed:
        raise InputMismatch(f"command {command!r} does not apply to a {kind} input (try one of {', '.join(allowed)})")
    if kind == "group":
        return rp.group_sections(inp.group, opts)
    if kind == "xmod":
        return rp.xmod_sections(command, inp, opts)
    return rp.lie_sections(command, inp, opts)


def _error(kind: str, exc: Exception) -> dict:
    out = {"kind": kind, "type": type(exc).__name__, "message": str(exc)}
    attrs = ("location",) if isinstance(exc, ParseError) else ("witness", "stage", "axiom")
    for attr in attrs:
        v = getattr(exc, attr, None)
        if v is not None:
            out[attr] = rp.plain(v)
    return out


def run(command: str, path: str, opts: rp.Options):
    """``(exit status, document)`` where the document is what gets rendered."""
    doc = {"command": command, "input": path, "ok": False, "sections": [], "error": None}
    status = EXIT_OK
    try:
        inp = io.load(path)
        doc["kind"] = inp.kind
        sections = sections_for(command, inp, opts)
        doc["sections"] = sections
        doc["ok"] = all(s.ok for s in sections)
        status = EXIT_OK if doc["ok"] else EXIT_CHECK
    except (ParseError, InputMismatch, OSError) as exc:
        doc["error"] = _error("input", exc)
        status = EXIT_INPUT
    except (AxiomViolation, NotLie, CheckFailure, BudgetExceeded) as exc:
        doc["error"] = _error("check", exc)
        status = EXIT_CHECK
    except XmodError as exc:
        # malformed tables (not a group, not a homomorphism, wrong shapes)
        doc["error"] = _error("input", exc)
        status = EXIT_INPUT
    return status, doc


def to_json(doc: dict) -> dict:
    out = dict(doc)
    out["sections"] = [s.to_json() for s in doc["sections"]]
    return out


def to_text(doc: dict) -> str:
    lines = []
    for s in doc["sections"]:
        lines.extend(s.text_lines())
        lines.append("")
    err = doc["error"]
    if err:
        witness = f" (witness {rp.fmt(err['witness'])})" if "witness" in err else ""
        lines.append(f"error [{err['type']}]: {err['message']}{witness}")
    lines.append("OK" if doc["ok"] else "FAILED")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = rp.Options(oracle=args.oracle, seed=args.seed, budget=args.budget)
    status, doc = run(args.command, args.file, opts)
    if args.format == "json":
        json.dump(to_json(doc), sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        print(to_text(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
