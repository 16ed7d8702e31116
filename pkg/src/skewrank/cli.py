"""Command-line front end.

Every command reads one or more input documents (files, or stdin when none is
given), runs a single exact computation and prints a report envelope.  Exit
codes: 0 for any definitive answer (a "false" verdict included), 1 for bad
input, 2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .bundles import plane_kernel_fingerprint
from .errors import (
    DimensionMismatch,
    InputError,
    MissingWitness,
    SkewRankError,
    UnknownCommand,
)
from .exterior import SkewTensor
from .fields import RATIONALS, parse_field
from .io import InputDocument, document_for, dumps, emit_document, parse_input, report_envelope
from .normal_forms import ELL_G, ELL_S, LABELS, canonical_label
from .order5 import classify_plane_order5
from .planes import (
    OrbitReport,
    classify_plane,
    no_constant_rank_3space,
    random_gl,
    random_plane,
    special_locus,
    verify_witness,
)
from .rank import MatrixSubspace, classify_line, constant_rank_four
from .stabilizer import orbit_dimension, stabilizer_algebra

log = logging.getLogger("skewrank")

COMMANDS = (
    "rank-check",
    "classify-line",
    "classify-plane",
    "classify-plane5",
    "special-locus",
    "stabilizer",
    "fingerprint",
    "gen",
    "verify-witness",
    "no-p3",
)

GEN_TYPES = LABELS + ("line_g", "line_s", "p3")


# ---------------------------------------------------------------------------
# commands on a parsed document


def _rank_check(space, doc):
    cert = constant_rank_four(space)
    return {"verdict": bool(cert), "certificate": cert.to_json()}


def _classify_line(space, doc):
    rep = classify_line(space)
    return {"kind": rep.kind, "witness": rep.to_json()}


def _classify_plane(space, doc):
    rep = classify_plane(space)
    out = rep.to_json()
    out["verified"] = verify_witness(rep, space)
    return out


def _classify_plane5(space, doc):
    if space.dim_v == 5:
        rep = classify_plane_order5(space)
        return {"label": "Plane5", "order5": rep.to_json(), "verified": rep.verify(space)}
    rep = classify_plane(space)
    if rep.label != "Plane5":
        return {"label": rep.label, "order5": None, "verified": verify_witness(rep, space)}
    out = rep.to_json()
    out["verified"] = verify_witness(rep, space)
    return out


def _special_locus(space, doc):
    return special_locus(space).to_json()


def _stabilizer(space, doc):
    stab = stabilizer_algebra(space)
    out = stab.to_json()
    out["orbit_dimension"] = orbit_dimension(space)
    return out


def _fingerprint(space, doc):
    if space.k not in (2, 3):
        raise DimensionMismatch("fingerprints are defined for lines and planes")
    return plane_kernel_fingerprint(space).to_json()


def _matrix_from_json(rows, F):
    return [[F.parse(x) if isinstance(x, str) else F(x) for x in r] for r in rows]


def _verify_witness(space, doc):
    meta = doc.metadata
    if "label" not in meta:
        raise MissingWitness("metadata.label is required")
    F = doc.field
    witness = meta.get("witness")
    hyper = meta.get("hyperplane_witness")
    if witness is None and hyper is None:
        raise MissingWitness("metadata carries neither witness nor hyperplane_witness")
    rep = OrbitReport(
        canonical_label(meta["label"]),
        witness=None if witness is None else _matrix_from_json(witness, F),
        hyperplane_witness=None if hyper is None else tuple(tuple(v) for v in _matrix_from_json(hyper, F)),
    )
    return {"label": rep.label, "verdict": verify_witness(rep, space)}


def _no_p3(space, doc):
    cert = no_constant_rank_3space(space)
    return {"verdict": bool(cert), "certificate": cert.to_json()}


_HANDLERS = {
    "rank-check": _rank_check,
    "classify-line": _classify_line,
    "classify-plane": _classify_plane,
    "classify-plane5": _classify_plane5,
    "special-locus": _special_locus,
    "stabilizer": _stabilizer,
    "fingerprint": _fingerprint,
    "verify-witness": _verify_witness,
    "no-p3": _no_p3,
}


def run_command(command: str, doc: InputDocument) -> dict:
    """Dispatch a command on a parsed document and wrap the result in an envelope."""
    if command not in _HANDLERS:
        raise UnknownCommand(f"unknown command {command!r}")
    t0 = time.perf_counter()
    result = _HANDLERS[command](doc.space(), doc)
    return report_envelope(command, doc, result, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# corpus generation


def generate(kind: str, seed: int) -> InputDocument:
    """A seeded random input document of the requested type."""
    if kind in ("line_g", "line_s"):
        rng = random.Random(f"{kind}:{seed}")
        g = random_gl(6, rng)
        base = ELL_G if kind == "line_g" else ELL_S
        return document_for(base.transform(g), {"type": kind, "seed": seed})
    if kind == "p3":
        rng = random.Random(f"p3:{seed}")
        plane = random_plane(LABELS[rng.randrange(4)], seed)
        while True:
            extra = [rng.randint(-3, 3) for _ in range(15)]
            try:
                space = MatrixSubspace(plane.generators + (SkewTensor(6, tuple(RATIONALS(x) for x in extra)),))
            except InputError:
                continue
            return document_for(space, {"type": kind, "seed": seed})
    label = canonical_label(kind)
    return document_for(random_plane(label, seed), {"type": label, "seed": seed})


# ---------------------------------------------------------------------------
# plumbing


def _text(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_text(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, v in enumerate(obj):
            lines.extend(_text(v, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]}: {obj}")
    return lines


def _render(obj, fmt):
    if fmt == "text":
        return "\n".join(_text(obj))
    return dumps(obj)


def _error_report(command, exc):
    out = {"error": type(exc).__name__, "message": str(exc)}
    path = getattr(exc, "path", None)
    if path is not None:
        out["path"] = path
    return report_envelope(command, None, out, 0.0)


def _exit_code(exc) -> int:
    if isinstance(exc, InputError):
        return 1
    return 2


def _process(job):
    """Worker: (command, raw bytes, field spec) -> (exit code, report)."""
    command, raw, field_spec = job
    try:
        field = parse_field(field_spec) if field_spec else None
        doc = parse_input(raw, field)
        return 0, run_command(command, doc)
    except SkewRankError as exc:
        return _exit_code(exc), _error_report(command, exc)
    except (ArithmeticError, ValueError) as exc:
        # unexpected failures inside exact arithmetic count as internal errors
        return 2, _error_report(command, exc)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewrank", description="Exact tools for constant rank 4 spaces of skew matrices.")
    p.add_argument("command", help="one of: " + ", ".join(COMMANDS))
    p.add_argument("inputs", nargs="*", help="input documents (default: stdin)")
    p.add_argument("--field", default=None, help="q | qsqrt[:d1,d2,...] | fp:<p> (overrides the document)")
    p.add_argument("--seed", type=int, default=0, help="seed for gen")
    p.add_argument("--type", dest="gen_type", default="PlaneG", help="gen type: " + ", ".join(GEN_TYPES))
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for several inputs")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command not in COMMANDS:
        print(f"skewrank: unknown command {args.command!r}", file=sys.stderr)
        return 1

    if args.command == "gen":
        try:
            doc = generate(args.gen_type, args.seed)
        except SkewRankError as exc:
            print(f"skewrank: {exc}", file=sys.stderr)
            return 1
        _emit(_render(emit_document(doc), args.format), args.out)
        return 0

    if args.inputs:
        raws = []
        for path in args.inputs:
            try:
                with open(path, "rb") as fh:
                    raws.append(fh.read())
            except OSError as exc:
                print(f"skewrank: {exc}", file=sys.stderr)
                return 1
    else:
        raws = [sys.stdin.buffer.read()]

    jobs = [(args.command, raw, args.field) for raw in raws]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_process, jobs))
    else:
        results = [_process(j) for j in jobs]

    for code, rep in results:
        if code:
            print(f"skewrank: {rep['result']['error']}: {rep['result']['message']}", file=sys.stderr)
    reports = [rep for _, rep in results]
    _emit(_render(reports[0] if len(reports) == 1 else reports, args.format), args.out)
    return max(code for code, _ in results)


if __name__ == "__main__":
    sys.exit(main())
