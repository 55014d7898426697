"""Command line front end.  JSON (or CSV) on stdout, diagnostics on stderr.

Exit status: 0 success, 2 usage or precondition error, 1 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import links, nodes, pst
from .oracle import ConvergenceError, eigh
from .spectral import build_spectral_system, propagator
from .threshold import (
    BlockForm,
    ParseError,
    block_form_to_creation,
    block_form_to_graph,
    conjugate_spectrum,
    creation_to_block_form,
    degree_sequence,
    enumerate_block_forms,
    laplacian,
    parse_creation_sequence,
)

SWEEP_MAX_N = 16
CSV_HEADER = ["form", "n", "has_pst", "max_offdiag_modulus", "violations"]


class UsageError(ValueError):
    pass


class NumericError(ArithmeticError):
    pass


_PI_RE = re.compile(r"^\s*(?:(\d+(?:\.\d*)?)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_time(text: str) -> float:
    """Decimal radians, or multiples of pi such as ``pi/2`` and ``3pi/2``."""
    m = _PI_RE.match(text.lower())
    if m:
        num = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid time {text!r}") from None


def parse_pairs(text: str, sep: str = ":") -> list[tuple[int, int]]:
    """``"1:2,3:4"`` -> ``[(1, 2), (3, 4)]``."""
    out = []
    for tok in filter(None, (s.strip() for s in text.split(","))):
        parts = tok.split(sep)
        if len(parts) != 2:
            raise UsageError(f"invalid pair {tok!r}; expected i{sep}j")
        out.append((int(parts[0]), int(parts[1])))
    return out


def _form(args) -> BlockForm:
    if getattr(args, "word", None):
        return creation_to_block_form(parse_creation_sequence(args.word))
    if getattr(args, "blocks", None):
        return BlockForm.parse(args.blocks)
    raise UsageError("one of --word or --blocks is required")


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_graph(args):
    form = _form(args)
    g = block_form_to_graph(form)
    _emit({
        "n": form.n,
        "word": str(block_form_to_creation(form)),
        "blocks": list(form.canonical()),
        "internal_blocks": list(form.blocks),
        "degrees": list(degree_sequence(g)),
        "spectrum": conjugate_spectrum(degree_sequence(g)),
        "graph": g.to_json(),
    })


def cmd_spectrum(args):
    form = _form(args)
    system = build_spectral_system(form)
    dec = eigh(laplacian(block_form_to_graph(form)))
    oracle = dec.integer_spectrum()
    closed = system.spectrum()
    if oracle is None or sorted(oracle, reverse=True) != closed:
        raise NumericError("oracle spectrum disagrees with the closed form")
    _emit({
        "blocks": list(form.canonical()),
        "spectrum": closed,
        "components": [
            {"block": c.block, "eigenvalue": c.eigenvalue, "multiplicity": c.multiplicity}
            for c in system.components
        ],
        "oracle_eigenvalues": [float(x) for x in dec.eigenvalues[::-1]],
    })


def cmd_propagate(args):
    form = _form(args)
    if not 1 <= args.from_ <= form.n:
        raise UsageError(f"vertex {args.from_} out of range 1..{form.n}")
    u = propagator(build_spectral_system(form), args.t)
    col = u.matrix[:, args.from_ - 1]
    probs = np.abs(col) ** 2
    if abs(probs.sum() - 1) > max(args.tol, 1e-10):
        raise NumericError(f"probabilities sum to {probs.sum()!r}")
    _emit({
        "t": args.t,
        "n": form.n,
        "from": args.from_,
        "amplitudes": [[float(z.real), float(z.imag)] for z in col],
        "probabilities": [float(p) for p in probs],
    })


def cmd_pst_check(args):
    form = _form(args)
    cert = pst.pst_certificate(form)
    out = cert.to_json()
    modulus = abs(propagator(build_spectral_system(form), math.pi / 2).matrix[0, 1])
    out["form"] = list(form.canonical())
    out["modulus_12_at_pi_2"] = modulus
    if cert.has_pst != (modulus >= 1 - args.tol):
        raise NumericError("certificate disagrees with the propagator at pi/2")
    _emit(out)


def cmd_detect_edge(args):
    parts = re.split(r"[,:]", args.hidden)
    if len(parts) != 2:
        raise UsageError("--hidden must name exactly one pair, e.g. 3,7")
    tr = links.detect_missing_edge(args.n, (int(parts[0]), int(parts[1])), seed=args.seed)
    _emit(tr.to_json())


def cmd_detect_matching(args):
    pairs = parse_pairs(args.hidden)
    known = args.n // 2 if args.perfect else None
    if args.perfect and len(pairs) != args.n // 2:
        raise UsageError("--perfect given but the hidden matching is not perfect")
    tr = links.detect_missing_matching(args.n, pairs, known_size=known, seed=args.seed)
    _emit(tr.to_json())


def cmd_node_bounds(args):
    form = _form(args)
    ls = [args.delete_block] if args.delete_block else range(1, len(form.blocks) + 1)
    reports = []
    for l in ls:
        b = nodes.node_deletion_bound(form, l, grid_step=1e-3)
        d = b.to_json()
        d["holds"] = b.grid_max_observed <= b.bound + args.tol
        reports.append(d)
    out = {"bounds": reports}
    try:
        out["last_block_modulus_at_pi_2"] = nodes.last_block_deletion_modulus(form)
    except ValueError:
        out["last_block_modulus_at_pi_2"] = None
    _emit(out)


def cmd_lemma_cos(args):
    rows = []
    for variant in ("i", "ii"):
        r = nodes.lemma_cos_maxmin(args.a, variant, 1e-5)
        rows.append({"variant": variant, "t_star": r.t_star, "value": r.value,
                     "analytic": r.analytic, "abs_error": abs(r.value - r.analytic)})
    _emit({"a": args.a, "results": rows})


def sweep_row(form: BlockForm) -> dict:
    cert = pst.pst_certificate(form)
    return {
        "form": str(form),
        "n": form.n,
        "has_pst": cert.has_pst,
        "max_offdiag_modulus": pst.max_offdiag_modulus(form, math.pi / 2),
        "violations": "; ".join(cert.violated_conditions),
    }


def cmd_sweep(args):
    if args.max_n > SWEEP_MAX_N:
        raise UsageError(f"desk-scale guard: --max-n must be <= {SWEEP_MAX_N}")
    forms = list(enumerate_block_forms(args.max_n))
    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(sweep_row, forms))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({**r, "max_offdiag_modulus": f"{r['max_offdiag_modulus']:.10f}"})
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="modulus comparison tolerance")

    form = argparse.ArgumentParser(add_help=False)
    grp = form.add_mutually_exclusive_group()
    grp.add_argument("--word", help="creation sequence, e.g. 0011011")
    grp.add_argument("--blocks", help="canonical block form, e.g. 2,6,4,4")

    p = argparse.ArgumentParser(prog="threshold-qw", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("graph", parents=[common, form], help="degrees and spectrum of a threshold graph")
    s.set_defaults(func=cmd_graph)
    s = sub.add_parser("spectrum", parents=[common, form], help="closed-form eigensystem vs oracle")
    s.set_defaults(func=cmd_spectrum)
    s = sub.add_parser("propagate", parents=[common, form], help="amplitudes of U_t from one vertex")
    s.add_argument("--t", type=parse_time, required=True, help="time in radians or e.g. pi/2")
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.set_defaults(func=cmd_propagate)
    s = sub.add_parser("pst-check", parents=[common, form], help="perfect state transfer certificate")
    s.set_defaults(func=cmd_pst_check)
    s = sub.add_parser("detect-edge", parents=[common], help="find one missing edge of K_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--hidden", required=True, help="pair i,j")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_detect_edge)
    s = sub.add_parser("detect-matching", parents=[common], help="find a missing matching of K_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--hidden", required=True, help="pairs i:j,k:l,...")
    s.add_argument("--perfect", action="store_true", help="the matching is known to be perfect")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_detect_matching)
    s = sub.add_parser("node-bounds", parents=[common, form], help="vertex-deletion modulus bounds")
    s.add_argument("--delete-block", type=int, help="block index l (default: all)")
    s.set_defaults(func=cmd_node_bounds)
    s = sub.add_parser("lemma-cos", parents=[common], help="cosine max-min check for odd a")
    s.add_argument("--a", type=int, required=True)
    s.set_defaults(func=cmd_lemma_cos)
    s = sub.add_parser("sweep", parents=[common], help="CSV table over all forms up to --max-n vertices")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--out", help="CSV path (default stdout)")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (NumericError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
