"""Command line front door.

Reads JSON fixtures, runs the computations, and emits JSON (default) or a
plain table where that makes sense.  Exit codes: 0 success, 1 domain
error, 2 usage error or malformed JSON.  Output is deterministic: fixed
iteration orders, no timestamps, floats at 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import serialize
from .cocycle import cohomologous, default_modulus
from .errors import DomainError
from .fmps import check_symmetry, density_matrix, expectation, fmps_index
from .invariant import (
    Z8_GENERATOR,
    index_equal,
    stack_index,
    z8_compose,
    z8_elements,
)
from .system import compute_index, stack_systems

MODULUS_CAVEAT = (
    "a negative verdict is certified only relative to the chosen root "
    "lattice Z_{M}; witnesses off the lattice are not searched"
)


def _load(path: str):
    if not path:
        raise FileNotFoundError("a required input file argument is missing")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _cmd_group_check(args) -> dict:
    group = serialize.group_from_json(_load(args.infile))
    return {
        "ok": True,
        "n": group.n,
        "identity": group.identity,
        "inverse": group.inverse.tolist(),
    }


def _cmd_cocycle_check(args) -> dict:
    u = serialize.cocycle_from_json(_load(args.infile))
    return {"ok": True, "n": u.n, "exact": u.is_exact}


def _cmd_cohomologous(args) -> dict:
    u1 = serialize.cocycle_from_json(_load(args.infile))
    u2 = serialize.cocycle_from_json(_load(args.infile2))
    modulus = args.modulus or default_modulus(u1, u2)
    ok, witness = cohomologous(u1, u2, modulus=modulus, snap_tol=args.tol)
    out = {"cohomologous": ok, "modulus": modulus}
    if ok:
        out["witness"] = {"b": [serialize.phase_to_json(p) for p in witness.b]}
    else:
        out["caveat"] = MODULUS_CAVEAT.replace("{M}", str(modulus))
    return out


def _cmd_index(args) -> dict:
    sys_ = serialize.system_from_json(_load(args.infile))
    index = compute_index(sys_, tol=args.tol)
    return serialize.index_to_json(index)


def _cmd_stack(args) -> dict:
    s1 = serialize.system_from_json(_load(args.infile))
    s2 = serialize.system_from_json(_load(args.infile2))
    stacked = stack_systems(s1, s2)
    direct = compute_index(stacked, tol=args.tol)
    law = stack_index(compute_index(s1, tol=args.tol), compute_index(s2, tol=args.tol))
    return {
        "stacked_index": serialize.index_to_json(direct),
        "index_law": serialize.index_to_json(law),
        "consistent": index_equal(direct, law, modulus=args.modulus),
    }


def _cmd_z8_table(args):
    elements = z8_elements()
    labels = [str(e) for e in elements]
    table = [
        [elements.index(z8_compose(a, b)) for b in elements] for a in elements
    ]
    powers = {str(k + 1): labels[(k + 1) % 8] for k in range(8)}
    payload = {
        "elements": labels,
        "generator": str(Z8_GENERATOR),
        "generator_powers": powers,
        "table": table,
    }
    if args.table:
        width = max(len(s) for s in labels)
        print(" " * (width + 2) + "  ".join(s.ljust(width) for s in labels))
        for i, row in enumerate(table):
            cells = "  ".join(labels[j].ljust(width) for j in row)
            print(labels[i].ljust(width + 2) + cells)
        return None
    return payload


def _cmd_fmps_validate(args) -> dict:
    mps = serialize.mps_from_json(_load(args.infile))
    from .fmps import transfer_matrix

    evals = sorted(np.abs(np.linalg.eigvals(transfer_matrix(mps.v))), reverse=True)
    return {
        "ok": True,
        "kind": mps.kind,
        "d": mps.d,
        "m": mps.m,
        "sigma0": mps.sigma0,
        "subleading_eigenvalue": serialize.round_sig(
            float(evals[1]) if len(evals) > 1 else 0.0
        ),
    }


def _parse_word(text: str):
    if not text:
        raise KeyError("--word")
    word = json.loads(text)
    return [(int(mu), int(nu)) for mu, nu in word]


def _cmd_fmps_expect(args) -> dict:
    mps = serialize.mps_from_json(_load(args.infile))
    word = _parse_word(args.word)
    value = expectation(mps, word)
    return {
        "word": [[mu, nu] for mu, nu in word],
        "value": {
            "re": serialize.round_sig(value.real),
            "im": serialize.round_sig(value.imag),
        },
    }


def _cmd_fmps_rho(args) -> dict:
    mps = serialize.mps_from_json(_load(args.infile))
    rho = density_matrix(mps, args.l)
    from .fock import parity_operator

    parity = parity_operator(mps.d)
    global_parity = parity
    for _ in range(args.l):
        global_parity = np.kron(global_parity, parity)
    eigs = np.linalg.eigvalsh((rho + rho.conj().T) / 2.0)
    return {
        "l": args.l,
        "dimension": rho.shape[0],
        "rho": serialize.matrix_to_json(rho),
        "checks": {
            "trace": serialize.round_sig(float(np.trace(rho).real)),
            "min_eigenvalue": serialize.round_sig(float(eigs.min())),
            "parity_commutator_norm": serialize.round_sig(
                float(np.linalg.norm(rho @ global_parity - global_parity @ rho))
            ),
            "psd": bool(eigs.min() >= -1e-10),
        },
    }


def _cmd_fmps_symmetry(args) -> dict:
    mps = serialize.mps_from_json(_load(args.infile))
    sym = serialize.symmetry_from_json(_load(args.infile2 or args.infile))
    phases = check_symmetry(mps, sym, tol=args.tol)
    out = {
        "c": [
            {"re": serialize.round_sig(c.real), "im": serialize.round_sig(c.imag)}
            for c in phases.c
        ],
        "residuals": [serialize.round_sig(float(r)) for r in phases.residuals],
    }
    if phases.q is not None:
        out["q"] = phases.q.values.tolist()
    return out


def _cmd_fmps_index(args) -> dict:
    mps = serialize.mps_from_json(_load(args.infile))
    sym = serialize.symmetry_from_json(_load(args.infile2 or args.infile))
    index = fmps_index(mps, sym, tol=args.tol)
    return serialize.index_to_json(index)


_COMMANDS = {
    "group-check": (_cmd_group_check, "validate a group multiplication table"),
    "cocycle-check": (_cmd_cocycle_check, "validate a twisted 2-cocycle table"),
    "cohomologous": (_cmd_cohomologous, "decide cohomological equivalence"),
    "index": (_cmd_index, "compute the index of a graded system"),
    "stack": (_cmd_stack, "stack two systems and cross-check the group law"),
    "z8-table": (_cmd_z8_table, "composition table of the time-reversal triples"),
    "fmps-validate": (_cmd_fmps_validate, "validate fermionic MPS data"),
    "fmps-expect": (_cmd_fmps_expect, "evaluate the state on a site word"),
    "fmps-rho": (_cmd_fmps_rho, "Jordan-Wigner density matrix with checks"),
    "fmps-symmetry": (_cmd_fmps_symmetry, "extract on-site symmetry phases"),
    "fmps-index": (_cmd_fmps_index, "compute the index of a symmetric MPS"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fspt",
        description="invariants of one-dimensional fermionic SPT phases",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="infile", help="input JSON file")
        p.add_argument("--in2", dest="infile2", help="second input JSON file")
        p.add_argument("--l", type=int, default=1, help="chain length minus one")
        p.add_argument("--word", help="site word as JSON, e.g. [[1,0],[0,1]]")
        p.add_argument("--modulus", type=int, default=None, help="root lattice order")
        p.add_argument("--tol", type=float, default=1e-8, help="numerical tolerance")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--table", action="store_true", help="plain table output")
    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, _ = _COMMANDS[args.command]
    try:
        payload = handler(args)
    except DomainError as err:
        _emit({"error": err.token, "detail": str(err)})
        return 1
    except (json.JSONDecodeError, FileNotFoundError, KeyError) as err:
        if isinstance(err, json.JSONDecodeError):
            print(
                f"malformed JSON at line {err.lineno} column {err.colno}: {err.msg}",
                file=sys.stderr,
            )
        else:
            print(f"bad input: {err}", file=sys.stderr)
        return 2
    if payload is not None:
        _emit(payload)
    return 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
