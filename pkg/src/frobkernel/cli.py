"""Command-line front end.

    frobkernel dims     --m 1 --n 1 --p 2 --r 1
    frobkernel verify   --m 2 --n 1 --p 2
    frobkernel center   --p 3
    frobkernel integral --p 3
    frobkernel coordinv --p 2
    frobkernel hc       --p 2
    frobkernel blocks   --p 3 --window 18 --output text

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hc_blocks as hb
from . import invariants as inv
from .arith import MAX_Q, is_prime, restricted_weights
from .coord import DEFAULT_DIM_GUARD, GlShape
from .dist import DistAlgebra, SubgroupSpec
from .verify import Context, run_suite

COMMANDS = ("dims", "verify", "center", "integral", "coordinv", "hc", "blocks")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--m", type=int, default=1, help="even rank (default 1)")
    p.add_argument("--n", type=int, default=1, help="odd rank (default 1)")
    p.add_argument("--p", type=int, default=2, help="characteristic, a prime (default 2)")
    p.add_argument("--r", type=int, default=1, help="Frobenius level (default 1)")
    p.add_argument("--window", type=int, default=None,
                   help="block window |lam_i| <= w (default 2p^2)")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--dim-guard", type=int, default=DEFAULT_DIM_GUARD,
                   help="refuse to build K[G_r] above this dimension")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobkernel", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    helps = {
        "dims": "dimensions of K[G_r], Dist(T_r) and the standard subalgebras",
        "verify": "run the verification ledger for the shape",
        "center": "basis of the centre of Dist(G_r)",
        "integral": "basis of the right integrals of Dist(G_r)",
        "coordinv": "invariants K[G_r]^G for GL(1|1)",
        "hc": "Harish-Chandra image I_r and eigenvalues for GL(1|1)",
        "blocks": "B / HC / K block partitions of a weight window for GL(1|1)",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def validate(args) -> GlShape:
    if not is_prime(args.p):
        raise UsageError(f"p={args.p} is not prime")
    if args.r < 1:
        raise UsageError(f"r={args.r} must be >= 1")
    if args.m < 0 or args.n < 0 or args.m + args.n < 1:
        raise UsageError("need m, n >= 0 and m + n >= 1")
    if args.command == "blocks":
        return None
    if args.p**args.r > MAX_Q:
        raise UsageError(f"q = {args.p}^{args.r} exceeds {MAX_Q}")
    shape = GlShape(args.m, args.n, args.p, args.r)
    if shape.dimension > args.dim_guard:
        raise UsageError(f"dim K[G_r] = {shape.dimension} exceeds --dim-guard {args.dim_guard}")
    if args.command in ("coordinv", "hc") and (args.m, args.n) != (1, 1):
        raise UsageError(f"{args.command} is defined for GL(1|1) only")
    return shape


def _alg(args) -> DistAlgebra:
    return DistAlgebra.build(args.m, args.n, args.p, args.r, dim_guard=args.dim_guard)


def cmd_dims(args) -> tuple[dict, int]:
    A = _alg(args)
    N = args.m + args.n
    specs = {"T": SubgroupSpec("T"), "Gev": SubgroupSpec("Gev"), "P+": SubgroupSpec("P+"),
             "P-": SubgroupSpec("P-"), "V+": SubgroupSpec("V+"), "V-": SubgroupSpec("V-")}
    for d in range(1, max(N, 2)):
        specs[f"U+({d})"] = SubgroupSpec("U+", d)
        specs[f"U-({d})"] = SubgroupSpec("U-", d)
    sub = {name: len(A.subalgebra_basis(s)) for name, s in specs.items()}
    return {"shape": A.shape.as_dict(), "K[G_r]": A.dim, "Dist(T_r)": sub["T"],
            "subalgebras": sub}, 0


def cmd_verify(args) -> tuple[dict, int]:
    ctx = Context(args.m, args.n, args.p, args.r, seed=args.seed, dim_guard=args.dim_guard)
    results = run_suite(ctx)
    failed = any(r.status == "fail" for r in results)
    return {"shape": ctx.alg.shape.as_dict(),
            "results": [{"key": r.key, "status": r.status, "detail": r.detail}
                        for r in results]}, 1 if failed else 0


def cmd_center(args) -> tuple[dict, int]:
    A = _alg(args)
    Z = inv.center_basis(A, seed=args.seed)
    if (args.m, args.n) == (1, 1):
        inv.check_center_generators(A, Z)
    return Z.to_json(), 0


def cmd_integral(args) -> tuple[dict, int]:
    A = _alg(args)
    I = inv.integral_space(A, side="right", seed=args.seed)
    if I.dim != 1 or not I.contains(A.nu.values):
        raise inv.VerificationError("right integrals are not spanned by nu_r")
    return I.to_json(), 0


def cmd_coordinv(args) -> tuple[dict, int]:
    A = _alg(args)
    return inv.check_invariant_generators(A).to_json(), 0


def cmd_hc(args) -> tuple[dict, int]:
    A = _alg(args)
    img = hb.image_of_center(A)
    gens = hb.hc_image_generators(A)
    from . import linalg
    listed = [g.values for _, g in gens]
    if not linalg.same_span(img, listed, A.p):
        raise inv.VerificationError("h(Z_r) differs from the listed generators")
    weights = restricted_weights(A.q)
    return {"shape": A.shape.as_dict(),
            "I_r": {"dim": int(img.shape[0]), "basis": [[int(x) for x in row] for row in img]},
            "weights": [list(w) for w in weights],
            "generators": [{"name": name, "eigenvalues": [hb.eigenvalue(g, w) for w in weights]}
                           for name, g in gens]}, 0


def cmd_blocks(args) -> tuple[dict, int]:
    w = 2 * args.p**2 if args.window is None else args.window
    if w < 0:
        raise UsageError("window must be non-negative")
    rep = hb.compare_blocks(w, args.p)
    out = rep.to_json()
    return out, 0 if all(rep.flags.values()) else 1


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def render_text(command: str, data: dict, args) -> str:
    if command == "verify":
        return "\n".join(f"{r['key']}: {r['status']}" + (f" ({r['detail']})" if r["detail"] else "")
                         for r in data["results"])
    if command == "blocks":
        lines = [f"p={data['p']} window={data['window']}"]
        lines += [f"{k}: {v}" for k, v in data["flags"].items()]
        rep = hb.BlockReport(data["p"], data["window"],
                             {k: [[tuple(l) for l in c] for c in v]
                              for k, v in data["classes"].items()}, data["flags"])
        for kind in ("B", "HC", "K"):
            lines += [f"{kind} classes: {len(rep.classes[kind])}", rep.diagram(kind)]
        return "\n".join(lines)
    if "dim" in data:
        return f"dim {data['dim']}"
    return json.dumps(data, indent=1)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        validate(args)
        data, code = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except inv.VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(render_text(args.command, data, args))
    return code


if __name__ == "__main__":
    sys.exit(main())
