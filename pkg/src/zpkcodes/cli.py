"""Command-line front end.

Exit codes: 0 success / check passed, 1 check failed, 2 invalid input,
3 budget exceeded.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import additive, gray, oracle, perfect, wenum
from .codefile import CodeDocument, dumps, read_document
from .errors import DEFAULT_BUDGET, BudgetExceeded, ZpkError
from .metrics import METRICS

DEFAULT_SEED = 20240601

OK, FAILED, INVALID, BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INVALID)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load(args) -> CodeDocument:
    if args.input in (None, "-"):
        return read_document(sys.stdin)
    try:
        return read_document(args.input)
    except OSError as exc:
        raise ZpkError(f"cannot read {args.input}: {exc.strerror}") from exc


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    out = getattr(args, "output", None)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_out(args, poly):
    if args.structured:
        _emit(args, json.dumps(poly.structured()))
    else:
        _emit(args, poly.to_text())


# ---- code ------------------------------------------------------------------

def cmd_code_dual(args):
    code = _load(args).code()
    d = code.dual()
    _emit(args, dumps(CodeDocument.from_code(d, d.echelon_generators)))
    return OK


def cmd_code_enumerate(args):
    code = _load(args).code()
    a = code.alphabet
    _emit(args, "\n".join(str(a.word(w)) for w in code.words(args.budget)))
    return OK


def cmd_code_min_distance(args):
    code = _load(args).code()
    _emit(args, str(additive.min_distance(code, args.metric, args.budget)))
    return OK


def cmd_code_random(args):
    a = additive.MixedAlphabet(args.p, args.alphas)
    rng = np.random.default_rng(args.seed)
    code = additive.random_code(a, rng, args.generators)
    _emit(args, dumps(CodeDocument.from_code(code)))
    return OK


# ---- gray ------------------------------------------------------------------

def cmd_gray_phi(args):
    doc = _load(args)
    a = doc.alphabet()
    if args.word:
        _emit(args, "".join(map(str, gray.phi_map(a.parse_word(args.word)))))
        return OK
    words = gray.phi_words(a, doc.code().words(args.budget))
    _emit(args, "\n".join("".join(map(str, w)) for w in words))
    return OK


def cmd_gray_varphi(args):
    code = _load(args).code()
    if args.materialize:
        words = gray.varphi_image(code, args.budget)
        _emit(args, "\n".join("".join(map(str, w)) for w in words))
        return OK
    d = gray.varphi_min_distance(code, args.budget)
    lines = [f"length: {code.alphabet.image_length}",
             f"size: {gray.varphi_size(code)}",
             f"min distance: {d if d is not None else '-'}"]
    _emit(args, "\n".join(lines))
    return OK


def cmd_tables(args):
    _emit(args, gray.format_tables(gray.build_gray_tables(args.p, args.k)))
    return OK


# ---- wenum -----------------------------------------------------------------

def cmd_wenum_hamming(args):
    code = _load(args).code()
    _poly_out(args, wenum.hamming_enumerator(code.words(args.budget)))
    return OK


def cmd_wenum_sw(args):
    code = _load(args).code()
    sw = wenum.sw_polynomial(code, args.budget)
    if args.structured:
        _emit(args, json.dumps([[list(k), c] for k, c in sorted(sw.terms.items(), reverse=True)]))
    else:
        _emit(args, sw.to_text())
    return OK


def cmd_wenum_phi_image(args):
    _poly_out(args, wenum.image_enumerator_phi(_load(args).code(), args.budget))
    return OK


def cmd_wenum_varphi_image(args):
    _poly_out(args, wenum.image_enumerator_varphi(_load(args).code(), args.budget))
    return OK


def cmd_wenum_dual_image(args):
    _poly_out(args, wenum.dual_image_enumerator(_load(args).code(), args.budget))
    return OK


def cmd_wenum_duality_check(args):
    code = _load(args).code()
    report = wenum.duality_check(code, args.budget)
    status = OK
    if report.equal:
        _emit(args, f"EQUAL: {report.left.to_text()}")
    else:
        _emit(args, f"DIFFERENT:\n  left:  {report.left.to_text()}\n  right: {report.right.to_text()}")
        status = FAILED
    if args.brute_force:
        budget = args.budget or oracle.ORACLE_BUDGET
        phi = oracle.brute_image_enumerator(code, "phi", budget)
        dual = code.dual()
        vphi = oracle.brute_image_enumerator(dual, "varphi", budget)
        transformed = wenum.macwilliams_transform(vphi, code.alphabet.p, vphi.total())
        agree = (phi == report.left and vphi == wenum.image_enumerator_varphi(dual, args.budget)
                 and transformed == report.right)
        print(f"BRUTE-FORCE: {'agree' if agree else 'DISAGREE'}", file=sys.stdout)
        if not agree:
            status = FAILED
    return status


# ---- perfect ---------------------------------------------------------------

def cmd_perfect_params(args):
    prof = perfect.perfect_params(args.p, args.gammas)
    lines = [f"alphas: {','.join(map(str, prof.alphas))}",
             f"ball: {prof.ball_size}",
             f"gamma: {prof.gamma}",
             f"space: {prof.space_size}",
             f"code size: {prof.code_size}"]
    _emit(args, "\n".join(lines))
    return OK


def cmd_perfect_build(args):
    M = perfect.build_perfect_check(args.p, args.gammas)
    _emit(args, dumps(CodeDocument.from_check_matrix(M)))
    return OK


def cmd_perfect_validate(args):
    report = perfect.validate_check_matrix(_load(args).check_matrix())
    if report.valid:
        _emit(args, "VALID")
        return OK
    _emit(args, "INVALID\n" + "\n".join(f"  {p}" for p in report.problems))
    return FAILED


def cmd_perfect_verify(args):
    M = _load(args).check_matrix()
    syn = perfect.weight_one_syndromes(M)
    distinct = len({tuple(r) for r in syn.tolist()})
    ok = perfect.verify_perfect_syndrome(M)
    lines = [f"{'PERFECT' if ok else 'NOT PERFECT'}: {distinct} distinct syndromes of weight <= 1 errors"]
    if args.exhaustive:
        ex = perfect.verify_perfect_exhaustive(M.code(), args.budget or perfect.EXHAUSTIVE_BUDGET)
        lines.append(f"exhaustive: {'tiles the space' if ex else 'does not tile the space'}")
        ok = ok and ex
    _emit(args, "\n".join(lines))
    return OK if ok else FAILED


def cmd_perfect_one_weight(args):
    r = perfect.dual_one_weight_check(_load(args).check_matrix(), args.budget)
    lines = [f"dual weights: {sorted(r.weights)} (expected {r.expected_weight})",
             f"varphi params: {r.hamming_params} (expected {r.expected_params})",
             f"phi params: {r.phi_params}"]
    _emit(args, "\n".join(lines))
    return OK if r.ok else FAILED


# ---- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized commands")
    common.add_argument("--budget", type=int, default=None,
                        help=f"enumeration limit (default {DEFAULT_BUDGET})")
    io_in = argparse.ArgumentParser(add_help=False)
    io_in.add_argument("--input", "-i", help="code document (default stdin)")
    io_out = argparse.ArgumentParser(add_help=False)
    io_out.add_argument("--output", "-o", help="output file (default stdout)")
    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--structured", action="store_true", help="JSON coefficient list")

    parser = _Parser(prog="zpkcodes", description="Mixed-alphabet additive codes over Z_p ... Z_{p^k}.",
                     parents=[common])
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def add(group_sub, name, func, parents, help_):
        p = group_sub.add_parser(name, parents=[common, *parents], help=help_)
        p.set_defaults(func=func)
        return p

    code = sub.add_parser("code", help="code-level operations").add_subparsers(dest="cmd", required=True)
    add(code, "dual", cmd_code_dual, [io_in, io_out], "write the dual code")
    add(code, "enumerate", cmd_code_enumerate, [io_in, io_out], "list all codewords")
    p = add(code, "min-distance", cmd_code_min_distance, [io_in, io_out], "minimum distance")
    p.add_argument("--metric", choices=METRICS, default="hamming")
    p = add(code, "random", cmd_code_random, [io_out], "random code document")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True, help="block lengths, e.g. 1,0,2")
    p.add_argument("--generators", type=int, default=None)

    g = sub.add_parser("gray", help="Gray-like maps").add_subparsers(dest="cmd", required=True)
    p = add(g, "phi", cmd_gray_phi, [io_in, io_out], "image under phi")
    p.add_argument("--word", help="map a single word such as '(1,0|3)'")
    p = add(g, "varphi", cmd_gray_varphi, [io_in, io_out], "coset-valued image")
    p.add_argument("--materialize", action="store_true", help="list every image word")

    p = sub.add_parser("tables", parents=[common, io_out], help="P ordering and coset representatives")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_tables)

    w = sub.add_parser("wenum", help="weight enumerators").add_subparsers(dest="cmd", required=True)
    add(w, "hamming", cmd_wenum_hamming, [io_in, io_out, poly], "Hamming enumerator of the code")
    add(w, "sw", cmd_wenum_sw, [io_in, io_out, poly], "symmetrized enumerator")
    add(w, "phi-image", cmd_wenum_phi_image, [io_in, io_out, poly], "enumerator of phi(C)")
    add(w, "varphi-image", cmd_wenum_varphi_image, [io_in, io_out, poly], "enumerator of varphi(C)")
    add(w, "dual-image", cmd_wenum_dual_image, [io_in, io_out, poly], "enumerator of varphi(C^perp)")
    p = add(w, "duality-check", cmd_wenum_duality_check, [io_in, io_out], "check the MacWilliams duality")
    p.add_argument("--brute-force", action="store_true", help="cross-check against materialized images")

    pf = sub.add_parser("perfect", help="1-perfect codes").add_subparsers(dest="cmd", required=True)
    for name, func, help_ in (("params", cmd_perfect_params, "parameters for gammas"),
                              ("build", cmd_perfect_build, "build a check matrix")):
        p = add(pf, name, func, [io_out], help_)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--gammas", type=_int_list, required=True, help="e.g. 1,0,1")
    add(pf, "validate", cmd_perfect_validate, [io_in, io_out], "structural check of a check matrix")
    p = add(pf, "verify", cmd_perfect_verify, [io_in, io_out], "syndrome check")
    p.add_argument("--exhaustive", action="store_true", help="also test the ball tiling directly")
    add(pf, "one-weight", cmd_perfect_one_weight, [io_in, io_out], "dual weights and image parameters")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INVALID
    except BudgetExceeded as exc:
        print(f"zpkcodes: budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (ZpkError, ValueError) as exc:
        print(f"zpkcodes: invalid input: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
