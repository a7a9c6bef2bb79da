"""Command line: ``iwacert certify | classnumber | check-ell | verify``.

Exit codes: 0 success, 1 usage or parse error, 2 search budget exhausted,
3 verification failure. Data goes to stdout, diagnostics to stderr.
"""

import argparse
import itertools
import sys

from .arith import is_prime, kronecker
from .certifier import (
    certify_nonfree,
    certify_nonzero_pseudonull,
    certify_pseudonull,
    certify_trivial,
    verify,
)
from .errors import ConsistencyError, DomainError, NotFoundWithinBudget, PremiseRejected
from .quadratic import (
    class_number_dirichlet,
    class_number_forms,
    quad_field_from_disc,
    quad_field_from_radicand,
)
from .serialization import CertificateFormatError, dumps_json, loads, to_json_line, to_text
from .tower import DEFAULT_ELL_LIMIT, EllWitness

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3

KINDS = {
    "nonzero-pseudonull": certify_nonzero_pseudonull,
    "nonfree": certify_nonfree,
    "trivial": certify_trivial,
    "pseudonull": certify_pseudonull,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _prime(text):
    n = int(text)
    if not is_prime(n):
        raise argparse.ArgumentTypeError(f"{n} is not prime")
    return n


def build_parser():
    parser = _Parser(prog="iwacert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="search for fields and emit certificates")
    c.add_argument("--p", type=_prime, required=True)
    c.add_argument("--limit", type=int, default=DEFAULT_ELL_LIMIT,
                   help="bound on q (p = 2, quadratic sweeps) or on ell (odd p)")
    c.add_argument("--count", type=int, default=None)
    c.add_argument("--kind", choices=sorted(KINDS), default="nonzero-pseudonull")
    c.add_argument("--format", choices=("json", "jsonl", "text"), default="jsonl")
    c.add_argument("--out", default=None, help="jsonl appends, json/text overwrite")

    h = sub.add_parser("classnumber", help="class number of an imaginary quadratic field")
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--disc", type=int)
    g.add_argument("--radicand", type=int)

    e = sub.add_parser("check-ell", help="audit one auxiliary prime ell")
    e.add_argument("--p", type=_prime, required=True)
    e.add_argument("--ell", type=_prime, required=True)
    e.add_argument("--f-disc", type=int, required=True)

    v = sub.add_parser("verify", help="recheck a JSON or JSONL certificate file")
    v.add_argument("--in", dest="path", required=True)
    return parser


def cmd_certify(args, out, err):
    if args.limit < 2:
        raise UsageError("--limit must be >= 2")
    if args.count is not None and args.count < 1:
        raise UsageError("--count must be >= 1")
    stream = KINDS[args.kind](args.p, args.limit)
    try:
        certs = list(itertools.islice(stream, args.count))
    except NotFoundWithinBudget as exc:
        print(f"iwacert: {exc}", file=err)
        return EXIT_BUDGET

    if args.format == "jsonl":
        text = "".join(to_json_line(c) + "\n" for c in certs)
    elif args.format == "json":
        text = dumps_json(certs)
    else:
        text = "\n\n".join(to_text(c) for c in certs) + "\n"

    if args.out:
        mode = "a" if args.format == "jsonl" else "w"
        with open(args.out, mode, encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(f"iwacert: {len(certs)} certificate(s)", file=err)
    return EXIT_OK


def cmd_classnumber(args, out, err):
    try:
        if args.disc is not None:
            K = quad_field_from_disc(args.disc)
        else:
            K = quad_field_from_radicand(args.radicand)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    h_forms = class_number_forms(K)
    try:
        h_dir = class_number_dirichlet(K)
    except ConsistencyError as exc:
        print(f"iwacert: {exc}", file=err)
        return EXIT_VERIFY
    print(f"{K}: disc {K.disc}, forms {h_forms}, dirichlet {h_dir}", file=err)
    if h_forms != h_dir:
        print(f"iwacert: class number methods disagree for disc {K.disc}", file=err)
        return EXIT_VERIFY
    out.write(f"{h_forms}\n")
    return EXIT_OK


def cmd_check_ell(args, out, err):
    p, ell = args.p, args.ell
    if p == 2:
        raise UsageError("--p must be odd")
    if ell == p:
        raise UsageError("--ell must differ from --p")
    try:
        F = quad_field_from_disc(args.f_disc)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    w = EllWitness.compute(p, ell, F.disc)
    bad = set(w.failures())
    rows = [
        ("condition (1)", f"kronecker({F.disc}, {ell}) = {w.cond1_symbol}", "condition (1)" not in bad),
        ("condition (2)", f"{ell}^{p - 1} mod {p * p} = {w.cond2_residue}", "condition (2)" not in bad),
        (
            "condition (3)",
            f"{ell} mod {p} = {w.cond3_congruence}, {p}^(({ell}-1)/{p}) mod {ell} = {w.cond3_residue}",
            "condition (3)" not in bad,
        ),
    ]
    for name, detail, ok in rows:
        out.write(f"{name}: {'pass' if ok else 'FAIL'}  {detail}\n")
    if kronecker(F.disc, p) != 1:
        print(f"iwacert: note: {p} does not split in {F}", file=err)
    return EXIT_OK if not bad else EXIT_VERIFY


def cmd_verify(args, out, err):
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    try:
        certs = loads(text)
    except CertificateFormatError as exc:
        print(f"iwacert: malformed certificate file: {exc}", file=err)
        return EXIT_USAGE
    failed = 0
    for i, c in enumerate(certs):
        result = verify(c)
        if not result:
            failed += 1
            print(f"iwacert: certificate {i}: {result}", file=err)
    out.write(f"{len(certs) - failed} of {len(certs)} certificates verified\n")
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {
    "certify": cmd_certify,
    "classnumber": cmd_classnumber,
    "check-ell": cmd_check_ell,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(f"iwacert: usage error: {exc}", file=err)
        return EXIT_USAGE
    except (DomainError, PremiseRejected) as exc:
        print(f"iwacert: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
