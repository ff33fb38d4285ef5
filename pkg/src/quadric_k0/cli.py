"""``quadric-k0`` command line.

Exit codes: 0 success, 1 usage or argument error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .errors import QuadricK0Error
from .fields import QQ, PrimeField, parse_field
from .geometry import real_geometry
from .labels import abs_group, closed_form_k0
from .tables import KINDS, render_table
from .verify import DEFAULT_MAX_RANK, DEFAULT_PRIMES, MAX_RANK_LIMIT, sweep
from .witnesses import witness_suite

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def cmd_compute(plus: int, minus: int, field: str) -> str:
    profile, _ = parse_field(field)
    res = abs_group(profile, plus, minus)
    closed = closed_form_k0(profile, plus, minus)
    if closed is not res.k0:
        raise AssertionError(f"closed form {closed} disagrees with {res.k0}")
    return (f"K0 plus={plus} minus={minus} profile={profile.value} "
            f"algebra={res.label.render()} d={res.d} dperp={res.dperp} result={res.k0}")


def cmd_table(field: str, kind: str, max_n: int = 8, r: int = 0) -> str:
    profile, _ = parse_field(field)
    return render_table(profile, kind, max_n=max_n, r=r)


def parse_primes(text: str) -> list:
    primes = []
    for part in text.split(","):
        part = part.strip()
        try:
            p = int(part)
        except ValueError:
            raise UsageError(f"{part!r} is not an integer") from None
        PrimeField(p)  # raises "not prime" / characteristic 2
        primes.append(p)
    return primes


def cmd_verify(primes, max_rank: int, include_witnesses: bool, jobs: int = 1, out=None) -> int:
    out = out or sys.stdout
    if not 1 <= max_rank <= MAX_RANK_LIMIT:
        raise UsageError(f"max-rank must be in 1..{MAX_RANK_LIMIT}")
    records = sweep(primes, max_rank, jobs=jobs)
    mismatches = 0
    for rec in records:
        print(rec.render(), file=out)
        mismatches += not rec.ok
    witness_failures = 0
    n_witness = 0
    if include_witnesses:
        for field in [QQ] + [PrimeField(p) for p in primes]:
            for cert in witness_suite(field):
                print(cert.render(), file=out)
                n_witness += 1
                witness_failures += not cert.passed
    print(f"SUMMARY cases={len(records)} mismatches={mismatches} "
          f"witnesses={n_witness} witness_failures={witness_failures}", file=out)
    return EXIT_MISMATCH if mismatches or witness_failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadric-k0", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="reduced K_0 of R_{n,m}")
    p.add_argument("--plus", type=int, required=True)
    p.add_argument("--minus", type=int, required=True)
    p.add_argument("--field", required=True, help="level-1 | level-2 | level-inf | Fp:<p> | Q")

    p = sub.add_parser("table", help="Clifford algebra tables")
    p.add_argument("--field", required=True)
    p.add_argument("--kind", required=True, help=" | ".join(KINDS))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--r", type=int, default=0)

    p = sub.add_parser("verify", help="oracle-vs-symbolic sweep over prime fields")
    p.add_argument("--primes", default=",".join(str(q) for q in DEFAULT_PRIMES))
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("real-geometry", help="Euler class and Chow groups over R")
    p.add_argument("--plus", type=int, required=True)
    p.add_argument("--minus", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            print(cmd_compute(args.plus, args.minus, args.field))
        elif args.command == "table":
            sys.stdout.write(cmd_table(args.field, args.kind, args.max_n, args.r))
        elif args.command == "verify":
            return cmd_verify(parse_primes(args.primes), args.max_rank, args.witnesses, args.jobs)
        elif args.command == "real-geometry":
            print(real_geometry(args.plus, args.minus).render())
    except (UsageError, QuadricK0Error, ValueError) as exc:
        print(f"quadric-k0: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
