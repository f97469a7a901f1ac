"""Command-line front end: verification campaigns, tables and JSON reports."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from . import __version__
from .diagrams import catalan, enumerate_monic_basis, enumerate_tl_basis, render_ascii, standard_dim
from .report import Report, timed

NMAX_PROJECTIVE = 8
NMAX_STANDARD = 12
CATALAN_ENUM_MAX = 10


@dataclass
class Campaign:
    """Ordered list of named cells; each cell returns a Report."""

    cells: List[Tuple[str, Callable[[], Report]]] = field(default_factory=list)

    def add(self, name: str, fn: Callable[[], Report]) -> None:
        self.cells.append((name, fn))

    def run(self, timing: bool = False, progress=None) -> Report:
        total = Report()
        for name, fn in self.cells:
            with timed() as t:
                rep = fn()
            if timing:
                for c in rep.claims:
                    c.runtime_ms = t["ms"]
            if progress is not None:
                progress(name, rep, t["ms"] if timing else None)
            total.extend(rep)
        return total


def parse_range(text: str) -> List[int]:
    """'4..6' -> [4, 5, 6]; '8' -> [8]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return list(range(lo, hi + 1))


def _levels(n: int) -> List[int]:
    return list(range(n % 2, n + 1, 2))


# ---------------------------------------------------------------------------
# campaign builders


def dims_report(ns: Sequence[int], nmax_projective: int = NMAX_PROJECTIVE) -> Tuple[Report, List[str]]:
    from .standard import build_projective, irreducible_dim

    rep = Report()
    rows = []
    for n in ns:
        levels = _levels(n)
        w = [standard_dim(n, l) for l in levels]
        counted = [len(enumerate_monic_basis(n, l)) for l in levels]
        rep.add("dim_standard", "monic diagram count = binomial difference", {"n": n}, w, counted)
        if n <= CATALAN_ENUM_MAX:
            rep.add("dim_tl_catalan", "dim TL_n = Catalan(n) by enumeration", {"n": n},
                    catalan(n), len(enumerate_tl_basis(n)))
        rep.add("dim_tl_sum_squares", "Catalan(n) = sum of squared standard dims", {"n": n},
                catalan(n), sum(d * d for d in w))
        ell = [str(irreducible_dim(n, l)) if l > 0 else "-" for l in levels]
        if n % 2 == 0 and n <= nmax_projective:
            proj = []
            for l in levels:
                if l == 0:
                    proj.append("-")
                    continue
                p = build_projective(n, l)
                rep.add("dim_projective", "dim P_ell = dim W_ell + dim W_{ell-2}", {"n": n, "ell": l},
                        standard_dim(n, l) + standard_dim(n, l - 2), p.dim)
                proj.append(str(p.dim))
        else:
            proj = ["-"] * len(levels)
        rows.append(f"n={n}: ell ({','.join(map(str, levels))})  W ({','.join(map(str, w))})  "
                    f"P ({','.join(proj)})  L ({','.join(ell)})  Catalan {catalan(n)}")
    return rep, rows


def exact_campaign(ns: Sequence[int]) -> Campaign:
    from .standard import verify_exact_sequence, verify_bend_composite

    c = Campaign()
    for n in ns:
        c.add(f"exact n={n}", lambda n=n: verify_exact_sequence(n))
        c.add(f"bend composite n={n}", lambda n=n: verify_bend_composite(n))
    return c


def gram_campaign(ns: Sequence[int]) -> Campaign:
    from .standard import verify_gram

    c = Campaign()
    for n in ns:
        c.add(f"gram n={n}", lambda n=n: verify_gram(n))
    return c


def restriction_campaign(ns: Sequence[int]) -> Campaign:
    from .standard import verify_restriction

    c = Campaign()
    for n in ns:
        for l in _levels(n):
            c.add(f"restriction n={n} ell={l}", lambda n=n, l=l: verify_restriction(n, l))
    return c


def homs_campaign(ns: Sequence[int]) -> Campaign:
    from .standard import verify_adjacent_compositions, verify_hom_tables

    c = Campaign()
    for n in ns:
        c.add(f"homs n={n}", lambda n=n: verify_hom_tables(n))
        c.add(f"adjacent n={n}", lambda n=n: verify_adjacent_compositions(n))
    return c


def hw_campaign(ns: Sequence[int], ms: Sequence[int]) -> Campaign:
    from .quiver import verify_hw_axioms_quiver
    from .standard import verify_hw_axioms_tl

    c = Campaign()
    for n in ns:
        c.add(f"hw TL n={n}", lambda n=n: verify_hw_axioms_tl(n))
    for m in ms:
        c.add(f"hw quiver m={m}", lambda m=m: verify_hw_axioms_quiver(m))
    return c


def quiver_campaign(ns: Sequence[int]) -> Campaign:
    from .quiver import verify_path_basis, verify_Phi_images, verify_Psi_iso

    c = Campaign()
    for n in ns:
        c.add(f"path basis m={n // 2}", lambda n=n: verify_path_basis(n // 2))
        c.add(f"Psi n={n}", lambda n=n: verify_Psi_iso(n))
        c.add(f"Phi n={n}", lambda n=n: verify_Phi_images(n))
    return c


def specht_campaign(ns: Sequence[int], seed: int = 0, example: bool = True) -> Campaign:
    from .specht import verify_commuting_square, verify_G_bijection, verify_resolution, verify_specht_exactness
    from .worked_examples import verify_resolution_example

    c = Campaign()
    for n in ns:
        c.add(f"G n={n}", lambda n=n: verify_G_bijection(n))
        if n % 2 == 0:
            for k in range(1, n // 2 + 1):
                c.add(f"square n={n} k={k}", lambda n=n, k=k: verify_commuting_square(n, k))
            c.add(f"T-exact n={n}", lambda n=n: verify_specht_exactness(n))
        c.add(f"resolution n={n}", lambda n=n: verify_resolution(n, samples=10, seed=seed * 1000 + n))
    if example:
        c.add("resolution example", verify_resolution_example)
    return c


def jones_campaign(ns: Sequence[int], seed: int = 0, count: int = 200, max_len: int = 12) -> Campaign:
    from .jones import verify_classical_values, verify_jones_campaign

    c = Campaign()
    c.add("jones table", verify_classical_values)
    for n in ns:
        c.add(f"jones n={n}", lambda n=n: verify_jones_campaign(n, count=count, max_len=max_len, seed=seed))
    return c


def full_campaign(nmax: Optional[int], seed: int) -> Tuple[Campaign, dict]:
    from .worked_examples import verify_worked_examples

    n_std = NMAX_STANDARD if nmax is None else nmax
    n_proj = NMAX_PROJECTIVE if nmax is None else min(nmax, NMAX_PROJECTIVE)
    evens_std = [n for n in range(2, n_std + 1, 2)]
    evens_proj = [n for n in range(4, n_proj + 1, 2)]
    c = Campaign()
    c.add("dims", lambda: dims_report(range(1, n_std + 1), n_proj)[0])
    c.add("worked examples", verify_worked_examples)
    for part in (
        exact_campaign(evens_std),
        gram_campaign(range(1, n_std + 1)),
        restriction_campaign(range(2, n_proj + 1, 2)),
        homs_campaign(evens_proj),
        hw_campaign(evens_proj, range(1, n_proj // 2 + 3)),
        quiver_campaign(evens_proj),
        specht_campaign(range(2, n_std + 1), seed),
        jones_campaign([n for n in range(2, min(n_proj, 6) + 1)], seed),
    ):
        c.cells.extend(part.cells)
    params = {"nmax_standard": n_std, "nmax_projective": n_proj, "seed": seed}
    return c, params


# ---------------------------------------------------------------------------
# output


def _emit(rep: Report, args, params: dict, out) -> int:
    if not args.quiet:
        for c in rep.sorted_claims():
            print(c.line(), file=out)
        for k, v in sorted(rep.notes.items()):
            print(f"note {k}: {v}", file=out)
    else:
        for c in rep.sorted_claims():
            if not c.passed:
                print(c.line(), file=out)
    n_fail = len(rep.failures())
    print(f"claims: {len(rep.claims)}  passed: {len(rep.claims) - n_fail}  failed: {n_fail}", file=out)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.dumps(params, timing=args.timing))
            fh.write("\n")
    return 0 if rep.passed else 1


def _progress(args, out):
    if not args.timing or args.quiet:
        return None

    def show(name, rep, ms):
        print(f"# {name}: {len(rep.claims)} claims, {ms:.0f} ms", file=out)

    return show


def _run(campaign: Campaign, args, params: dict, out) -> int:
    rep = campaign.run(timing=args.timing, progress=_progress(args, out))
    return _emit(rep, args, params, out)


def _even(n: int) -> int:
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    return n


# ---------------------------------------------------------------------------
# subcommands


def cmd_dims(args, out) -> int:
    rep, rows = dims_report(args.range, NMAX_PROJECTIVE if args.nmax is None else args.nmax)
    for r in rows:
        print(r, file=out)
    return _emit(rep, args, {"range": args.range}, out)


def cmd_exact(args, out) -> int:
    return _run(exact_campaign([_even(args.n)]), args, {"n": args.n}, out)


def cmd_gram(args, out) -> int:
    return _run(gram_campaign([args.n]), args, {"n": args.n}, out)


def cmd_restriction(args, out) -> int:
    return _run(restriction_campaign([_even(args.n)]), args, {"n": args.n}, out)


def cmd_homs(args, out) -> int:
    return _run(homs_campaign([_even(args.n)]), args, {"n": args.n}, out)


def cmd_hw(args, out) -> int:
    n = _even(args.n)
    return _run(hw_campaign([n], [n // 2]), args, {"n": n}, out)


def cmd_quiver(args, out) -> int:
    return _run(quiver_campaign([_even(args.n)]), args, {"n": args.n}, out)


def cmd_specht(args, out) -> int:
    return _run(specht_campaign([args.n], args.seed, example=args.n == 8), args,
                {"n": args.n, "seed": args.seed}, out)


def cmd_examples(args, out) -> int:
    from .worked_examples import verify_resolution_example, verify_worked_examples

    c = Campaign()
    c.add("worked examples", verify_worked_examples)
    c.add("resolution example", verify_resolution_example)
    return _run(c, args, {}, out)


def cmd_jones(args, out) -> int:
    from .jones import BraidWord, character, format_in_t, jones_polynomial, verify_alternating_identity

    text = args.word if args.word is not None else args.braid
    if text is None:
        raise ValueError("give a braid word, e.g. 1,1,1")
    w = BraidWord.parse(text, args.strands)
    v = jones_polynomial(w, args.prefactor)
    print(f"braid: [{w}] on {w.n} strands, writhe {w.writhe}", file=out)
    for k in range(w.n // 2 + 1):
        print(f"chi_({w.n - k},{k}) = {format_in_t(character(w.n, k, w))}", file=out)
    print(f"V(t) = {format_in_t(v)}", file=out)
    rep = verify_alternating_identity(w)
    rep.notes["jones"] = format_in_t(v)
    return _emit(rep, args, {"word": str(w), "strands": w.n, "prefactor": args.prefactor}, out)


def cmd_basis(args, out) -> int:
    basis = enumerate_monic_basis(args.n, args.ell)
    for i, x in enumerate(basis):
        print(f"{i}: {x}", file=out)
        if args.draw:
            print(render_ascii(x), file=out)
    print(f"dim W_{args.ell}^{args.n} = {len(basis)}", file=out)
    return 0


def cmd_all(args, out) -> int:
    campaign, params = full_campaign(args.nmax, args.seed)
    return _run(campaign, args, params, out)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized campaigns (default 0)")
    common.add_argument("--nmax", type=int, default=None, help="size cap for the campaign")
    common.add_argument("--quiet", action="store_true", help="print failures and the summary only")
    common.add_argument("--timing", action="store_true", help="record runtimes (output is then not reproducible)")

    p = argparse.ArgumentParser(prog="tlzero", description="Exact checks for Temperley-Lieb algebras at beta = 0.")
    p.add_argument("--version", action="version", version=f"tlzero {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("dims", parents=[common], help="dimension table for a range of n")
    s.add_argument("range", type=parse_range, help="N or A..B")
    s.set_defaults(func=cmd_dims)

    for name, func, helptext in (
        ("exact", cmd_exact, "exactness of the W sequence and the g composite"),
        ("gram", cmd_gram, "Gram ranks and irreducible dimensions"),
        ("restriction", cmd_restriction, "restriction of W to TL_{n-1}"),
        ("homs", cmd_homs, "hom tables between projectives and standards"),
        ("hw", cmd_hw, "highest weight axioms for TL_n(0) and the quiver algebra"),
        ("quiver", cmd_quiver, "quiver equivalence: path basis, Psi and Phi"),
        ("specht", cmd_specht, "GF(2) Specht suite"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("n", type=int)
        s.set_defaults(func=func)

    s = sub.add_parser("examples", parents=[common], help="fixed hand-checkable examples")
    s.set_defaults(func=cmd_examples)

    s = sub.add_parser("jones", parents=[common], help="Jones polynomial of a braid closure",
                       epilog="negative letters: tlzero jones --strands 2 -- -1,-1,-1 (or --word=-1,-1,-1)")
    s.add_argument("braid", nargs="?", help="comma-separated letters, e.g. 1,1,1")
    s.add_argument("--word", help="the braid word (use --word=-1,2 for a leading negative letter)")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("--prefactor", choices=("corrected", "literal"), default="corrected")
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("basis", parents=[common], help="list the monic basis of W_ell^n")
    s.add_argument("n", type=int)
    s.add_argument("ell", type=int)
    s.add_argument("--draw", action="store_true", help="ASCII pictures")
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("all", parents=[common], help="full campaign")
    s.set_defaults(func=cmd_all)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print(f"tlzero: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
