"""
Command line front end.

    pfafflab verify SUITE --n N [--json PATH] [--report PATH]
    pfafflab rep --n N --shape 1,1 [--cache-dir DIR]
    pfafflab branch --n N --lambda -1,-1 [--json PATH]
    pfafflab pf --n N (--hat i | --subset I) (--symbolic | --tableau T [--shape S] | --xi ...)

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 only
singular-weight skips, 4 empty module.
"""

import argparse
import json
import logging
import sys

from . import branching as br
from . import suites
from .algebra import AlgebraError, so
from .cache import default_cache_dir, load_or_build
from .pfaffian import hat_set, pf_F
from .report import VerificationReport, plain
from .reps import RepError, highest_to_shape, tableau_vector, tensor_module, trivial_module, tensor_space

EXIT_USAGE = 2
EXIT_EMPTY = 4


class UsageError(Exception):
    pass


def int_list(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got %r" % text)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(report, args):
    sys.stdout.write(report.to_text())
    if getattr(args, "json", None):
        _write(args.json, report.to_json() + "\n")
    if getattr(args, "report", None):
        _write(args.report, report.to_text())
    return report.exit_code()


# -- commands ------------------------------------------------------------------

def cmd_verify(args):
    return _emit(suites.run_suite(args.suite, args.n), args)


def cmd_rep(args):
    cache_dir = args.cache_dir or default_cache_dir()
    module, status = load_or_build(args.n, args.shape, cache_dir)
    if not module.dim:
        print("module o_%d shape %s is empty" % (args.n, ",".join(map(str, args.shape))))
        return EXIT_EMPTY
    print("o_%d shape %s: dimension %d (%s, cache %s)" % (args.n, ",".join(map(str, args.shape)), module.dim,
                                                         status, cache_dir))
    for w, m in module.weight_multiplicities().items():
        print("  weight (%s): %d" % (", ".join(str(x) for x in w), m))
    return 0


def module_for_highest(N, lam):
    lam = tuple(lam)
    n = N // 2
    if len(lam) != n or any(x > 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise UsageError("highest weight must have %d entries with 0 >= l_1 >= ... >= l_n" % n)
    shape = highest_to_shape(lam)
    if not shape:
        return trivial_module(N)
    return tensor_module(N, shape)


def branch_report(N, lam, conv=br.DEFAULT):
    """Branching report: per mu the labels, Gram determinant, PfF_hat(n) image and checks."""
    if N % 2 == 0:
        raise UsageError("branching needs odd N")
    module = module_for_highest(N, lam)
    report = VerificationReport("branch")
    data = br.branching_data(module, lam, conv)
    if N == 5:
        pins = suites.mz_pins(conv)
        tm_c, sign, den = pins["tm_c"], pins["sign"], pins["den"]
    else:
        tm_c, sign, den = (lambda mu: br.tm_scalar(N // 2 - 1, mu)), None, None
    br.check_main_theorem(module, lam, report, tm_c=tm_c, sign=sign, den=den, conv=conv, data=data)
    lines = ["branching of o_%d module with highest weight (%s), dim %d"
             % (N, ", ".join(map(str, lam)), module.dim)]
    for d in data:
        lines.append("mu = (%s): %d labels, gram det %s" % (", ".join(map(str, d.mu)), len(d.labels), d.gram_det))
        for l in d.labels:
            img = d.coords[l]
            if img is None:
                text = "outside the xi span"
            else:
                text = " + ".join("%s*xi[%d;%s]" % (c, k.sigma, ",".join(map(str, k.nu)))
                                  for k, c in sorted(img.items())) or "0"
            lines.append("  PfF_hat xi[%d;%s] = %s" % (l.sigma, ",".join(map(str, l.nu)), text))
    return report, lines


def cmd_branch(args):
    report, lines = branch_report(args.n, args.lam)
    sys.stdout.write("\n".join(lines) + "\n")
    return _emit(report, args)


def _format_tensor(v):
    if not v:
        return "0"
    return "\n".join("%s * e[%s]" % (c, ",".join(map(str, t))) for t, c in sorted(v.items()))


def cmd_pf(args):
    A = so(args.n)
    if args.hat is not None:
        I = hat_set(A, args.hat)
    else:
        I = tuple(sorted(args.subset))
    P = pf_F(A, I)
    if args.tableau is not None:
        shape = args.shape or (len(args.tableau),)
        v = tableau_vector(args.n, shape, args.tableau)
        T = tensor_space(args.n, sum(shape))
        print(_format_tensor(T.act(P, v)))
    elif args.xi:
        if args.lam is None or args.mu is None or args.nu is None:
            raise UsageError("--xi needs --lambda, --mu and --nu")
        module = module_for_highest(args.n, args.lam)
        act = br.MzAction(module)
        v = br.xi_vector(act, args.lam, args.mu, br.BranchingLabel(args.sigma, tuple(args.nu)))
        img = module.act(P, v)
        print("xi = %s" % json.dumps(plain(v), sort_keys=True))
        print("PfF xi = %s" % json.dumps(plain(img), sort_keys=True))
    else:
        print(P)
    return 0


# -- parser --------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="pfafflab", description="Exact Pfaffian and branching laboratory for o_N")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=suites.SUITES)
    v.add_argument("--n", type=int, default=5, help="rank N (default 5)")
    v.add_argument("--json", help="write the machine-readable report here ('-' for stdout)")
    v.add_argument("--report", help="write the text report here")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rep", help="build (or load) a tensor module")
    r.add_argument("--n", type=int, default=5)
    r.add_argument("--shape", type=int_list, required=True)
    r.add_argument("--cache-dir", help="cache directory (default $%s)" % "PFAFFLAB_CACHE_DIR")
    r.set_defaults(func=cmd_rep)

    b = sub.add_parser("branch", help="xi basis and the complement Pfaffian in it")
    b.add_argument("--n", type=int, default=5)
    b.add_argument("--lambda", dest="lam", type=int_list, required=True)
    b.add_argument("--json")
    b.add_argument("--report")
    b.set_defaults(func=cmd_branch)

    f = sub.add_parser("pf", help="expand or apply a Pfaffian")
    f.add_argument("--n", type=int, default=5)
    which = f.add_mutually_exclusive_group(required=True)
    which.add_argument("--hat", type=int)
    which.add_argument("--subset", type=int_list)
    target = f.add_mutually_exclusive_group()
    target.add_argument("--symbolic", action="store_true")
    target.add_argument("--tableau", type=int_list)
    target.add_argument("--xi", action="store_true")
    f.add_argument("--shape", type=int_list)
    f.add_argument("--lambda", dest="lam", type=int_list)
    f.add_argument("--mu", type=int_list)
    f.add_argument("--sigma", type=int, default=0, choices=(0, 1))
    f.add_argument("--nu", type=int_list)
    f.set_defaults(func=cmd_pf)
    return p


LIST_OPTIONS = ("--lambda", "--mu", "--nu", "--subset", "--tableau", "--shape", "--hat")


def _join_negative_values(argv):
    """Turn "--lambda -1,-2" into "--lambda=-1,-2" so argparse does not read the value as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in LIST_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else "%s=%s" % (tok, nxt))
        else:
            out.append(tok)
    return out


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except (UsageError, AlgebraError, RepError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
