"""Command-line interface.

Subcommands:

* ``eval`` - evaluate an expression under a chosen product.
* ``check`` - run an axiom suite, or ``check reduction`` for reduction sweeps.
* ``clt`` - moments of normalized sums of independent identical variables.
* ``classical independence`` - decide independence of two finite variables.
* ``state unitize`` - adjoin a unit to a non-unital state document.

Exact rationals are the wire truth; decimal renderings are advisory.
Errors leave a single-line JSON object {code, message, context} on stderr.
Exit codes: 0 success or expected outcome, 1 assertion failure, 2 usage or
parse error, 3 degree or regime error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .algebra import AlgebraSignature, Monomial, normalize_word
from .axioms import Axiom, expected_outcome, run_axiom_suite
from .classical import independence_equivalence, load_space, load_variable
from .errors import DegreeExceeded, ExpressionError, RegimeMismatch, StateDocumentError
from .moments import MomentFunctional, dump_state, load_state, unitize
from .parsing import format_word, parse_expression
from .products import (
    JointFunctional,
    eval_graded_tensor,
    parse_kind_label,
    sum_moment,
)
from .rational import (
    ZERO,
    as_rational,
    decimal_rendering,
    format_rational,
    parse_rational,
)
from .reductions import ReductionKind, reduction_sweep


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ncindep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate an expression under a product")
    p_eval.add_argument("--product", required=True, help="tensor|free|boolean|monotone|antimonotone|degenerate|q:<base>:<q>|fermi")
    p_eval.add_argument("--state", required=True, nargs="+", help="state document files, one per factor")
    p_eval.add_argument("--expr", required=True, help="expression over Algebra.generator letters")

    p_check = sub.add_parser("check", help="run an axiom suite or reduction sweep")
    p_check.add_argument("target", nargs="?", choices=["reduction"], help="'reduction' for reduction sweeps; omit for axiom checks")
    p_check.add_argument("--axiom", help="associativity|unitlaw|inclusion|functoriality|factorization|symmetry|mirror")
    p_check.add_argument("--product", help="product kind for axiom checks")
    p_check.add_argument("--kind", help="fermi|boolean|monotone|antimonotone (reduction sweeps)")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--trials", type=int, default=50)
    p_check.add_argument("--max-len", dest="max_len", type=int, default=None, help="maximum word length (default 6 for axioms, 5 for reductions)")

    p_clt = sub.add_parser("clt", help="moments of sums of independent copies")
    p_clt.add_argument("--product", required=True)
    p_clt.add_argument("--moments", required=True, help="comma-separated m1,...,mD of one summand")
    p_clt.add_argument("--n", required=True, type=int, help="number of summands")
    p_clt.add_argument("--order", required=True, type=int, help="moment order to compute")

    p_classical = sub.add_parser("classical", help="finite classical probability")
    p_classical.add_argument("action", choices=["independence"])
    p_classical.add_argument("--space", required=True, help="probability space JSON file")
    p_classical.add_argument("--x", required=True, help="first variable JSON file")
    p_classical.add_argument("--y", required=True, help="second variable JSON file")

    p_state = sub.add_parser("state", help="state document utilities")
    p_state.add_argument("action", choices=["unitize"])
    p_state.add_argument("--state", required=True, help="non-unital state document file")
    p_state.add_argument("--out", help="output file (default: stdout)")

    return parser


def _emit_error(code: str, message: str, context: dict) -> None:
    sys.stderr.write(
        json.dumps({"code": code, "message": message, "context": context}, sort_keys=True)
        + "\n"
    )


def _parse_any_kind(label: str):
    """A ProductKind, QDeformed, or the string 'fermi'."""
    if label.strip().lower() == "fermi":
        return "fermi"
    return parse_kind_label(label)


def _cmd_eval(args) -> int:
    states = [load_state(path) for path in args.state]
    kind = _parse_any_kind(args.product)
    polynomial = parse_expression(args.expr, [phi.algebra for phi in states])
    if kind == "fermi":
        total = ZERO
        for word, coeff in polynomial.items():
            total += coeff * eval_graded_tensor(states, word)
    else:
        total = JointFunctional(states, kind).evaluate_polynomial(polynomial)
    print(format_rational(total))
    print("~ %s" % decimal_rendering(total))
    return 0


def _cmd_check_axiom(args) -> int:
    if not args.axiom or not args.product:
        raise _UsageError("check needs --axiom and --product (or the 'reduction' target)")
    try:
        axiom = Axiom(args.axiom.strip().lower())
    except ValueError:
        raise _UsageError("unknown axiom %r" % args.axiom) from None
    kind = parse_kind_label(args.product)
    max_len = 6 if args.max_len is None else args.max_len
    report = run_axiom_suite(axiom, kind, args.seed, args.trials, max_len)
    for line in report.lines():
        print(line)
    expected = expected_outcome(axiom, kind)
    as_expected = report.passed == expected
    print(
        "expected=%s observed=%s verdict=%s"
        % (
            "pass" if expected else "fail",
            "pass" if report.passed else "fail",
            "ok" if as_expected else "unexpected",
        )
    )
    if as_expected:
        return 0
    _emit_error(
        "mismatch",
        "axiom outcome differs from the documented expectation",
        {"axiom": axiom.value, "product": args.product, "failures": len(report.failures)},
    )
    return 1


def _cmd_check_reduction(args) -> int:
    if not args.kind:
        raise _UsageError("check reduction needs --kind")
    try:
        kind = ReductionKind(args.kind.strip().lower())
    except ValueError:
        raise _UsageError("unknown reduction kind %r" % args.kind) from None
    max_len = 5 if args.max_len is None else args.max_len
    checked, failures = reduction_sweep(kind, args.seed, args.trials, max_len)
    print(
        "reduction=%s seed=%d trials=%d max-len=%d checked=%d failures=%d"
        % (kind.value, args.seed, args.trials, max_len, checked, len(failures))
    )
    for _, word, check in failures[:3]:
        print(
            "witness: word=%s lhs=%s rhs=%s"
            % (format_word(word), format_rational(check.lhs), format_rational(check.rhs))
        )
    if failures:
        _emit_error(
            "mismatch",
            "reduction verification failed",
            {"kind": kind.value, "failures": len(failures)},
        )
        return 1
    return 0


def _cmd_clt(args) -> int:
    kind = _parse_any_kind(args.product)
    try:
        moments = [parse_rational(piece) for piece in args.moments.split(",")]
    except ValueError as exc:
        raise _UsageError("bad --moments list: %s" % exc) from None
    if not moments:
        raise _UsageError("--moments must list at least one moment")
    if args.n < 1:
        raise _UsageError("--n must be at least 1")
    if args.order < 1:
        raise _UsageError("--order must be at least 1")
    degree = 1 if kind == "fermi" else 0
    signature = AlgebraSignature.make("X", (("x", degree),), unital=False)
    entries = {("x",) * (j + 1): value for j, value in enumerate(moments)}
    phi = MomentFunctional.from_entries(signature, len(moments), entries)
    states = [phi] * args.n
    if kind == "fermi":
        letter = Monomial(signature, ("x",))
        total = ZERO
        for combo in itertools.product(range(args.n), repeat=args.order):
            word = normalize_word((index, letter) for index in combo)
            total += eval_graded_tensor(states, word)
    else:
        total = sum_moment(kind, states, args.order)
    print(format_rational(total))
    if args.order % 2 == 0:
        normalized = total / as_rational(args.n) ** (args.order // 2)
        print("normalized: %s" % format_rational(normalized))
    return 0


def _cmd_classical(args) -> int:
    space = load_space(args.space)
    x = load_variable(args.x, space)
    y = load_variable(args.y, space)
    verdict = independence_equivalence(x, y)
    print("atomwise: %s" % ("true" if verdict.atomwise else "false"))
    print("jointfactor: %s" % ("true" if verdict.jointfactor else "false"))
    if verdict.atomwise != verdict.jointfactor:
        _emit_error(
            "mismatch",
            "the two independence criteria disagree",
            {"atomwise": verdict.atomwise, "jointfactor": verdict.jointfactor},
        )
        return 1
    return 0


def _cmd_state(args) -> int:
    phi = load_state(args.state)
    enlarged = unitize(phi)
    text = dump_state(enlarged, args.out)
    if args.out is None:
        print(text)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required (eval, check, clt, classical, state)")
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "check":
            if args.target == "reduction":
                return _cmd_check_reduction(args)
            return _cmd_check_axiom(args)
        if args.command == "clt":
            return _cmd_clt(args)
        if args.command == "classical":
            return _cmd_classical(args)
        if args.command == "state":
            return _cmd_state(args)
        raise _UsageError("unknown command %r" % args.command)
    except _UsageError as exc:
        _emit_error("usage", str(exc), {})
        return 2
    except ExpressionError as exc:
        _emit_error("expression", str(exc), {"offset": exc.offset})
        return 2
    except StateDocumentError as exc:
        _emit_error("document", str(exc), {})
        return 2
    except FileNotFoundError as exc:
        _emit_error("document", "file not found: %s" % exc.filename, {"path": str(exc.filename)})
        return 2
    except json.JSONDecodeError as exc:
        _emit_error("document", str(exc), {})
        return 2
    except DegreeExceeded as exc:
        _emit_error("degree", str(exc), {"max_degree": exc.max_degree})
        return 3
    except RegimeMismatch as exc:
        _emit_error("regime", str(exc), {})
        return 3
    except ValueError as exc:
        _emit_error("usage", str(exc), {})
        return 2


if __name__ == "__main__":
    sys.exit(main())
