"""Command-line interface: ``betaqt poly | moments | verify``.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage error.
All output is deterministic for fixed arguments; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import oracle, partitions, superint, symfunc
from .exactalg import ALPHA, ONE, Q, T, ZERO, RatFunc, eval_numeric, parse, substitute
from .partitions import conjugate, format_partition, n_stat, parse_partition, partitions_of, size
from .qseries import alsalam_carlitz_U

SCHEMA = 1
SUITES = ("symbolic", "lattice", "gaussian")

# closed forms used as regression targets by the symbolic suite
GBETA_CLOSED = {
    1: "(N^2 + N*(alpha - 1))/2",
    2: "(2*N^3 + 5*N^2*(alpha - 1) + N*(3 - 5*alpha + 3*alpha^2))/4",
}
QT_CLOSED = {
    1: "(1 + a)*(1 - u)/(1 - t)",
    2: "(1 - u)/(t*(1 - t^2))*((1 + a^2)*t + u*(t + a*(1 + q + (1 + a + q)*t)))",
    3: "(1 + a)*(1 - u)/(t^2*(1 - t^3))*(a*(1 + t)*(1 + q + q^2)*u^2"
    " + t^2*((1 + a^2)*(1 + u + u^2) + a*(-1 + q*u)*(1 + u + q*u)))",
}


# ---------------------------------------------------------------------------
# verification report

@dataclass
class CheckResult:
    check_id: str
    reference: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"id": self.check_id, "reference": self.reference, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }
        if include_timing:
            out["duration_seconds"] = round(self.duration, 3)
        return out


@dataclass(frozen=True)
class VerifyParams:
    max_degree: int = 4
    q: Fraction = Fraction(1, 2)
    a: Fraction = Fraction(-3, 4)
    depth: int = 60
    rel_tol: Fraction = Fraction(1, 10**9)


Outcome = Iterator[str]  # each yielded string is a failure witness


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    reference: str
    run: Callable[[VerifyParams], Outcome]


REGISTRY: list[Check] = []


def check(check_id: str, suite: str, reference: str):
    def register(fn):
        REGISTRY.append(Check(check_id, suite, reference, fn))
        return fn

    return register


def _close(x: Fraction, y: Fraction, tol: Fraction) -> bool:
    scale = max(abs(x), abs(y))
    return abs(x - y) <= tol * scale


def _parts(max_size: int, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    for n in range(min_size, max_size + 1):
        yield from partitions_of(n)


# ---------------------------------------------------------------------------
# symbolic suite

@check("moments.gaussian_beta", "symbolic", "m_{N,2} and m_{N,4} closed forms of the Gaussian beta ensemble")
def _moments_gbeta(params):
    for p, text in GBETA_CLOSED.items():
        got = superint.moment_gaussian_beta(p)
        if got != parse(text):
            yield f"p={p}: computed {got}, expected {text}"


@check("moments.qt", "symbolic", "M_1, M_2, M_3 closed forms of the (q,t) ensemble")
def _moments_qt(params):
    for p, text in QT_CLOSED.items():
        got = superint.moment_qt(p)
        if got != parse(text):
            yield f"p={p}: computed {got}, expected {text}"


@check("moments.qt_structure", "symbolic", "M_p is a polynomial of degree <= p in u = t^N, vanishing at u = 1")
def _moments_qt_structure(params):
    for p in range(1, params.max_degree + 1):
        m = superint.moment_qt(p)
        by_u = m.coefficients("u")
        if max(by_u) > p or any("u" in c.variables() for c in by_u.values()):
            yield f"p={p}: {m} is not polynomial of degree <= {p} in u"
        if not substitute(m, {"u": 1}).is_zero():
            yield f"p={p}: M_p does not vanish at u=1"


@check("moments.gaussian_beta_structure", "symbolic", "2^p m_{N,2p}: degree p+1 in N, integer polynomial genus coefficients")
def _moments_gbeta_structure(params):
    for p in range(1, params.max_degree + 1):
        try:
            superint.topological_expansion(p)
        except ArithmeticError as exc:
            yield f"p={p}: {exc}"


@check("functional.qt", "symbolic", "M_p(a,q,t,u) = -q^-p (1-q^p)/(1-t^p) M_p(a,1/t,1/q,u)")
def _functional_qt(params):
    for p in range(1, params.max_degree + 1):
        if not superint.functional_equation_check_qt(p):
            yield f"p={p}: M_p = {superint.moment_qt(p)}"


@check("functional.gaussian_beta", "symbolic", "m(N, alpha) = (-alpha)^(p+1) m(-N/alpha, 1/alpha)")
def _functional_gbe(params):
    for p in range(1, params.max_degree + 1):
        if not superint.functional_equation_check_gbe(p):
            yield f"p={p}: m = {superint.moment_gaussian_beta(p)}"


@check("functional.odd_powers", "symbolic", "q^(p/2) M_p(a,q,q,u) is odd under q -> 1/q")
def _odd_powers(params):
    for p in range(1, params.max_degree + 1):
        if not superint.odd_inverse_power_check(p):
            yield f"p={p}: M_p(a,q,q,u) = {substitute(superint.moment_qt(p), {'t': Q})}"


@check("duality.jack", "symbolic", "Jack average duality kappa <-> kappa', alpha <-> 1/alpha")
def _duality_jack(params):
    for kappa in _parts(params.max_degree):
        if not superint.duality_check_jack(kappa):
            yield (
                f"{format_partition(kappa)}: lhs {superint.jack_normalised_average(kappa)}, "
                f"dual {superint.jack_normalised_average(conjugate(kappa))}"
            )


@check("duality.macdonald", "symbolic", "Macdonald average duality kappa <-> kappa', (q,t) <-> (1/t,1/q)")
def _duality_macdonald(params):
    for kappa in _parts(params.max_degree):
        if not superint.duality_check_macdonald(kappa):
            yield (
                f"{format_partition(kappa)}: lhs {superint.macdonald_normalised_average(kappa)}, "
                f"dual {superint.macdonald_normalised_average(conjugate(kappa))}"
            )


@check("norm.jack", "symbolic", "Jack orthogonality <P_k, P_m> = delta h'_k/h_k")
def _norm_jack(params):
    for n in range(1, params.max_degree + 1):
        basis = {k: symfunc.jack(k) for k in partitions_of(n)}
        for k, pk in basis.items():
            upper, lower = partitions.hooks_jack(k)
            for m, pm in basis.items():
                want = upper / lower if k == m else ZERO
                got = symfunc.scalar_product_jack(pk, pm)
                if got != want:
                    yield f"<P_{format_partition(k)}, P_{format_partition(m)}> = {got}, expected {want}"


@check("norm.qt", "symbolic", "Macdonald orthogonality <P_k, P_m>_(q,t) = delta h'_k(q,t)/h_k(q,t)")
def _norm_qt(params):
    for n in range(1, params.max_degree + 1):
        basis = {k: symfunc.macdonald(k) for k in partitions_of(n)}
        for k, pk in basis.items():
            lower, upper = partitions.hooks_qt(k)
            for m, pm in basis.items():
                want = upper / lower if k == m else ZERO
                got = symfunc.scalar_product_qt(pk, pm)
                if got != want:
                    yield f"<P_{format_partition(k)}, P_{format_partition(m)}> = {got}, expected {want}"


@check("coefficient.p1", "symbolic", "[p_1^n] P_k^(alpha) = 1/h_k")
def _p1_coefficient(params):
    for kappa in _parts(params.max_degree):
        got = symfunc.coefficient(symfunc.jack(kappa), (1,) * size(kappa))
        want = 1 / partitions.hooks_jack(kappa)[1]
        if got != want:
            yield f"{format_partition(kappa)}: {got} != {want}"


@check("specialization.principal", "symbolic", "P_k(p_j = (1-u^j)/(1-t^j)) = (u)_k^(q,t) / h_k(q,t)")
def _principal(params):
    for kappa in _parts(params.max_degree):
        got = symfunc.specialize(symfunc.macdonald(kappa), symfunc.principal(RatFunc("u")))
        want = partitions.gen_pochhammer_qt("u", kappa) / partitions.hooks_qt(kappa)[0]
        if got != want:
            yield f"{format_partition(kappa)}: {got} != {want}"


@check("automorphism.jack", "symbolic", "omega_{-alpha} P_k^(alpha) = (-1)^|k| h'_k/h_k P_k'^(1/alpha)")
def _omega_jack(params):
    for kappa in _parts(params.max_degree):
        upper, lower = partitions.hooks_jack(kappa)
        lhs = symfunc.omega_c_jack(symfunc.jack(kappa), -ALPHA)
        rhs = symfunc.jack(conjugate(kappa)).substitute({"alpha": 1 / ALPHA}) * ((-1) ** size(kappa) * upper / lower)
        if lhs != rhs:
            yield f"{format_partition(kappa)}: difference {lhs - rhs!r}"


@check("automorphism.qt", "symbolic", "omega_{q,t} P_k(q,t) = h'_k/h_k P_k'(t,q)")
def _omega_qt(params):
    for kappa in _parts(params.max_degree):
        lower, upper = partitions.hooks_qt(kappa)
        lhs = symfunc.omega_qt(symfunc.macdonald(kappa))
        rhs = symfunc.swap_qt(symfunc.macdonald(conjugate(kappa))) * (upper / lower)
        if lhs != rhs:
            yield f"{format_partition(kappa)}: difference {lhs - rhs!r}"


@check("coefficient.transpose_jack", "symbolic", "(-alpha)^(|k|-1) u_k(alpha)/h_k(alpha) = u_k'(1/alpha)/h_k'(1/alpha)")
def _transpose_jack(params):
    inv = {"alpha": 1 / ALPHA}
    for n in range(1, params.max_degree + 1):
        u = symfunc.powersum_in_jack(n)
        for kappa in partitions_of(n):
            kc = conjugate(kappa)
            lhs = (-ALPHA) ** (n - 1) * u.get(kappa, ZERO) / partitions.hooks_jack(kappa)[1]
            rhs = substitute(u.get(kc, ZERO) / partitions.hooks_jack(kc)[1], inv)
            if lhs != rhs:
                yield f"{format_partition(kappa)}: {lhs} != {rhs}"


@check("coefficient.transpose_qt", "symbolic", "u_k(q,t)/h_k(q,t) in terms of u_k'(1/t,1/q)/h_k'(1/t,1/q)")
def _transpose_qt(params):
    inv = {"q": 1 / T, "t": 1 / Q}
    for n in range(1, params.max_degree + 1):
        u = symfunc.powersum_in_macdonald(n)
        for kappa in partitions_of(n):
            kc = conjugate(kappa)
            lhs = u.get(kappa, ZERO) / partitions.hooks_qt(kappa)[0]
            dual = substitute(u.get(kc, ZERO) / partitions.hooks_qt(kc)[0], inv)
            rhs = -(T ** -n_stat(kappa)) * Q ** (-n_stat(kc) - n) * (1 - Q**n) / (1 - T**n) * dual
            if lhs != rhs:
                yield f"{format_partition(kappa)}: {lhs} != {rhs}"


@check("moments.harer_zagier", "symbolic", "GUE alternating binomial sum = coefficient extraction, p, N <= 6")
def _harer_zagier(params):
    at_one = {}
    for p in (1, 2):
        at_one[p] = superint.moment_gaussian_beta(p)
    for p in range(1, 7):
        for n in range(1, 7):
            try:
                value = superint.harer_zagier_moment(p, n)
            except ArithmeticError as exc:
                yield str(exc)
                continue
            if p in at_one:
                expected = eval_numeric(at_one[p], {"alpha": 1, "N": n})
                if value != expected:
                    yield f"p={p}, N={n}: {value} != {expected}"


@check("char_poly.symbolic", "symbolic", "<prod (z - x_l)> = U_N^(a)(z; t), independent of q")
def _char_poly(params):
    for n in range(0, params.max_degree + 1):
        if not superint.char_poly_check(n):
            yield f"N={n}: {superint.char_poly_average(n)} vs {alsalam_carlitz_U(n, 'a', 'z', 't')}"


@check("hypergeom.qt", "symbolic", "term-wise (q,t) 0F0 average = prod-exp closed form")
def _hypergeom_qt(params):
    for n in (1, 2):
        if not superint.hypergeom_check_qt(min(params.max_degree, 3), n):
            yield f"N={n}: truncation through degree {min(params.max_degree, 3)} differs"


# ---------------------------------------------------------------------------
# lattice suite

def _lattice(params, m, n, symmetrized=False):
    return oracle.LatticeSpec(params.q, m, params.a, n, params.depth, symmetrized)


@check("lattice.normalisation", "lattice", "Jackson lattice total mass = closed-form normalisation")
def _lattice_norm(params):
    for n in (1, 2):
        for m in (1, 2):
            spec = _lattice(params, m, n)
            got, want = oracle.jackson_total_mass(spec), oracle.jackson_normalisation(spec)
            if not _close(got, want, params.rel_tol):
                yield f"N={n}, m={m}: {float(got)!r} vs {float(want)!r}"


@check("lattice.theorem", "lattice", "Jackson lattice average of P_k = Macdonald superintegrability formula")
def _lattice_theorem(params):
    for n in (1, 2, 3):
        for m in (1, 2):
            spec = _lattice(params, m, n)
            for kappa in _parts(min(params.max_degree, 3)):
                got = oracle.jackson_average(symfunc.macdonald(kappa), spec)
                want = eval_numeric(superint.macdonald_average(kappa), spec.bindings())
                if not (got == want == 0 or _close(got, want, params.rel_tol)):
                    yield f"kappa={format_partition(kappa)}, N={n}, m={m}: {float(got)!r} vs {float(want)!r}"


@check("lattice.char_poly", "lattice", "Jackson lattice <e_k> = coefficients of U_N^(a)(z; t)")
def _lattice_char_poly(params):
    for n in (1, 2):
        for m in (1, 2):
            spec = _lattice(params, m, n)
            coeffs = alsalam_carlitz_U(n, "a", "z", "t").coefficients("z")
            for k in range(1, n + 1):
                got = oracle.jackson_average(symfunc.macdonald((1,) * k), spec)
                want = (-1) ** k * eval_numeric(coeffs.get(n - k, ZERO), spec.bindings())
                if not _close(got, want, params.rel_tol):
                    yield f"N={n}, m={m}, e_{k}: {float(got)!r} vs {float(want)!r}"


@check("lattice.symmetrised", "lattice", "symmetrised and plain lattice densities give equal averages")
def _lattice_kadell(params):
    for f_name, f in (("p1", symfunc.SymFunc.p((1,))), ("p2", symfunc.SymFunc.p((2,))), ("p1^2", symfunc.SymFunc.p((1, 1)))):
        for m in (1, 2):
            spec = _lattice(params, m, 2)
            if not oracle.kadell_equivalence_check(f, spec, params.rel_tol):
                plain = oracle.jackson_average(f, spec)
                sym = oracle.jackson_average(f, _lattice(params, m, 2, True))
                yield f"{f_name}, m={m}: {float(plain)!r} vs {float(sym)!r}"


@check("lattice.orthogonality", "lattice", "U_N^(a)(x; q) orthogonal under the one-variable lattice measure")
def _lattice_orthogonality(params):
    spec = _lattice(params, 1, 1)
    bind = {"a": params.a, "q": params.q}
    polys = [substitute(alsalam_carlitz_U(n, "a", "z", "q"), bind) for n in range(5)]
    points = oracle._lattice(spec.q, spec.a, spec.depth)

    def inner(f, g):
        return sum((w * eval_numeric(f, {"z": x}) * eval_numeric(g, {"z": x}) for x, w in points), Fraction(0))

    norms = [inner(p, p) for p in polys]
    for i in range(5):
        for j in range(i):
            value = inner(polys[i], polys[j])
            if abs(value) > Fraction(1, 10**8) * (norms[i] * norms[j]) ** 0.5:
                yield f"<U_{i}, U_{j}> = {float(value)!r}"


# ---------------------------------------------------------------------------
# gaussian suite

@check("gaussian.superintegrability", "gaussian", "exact Gaussian average of P_k^(2/beta) = Jack superintegrability formula")
def _gaussian_theorem(params):
    for n in (1, 2, 3):
        for beta in (2, 4):
            spec = oracle.GaussianSpec(n, beta)
            bind = {"alpha": spec.alpha, "N": n}
            for kappa in _parts(min(params.max_degree, 4), 2):
                if size(kappa) % 2:
                    continue
                got = oracle.gaussian_average_exact(symfunc.jack(kappa), spec)
                want = eval_numeric(superint.jack_average(kappa), bind)
                if got != want:
                    yield f"kappa={format_partition(kappa)}, N={n}, beta={beta}: {got} vs {want}"


@check("gaussian.normalisation", "gaussian", "Gaussian beta partition function closed form")
def _gaussian_norm(params):
    for n in (1, 2):
        for beta in (2, 4):
            if not oracle.gaussian_partition_check(oracle.GaussianSpec(n, beta)):
                yield f"N={n}, beta={beta}"


@check("hypergeom.jack", "gaussian", "term-wise Gaussian 0F0 average = exp(p_2/2)")
def _hypergeom_jack(params):
    for n in (1, 2):
        for alpha in (Fraction(1), Fraction(1, 2)):
            if not superint.hypergeom_check_jack(params.max_degree, n, alpha):
                yield f"N={n}, alpha={alpha}: truncation through degree {params.max_degree} differs"


def run_verify(suite: str, params: VerifyParams) -> VerifyReport:
    wanted = SUITES if suite == "all" else (suite,)
    report = VerifyReport(suite)
    start = time.perf_counter()
    for chk in REGISTRY:
        if chk.suite not in wanted:
            continue
        try:
            witnesses = list(chk.run(params))
        except (ArithmeticError, ValueError, KeyError) as exc:
            witnesses = [f"{type(exc).__name__}: {exc}"]
        report.checks.append(
            CheckResult(chk.check_id, chk.reference, not witnesses, "; ".join(witnesses) if witnesses else None)
        )
    report.duration = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# argument parsing

def exact_rational(text: str) -> Fraction:
    if any(c in text for c in ".eE"):
        raise argparse.ArgumentTypeError(f"{text!r}: give an exact rational such as 1/2")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from None


def partition_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betaqt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="power-sum expansion of a Jack, Macdonald or Schur polynomial")
    poly.add_argument("--basis", choices=("jack", "macdonald", "schur"), required=True)
    poly.add_argument("--partition", type=partition_arg, required=True, help='comma separated parts, e.g. "3,1"')
    poly.add_argument("--output-format", choices=("json", "text"), default="json")
    poly.add_argument("--output", help="write to this path instead of stdout")

    moments = sub.add_parser("moments", help="table of closed-form spectral moments")
    moments.add_argument("--family", choices=("gbeta", "qt"), required=True)
    moments.add_argument("--max-p", type=positive_int, required=True)
    moments.add_argument("--format", choices=("json", "csv"), default="json")
    moments.add_argument("--output")

    verify = sub.add_parser("verify", help="run identity and oracle checks")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    verify.add_argument("--max-degree", type=positive_int, default=4)
    verify.add_argument("--q", type=exact_rational, default=Fraction(1, 2))
    verify.add_argument("--a", type=exact_rational, default=Fraction(-3, 4))
    verify.add_argument("--depth", type=positive_int, default=60)
    verify.add_argument("--timing", action="store_true", help="include wall-clock duration in the report")
    verify.add_argument("--output")
    return parser


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_text(kappa, basis, f: symfunc.SymFunc) -> str:
    lines = [f"{basis} P_({format_partition(kappa)}) in power sums:"]
    for lam, c in sorted(f.items(), reverse=True):
        lines.append(f"  p_({format_partition(lam)}): {c}")
    return "\n".join(lines)


def cmd_poly(args) -> int:
    kappa = args.partition
    f = {"jack": symfunc.jack, "macdonald": symfunc.macdonald, "schur": symfunc.schur}[args.basis](kappa)
    if args.output_format == "json":
        payload = {"schema": SCHEMA, "family": args.basis, "partition": format_partition(kappa), **f.to_json()}
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        _emit(_poly_text(kappa, args.basis, f), args.output)
    return 0


def cmd_moments(args) -> int:
    table = superint.moment_table(args.family, args.max_p)
    _emit(table.dumps() if args.format == "json" else table.to_csv(), args.output)
    return 0


def cmd_verify(args, parser) -> int:
    if not 0 < args.q < 1:
        parser.error("--q must lie strictly between 0 and 1")
    if args.a >= 0:
        parser.error("--a must be negative")
    params = VerifyParams(args.max_degree, args.q, args.a, args.depth)
    report = run_verify(args.suite, params)
    _emit(json.dumps(report.to_json(args.timing), indent=2), args.output)
    failed = [c.check_id for c in report.checks if not c.passed]
    status = "FAIL " + ", ".join(failed) if failed else "PASS"
    print(f"{status} ({len(report.checks)} checks, {report.duration:.1f}s)", file=sys.stderr)
    return 1 if failed else 0


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--a -3/4`` into ``--a=-3/4`` so argparse does not read -3/4 as a flag."""
    out: list[str] = []
    for token in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE_RATIONAL.match(token):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if args.command == "poly":
            return cmd_poly(args)
        if args.command == "moments":
            return cmd_moments(args)
        return cmd_verify(args, parser)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
