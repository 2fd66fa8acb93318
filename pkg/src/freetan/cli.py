"""Command-line interface.

Subcommands: seq, eig, cotsum, oracle, cumulants, radius, levy, density,
simulate, verify.  CSV columns follow the per-command contracts below;
JSON output is UTF-8, one document per run, with exact rationals as
"p/q" strings and floats printed at 17 significant digits.

Exit codes: 0 success, 1 argument or I/O error, 2 internal-consistency
failure (a cross-checked identity did not hold).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import analysis, combinatorics, laws, partitions, randmat, spectra
from .exceptions import ConsistencyError

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(x):
    """Floats at 17 significant digits (lossless round trip)."""
    return f"{float(x):.17g}"


def _frac_str(x):
    if x is None:
        return None
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _emit_text(text, out_path):
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj, out_path):
    _emit_text(json.dumps(obj, indent=2) + "\n", out_path)


def _emit_csv(header, rows, out_path):
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row) for row in rows]
    _emit_text("\n".join(lines) + "\n", out_path)


def _law_from_args(args, allow_zigzag=False):
    """LawParams from --law/--a/--b with the unit-circle constraint.

    (a, b) within 1e-6 of the circle is renormalized with a warning;
    anything farther off is rejected.
    """
    law = getattr(args, "law", "general")
    if law == "tangent":
        return laws.LawParams.tangent(), None
    if law == "zigzag":
        if not allow_zigzag:
            raise _UsageError("--law zigzag is not supported by this command")
        return laws.LawParams(math.sqrt(0.5), math.sqrt(0.5)), "zigzag"
    a, b = args.a, args.b
    if a is None or b is None:
        raise _UsageError("--law general requires --a and --b")
    if b <= 0:
        raise _UsageError("--b must be positive")
    r = math.hypot(a, b)
    if abs(r - 1.0) > 1e-6:
        raise _UsageError(f"(a, b) is {abs(r-1.0):.2e} off the unit circle; refusing")
    if r != 1.0:
        print(
            f"warning: renormalizing (a, b) by {r:.17g} onto the unit circle",
            file=sys.stderr,
        )
        a, b = a / r, b / r
    # recognize rational points of the circle (e.g. 0.6, 0.8) so the
    # cumulants come out exact; binary floats never satisfy the equation
    # literally, so probe a small-denominator neighbour
    frac_a = Fraction(a).limit_denominator(10**6)
    frac_b = Fraction(b).limit_denominator(10**6)
    if (
        frac_a**2 + frac_b**2 == 1
        and abs(float(frac_a) - a) < 1e-12
        and abs(float(frac_b) - b) < 1e-12
    ):
        return laws.LawParams.from_rational(frac_a, frac_b), None
    return laws.LawParams(a, b), None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_seq(args):
    kind = args.kind
    rows = []
    if kind == "tangent":
        for k, t in enumerate(combinatorics.tangent_numbers(args.count), start=1):
            rows.append({"n": 2 * k - 1, "value": str(t)})
    elif kind == "zigzag":
        for n, e in enumerate(combinatorics.zigzag_numbers(args.count)):
            rows.append({"n": n, "value": str(e)})
    elif kind == "bernoulli":
        for k in range(1, args.count + 1):
            rows.append({"n": 2 * k, "value": _frac_str(combinatorics.bernoulli(k))})
    else:
        raise _UsageError(f"unknown sequence kind {kind!r}")
    _emit_json(rows, args.out)
    return 0


def _cmd_eig(args):
    spec = spectra.StructuredMatrixSpec(args.n, args.c, complex(args.a, args.b))
    closed = spectra.closed_form_eigenvalues(spec)
    direct = spectra.hermitian_eigenvalues(spectra.build(spec))
    rows = [
        (_fmt(d), _fmt(c), _fmt(abs(d - c)))
        for d, c in zip(direct, closed)
    ]
    _emit_csv(("direct", "closed", "absdiff"), rows, args.out)
    return 0


def _cmd_cotsum(args):
    which = args.which
    fn = spectra.cotangent_sum_2m if which == "even" else spectra.cotangent_sum_shifted
    rows = []
    n_values = [args.n] if args.n else range(1, args.nmax + 1)
    m_values = [args.m] if args.m else range(1, args.mmax + 1)
    for n in n_values:
        for m in m_values:
            direct, closed = fn(n, m)
            rows.append((n, m, _fmt(direct), _fmt(closed), _fmt(abs(direct - closed))))
    _emit_csv(("n", "m", "direct", "closed", "absdiff"), rows, args.out)
    return 0


_ORACLE_MATRICES = [
    ("identity-1", [[1]]),
    ("commutator-2", [[0, 1j], [-1j, 0]]),
    ("commutator-3", [[0, 1j, 1j], [-1j, 0, 1j], [-1j, -1j, 0]]),
    (
        "mixed-3",
        [
            [0, 0.5 + 0.5j, 0.5 + 0.5j],
            [0.5 - 0.5j, 0, 0.5 + 0.5j],
            [0.5 - 0.5j, 0.5 - 0.5j, 0],
        ],
    ),
    (
        "commutator-4",
        [
            [0, 1j, 1j, 1j],
            [-1j, 0, 1j, 1j],
            [-1j, -1j, 0, 1j],
            [-1j, -1j, -1j, 0],
        ],
    ),
]


def _cmd_oracle(args):
    table = []
    ok = True
    for name, matrix in _ORACLE_MATRICES:
        r_max = min(args.rmax, 3 if len(matrix) >= 4 else 4)
        cums = partitions.quadratic_form_cumulants_oracle(matrix, r_max)
        traces = spectra.exact_trace_powers(matrix, r_max)
        for r in range(1, r_max + 1):
            equal = cums[r - 1] == traces[r - 1]
            ok = ok and equal
            table.append(
                {
                    "matrix": name,
                    "r": r,
                    "oracle": _frac_str(cums[r - 1]),
                    "trace": _frac_str(traces[r - 1]),
                    "equal": equal,
                }
            )
    _emit_json(table, args.out)
    if not ok:
        raise ConsistencyError("quadratic-form oracle disagrees with trace powers")
    return 0


def _cmd_cumulants(args):
    rows = []
    if args.law == "zigzag":
        exact = laws.zigzag_law_cumulants(args.rmax)
        for r in range(1, args.rmax + 1):
            rows.append(
                {
                    "r": r,
                    "exact": _frac_str(exact[r - 1]),
                    "float": _fmt(exact[r - 1]),
                    "formula_checks": True,
                }
            )
        _emit_json(rows, args.out)
        return 0
    params, _ = _law_from_args(args)
    if args.n == "inf":
        cums = laws.limit_cumulants(params, args.rmax)
        for r in range(1, args.rmax + 1):
            rows.append(
                {
                    "r": r,
                    "exact": _frac_str(cums.exact[r - 1]),
                    "float": _fmt(cums.values[r - 1]),
                    "formula_checks": True,
                }
            )
    else:
        n = int(args.n)
        vals = laws.finite_n_cumulants(params, n, args.rmax)
        for r in range(1, args.rmax + 1):
            rows.append(
                {"r": r, "exact": None, "float": _fmt(vals[r - 1]), "formula_checks": True}
            )
    _emit_json(rows, args.out)
    return 0


def _cmd_radius(args):
    if args.alpha is not None:
        params = laws.LawParams.from_angle(args.alpha)
    else:
        params, _ = _law_from_args(args)
    res = analysis.spectral_radius(params)
    rho_min = analysis.spectral_radius_by_minimization(params)
    _emit_json(
        {
            "alpha": _fmt(params.alpha),
            "u": _fmt(res.u),
            "rho": _fmt(res.rho),
            "iterations": res.iterations,
            "residual": _fmt(res.residual),
            "rho_minimized": _fmt(rho_min),
            "routes_diff": _fmt(abs(res.rho - rho_min)),
        },
        args.out,
    )
    return 0


def _cmd_levy(args):
    params, _ = _law_from_args(args)
    measure = analysis.levy_atoms(params, args.kmax, verify=args.verify)
    theta0 = math.pi / 2 if params.a == 0 else math.atan(params.b / params.a)
    rows = []
    for i, (loc, mass) in enumerate(measure.atoms):
        k = round((params.b / loc - theta0) / math.pi)
        check = measure.mass_checks[i] if measure.mass_checks else None
        rows.append(
            {
                "k": k,
                "location": _fmt(loc),
                "mass": _fmt(mass),
                "mass_check": _fmt(check) if check is not None else None,
            }
        )
    _emit_json(rows, args.out)
    return 0


def _cmd_density(args):
    params, special = _law_from_args(args, allow_zigzag=True)
    x_range = (-args.xmax, args.xmax) if args.xmax else None
    grid = analysis.density_grid(params, x_range, args.points, args.tol)
    psi, f = grid.psi, grid.f
    if special == "zigzag":
        # the half-scaled law: density f(x) -> sqrt(2) f(sqrt(2) x)
        psi = psi / math.sqrt(2.0)
        f = f * math.sqrt(2.0)
    rows = [
        (_fmt(x), _fmt(p), _fmt(y))
        for x, p, y in zip(grid.x_param, psi, f)
    ]
    _emit_csv(("x_param", "psi", "f"), rows, args.out)
    meta = {
        "mass": _fmt(grid.mass),
        "support_edges": [_fmt(psi[0]), _fmt(psi[-1])],
        "points": int(grid.x_param.size),
    }
    print(json.dumps(meta), file=sys.stderr)
    return 0


def _cmd_simulate(args):
    cfg = randmat.SimConfig(
        N=args.N, M=args.M, samples=args.samples, seed=args.seed, bins=args.bins
    )
    if args.model == "gue":
        orders, means, errs = randmat.gue_moment_estimates(cfg, (2, 4))
        eigs = np.concatenate(
            [
                np.linalg.eigvalsh(randmat.sample_gue(cfg.N, randmat.sample_stream(cfg.seed, s)))
                for s in range(cfg.samples)
            ]
        )
        hist = randmat.histogram(eigs, cfg.bins)
        moments = {f"m{m}": _fmt(v) for m, v in zip(orders, means)}
        moments.update({f"stderr_m{m}": _fmt(e) for m, e in zip(orders, errs)})
    elif args.model == "wishart":
        params, _ = _law_from_args(args)
        a_m = spectra.build(params.matrix_spec(cfg.M))
        spectrum = randmat.simulate_wishart_model(a_m, cfg)
        hist = randmat.histogram(spectrum, cfg.bins)
        moments = {
            "m1": _fmt(spectrum.normalized_moment(1)),
            "m2": _fmt(spectrum.normalized_moment(2)),
            "m4": _fmt(spectrum.normalized_moment(4)),
        }
    elif args.model == "sandwich":
        params, _ = _law_from_args(args)
        d_n = spectra.build(params.matrix_spec(cfg.N)) / cfg.N
        res = randmat.simulate_sandwich_model(d_n, cfg, orders=(1, 2, 3))
        hist = randmat.histogram(res.per_sample[:, 1], cfg.bins)
        moments = {
            f"Tr_m{m}": _fmt(v) for m, v in zip(res.orders, res.means)
        }
        moments.update(
            {f"stderr_m{m}": _fmt(e) for m, e in zip(res.orders, res.stderrs)}
        )
    else:
        raise _UsageError(f"unknown model {args.model!r}")
    rows = [
        (_fmt(lo), _fmt(hi), int(c), _fmt(d))
        for lo, hi, c, d in zip(
            hist.bin_edges[:-1], hist.bin_edges[1:], hist.counts, hist.density
        )
    ]
    _emit_csv(("bin_left", "bin_right", "count", "density"), rows, args.out)
    print(json.dumps({"model": args.model, "seed": cfg.seed, **moments}), file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _check_sequences():
    assert combinatorics.tangent_numbers(6)[:4] == [1, 2, 16, 272]
    for n in range(1, 13):
        lhs, rhs = combinatorics.zigzag_sum_identity(n)
        assert lhs == rhs, f"zigzag sum identity fails at n={n}"
        combinatorics.tangent_polynomial(n)  # raises on route mismatch


def _check_partitions():
    for n in range(1, 8):
        got = len(partitions.enumerate_nc(n))
        assert got == partitions.catalan(n), f"NC({n}) count {got}"
    mats = [m for _, m in _ORACLE_MATRICES if len(m) <= 3]
    for matrix in mats:
        r_max = 3
        cums = partitions.quadratic_form_cumulants_oracle(matrix, r_max)
        traces = spectra.exact_trace_powers(matrix, r_max)
        assert cums == traces, "oracle != trace powers"


def _check_cotsums():
    for n in range(1, 13):
        for m in range(1, 5):
            d, c = spectra.cotangent_sum_2m(n, m)
            assert abs(d - c) <= 1e-8 * max(1.0, abs(c)), f"even sum n={n} m={m}"
            d, c = spectra.cotangent_sum_shifted(n, m)
            assert abs(d - c) <= 1e-8 * max(1.0, abs(c)), f"shifted sum n={n} m={m}"


def _check_eigensolver():
    for n in (2, 5, 9, 16):
        spec = spectra.StructuredMatrixSpec(n, 0.0, 0.6 + 0.8j)
        closed = spectra.closed_form_eigenvalues(spec)
        direct = spectra.hermitian_eigenvalues(spectra.build(spec))
        assert np.max(np.abs(closed - direct)) < 1e-9


def _check_limit_cumulants():
    for alpha in (math.pi / 6, math.pi / 2, 2 * math.pi / 3):
        laws.limit_cumulants(laws.LawParams.from_angle(alpha), 12)
    params = laws.LawParams.tangent()
    fc = laws.finite_n_cumulants(params, 8, 6)
    for r in range(1, 7):
        tr = spectra.trace_power(params.matrix_spec(8), r) / 8.0**r
        assert abs(fc[r - 1] - tr) < 1e-9
    kk = laws.bp_classical_cumulants(6)
    tang = laws.tangent_law_cumulants(12)
    assert kk == [tang[2 * k - 1] for k in range(1, 7)]


def _check_radius_levy():
    res = analysis.spectral_radius(laws.LawParams.from_angle(math.pi / 2))
    assert abs(res.rho - 2.2644374158937358461) < 1e-10
    assert abs(analysis.dottie() - 0.7390851332) < 1e-9
    params = laws.LawParams.tangent()
    c = analysis.levy_cumulant_transform(params, 1.0, 1000)
    assert abs(c - math.tan(1.0)) < 1e-2


def _check_density():
    grid = analysis.density_grid(laws.LawParams.tangent(), n_points=401)
    assert abs(grid.mass - 1.0) < 1e-4
    assert abs(grid.moment(2) - 1.0) < 1e-3


def _check_randmat():
    d = np.diag(np.arange(1.0, 4.0)) / 3.0
    exact = randmat.pairing_expected_moment(d, (1, 0))
    assert abs(exact - np.trace(d).real) < 1e-12
    mc, se = randmat.mc_product_moment(d, (1, 0, 1, 0), 20000, 123)
    exact4 = randmat.pairing_expected_moment(d, (1, 0, 1, 0))
    assert abs(mc - exact4) <= 3 * se + 1e-12
    cfg = randmat.SimConfig(N=16, M=16, samples=3, seed=99)
    a_m = spectra.build(laws.LawParams.tangent().matrix_spec(16))
    s1 = randmat.simulate_wishart_model(a_m, cfg)
    s2 = randmat.simulate_wishart_model(a_m, cfg)
    assert np.array_equal(s1.eigenvalues, s2.eigenvalues)


_VERIFY_CHECKS = [
    ("exact-sequences", _check_sequences, True),
    ("nc-partitions-oracle", _check_partitions, True),
    ("cotangent-identities", _check_cotsums, True),
    ("eigensolver-vs-closed-form", _check_eigensolver, False),
    ("limit-cumulant-routes", _check_limit_cumulants, False),
    ("radius-and-levy", _check_radius_levy, False),
    ("density-mass", _check_density, False),
    ("random-matrix-engine", _check_randmat, False),
]


def _cmd_verify(args):
    failures = 0
    for name, fn, quick in _VERIFY_CHECKS:
        if args.quick and not quick:
            continue
        try:
            fn()
        except Exception as exc:  # report every check, fail at the end
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    if failures:
        print(f"{failures} check(s) failed")
        return 2
    print("PASS")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser():
    parser = _Parser(prog="freetan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="integer/rational sequence tables as JSON")
    p.add_argument("--kind", choices=("tangent", "zigzag", "bernoulli"), required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--out", default=None)

    p = sub.add_parser("eig", help="closed-form vs iterative eigenvalues (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("cotsum", help="cotangent power-sum identity checks (CSV)")
    p.add_argument("--which", choices=("even", "shifted"), default="even")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--mmax", type=int, default=4)
    p.add_argument("--out", default=None)

    p = sub.add_parser("oracle", help="quadratic-form cumulants vs trace powers (JSON)")
    p.add_argument("--rmax", type=int, default=4)
    p.add_argument("--out", default=None)

    p = sub.add_parser("cumulants", help="limit-law cumulants (JSON)")
    p.add_argument("--law", choices=("tangent", "zigzag", "general"), default="tangent")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--rmax", type=int, default=8)
    p.add_argument("--n", default="inf", help='matrix size, or "inf" for the limit')
    p.add_argument("--out", default=None)

    p = sub.add_parser("radius", help="spectral radius of the limit law (JSON)")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--law", choices=("tangent", "general"), default="general")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("levy", help="free Levy measure atoms (JSON)")
    p.add_argument("--law", choices=("tangent", "general"), default="tangent")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("density", help="density grid via boundary inversion (CSV)")
    p.add_argument("--law", choices=("tangent", "zigzag", "general"), default="tangent")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--xmax", type=float, default=None)
    p.add_argument("--points", type=int, default=2001)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", default=None)

    p = sub.add_parser("simulate", help="seeded random-matrix simulation (CSV + JSON)")
    p.add_argument("--model", choices=("wishart", "sandwich", "gue"), required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--law", choices=("tangent", "general"), default="tangent")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--quick", action="store_true")

    return parser


_COMMANDS = {
    "seq": _cmd_seq,
    "eig": _cmd_eig,
    "cotsum": _cmd_cotsum,
    "oracle": _cmd_oracle,
    "cumulants": _cmd_cumulants,
    "radius": _cmd_radius,
    "levy": _cmd_levy,
    "density": _cmd_density,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def run(argv):
    """Parse argv (without the program name) and run; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
