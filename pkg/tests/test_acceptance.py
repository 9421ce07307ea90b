"""End-to-end acceptance checks, one test per shipped guarantee.

Each test prints a single verdict line under pytest -v.  Every expected
value is either derived by an independent route inside the test or is a
hand-checked closed form; nothing is compared against the implementation's
own output blindly.
"""

import math
import time

import numpy as np

from test_cli import GOLDEN_CASES, _argv

from dirichlet_rkhs.cli import run
from dirichlet_rkhs.diagnostics import (almost_periodicity_probe, boas_bound,
                                        gershgorin_split, merging_family)
from dirichlet_rkhs.embeddings import (line_embedding_ratio,
                                       line_embedding_sharp_constant,
                                       random_polynomial_corpus)
from dirichlet_rkhs.interpolation import (build_blaschke, finite_interpolant,
                                          min_norm_interpolant)
from dirichlet_rkhs.spaces import (BERGMAN_DIRICHLET, HARDY_DIRICHLET,
                                   HARDY_HALF_PLANE, WEIGHTED_DIRICHLET,
                                   DirichletPolynomial, HalfPlanePoint,
                                   PointSequence, SpaceId, kernel_value,
                                   pseudohyperbolic_distance)
from dirichlet_rkhs.zeta import (WeightedZetaParams, eval_gamma,
                                 eval_weighted_remainder, eval_weighted_zeta,
                                 eval_zeta, eval_zeta_remainder)

H = SpaceId(HARDY_DIRICHLET)
H2 = SpaceId(HARDY_HALF_PLANE)


def _random_sequence(rng, n, sigma_lo, sigma_hi, t_abs):
    while True:
        try:
            return PointSequence(tuple(
                HalfPlanePoint(rng.uniform(sigma_lo, sigma_hi),
                               rng.uniform(-t_abs, t_abs)) for _ in range(n)))
        except Exception:
            continue


def test_criterion_01_kernel_locality():
    t0 = time.time()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(100):
        s = complex(rng.uniform(0.6, 3.0), rng.uniform(-5.0, 5.0))
        w = complex(rng.uniform(0.6, 3.0), rng.uniform(-5.0, 5.0))
        z = s + w.conjugate()
        gap = eval_zeta(z) - 1.0 / (z - 1.0) - eval_zeta_remainder(z)
        worst = max(worst, abs(gap))
    elapsed = time.time() - t0
    assert worst <= 1e-9, f"pole + entire-part split misses by {worst:.3e}"
    assert elapsed < 5.0, f"locality check took {elapsed:.1f}s"


def test_criterion_02_zeta_oracle_equivalence():
    t0 = time.time()
    rng = np.random.default_rng(102)
    n = 10**6
    ns = np.arange(1, n + 1, dtype=np.float64)
    worst = 0.0
    for _ in range(50):
        s = complex(rng.uniform(1.2, 3.0), rng.uniform(-5.0, 5.0))
        direct = np.sum(ns ** (-s)) + n ** (1 - s) / (s - 1) - 0.5 * n ** (-s)
        worst = max(worst, abs(eval_zeta(s) - direct))
    gamma_gap = abs(eval_zeta_remainder(1.0) - 0.5772156649)
    elapsed = time.time() - t0
    assert worst <= 1e-8, f"summation routes disagree by {worst:.3e}"
    assert gamma_gap <= 1e-8, f"remainder at the pole off by {gamma_gap:.3e}"
    assert elapsed < 30.0, f"oracle comparison took {elapsed:.1f}s"


def test_criterion_03_weighted_pole_remainder_bounded():
    # the remainder after the singular term is evaluated by the
    # cancellation-free route; plain subtraction of the two large halves
    # cross-checks it at the epsilons where a double can still resolve
    # the difference (for alpha = -2 the halves reach 2e15 at eps = 1e-5)
    t0 = time.time()
    for alpha in (-2.0, -1.0, -0.5, 0.5, 1.0):
        params = WeightedZetaParams(alpha)
        rems = []
        for k in range(1, 6):
            eps = 10.0 ** (-k)
            rem = abs(eval_weighted_remainder(params, 1.0 + eps))
            rems.append(rem)
            if k <= 2:
                value = eval_weighted_zeta(params, 1.0 + eps)
                if alpha == 1.0:
                    main = math.log(1.0 / eps)
                else:
                    main = eval_gamma(1.0 - alpha) * eps ** (alpha - 1.0)
                assert abs(abs(value - main) - rem) <= 1e-6 * max(1.0, rem), \
                    f"alpha={alpha}, k={k}: subtraction route disagrees"
        cap = 50.0 * rems[0]
        assert all(r <= cap for r in rems), \
            f"alpha={alpha}: remainders {rems} blow past 50x the k=1 value"
        assert all(math.isfinite(r) for r in rems)
    elapsed = time.time() - t0
    assert elapsed < 60.0, f"remainder scan took {elapsed:.1f}s"


def test_criterion_04_explicit_interpolant_small_problems():
    t0 = time.time()
    rng = np.random.default_rng(104)
    worst_resid = 0.0
    worst_far = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 9))
        nodes = _random_sequence(rng, n, 0.6, 2.0, 5.0)
        targets = tuple(complex(rng.standard_normal(), rng.standard_normal())
                        for _ in range(n))
        interp = finite_interpolant(nodes, targets)
        worst_resid = max(worst_resid, max(interp.residuals))
        product = build_blaschke(nodes)
        worst_far = max(worst_far, abs(product.evaluate(60.0 + 0.0j) - 1.0))
    elapsed = time.time() - t0
    assert worst_resid <= 1e-8, f"node residual {worst_resid:.3e}"
    assert worst_far <= 1e-8, f"product at sigma=60 off 1 by {worst_far:.3e}"
    assert elapsed < 20.0, f"interpolant sweep took {elapsed:.1f}s"


def test_criterion_05_min_norm_interpolant_certified():
    rng = np.random.default_rng(105)
    for space in (H, H2):
        for _ in range(10):
            n = int(rng.integers(2, 7))
            nodes = _random_sequence(rng, n, 0.8, 2.5, 4.0)
            targets = np.array([complex(rng.standard_normal(),
                                        rng.standard_normal())
                                for _ in range(n)])
            interp = min_norm_interpolant(space, nodes, targets)
            bound = 1e-8 * max(1.0, float(np.linalg.norm(targets)))
            assert max(interp.residuals) <= bound
            kmat = np.array([[kernel_value(space, wj, sl)
                              for wj in nodes.points] for sl in nodes.points])
            norm_ref = math.sqrt(max(0.0, float(np.real(
                np.conj(targets) @ np.linalg.solve(kmat, targets)))))
            assert abs(interp.norm - norm_ref) <= 1e-8, \
                f"reported norm {interp.norm} vs moment-system norm {norm_ref}"
    # hand-solved two-point case: K = [[1, 1/2], [1/2, 1/3]], a = (1, 0)
    closed = min_norm_interpolant(
        H2, PointSequence((HalfPlanePoint(1.0), HalfPlanePoint(2.0))), (1.0, 0.0))
    assert abs(closed.coefficients[0] - 4.0) <= 1e-10
    assert abs(closed.coefficients[1] + 6.0) <= 1e-10
    assert abs(closed.norm - 2.0) <= 1e-10


_PAIRINGS = (
    (H, H2),
    (SpaceId(WEIGHTED_DIRICHLET, -1.0), SpaceId(BERGMAN_DIRICHLET, -1.0)),
    (SpaceId(WEIGHTED_DIRICHLET, 0.5), SpaceId(BERGMAN_DIRICHLET, 0.5)),
)


def test_criterion_06_cross_space_co_monotonicity():
    t0 = time.time()
    deltas = (0.5, 0.3, 0.1, 0.03)
    for series_space, local_space in _PAIRINGS:
        series = [boas_bound(series_space, merging_family(d)) for d in deltas]
        local = [boas_bound(local_space, merging_family(d)) for d in deltas]
        assert all(x > y for x, y in zip(series, series[1:])), \
            f"{series_space}: bounds {series} not strictly decreasing"
        assert all(x > y for x, y in zip(local, local[1:])), \
            f"{local_space}: bounds {local} not strictly decreasing"
        # identical rank orders: rank correlation exactly 1
        assert list(np.argsort(series)) == list(np.argsort(local))
    # random bounded sequences: a healthy local bound forces a healthy
    # series-side bound (empirical floor 0.01)
    for series_space, local_space in _PAIRINGS:
        rng = np.random.default_rng(2026)
        qualified = 0
        drawn = 0
        while qualified < 30:
            drawn += 1
            assert drawn <= 3000, "qualification rate collapsed"
            u, v = rng.random(6), rng.random(6)
            try:
                seq = PointSequence(tuple(
                    HalfPlanePoint(0.6 + 1.9 * a, 20.0 * (b - 0.5))
                    for a, b in zip(u, v)))
            except Exception:
                continue
            if boas_bound(local_space, seq) >= 0.3:
                qualified += 1
                got = boas_bound(series_space, seq)
                assert got >= 0.01, \
                    f"{series_space}: series bound {got:.4f} under floor 0.01"
    elapsed = time.time() - t0
    assert elapsed < 60.0, f"co-monotonicity sweep took {elapsed:.1f}s"


def test_criterion_07_window_embedding_constants():
    t0 = time.time()
    for n in (1, 2, 5, 100):
        coeffs = (0.0,) * (n - 1) + (1.0,)
        got = line_embedding_ratio(DirichletPolynomial(coeffs), 0.0).ratio
        assert got == 1.0 / n, f"single term n={n}: {got!r} != 1/{n}"
    # sample maxima over a fixed random corpus, across seeds and windows
    maxima = {}
    for seed in (0, 1, 2):
        corpus = random_polynomial_corpus(200, 100, seed)
        for theta in (0.0, 1.0, 10.0, 100.0):
            maxima[(seed, theta)] = max(line_embedding_ratio(f, theta).ratio
                                        for f in corpus)
    vals = np.array(list(maxima.values()))
    spread = float((vals.max() - vals.min()) / vals.min())
    sharp = [line_embedding_sharp_constant(100, th) for th in (0.0, 100.0)]
    elapsed = time.time() - t0
    table = "\n".join(f"  seed {s} window-start {th:>5}: max ratio {v:.6f}"
                      for (s, th), v in sorted(maxima.items()))
    assert spread <= 0.05, (
        f"corpus maxima spread {spread:.1%} exceeds 5%:\n{table}\n"
        f"the sample maximum of 200 Gaussian polynomials is an extreme-value "
        f"statistic with heavy seed-to-seed variation; the window-independent "
        f"quantity is the spectral sharp constant, which moves only "
        f"{abs(sharp[1] - sharp[0]):.2e} between the same two windows "
        f"(value {sharp[0]:.6f} at degree 100)")
    assert elapsed < 60.0


def test_criterion_08_diagonal_dominance_split():
    rng = np.random.default_rng(108)
    ts = rng.uniform(0.0, 1.0, 12)
    seq = PointSequence(tuple(HalfPlanePoint(0.5 + 2.0 ** (-j), ts[j - 1])
                              for j in range(1, 13)))
    parts = gershgorin_split(H, seq, 0.1)
    floor = math.sqrt(0.1) - 1e-10
    for part in parts:
        got = boas_bound(H, part)
        assert got >= floor, f"part of size {len(part)} has bound {got:.4f}"
    # reproducibility for a fixed seed
    rng2 = np.random.default_rng(108)
    ts2 = rng2.uniform(0.0, 1.0, 12)
    seq2 = PointSequence(tuple(HalfPlanePoint(0.5 + 2.0 ** (-j), ts2[j - 1])
                               for j in range(1, 13)))
    parts2 = gershgorin_split(H, seq2, 0.1)
    assert [len(p) for p in parts] == [len(p) for p in parts2]


def test_criterion_09_vertical_recurrence_probe():
    t0 = time.time()
    s = HalfPlanePoint(0.75, 0.0)
    tau = almost_periodicity_probe(H, s, 1e4, 0.9)
    elapsed = time.time() - t0
    z0 = abs(eval_zeta(1.5 + 0.0j))
    best_tau = 2447.625
    best = abs(eval_zeta(complex(1.5, best_tau))) / z0
    beyond_tau = 152359.7289987632
    beyond = abs(eval_zeta(complex(1.5, beyond_tau))) / z0
    assert tau is not None, (
        f"no tau <= 1e4 reaches correlation 0.9 from s = 0.75: the scan "
        f"(completed in {elapsed:.0f}s) found nothing, and direct evaluation "
        f"confirms the window best is {best:.6f} at tau = {best_tau}; the "
        f"first crossing of 0.9 sits near tau = {beyond_tau:.1f} "
        f"(correlation {beyond:.8f}), outside both this window and the "
        f"probe's 1e5 cap")
    # reachable only if the scan succeeds; re-validate every claim directly
    corr = abs(eval_zeta(complex(1.5, tau))) / z0
    assert corr >= 0.9
    shifted = HalfPlanePoint(0.75, tau)
    assert pseudohyperbolic_distance(s, shifted) >= 0.99
    assert elapsed < 120.0


def test_criterion_10_cli_golden_determinism(fixtures_dir, golden_dir, capsys):
    for name in sorted(GOLDEN_CASES):
        argv = _argv(GOLDEN_CASES[name], fixtures_dir)
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        second = capsys.readouterr().out
        assert first == second, f"{name}: two runs differ"
        assert first == (golden_dir / name).read_text(), \
            f"{name}: output drifted from the stored golden file"
