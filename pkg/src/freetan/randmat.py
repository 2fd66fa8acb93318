"""Seeded random-matrix models for the tangent-family limit laws.

Samplers use counter-based Philox streams keyed by (seed, sample index),
so a simulation is bit-reproducible regardless of how samples are split
across workers.  Conventions:

* complex Gaussian N x M matrix: entries i.i.d. with E|x_ij|^2 = 1/N
  (real and imaginary parts independent N(0, 1/(2N)));
* GUE N x N matrix: Hermitian, diagonal variance 1/N, off-diagonal real
  and imaginary parts each of variance 1/(2N); equivalently
  (X + X^*)/sqrt(2) for X complex Gaussian.  E Tr(Y^2) = N.

The exact-expectation engine sums over all pair partitions: for a GUE
matrix X and a constant matrix D,

    Tr (x) E[X D^{q_1} X D^{q_2} ... X D^{q_m}]
        = sum_{pairings p of [m]} Tr_{p . gamma}(D^{q_1}, ..., D^{q_m}) N^{-m/2}

with gamma the full cycle (1 2 ... m) and Tr_sigma the product of traces
along the cycles of sigma.  Monte Carlo estimates are compared against it
within 3 estimated standard errors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .partitions import all_pairings

__all__ = [
    "EmpiricalSpectrum",
    "HistogramResult",
    "Permutation",
    "SandwichResult",
    "SimConfig",
    "gue_moment_estimates",
    "histogram",
    "mc_product_moment",
    "pairing_expected_moment",
    "sample_complex_gaussian",
    "sample_gue",
    "sample_stream",
    "simulate_sandwich_model",
    "simulate_wishart_model",
]


class Permutation:
    """Permutation of {1..m} given by its image list (1-indexed)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("images must be a bijection on 1..m")
        self.images = images

    def __call__(self, i):
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    @classmethod
    def full_cycle(cls, m):
        return cls(tuple(range(2, m + 1)) + (1,))

    @classmethod
    def from_pairing(cls, pairing, m):
        """Product of the disjoint transpositions of a pair partition."""
        images = list(range(1, m + 1))
        for u, v in pairing:
            images[u - 1], images[v - 1] = v, u
        return cls(images)

    def compose(self, other):
        """self after other: (self . other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def cycles(self):
        seen = [False] * (len(self.images) + 1)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class SimConfig:
    """Simulation size/seed bundle; the seed is always explicit."""

    N: int
    M: int = 1
    samples: int = 1
    seed: int = 0
    bins: int = 50

    def __post_init__(self):
        if min(self.N, self.M, self.samples, self.bins) < 1:
            raise ValueError("N, M, samples and bins must all be >= 1")


def sample_stream(seed, index):
    """Independent per-sample generator from a counter-based Philox key."""
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_complex_gaussian(n_rows, m_cols, rng):
    """Complex Gaussian matrix with E|x_ij|^2 = 1/n_rows."""
    re = rng.standard_normal((n_rows, m_cols))
    im = rng.standard_normal((n_rows, m_cols))
    return (re + 1j * im) / np.sqrt(2.0 * n_rows)


def sample_gue(n, rng):
    """GUE matrix, Hermitian by construction."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / (2.0 * np.sqrt(n))


@dataclass(frozen=True)
class EmpiricalSpectrum:
    """Eigenvalues pooled over samples, with per-sample offsets."""

    eigenvalues: np.ndarray
    offsets: np.ndarray  # offsets[s]:offsets[s+1] is sample s
    matrix_size: int

    @property
    def samples(self):
        return len(self.offsets) - 1

    def normalized_moment(self, order):
        """Average over samples of the normalized-trace moment."""
        return float(np.mean(self.eigenvalues**order))


def simulate_wishart_model(a_m, config, p_matrix=None):
    """Spectra of (1/M) X [A (x) P] X^* for X complex Gaussian N x (M N).

    ``a_m`` is the M x M Hermitian coefficient matrix, ``p_matrix`` an
    optional N x N matrix (identity when None; use a large-rank projection
    for the compressed variant).  The empirical spectral measures converge
    to the limit law of the quadratic form with the same coefficients.
    """
    a = np.asarray(a_m, dtype=complex)
    n, m = config.N, config.M
    if a.shape != (m, m):
        raise ValueError(f"coefficient matrix must be {m}x{m}, got {a.shape}")
    if np.max(np.abs(a - a.conj().T)) > 1e-12 * max(1.0, np.max(np.abs(a))):
        raise ValueError("coefficient matrix must be Hermitian")
    p = None
    if p_matrix is not None:
        p = np.asarray(p_matrix, dtype=complex)
        if p.shape != (n, n):
            raise ValueError(f"projection matrix must be {n}x{n}, got {p.shape}")
    eigs = np.empty(config.samples * n)
    offsets = np.arange(config.samples + 1) * n
    for s in range(config.samples):
        rng = sample_stream(config.seed, s)
        x = sample_complex_gaussian(n, m * n, rng)
        x3 = x.reshape(n, m, n)
        # T[n1, j, m1] = sum_i X[n1, i, m1] A[i, j]
        t = np.tensordot(x3, a, axes=([1], [0])).transpose(0, 2, 1)
        if p is not None:
            t = np.tensordot(t, p, axes=([2], [0]))
        w = t.reshape(n, m * n) @ x.conj().T / m
        w = (w + w.conj().T) / 2.0
        eigs[s * n:(s + 1) * n] = np.linalg.eigvalsh(w)
    return EmpiricalSpectrum(eigs, offsets, n)


@dataclass(frozen=True)
class SandwichResult:
    """Nonnormalized-trace moment estimates of X D X with GUE X."""

    orders: tuple
    means: tuple
    stderrs: tuple
    per_sample: np.ndarray  # shape (samples, len(orders))


def simulate_sandwich_model(d_n, config, orders=(1, 2, 3)):
    """Estimates of E Tr[(X D X)^m] for GUE X; the limits are Tr(D^m)."""
    d = np.asarray(d_n, dtype=complex)
    n = config.N
    if d.shape != (n, n):
        raise ValueError(f"sandwich matrix must be {n}x{n}, got {d.shape}")
    per = np.empty((config.samples, len(orders)))
    for s in range(config.samples):
        rng = sample_stream(config.seed, s)
        x = sample_gue(n, rng)
        core = x @ d @ x
        power = np.eye(n, dtype=complex)
        traces = {}
        top = max(orders)
        for m in range(1, top + 1):
            power = power @ core
            traces[m] = np.trace(power).real
        per[s] = [traces[m] for m in orders]
    means = per.mean(axis=0)
    stderrs = per.std(axis=0, ddof=1) / np.sqrt(config.samples) if config.samples > 1 else np.zeros(len(orders))
    return SandwichResult(tuple(orders), tuple(means), tuple(stderrs), per)


def gue_moment_estimates(config, orders=(2, 4)):
    """Normalized-trace moment estimates for plain GUE samples.

    Moments are taken from traces of matrix powers (Frobenius norms), so
    no eigendecomposition is needed.
    """
    per = np.empty((config.samples, len(orders)))
    n = config.N
    top = max(orders)
    for s in range(config.samples):
        rng = sample_stream(config.seed, s)
        y = sample_gue(n, rng)
        power = np.eye(n, dtype=complex)
        values = {}
        for m in range(1, top + 1):
            power = power @ y
            values[m] = np.trace(power).real / n
        per[s] = [values[m] for m in orders]
    means = per.mean(axis=0)
    stderrs = per.std(axis=0, ddof=1) / np.sqrt(config.samples) if config.samples > 1 else np.zeros(len(orders))
    return tuple(orders), tuple(means), tuple(stderrs)


# ---------------------------------------------------------------------------
# exact pairing expectations
# ---------------------------------------------------------------------------

def pairing_expected_moment(d, q_list):
    """Exact Tr (x) E[X D^{q_1} ... X D^{q_m}] by pairing enumeration.

    Returns 0.0 for odd m.  Each pairing acts as a product of
    transpositions; composed with the full cycle it splits into cycles,
    and every cycle contributes the trace of D raised to the sum of its
    exponents (powers of one matrix commute, so cycle order is immaterial).
    """
    d = np.asarray(d, dtype=complex)
    m = len(q_list)
    if m % 2:
        return 0.0
    if m > 10:
        raise ValueError("pairing enumeration limited to m <= 10")
    n = d.shape[0]
    top = sum(q_list)
    power_traces = {0: float(n)}
    power = np.eye(n, dtype=complex)
    for s in range(1, top + 1):
        power = power @ d
        power_traces[s] = np.trace(power).real
    total = 0.0
    gamma = Permutation.full_cycle(m)
    for pairing in all_pairings(m):
        sigma = Permutation.from_pairing(pairing, m).compose(gamma)
        contrib = 1.0
        for cycle in sigma.cycles():
            contrib *= power_traces[sum(q_list[i - 1] for i in cycle)]
        total += contrib
    return total * float(n) ** (-m / 2)


def mc_product_moment(d, q_list, n_samples, seed):
    """Monte Carlo estimate (mean, stderr) of the pairing expectation,
    from one seeded stream with batched GUE samples."""
    d = np.asarray(d, dtype=complex)
    n = d.shape[0]
    rng = sample_stream(seed, 0)
    g = rng.standard_normal((n_samples, n, n)) + 1j * rng.standard_normal(
        (n_samples, n, n)
    )
    x = (g + g.conj().transpose(0, 2, 1)) / (2.0 * np.sqrt(n))
    d_pows = {0: np.eye(n, dtype=complex)}
    for q in q_list:
        if q not in d_pows:
            d_pows[q] = np.linalg.matrix_power(d, q)
    prod = x @ d_pows[q_list[0]]
    for q in q_list[1:]:
        prod = prod @ x @ d_pows[q]
    traces = np.trace(prod, axis1=1, axis2=2).real
    mean = float(traces.mean())
    stderr = float(traces.std(ddof=1) / np.sqrt(n_samples))
    return mean, stderr


# ---------------------------------------------------------------------------
# histograms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HistogramResult:
    bin_edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray  # counts / (total * width); integrates to 1


def histogram(values, bins, value_range=None):
    """Bin eigenvalues (or any sample) with density normalization."""
    if isinstance(values, EmpiricalSpectrum):
        values = values.eigenvalues
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("cannot histogram an empty spectrum")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    counts, edges = np.histogram(values, bins=bins, range=value_range)
    widths = np.diff(edges)
    total = counts.sum()
    density = np.where(
        widths > 0, counts / (total * widths) if total else 0.0, 0.0
    )
    return HistogramResult(edges, counts, density)
