"""Macdonald polynomials P_lam(q, q^k) at integer k, via constant terms.

The inner product is

    <f, g> = (1/n!) [ f bar(g) Delta ]_0,
    Delta  = prod_{alpha in R} prod_{i=0}^{k-1} (1 - q^(2i) e^alpha),

and P_lam is the unique W-invariant element  m_lam + (lower orbit sums)
orthogonal to every strictly smaller orbit sum.  The correction
coefficients come from one exact Gram solve per weight; results are
memoized per context and can be saved to / loaded from a JSON cache.
"""

from __future__ import annotations

import json
import math
import threading
from fractions import Fraction
from pathlib import Path

from .algebra import GroupAlgebraElement, orbit_sum
from .exact import ExactScalar, parse_scalar, q_power, scalar_to_str
from .linalg import solve_exact
from .weights import Weight, RootData, dominance_leq, dominant_below, parse_weight

__all__ = [
    "MacdonaldContext",
    "delta_kernel",
    "inner_product",
    "macdonald_poly",
    "macdonald_coeffs",
    "chi0",
    "chi",
    "norm",
    "save_cache",
    "load_cache",
]


def delta_kernel(n: int, k: int) -> GroupAlgebraElement:
    """The weight function prod_{alpha in R} prod_{i=0}^{k-1} (1 - q^(2i) e^alpha)."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank parameter n must be an integer >= 2, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"deformation parameter k must be an integer >= 1, got {k!r}")
    rd = RootData(n)
    zero = Weight.zero(n)
    f = GroupAlgebraElement.one(n)
    for alpha in rd.all_roots:
        for i in range(k):
            f = f * GroupAlgebraElement(n, {zero: 1, alpha: -q_power(2 * i)})
    return f


class MacdonaldContext:
    """Fixed (n, k) workspace: root data, kernel, and a polynomial cache.

    The cache maps dominant weights to (orbit-sum coefficients, element)
    pairs.  Reads and insert-if-absent are guarded by a lock, so one
    context can serve several threads; a value is computed at most once
    per weight in the common case and extra computations are discarded
    by setdefault semantics.
    """

    def __init__(self, n: int, k: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"rank parameter n must be an integer >= 2, got {n!r}")
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"deformation parameter k must be an integer >= 1, got {k!r}")
        self.n = n
        self.k = k
        self.root_data = RootData(n)
        self.kernel = delta_kernel(n, k)
        self._polys: dict[Weight, tuple[dict[Weight, ExactScalar], GroupAlgebraElement]] = {}
        self._lock = threading.Lock()
        self._chi0: GroupAlgebraElement | None = None

    def __repr__(self) -> str:
        return f"MacdonaldContext(n={self.n}, k={self.k})"

    def _cache_get(self, lam: Weight):
        with self._lock:
            return self._polys.get(lam)

    def _cache_put(self, lam: Weight, value):
        with self._lock:
            return self._polys.setdefault(lam, value)


def inner_product(f: GroupAlgebraElement, g: GroupAlgebraElement,
                  ctx: MacdonaldContext) -> ExactScalar:
    """<f, g> = (1/n!) * constant term of f * bar(g) * Delta."""
    if f.n != ctx.n or g.n != ctx.n:
        raise ValueError("inner product arguments must match the context rank")
    h = f * g.bar()
    kernel = ctx.kernel.terms
    total = ExactScalar.zero()
    for w, c in h.terms.items():
        kc = kernel.get(-w)
        if kc is not None:
            total = total + c * kc
    return total * Fraction(1, math.factorial(ctx.n))


def _gram_solve(lam: Weight, ctx: MacdonaldContext) -> dict[Weight, ExactScalar]:
    basis = dominant_below(lam)
    coeffs = {lam: ExactScalar.one()}
    if len(basis) == 1:
        return coeffs
    msums = [orbit_sum(mu) for mu in basis]
    m = len(basis) - 1
    # Gram matrix of the strictly-lower orbit sums, and the pairings of
    # m_lam against them; entries are symmetric in the two arguments up
    # to bar, but we just compute what the solve needs.
    matrix = [[inner_product(msums[j + 1], msums[i + 1], ctx) for j in range(m)]
              for i in range(m)]
    rhs = [-inner_product(msums[0], msums[i + 1], ctx) for i in range(m)]
    solution = solve_exact(matrix, rhs)
    for mu, c in zip(basis[1:], solution):
        if c:
            coeffs[mu] = c
    return coeffs


def macdonald_coeffs(lam: Weight, ctx: MacdonaldContext) -> dict[Weight, ExactScalar]:
    """Orbit-sum expansion coefficients of P_lam (unit leading coefficient)."""
    pair = _poly_entry(lam, ctx)
    return dict(pair[0])


def macdonald_poly(lam: Weight, ctx: MacdonaldContext) -> GroupAlgebraElement:
    """P_lam(q, q^k) as a group-algebra element."""
    return _poly_entry(lam, ctx)[1]


def _poly_entry(lam: Weight, ctx: MacdonaldContext):
    if lam.rank != ctx.n:
        raise ValueError(f"weight rank {lam.rank} does not match context rank {ctx.n}")
    if not lam.is_dominant:
        raise ValueError(f"Macdonald polynomials are indexed by dominant weights, got {lam!r}")
    hit = ctx._cache_get(lam)
    if hit is not None:
        return hit
    coeffs = _gram_solve(lam, ctx)
    element = GroupAlgebraElement.zero(ctx.n)
    for mu, c in coeffs.items():
        element = element + orbit_sum(mu) * c
    return ctx._cache_put(lam, (coeffs, element))


def chi0(ctx: MacdonaldContext) -> GroupAlgebraElement:
    """The k-deformed Weyl-denominator factor, in its half-weight-free form:

        e^((k-1) rho) * prod_{alpha > 0} prod_{i=1}^{k-1} (1 - q^(2i) e^(-alpha)).

    For k = 1 this is the identity.
    """
    if ctx._chi0 is not None:
        return ctx._chi0
    n, k = ctx.n, ctx.k
    zero = Weight.zero(n)
    f = GroupAlgebraElement.exponential((k - 1) * ctx.root_data.rho)
    for alpha in ctx.root_data.positive_roots:
        for i in range(1, k):
            f = f * GroupAlgebraElement(n, {zero: 1, -alpha: -q_power(2 * i)})
    ctx._chi0 = f
    return f


def chi(lam: Weight, ctx: MacdonaldContext) -> GroupAlgebraElement:
    """chi_lam = P_lam * chi0, the deformed-character normalization."""
    return macdonald_poly(lam, ctx) * chi0(ctx)


def norm(lam: Weight, ctx: MacdonaldContext) -> ExactScalar:
    """<P_lam, P_lam> computed from first principles (constant term)."""
    p = macdonald_poly(lam, ctx)
    return inner_product(p, p, ctx)


# ---------------------------------------------------------------------------
# JSON cache files
# ---------------------------------------------------------------------------


def save_cache(ctx: MacdonaldContext, path: str | Path) -> None:
    """Write every memoized polynomial of this context to a JSON file."""
    with ctx._lock:
        snapshot = {lam: coeffs for lam, (coeffs, _) in ctx._polys.items()}
    entries = []
    for lam in sorted(snapshot, key=lambda w: w.coords):
        coeffs = snapshot[lam]
        entries.append({
            "lambda": str(lam),
            "coeffs": [
                {"mu": str(mu), "value": scalar_to_str(coeffs[mu])}
                for mu in sorted(coeffs, key=lambda w: w.coords)
            ],
        })
    doc = {"n": ctx.n, "k": ctx.k, "entries": entries}
    Path(path).write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n")


def load_cache(ctx: MacdonaldContext, path: str | Path) -> int:
    """Load a cache file into the context, validating every entry.

    Triangularity is enforced before anything is trusted: each mu must be
    dominant and below its lambda, and the leading coefficient must be 1.
    Returns the number of entries loaded; raises ValueError on any
    malformed or inconsistent content.
    """
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, dict):
        raise ValueError("cache file must contain a JSON object")
    if doc.get("n") != ctx.n or doc.get("k") != ctx.k:
        raise ValueError(
            f"cache file is for n={doc.get('n')}, k={doc.get('k')}; "
            f"context is n={ctx.n}, k={ctx.k}")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise ValueError("cache file has no entries list")
    loaded = 0
    seen: set[Weight] = set()
    for entry in entries:
        lam = parse_weight(entry["lambda"], ctx.n)
        if not lam.is_dominant:
            raise ValueError(f"cache entry for non-dominant weight {entry['lambda']!r}")
        if lam in seen:
            raise ValueError(f"duplicate cache entry for {entry['lambda']!r}")
        seen.add(lam)
        coeffs: dict[Weight, ExactScalar] = {}
        for rec in entry["coeffs"]:
            mu = parse_weight(rec["mu"], ctx.n)
            if mu in coeffs:
                raise ValueError(f"duplicate coefficient for {rec['mu']!r}")
            if not mu.is_dominant or not dominance_leq(mu, lam):
                raise ValueError(
                    f"cache entry {entry['lambda']!r} violates triangularity at {rec['mu']!r}")
            value = parse_scalar(rec["value"])
            if value:
                coeffs[mu] = value
        if coeffs.get(lam) != ExactScalar.one():
            raise ValueError(f"cache entry {entry['lambda']!r} lacks unit leading coefficient")
        element = GroupAlgebraElement.zero(ctx.n)
        for mu, c in coeffs.items():
            element = element + orbit_sum(mu) * c
        ctx._cache_put(lam, (coeffs, element))
        loaded += 1
    return loaded
