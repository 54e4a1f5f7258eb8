"""
Grid and randomized sweeps cross-checking the decision procedures against
closed-form predicates and exact identities.
"""
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import sympy

from newton_centers.center.global_center import decide_global_center
from newton_centers.center.kukles import (
    KuklesReason,
    kukles_classification,
    kukles_system,
)
from newton_centers.monodromy.charts import chart_fields
from newton_centers.monodromy.decide import (
    ChartDecision,
    certify_chart,
    decide_monodromy,
)
from newton_centers.monodromy.lienard import lienard_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.bi_rat_poly import U, V, BiRatPoly
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.blowup import (
    blowup_u,
    blowup_vertical,
    weighted_order,
)
from newton_centers.resolution.planar_field import PlanarField

#: Kukles grid of the classification sweep.
KUKLES_DELTAS = (0, -1, -2)
KUKLES_VALUES = (-2, -1, 0, 1, 2)

#: Liénard grid of the agreement sweep.
LIENARD_ELL0 = (3, 5)
LIENARD_ELL1 = (0, 1, 2)
LIENARD_VALUES = (-3, -2, -1, 1, 2, 3)

#: Coefficient range of randomized systems and fields.
RANDOM_VALUES = tuple(range(-3, 4))


@dataclass(frozen=True)
class KuklesRow:
    n: int
    delta: int
    coefficients: Tuple[int, ...]
    reason: KuklesReason
    expected: bool
    decided: bool

    @property
    def agrees(self) -> bool:
        return self.expected == self.decided


@dataclass(frozen=True)
class LienardRow:
    ell0: int
    ell1: int
    a: int
    b: int
    expected: bool
    specialized: bool
    general: bool

    @property
    def agrees(self) -> bool:
        return self.expected == self.specialized == self.general


def kukles_grid(
    n: int,
    deltas: Sequence[int] = KUKLES_DELTAS,
    values: Sequence[int] = KUKLES_VALUES,
    indices: Sequence[int] = (0, 1, 2, 3),
) -> Iterator[KuklesRow]:
    """
    Runs the general global center decision over a grid of homogeneous
    Kukles systems, next to the closed-form classification.

    Parameters
    ----------
    n : int
        Degree of the homogeneous part
    deltas : Sequence[int], optional
        Values of δ, by default :data:`KUKLES_DELTAS`
    values : Sequence[int], optional
        Values of each a_{n-i,i}, by default :data:`KUKLES_VALUES`
    indices : Sequence[int], optional
        The indices i that vary, by default 0 to 3

    Yields
    ------
    KuklesRow
        One row per instance with not all coefficients zero
    """
    for delta in deltas:
        for combination in itertools.product(values, repeat=len(indices)):
            if not any(combination):
                continue
            coefficients = dict(zip(indices, combination))
            system = kukles_system(delta, coefficients, n)
            reason = kukles_classification(delta, coefficients, n)
            decided = decide_global_center(system).global_center
            yield KuklesRow(
                n,
                delta,
                combination,
                reason,
                reason is KuklesReason.GLOBAL_CENTER,
                decided,
            )


def lienard_predicate(ell0: int, ell1: int, a, b) -> bool:
    """
    Monodromy at infinity of ẏ = a·x^ℓ₀ + ... + (b·x^ℓ₁ + ...)y: ℓ₀ odd,
    a < 0, and either ℓ₀ > 2ℓ₁ + 1 or ℓ₀ = 2ℓ₁ + 1 with
    b² + 2(ℓ₀ + 1)a < 0.
    """
    if ell0 % 2 == 0 or a >= 0 or ell0 < 2 * ell1 + 1:
        return False
    if ell0 == 2 * ell1 + 1:
        return b**2 + 2 * (ell0 + 1) * a < 0
    return True


def lienard_grid(
    ell0_values: Sequence[int] = LIENARD_ELL0,
    ell1_values: Sequence[int] = LIENARD_ELL1,
    values: Sequence[int] = LIENARD_VALUES,
) -> Iterator[LienardRow]:
    """
    Decides monodromy at infinity for ẏ = a·x^ℓ₀ + b·x^ℓ₁·y both through
    the closed-form Liénard predicate and through the chart descent.
    """
    for ell0, ell1, a, b in itertools.product(
        ell0_values, ell1_values, values, values
    ):
        p0 = RatPoly.monomial(ell0, a)
        p1 = RatPoly.monomial(ell1, b)
        system = NewtonSystem([p0, p1])
        yield LienardRow(
            ell0,
            ell1,
            a,
            b,
            lienard_predicate(ell0, ell1, a, b),
            lienard_monodromy(p0, p1).monodromic,
            decide_monodromy(system, specialized=False).monodromic,
        )


def _random_polynomial(
    generator: random.Random, degree: int, leading: Optional[int] = None
) -> RatPoly:
    coefficients = [generator.choice(RANDOM_VALUES) for _ in range(degree)]
    if leading is not None:
        coefficients.append(leading)
    return RatPoly(coefficients)


def random_cherkas(generator: random.Random, n: int) -> NewtonSystem:
    """
    Draws ẏ = P₀ + P₁y + P₂y² with deg P₀ = n, aₙ < 0 and deg P₁, P₂ < n,
    so that cₙ = bₙ = 0. P₂ is kept nonzero.
    """
    p0 = _random_polynomial(generator, n, generator.choice((-3, -2, -1)))
    p1 = _random_polynomial(generator, n)
    p2 = _random_polynomial(generator, n)
    if p2.is_zero:
        p2 = RatPoly.constant(generator.choice((-3, -2, -1, 1, 2, 3)))
    return NewtonSystem([p0, p1, p2])


def cherkas_equivalence_sweep(
    seed: int, count: int, degrees: Sequence[int] = (3, 5)
) -> List[Tuple[NewtonSystem, ChartDecision]]:
    """
    Runs the descent and the curve search on the 𝒳⁽⁰⁾ chart of random
    Cherkas systems with cₙ = bₙ = 0 and aₙ < 0, on both sides of u = 0.

    Raises
    ------
    EquivalenceViolationError
        On the first disagreement
    """
    generator = random.Random(seed)
    results = []
    for _ in range(count):
        n = generator.choice(degrees)
        system = random_cherkas(generator, n)
        x0 = chart_fields(system).X0
        results.append((system, certify_chart(x0, n, n - 1, n)))
    return results


def random_field(
    generator: random.Random, size: int = 8, degree: int = 4
) -> PlanarField:
    """
    Draws a field with at most *size* monomials in total, F divisible by u
    and G divisible by v, so that its support lies in the first quadrant.
    """
    while True:
        f_terms, g_terms = {}, {}
        for _ in range(generator.randint(1, size)):
            i = generator.randint(0, degree)
            j = generator.randint(0, degree)
            value = generator.choice(RANDOM_VALUES)
            if generator.random() < 0.5:
                f_terms[(i + 1, j)] = value
            else:
                g_terms[(i, j + 1)] = value
        f, g = BiRatPoly(f_terms), BiRatPoly(g_terms)
        if not (f.is_zero and g.is_zero):
            return PlanarField(f, g)


def _substituted(polynomial: BiRatPoly, u_image, v_image) -> sympy.Expr:
    mapping = {U: u_image, V: v_image}
    return polynomial.as_expr().subs(mapping, simultaneous=True)


def blowup_identities_hold(
    vector_field: PlanarField, p: int, q: int, phi
) -> bool:
    """
    Checks the defining identities of both blow-ups as polynomial
    identities, directly on the substituted expressions:

    * u^(σ+q-1)·F₁ = F(u^q, u^p(φ+v))
    * u^(σ+p+q)·G₁ = q·u^q·G(...) - p(φ+v)·u^p·F(...)
    * z^(σ+p+q)·W = p·z^p·F(w z^q, ±z^p) ∓ q·w·z^q·G(w z^q, ±z^p)
    * z^(σ+p-1)·Z = ±G(w z^q, ±z^p)
    """
    phi = sympy.sympify(phi)
    sigma = weighted_order(vector_field, p, q)
    f = _substituted(vector_field.F, U**q, U**p * (phi + V))
    g = _substituted(vector_field.G, U**q, U**p * (phi + V))
    blown = blowup_u(vector_field, p, q, phi)
    checks = [
        blown.F.as_expr() * U ** (sigma + q - 1) - f,
        blown.G.as_expr() * U ** (sigma + p + q)
        - (q * U**q * g - p * (phi + V) * U**p * f),
    ]
    # (w, z) are written in the generic indeterminates (u, v)
    for sign in (1, -1):
        f = _substituted(vector_field.F, U * V**q, sign * V**p)
        g = _substituted(vector_field.G, U * V**q, sign * V**p)
        corner = blowup_vertical(vector_field, p, sign, q)
        checks.append(
            corner.F.as_expr() * V ** (sigma + p + q)
            - (p * V**p * f - q * sign * U * V**q * g)
        )
        checks.append(corner.G.as_expr() * V ** (sigma + p - 1) - sign * g)
    return all(sympy.expand(check) == 0 for check in checks)


def blowup_sweep(seed: int, count: int) -> int:
    """
    Checks :func:`blowup_identities_hold` on random fields with random
    coprime weights (p, q ≤ 2) and nonzero rational directions φ.

    Returns
    -------
    int
        Number of failures
    """
    generator = random.Random(seed)
    failures = 0
    for _ in range(count):
        vector_field = random_field(generator)
        q = generator.choice((1, 2))
        p = generator.choice([p for p in range(1, 5) if p % q or q == 1])
        phi = sympy.Rational(
            generator.choice((-3, -2, -1, 1, 2, 3)), generator.randint(1, 3)
        )
        if not blowup_identities_hold(vector_field, p, q, phi):
            failures += 1
    return failures
