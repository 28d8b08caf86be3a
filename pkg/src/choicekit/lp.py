"""Exact rational linear feasibility kernel.

Decides whether some nonnegative, not-all-zero combination of a tuple of
options stays below a target option.  The strict constraint "at least one
multiplier is positive" is replaced by an equivalent system with one extra
variable and only weak inequalities, which a standard simplex can solve; all
pivoting is done on exact rationals so a returned certificate is a proof, not
a numerical judgment.

The simplex uses Bland's entering/leaving rule, which cannot cycle, so it
terminates on every input.  An independent Fourier-Motzkin elimination oracle
is included for cross-checking in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .space import OptionVec

_ZERO = Fraction(0)
_ONE = Fraction(1)

Constraint = tuple[tuple[Fraction, ...], str, Fraction]  # (coeffs, relation, rhs)


class OracleBoundError(ValueError):
    """Fourier-Motzkin oracle called beyond its configured size bound."""


@dataclass(frozen=True)
class FeasibilityProblem:
    """Ask: is there a nonnegative, non-null weighting of `vectors` below `target`?"""

    vectors: tuple[OptionVec, ...]
    target: OptionVec

    def __post_init__(self) -> None:
        if not self.vectors:
            raise ValueError("need at least one vector")
        for v in self.vectors:
            if v.space != self.target.space:
                raise ValueError("all vectors must share the target's outcome space")

    @property
    def n(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class FeasibilityCertificate:
    """Exact witness: n nonnegative weights plus one scaling variable.

    With ``mu = (mu_1, ..., mu_n, mu_{n+1})`` the checked conditions are
    ``mu_j >= 0``, ``mu_{n+1} >= 1``, ``sum(mu_1..mu_n) >= 1`` and
    ``sum(mu_j * u_j) <= mu_{n+1} * target`` coordinatewise.  The witness
    weighting of the original question is ``lam_j = mu_j / mu_{n+1}``.
    """

    mu: tuple[Fraction, ...]

    @property
    def lam(self) -> tuple[Fraction, ...]:
        scale = self.mu[-1]
        return tuple(m / scale for m in self.mu[:-1])


def verify_certificate(problem: FeasibilityProblem, certificate: FeasibilityCertificate) -> bool:
    """Exact check of every certificate condition; no tolerance anywhere."""
    mu = certificate.mu
    n = problem.n
    if len(mu) != n + 1:
        return False
    if any(m < 0 for m in mu[:n]):
        return False
    if mu[n] < 1:
        return False
    if sum(mu[:n]) < 1:
        return False
    dim = problem.target.space.dimension
    for x in range(dim):
        lhs = sum((mu[j] * problem.vectors[j].coords[x] for j in range(n)), _ZERO)
        if lhs > mu[n] * problem.target.coords[x]:
            return False
    return True


# ---------------------------------------------------------------------------
# Generic exact simplex (two phases, Bland's rule).
# ---------------------------------------------------------------------------


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    pivot_row = tableau[row]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            tableau[r] = [a - factor * b for a, b in zip(line, pivot_row)]
    basis[row] = col


def _run(tableau: list[list[Fraction]], basis: list[int], width: int) -> bool:
    """Minimize until optimal; returns False when unbounded."""
    while True:
        obj = tableau[-1]
        col = next((j for j in range(width) if obj[j] < 0), None)
        if col is None:
            return True
        best_ratio: Fraction | None = None
        leave = -1
        for r in range(len(tableau) - 1):
            a = tableau[r][col]
            if a > 0:
                ratio = tableau[r][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = r
        if best_ratio is None:
            return False
        _pivot(tableau, basis, leave, col)


def _solve_lp(
    objective: Sequence[Fraction],
    constraints: Sequence[Constraint],
    num_vars: int,
) -> tuple[str, tuple[Fraction, ...] | None]:
    """Minimize objective over {x >= 0 : constraints}; exact two-phase simplex.

    Returns ("optimal", x), ("infeasible", None) or ("unbounded", None).
    """
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for coeffs, rel, rhs in constraints:
        line = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rhs < 0:
            line = [-c for c in line]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
        rows.append((line, rel, rhs))

    n_slack = sum(1 for _, rel, _ in rows if rel != "==")
    n_art = sum(1 for _, rel, _ in rows if rel != "<=")
    width = num_vars + n_slack + n_art
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    slack_at = num_vars
    art_at = num_vars + n_slack
    art_cols: list[int] = []
    for line, rel, rhs in rows:
        full = line + [_ZERO] * (width - num_vars) + [rhs]
        if rel == "<=":
            full[slack_at] = _ONE
            basis.append(slack_at)
            slack_at += 1
        elif rel == ">=":
            full[slack_at] = -_ONE
            slack_at += 1
            full[art_at] = _ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            full[art_at] = _ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        tableau.append(full)

    def install_objective(costs: list[Fraction]) -> None:
        z = costs + [_ZERO] * (width - len(costs)) + [_ZERO]
        for r, b in enumerate(basis):
            if z[b] != 0:
                factor = z[b]
                z = [a - factor * v for a, v in zip(z, tableau[r])]
        tableau.append(z)

    if art_cols:
        phase1 = [_ZERO] * width
        for c in art_cols:
            phase1[c] = _ONE
        install_objective(phase1)
        _run(tableau, basis, width)  # bounded below by 0, never unbounded
        if tableau[-1][-1] != 0:
            return "infeasible", None
        tableau.pop()
        # Drive leftover artificials out of the basis; drop redundant rows.
        art_set = set(art_cols)
        for r in range(len(basis) - 1, -1, -1):
            if basis[r] in art_set:
                col = next(
                    (j for j in range(num_vars + n_slack) if tableau[r][j] != 0), None
                )
                if col is None:
                    del tableau[r]
                    del basis[r]
                else:
                    _pivot(tableau, basis, r, col)
        width = num_vars + n_slack
        tableau = [line[: width] + [line[-1]] for line in tableau]

    install_objective([Fraction(c) for c in objective])
    if not _run(tableau, basis, width):
        return "unbounded", None
    solution = [_ZERO] * num_vars
    for r, b in enumerate(basis):
        if b < num_vars:
            solution[b] = tableau[r][-1]
    return "optimal", tuple(solution)


# ---------------------------------------------------------------------------
# The feasibility question itself.
# ---------------------------------------------------------------------------


def _mu_constraints(problem: FeasibilityProblem) -> list[Constraint]:
    """The weak-inequality system: one row per outcome plus the two floors."""
    n = problem.n
    rows: list[Constraint] = []
    for x in range(problem.target.space.dimension):
        coeffs = tuple(-v.coords[x] for v in problem.vectors) + (problem.target.coords[x],)
        rows.append((coeffs, ">=", _ZERO))
    rows.append((tuple([_ONE] * n + [_ZERO]), ">=", _ONE))
    rows.append((tuple([_ZERO] * n + [_ONE]), ">=", _ONE))
    return rows


def _certificate_from_lam(lam: Sequence[Fraction]) -> FeasibilityCertificate:
    total = sum(lam, _ZERO)
    if total >= 1:
        return FeasibilityCertificate(tuple(lam) + (_ONE,))
    return FeasibilityCertificate(tuple(v / total for v in lam) + (1 / total,))


@lru_cache(maxsize=1 << 16)
def is_feasible(problem: FeasibilityProblem) -> FeasibilityCertificate | None:
    """Certificate if some valid weighting exists, else None (a proof either way).

    Results are cached; problems are immutable values. Every certificate is
    re-verified exactly before being returned.
    """
    n = problem.n
    s = problem.target.coords
    dim = len(s)

    # A single vector below the target yields a unit-weight certificate.
    for j, v in enumerate(problem.vectors):
        if v.leq(problem.target):
            mu = [_ZERO] * (n + 1)
            mu[j] = _ONE
            mu[n] = _ONE
            cert = FeasibilityCertificate(tuple(mu))
            assert verify_certificate(problem, cert)
            return cert

    # A coordinate where the target is negative but no vector is cannot be met.
    for x in range(dim):
        if s[x] < 0 and all(v.coords[x] >= 0 for v in problem.vectors):
            return None

    if n == 1:
        lam = _single_vector_weight(problem.vectors[0].coords, s)
        if lam is None:
            return None
        cert = _certificate_from_lam((lam,))
        assert verify_certificate(problem, cert)
        return cert

    status, solution = _solve_lp([_ZERO] * (n + 1), _mu_constraints(problem), n + 1)
    if status != "optimal":
        return None
    cert = FeasibilityCertificate(tuple(solution))
    if not verify_certificate(problem, cert):
        raise AssertionError("simplex returned an invalid certificate")
    return cert


def _single_vector_weight(u: tuple[Fraction, ...], s: tuple[Fraction, ...]) -> Fraction | None:
    """Positive weight with weight*u <= s, by intersecting per-coordinate bounds."""
    low = _ZERO
    high: Fraction | None = None
    for ux, sx in zip(u, s):
        if ux > 0:
            bound = sx / ux
            high = bound if high is None else min(high, bound)
        elif ux < 0:
            low = max(low, sx / ux)
        elif sx < 0:
            return None
    if high is not None and (high < low or high <= 0):
        return None
    if low > 0:
        return low
    return _ONE if high is None else min(_ONE, high)


def canonical_certificate(problem: FeasibilityProblem) -> FeasibilityCertificate | None:
    """A deterministic, presentation-stable certificate for reports.

    The weighting is lexicographically minimized coordinate by coordinate;
    when that minimum degenerates to the all-zero weighting (possible only
    for nonnegative targets) the raw variables of the weak-inequality system
    are lexicographically minimized instead.
    """
    if is_feasible(problem) is None:
        return None
    n = problem.n
    dim = problem.target.space.dimension
    base: list[Constraint] = []
    for x in range(dim):
        coeffs = tuple(v.coords[x] for v in problem.vectors)
        base.append((coeffs, "<=", problem.target.coords[x]))

    lam: list[Fraction] = []
    for k in range(n):
        objective = [_ZERO] * n
        objective[k] = _ONE
        pins: list[Constraint] = [
            (tuple(_ONE if i == j else _ZERO for i in range(n)), "==", lam[j])
            for j in range(k)
        ]
        status, solution = _solve_lp(objective, base + pins, n)
        assert status == "optimal" and solution is not None
        lam.append(solution[k])
    if any(v != 0 for v in lam):
        cert = _certificate_from_lam(lam)
        assert verify_certificate(problem, cert)
        return cert

    mu_rows = _mu_constraints(problem)
    mu: list[Fraction] = []
    for k in range(n + 1):
        objective = [_ZERO] * (n + 1)
        objective[k] = _ONE
        pins = [
            (tuple(_ONE if i == j else _ZERO for i in range(n + 1)), "==", mu[j])
            for j in range(k)
        ]
        status, solution = _solve_lp(objective, mu_rows + pins, n + 1)
        assert status == "optimal" and solution is not None
        mu.append(solution[k])
    cert = FeasibilityCertificate(tuple(mu))
    assert verify_certificate(problem, cert)
    return cert


# ---------------------------------------------------------------------------
# Independent test oracle: Fourier-Motzkin elimination on the same system.
# ---------------------------------------------------------------------------


def _normalize_row(coeffs: tuple[Fraction, ...], const: Fraction) -> tuple[tuple[int, ...], int]:
    denom = lcm(*(f.denominator for f in (*coeffs, const)))
    ints = [int(f * denom) for f in (*coeffs, const)]
    g = gcd(*ints)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def fm_oracle(problem: FeasibilityProblem, *, max_options: int = 6) -> bool:
    """Decide feasibility by variable elimination; for cross-checking only.

    Shares nothing with the simplex path except the problem statement.
    Inequality counts grow quadratically per eliminated variable, hence the
    size bound.
    """
    n = problem.n
    if n > max_options:
        raise OracleBoundError(f"oracle limited to {max_options} vectors, got {n}")
    dim = problem.target.space.dimension

    rows: set[tuple[tuple[int, ...], int]] = set()

    def add(coeffs: tuple[Fraction, ...], const: Fraction) -> None:
        rows.add(_normalize_row(coeffs, const))

    for j in range(n):
        add(tuple(_ONE if i == j else _ZERO for i in range(n + 1)), _ZERO)
    add(tuple(_ZERO if i < n else _ONE for i in range(n + 1)), -_ONE)
    add(tuple(_ONE if i < n else _ZERO for i in range(n + 1)), -_ONE)
    for x in range(dim):
        add(
            tuple(-v.coords[x] for v in problem.vectors) + (problem.target.coords[x],),
            _ZERO,
        )

    remaining = list(range(n + 1))
    while remaining:
        def cost(var: int) -> int:
            pos = sum(1 for c, _ in rows if c[var] > 0)
            neg = sum(1 for c, _ in rows if c[var] < 0)
            return pos * neg

        var = min(remaining, key=cost)
        remaining.remove(var)
        pos = [(c, k) for c, k in rows if c[var] > 0]
        neg = [(c, k) for c, k in rows if c[var] < 0]
        keep = {(c, k) for c, k in rows if c[var] == 0}
        rows = set(keep)
        for pc, pk in pos:
            for nc, nk in neg:
                a, b = Fraction(-nc[var]), Fraction(pc[var])
                coeffs = tuple(a * pi + b * ni for pi, ni in zip(pc, nc))
                const = a * pk + b * nk
                if all(c == 0 for c in coeffs):
                    if const < 0:
                        return False
                    continue
                add(coeffs, const)
        for coeffs, const in list(rows):
            if all(c == 0 for c in coeffs):
                if const < 0:
                    return False
                rows.discard((coeffs, const))

    return all(const >= 0 for _, const in rows)
