"""Equivalence-preserving assessment reduction.

Three rewrite rules shrink an assessment without changing which option sets
its extension contains: dropping the zero option from a set, dropping an
option that some scaled partner in the same set dominates, and dropping a
whole set that the remaining assessment already implies.  Every rewrite is
logged with its justification so a report can be replayed and audited.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .assessment import Assessment
from .extension import MembershipResult, TupleWitness, is_in_extension
from .lp import FeasibilityProblem, canonical_certificate
from .space import OptionSet, OptionVec

_ZERO = Fraction(0)


def dominance_mu(u: OptionVec, v: OptionVec) -> Fraction | None:
    """Smallest scale factor mu >= 0 with u <= mu*v, or None if none exists.

    Each coordinate bounds mu from one side: positive v-coordinates give
    lower bounds, negative ones upper bounds, zero ones demand u <= 0 there.
    """
    if u.space != v.space:
        raise ValueError("options live in different outcome spaces")
    if u.coords == v.coords:
        raise ValueError("dominance is only defined for distinct options")
    low = _ZERO
    high: Fraction | None = None
    for ux, vx in zip(u.coords, v.coords):
        if vx > 0:
            low = max(low, ux / vx)
        elif vx < 0:
            bound = ux / vx
            high = bound if high is None else min(high, bound)
        elif ux > 0:
            return None
    if high is not None and high < low:
        return None
    return low


@dataclass(frozen=True)
class RemoveZeroStep:
    """The zero option was dropped from a set."""

    rule = "remove-zero"
    set_before: OptionSet

    @property
    def set_after(self) -> OptionSet:
        return self.set_before.remove_zero()


@dataclass(frozen=True)
class RemoveDominatedStep:
    """An option was dropped because a scaled partner dominates it."""

    rule = "remove-dominated-option"
    set_before: OptionSet
    removed: OptionVec
    partner: OptionVec
    mu: Fraction

    @property
    def set_after(self) -> OptionSet:
        return self.set_before.remove(self.removed)


@dataclass(frozen=True)
class RemoveSetStep:
    """A whole set was dropped: the rest of the assessment already implies it."""

    rule = "remove-redundant-set"
    removed_set: OptionSet
    witness: MembershipResult


Step = Union[RemoveZeroStep, RemoveDominatedStep, RemoveSetStep]


@dataclass(frozen=True)
class SimplificationReport:
    input: Assessment
    output: Assessment
    steps: tuple[Step, ...]


def replay_steps(assessment: Assessment, steps: tuple[Step, ...]) -> Assessment:
    """Apply a recorded step sequence; reproduces the report's output."""
    current = assessment
    for step in steps:
        if isinstance(step, RemoveSetStep):
            current = current.without(step.removed_set)
        else:
            current = current.replace(step.set_before, step.set_after)
    return current


def _reduce_set(option_set: OptionSet, steps: list[Step]) -> OptionSet:
    current = option_set
    if current.remove_zero() != current:
        steps.append(RemoveZeroStep(set_before=current))
        current = current.remove_zero()
    changed = True
    while changed:
        changed = False
        # Candidates are tried largest-first so the smallest representatives
        # survive; any removal order is equivalence-preserving.
        for u in reversed(current.elements):
            for v in current.elements:
                if u.coords == v.coords:
                    continue
                mu = dominance_mu(u, v)
                if mu is not None:
                    steps.append(
                        RemoveDominatedStep(
                            set_before=current, removed=u, partner=v, mu=mu
                        )
                    )
                    current = current.remove(u)
                    changed = True
                    break
            if changed:
                break
    return current


def simplify_option_sets(assessment: Assessment) -> Assessment:
    """Zero removal plus dominated-option removal to fixpoint, per set."""
    steps: list[Step] = []
    return _simplify_option_sets(assessment, steps)


def _simplify_option_sets(assessment: Assessment, steps: list[Step]) -> Assessment:
    return Assessment(
        assessment.space, (_reduce_set(s, steps) for s in assessment.sets)
    )


def _canonicalized(result: MembershipResult) -> MembershipResult:
    """Replace raw solver certificates by presentation-stable ones."""
    if result.tuple_witnesses is None:
        return result
    canonical: dict = {}
    for combo, witness in result.tuple_witnesses.items():
        certificate = canonical_certificate(FeasibilityProblem(combo, witness.s))
        assert certificate is not None
        canonical[combo] = TupleWitness(s=witness.s, certificate=certificate)
    return MembershipResult(
        member=result.member,
        positive_witness=result.positive_witness,
        tuple_witnesses=canonical,
        witnesses_truncated=result.witnesses_truncated,
        counterexample=result.counterexample,
    )


def remove_redundant_sets(assessment: Assessment) -> Assessment:
    """Drop sets already implied by the rest, rescanning after each removal."""
    steps: list[Step] = []
    return _remove_redundant_sets(assessment, steps)


def _remove_redundant_sets(assessment: Assessment, steps: list[Step]) -> Assessment:
    current = assessment
    while True:
        # Larger sets first: removing one shrinks later membership products most.
        ordered = sorted(current.sets, key=lambda s: (-len(s), s.sort_key))
        for candidate in ordered:
            rest = current.without(candidate)
            result = is_in_extension(candidate, rest)
            if result.member:
                steps.append(
                    RemoveSetStep(removed_set=candidate, witness=_canonicalized(result))
                )
                current = rest
                break
        else:
            return current


def simplify(assessment: Assessment) -> SimplificationReport:
    """Full pipeline: per-set reduction, then redundant-set removal.

    Option-level rules run first because the redundancy test's cost is driven
    by the size of the tuple product.  The output is a fixpoint of the rules,
    not necessarily a globally minimal representation.
    """
    steps: list[Step] = []
    current = _simplify_option_sets(assessment, steps)
    current = _remove_redundant_sets(current, steps)
    return SimplificationReport(input=assessment, output=current, steps=tuple(steps))
