"""Membership in the natural extension, consistency, and choice queries.

A query set S belongs to the extension of an assessment when either S already
contains an option dominating zero, or (for a nonempty assessment) every way
of picking one option per assessment set admits a nonnegative, non-null
weighting lying below some element of S or below zero.  Consistency is the
statement that the empty set does not belong; a choice query keeps exactly
the options whose rejection cannot be inferred.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from types import MappingProxyType
from typing import Mapping

from .assessment import Assessment
from .lp import FeasibilityCertificate, FeasibilityProblem, is_feasible
from .space import OptionSet, OptionVec

DEFAULT_MAX_WITNESS_TUPLES = 4096

OptionTuple = tuple[OptionVec, ...]


@dataclass(frozen=True)
class TupleWitness:
    """For one tuple: the bounding option s and the exact weight certificate."""

    s: OptionVec
    certificate: FeasibilityCertificate


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a membership query, with the evidence that decided it.

    Exactly one kind of evidence is populated:

    * ``positive_witness``   -- an element of S dominating zero;
    * ``tuple_witnesses``    -- a bounding pair per tuple (member via the
      universal condition; truncated to one sample above the retention cap);
    * ``counterexample``     -- the first tuple admitting no bounding pair;
    * nothing                -- non-member against an empty assessment.
    """

    member: bool
    positive_witness: OptionVec | None = None
    tuple_witnesses: Mapping[OptionTuple, TupleWitness] | None = None
    witnesses_truncated: bool = False
    counterexample: OptionTuple | None = None

    def __post_init__(self) -> None:
        if self.tuple_witnesses is not None and not isinstance(
            self.tuple_witnesses, MappingProxyType
        ):
            object.__setattr__(
                self, "tuple_witnesses", MappingProxyType(dict(self.tuple_witnesses))
            )


@dataclass(frozen=True)
class ConsistencyResult:
    """Verdict plus the empty-set membership probe that produced it."""

    consistent: bool
    probe: MembershipResult

    @property
    def counterexample(self) -> OptionTuple | None:
        """On the consistent side: the tuple admitting no weighting below zero."""
        return self.probe.counterexample


class InconsistentAssessmentError(Exception):
    """Choice was queried against an assessment with no coherent extension."""

    def __init__(self, result: ConsistencyResult) -> None:
        self.result = result
        super().__init__("assessment admits no coherent extension")


@dataclass(frozen=True)
class ChoiceResult:
    """Partition of a queried option set, with per-rejection evidence."""

    options: OptionSet
    chosen: OptionSet
    rejected: OptionSet
    rejections: Mapping[OptionVec, MembershipResult] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.rejections, MappingProxyType):
            object.__setattr__(self, "rejections", MappingProxyType(dict(self.rejections)))


def is_in_extension(
    query: OptionSet,
    assessment: Assessment,
    *,
    max_witness_tuples: int = DEFAULT_MAX_WITNESS_TUPLES,
) -> MembershipResult:
    """Decide membership of ``query`` in the assessment's natural extension.

    Tuples are enumerated lazily in lexicographic order of the deterministic
    set iteration; the first tuple without a bounding pair ends the search.
    Per query, the most recent successful bounding option is tried first,
    since one option frequently serves every tuple.
    """
    positive = query.strictly_positive_element()
    if positive is not None:
        return MembershipResult(member=True, positive_witness=positive)
    if len(assessment) == 0:
        return MembershipResult(member=False)

    space = assessment.space
    zero = space.zero()
    candidates = [el for el in query if not el.is_zero]
    candidates.append(zero)

    keep_map = prod(len(s) for s in assessment) <= max_witness_tuples
    witnesses: dict[OptionTuple, TupleWitness] = {}
    truncated = False
    last_good: OptionVec | None = None

    for combo in itertools.product(*(s.elements for s in assessment)):
        found: TupleWitness | None = None
        ordered = candidates
        if last_good is not None:
            ordered = [last_good] + [c for c in candidates if c is not last_good]
        for s in ordered:
            certificate = is_feasible(FeasibilityProblem(combo, s))
            if certificate is not None:
                found = TupleWitness(s=s, certificate=certificate)
                last_good = s
                break
        if found is None:
            return MembershipResult(member=False, counterexample=combo)
        if keep_map:
            witnesses[combo] = found
        else:
            witnesses = {combo: found}
            truncated = True
    return MembershipResult(
        member=True, tuple_witnesses=witnesses, witnesses_truncated=truncated
    )


def is_consistent(
    assessment: Assessment,
    *,
    max_witness_tuples: int = DEFAULT_MAX_WITNESS_TUPLES,
) -> ConsistencyResult:
    """An assessment is consistent iff the empty set is outside its extension."""
    probe = is_in_extension(
        OptionSet(assessment.space),
        assessment,
        max_witness_tuples=max_witness_tuples,
    )
    return ConsistencyResult(consistent=not probe.member, probe=probe)


def choose(
    assessment: Assessment,
    options: OptionSet,
    *,
    max_witness_tuples: int = DEFAULT_MAX_WITNESS_TUPLES,
) -> ChoiceResult:
    """Split a queried option set into inferred-safe and inferred-rejected.

    An option u is rejected exactly when the zero-stripped translate of the
    query by u belongs to the extension.  Consistency is re-checked first;
    querying an inconsistent assessment raises, carrying the probe.
    """
    if len(options) == 0:
        raise ValueError("cannot choose from an empty option set")
    consistency = is_consistent(assessment, max_witness_tuples=max_witness_tuples)
    if not consistency.consistent:
        raise InconsistentAssessmentError(consistency)

    chosen: list[OptionVec] = []
    rejections: dict[OptionVec, MembershipResult] = {}
    for u in options:
        translated = options.translate(u).remove_zero()
        result = is_in_extension(
            translated, assessment, max_witness_tuples=max_witness_tuples
        )
        if result.member:
            rejections[u] = result
        else:
            chosen.append(u)
    assert chosen, "a consistent assessment never rejects every option"
    return ChoiceResult(
        options=options,
        chosen=OptionSet(options.space, chosen),
        rejected=OptionSet(options.space, rejections.keys()),
        rejections=rejections,
    )
