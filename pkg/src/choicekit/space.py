"""Option vectors over a fixed finite outcome space, and finite option sets.

An option assigns an exact rational reward to every outcome; options are
partially ordered pointwise.  Option sets are kept as deduplicated tuples in
lexicographic coordinate order so that every downstream enumeration (tuple
products, reports, serialized output) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .numeric import as_rational


class SpaceMismatchError(ValueError):
    """Raised when vectors from different outcome spaces are combined."""


@dataclass(frozen=True)
class OutcomeSpace:
    """An ordered list of distinct outcome labels."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]) -> None:
        labels = tuple(labels)
        if not labels:
            raise ValueError("outcome space needs at least one outcome")
        if any(not isinstance(lb, str) or not lb for lb in labels):
            raise ValueError("outcome labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            raise ValueError("outcome labels must be unique")
        object.__setattr__(self, "labels", labels)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def vector(self, coords: Iterable[int | str | Fraction]) -> OptionVec:
        return OptionVec(self, coords)

    def zero(self) -> OptionVec:
        return OptionVec(self, (0,) * self.dimension)


@dataclass(frozen=True)
class OptionVec:
    """One option: a reward per outcome, all coordinates exact rationals."""

    space: OutcomeSpace
    coords: tuple[Fraction, ...]

    def __init__(self, space: OutcomeSpace, coords: Iterable[int | str | Fraction]) -> None:
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != space.dimension:
            raise SpaceMismatchError(
                f"vector has {len(coords)} coordinates, space has {space.dimension}"
            )
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coords", coords)

    def _check_space(self, other: OptionVec) -> None:
        if self.space != other.space:
            raise SpaceMismatchError("options live in different outcome spaces")

    def __add__(self, other: OptionVec) -> OptionVec:
        self._check_space(other)
        return OptionVec(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: OptionVec) -> OptionVec:
        self._check_space(other)
        return OptionVec(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> OptionVec:
        return OptionVec(self.space, tuple(-a for a in self.coords))

    def scale(self, factor: int | str | Fraction) -> OptionVec:
        factor = as_rational(factor)
        return OptionVec(self.space, tuple(factor * a for a in self.coords))

    __rmul__ = scale

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def leq(self, other: OptionVec) -> bool:
        """Pointwise order: every coordinate of self is <= the other's."""
        self._check_space(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    @property
    def is_strictly_positive(self) -> bool:
        """True iff the option dominates zero: >= 0 everywhere and not 0."""
        return all(c >= 0 for c in self.coords) and not self.is_zero


class OptionSet:
    """A finite, deduplicated set of options sharing one outcome space.

    Elements iterate in lexicographic coordinate order; two sets compare
    equal iff they contain the same options.
    """

    __slots__ = ("space", "elements")

    def __init__(self, space: OutcomeSpace, elements: Iterable[OptionVec] = ()) -> None:
        seen: dict[tuple[Fraction, ...], OptionVec] = {}
        for el in elements:
            if el.space != space:
                raise SpaceMismatchError("option does not belong to this outcome space")
            seen[el.coords] = el
        self.space = space
        self.elements: tuple[OptionVec, ...] = tuple(
            seen[c] for c in sorted(seen)
        )

    def __iter__(self) -> Iterator[OptionVec]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: OptionVec) -> bool:
        return any(el.coords == item.coords for el in self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OptionSet):
            return NotImplemented
        return self.space == other.space and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.space, self.elements))

    def __repr__(self) -> str:
        inner = ", ".join(str(tuple(map(str, el.coords))) for el in self.elements)
        return f"OptionSet{{{inner}}}"

    @property
    def sort_key(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(el.coords for el in self.elements)

    def issubset(self, other: OptionSet) -> bool:
        return all(el in other for el in self.elements)

    def union(self, other: OptionSet) -> OptionSet:
        if self.space != other.space:
            raise SpaceMismatchError("option sets live in different outcome spaces")
        return OptionSet(self.space, (*self.elements, *other.elements))

    def difference(self, other: OptionSet) -> OptionSet:
        return OptionSet(self.space, (el for el in self.elements if el not in other))

    def remove(self, option: OptionVec) -> OptionSet:
        return OptionSet(self.space, (el for el in self.elements if el.coords != option.coords))

    def translate(self, offset: OptionVec) -> OptionSet:
        """The set ``{v - offset : v in self}``; cardinality is preserved."""
        if offset.space != self.space:
            raise SpaceMismatchError("offset lives in a different outcome space")
        return OptionSet(self.space, (el - offset for el in self.elements))

    def remove_zero(self) -> OptionSet:
        return OptionSet(self.space, (el for el in self.elements if not el.is_zero))

    def strictly_positive_element(self) -> OptionVec | None:
        """First element (in canonical order) dominating zero, if any."""
        for el in self.elements:
            if el.is_strictly_positive:
                return el
        return None
