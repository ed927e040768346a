"""Linear-probe parking of ``m`` cars on ``n`` spots.

Cars and spots are 1-indexed. A preference sequence that fails to park every
car is still a legal :class:`PartialParkingFunction`; operations that only
make sense for successful sequences raise :class:`NotAParkingFunction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .core import PartialPermutation, PriorityForest
from .errors import InvalidStructure, NotAParkingFunction

__all__ = [
    "PartialParkingFunction", "ParkingOutcome", "ParkingStatistics", "park",
    "priority_forest_of_pf", "parking_statistics", "parking_functions",
    "from_blueprint", "prefix_birds_eye_words",
]


@dataclass(frozen=True)
class PartialParkingFunction:
    n: int
    prefs: tuple

    def __post_init__(self):
        prefs = tuple(self.prefs)
        object.__setattr__(self, "prefs", prefs)
        if self.n < 0:
            raise InvalidStructure("n must be non-negative")
        for a in prefs:
            if not isinstance(a, int) or not 1 <= a <= self.n:
                raise InvalidStructure(f"preference {a!r} outside [1, {self.n}]")

    @property
    def m(self) -> int:
        return len(self.prefs)

    def restrict(self, k: int) -> "PartialParkingFunction":
        """The first ``k`` cars."""
        return PartialParkingFunction(self.n, self.prefs[:k])

    def is_parking_function(self) -> bool:
        return park(self).success


class ParkingOutcome(NamedTuple):
    success: bool
    birds_eye: PartialPermutation   # spot -> car
    blueprint: tuple                # (car, preferred spot, final spot or None)

    @property
    def outcome(self) -> PartialPermutation:
        """Car -> spot, the inverse of the bird's eye permutation."""
        return self.birds_eye.inverse()


def park(pf: PartialParkingFunction) -> ParkingOutcome:
    n = pf.n
    spot_car: list = [None] * n
    blueprint = []
    success = True
    for car, a in enumerate(pf.prefs, 1):
        s = a
        while s <= n and spot_car[s - 1] is not None:
            s += 1
        if s > n:
            success = False
            blueprint.append((car, a, None))
        else:
            spot_car[s - 1] = car
            blueprint.append((car, a, s))
    return ParkingOutcome(success, PartialPermutation(n, pf.m, tuple(spot_car)), tuple(blueprint))


def _require_success(pf: PartialParkingFunction) -> ParkingOutcome:
    out = park(pf)
    if not out.success:
        raise NotAParkingFunction(f"preferences {list(pf.prefs)} fail on {pf.n} spots")
    return out


def priority_forest_of_pf(pf: PartialParkingFunction) -> PriorityForest:
    """The forest whose shifted parent map is ``prefs o birds_eye``."""
    out = _require_success(pf)
    parent = tuple(None if car is None else pf.prefs[car - 1] - 1
                   for car in out.birds_eye.word)
    return PriorityForest(pf.n, parent)


class ParkingStatistics(NamedTuple):
    lucky: int
    probes: int
    records: frozenset


def parking_statistics(pf: PartialParkingFunction) -> ParkingStatistics:
    out = _require_success(pf)
    lucky = sum(1 for _, a, s in out.blueprint if s == a)
    probes = sum(s - a + 1 for _, a, s in out.blueprint)
    return ParkingStatistics(lucky, probes, out.birds_eye.records())


def from_blueprint(n: int, blueprint) -> PartialParkingFunction:
    """Recover the preferences from ``(car, pref, spot)`` arcs."""
    prefs = [a for _, a, _ in sorted(blueprint)]
    return PartialParkingFunction(n, tuple(prefs))


def prefix_birds_eye_words(pf: PartialParkingFunction) -> list:
    """Bird's eye words of the restrictions to cars ``1..k``, ``k = 0..m``."""
    return [park(pf.restrict(k)).birds_eye for k in range(pf.m + 1)]


def parking_functions(m: int, n: int, *, include_failed: bool = False
                      ) -> Iterator[PartialParkingFunction]:
    """All ``(m, n)``-parking functions in lexicographic order."""
    for prefs in itertools.product(range(1, n + 1), repeat=m):
        pf = PartialParkingFunction(n, prefs)
        if include_failed or park(pf).success:
            yield pf
