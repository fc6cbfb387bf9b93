"""Intervals [F, G] in the subset lattice and partitions of families into them.

``verify_partition`` is the certificate checker: it re-enumerates every
interval from scratch and never trusts whoever produced the partition, so
a witness that passes it is a proof.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AmbientMismatchError, LatticeLimitError, ParseError
from .subsets import SubsetFamily, VarSet

#: Refuse to enumerate intervals wider than this many free positions.
DEFAULT_MAX_INTERVAL_WIDTH = 26


@dataclass(frozen=True)
class Interval:
    """All subsets H with lo <= H <= hi; contains 2^(|hi|-|lo|) members."""

    lo: VarSet
    hi: VarSet

    def __post_init__(self):
        if self.lo.n != self.hi.n:
            raise AmbientMismatchError(
                f"interval ends have different ambient widths: {self.lo.n} vs {self.hi.n}"
            )
        if not self.lo.issubset(self.hi):
            raise ValueError(f"interval bottom {self.lo!r} is not contained in top {self.hi!r}")

    @property
    def width(self) -> int:
        return len(self.hi) - len(self.lo)

    def member_count(self) -> int:
        return 1 << self.width

    def __contains__(self, item: VarSet) -> bool:
        return self.lo.issubset(item) and item.issubset(self.hi)


def interval_members(iv: Interval, max_width: int | None = None) -> list[VarSet]:
    """Enumerate the interval, ascending by bitmask value."""
    limit = DEFAULT_MAX_INTERVAL_WIDTH if max_width is None else max_width
    if iv.width > limit:
        raise LatticeLimitError(
            f"interval has width {iv.width} (guard is {limit})"
        )
    lo, diff = iv.lo.mask, iv.lo.mask ^ iv.hi.mask
    out = []
    sub = 0
    while True:
        out.append(lo | sub)
        if sub == diff:
            break
        sub = (sub - diff) & diff
    out.sort()
    return [VarSet(b, iv.lo.n) for b in out]


@dataclass(frozen=True)
class IntervalPartition:
    """A list of intervals meant to partition ``target``.

    Construction does not validate the partition property; that is
    :func:`verify_partition`'s job, so that invalid candidates can be
    represented and then rejected with a reason.
    """

    intervals: tuple[Interval, ...]
    target: SubsetFamily

    def min_top_size(self) -> int | None:
        return min((len(iv.hi) for iv in self.intervals), default=None)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_partition(pp: IntervalPartition, d: int) -> VerifyResult:
    """Check that ``pp`` really partitions its target with all tops >= d.

    Re-enumerates every interval; returns a structured reason on failure.
    """
    seen: set[int] = set()
    target_masks = {m.mask for m in pp.target.members}
    for iv in pp.intervals:
        if iv.lo.n != pp.target.n:
            return VerifyResult(False, f"interval {iv} has wrong ambient width")
        if len(iv.hi) < d:
            return VerifyResult(
                False, f"interval top {iv.hi!r} has size {len(iv.hi)} < {d}"
            )
        for member in interval_members(iv):
            b = member.mask
            if b not in target_masks:
                return VerifyResult(
                    False, f"interval member {member!r} lies outside the target family"
                )
            if b in seen:
                return VerifyResult(False, f"member {member!r} covered twice")
            seen.add(b)
    if len(seen) != len(target_masks):
        missing = len(target_masks) - len(seen)
        return VerifyResult(False, f"{missing} target members not covered")
    return VerifyResult(True)


def partition_to_json(pp: IntervalPartition) -> str:
    """Witness serialization: JSON array of {"F": [...], "G": [...]}."""
    payload = [
        {"F": list(iv.lo.positions()), "G": list(iv.hi.positions())}
        for iv in pp.intervals
    ]
    return json.dumps(payload)


def partition_from_json(text: str, target: SubsetFamily) -> IntervalPartition:
    """Parse a serialized witness back against a target family."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"witness is not valid JSON: {exc}") from None
    if not isinstance(payload, list):
        raise ParseError("witness must be a JSON array of intervals")
    intervals = []
    for entry in payload:
        if not isinstance(entry, dict) or set(entry) != {"F", "G"}:
            raise ParseError(f"bad witness interval entry: {entry!r}")
        lo = VarSet.from_positions(entry["F"], target.n)
        hi = VarSet.from_positions(entry["G"], target.n)
        intervals.append(Interval(lo, hi))
    return IntervalPartition(tuple(intervals), target)
