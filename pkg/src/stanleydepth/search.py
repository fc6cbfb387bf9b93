"""Exact Stanley depth of a subset family via interval-partition search.

``has_partition(P, d)`` decides whether P splits into pairwise-disjoint
intervals all of whose tops have size >= d.  The search exploits a
normal form: members of size >= d can always sit in their own singleton
intervals, so only the "deficient" members (size < d) need covering, and
each of those can be assumed to be the *bottom* of its interval with a
top of size exactly d.  (Any interval with a larger top splits into
subintervals with size-d tops over its deficient part; the reduction is
exercised against the no-normal-form brute-force oracle in the tests.)

That turns the question into an exact-cover search: repeatedly take the
first uncovered deficient member, branch over its admissible size-d tops,
and keep interval member-sets disjoint.  Pruning is a forward check that
every remaining deficient member retains at least one admissible top.

``sdepth`` scans candidate depths downward from the quasi-depth bound,
which is sound because Stanley depth never exceeds quasi-depth.  All
searches accept a wall-clock budget and report "ran out" distinctly from
"no partition".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import AmbientMismatchError, BudgetExhaustedError, OracleCapError
from .intervals import Interval, IntervalPartition, verify_partition
from .qdepth import qdepth_from_alpha
from .subsets import SubsetFamily, VarSet, alpha_vector

#: Default member cap for the brute-force oracle.
DEFAULT_ORACLE_CAP = 18


@dataclass
class SearchBudget:
    """Wall-clock budget; ``check`` raises once the deadline passes."""

    deadline: float

    @classmethod
    def of(cls, seconds: float) -> "SearchBudget":
        if seconds <= 0:
            raise ValueError(f"budget must be positive, got {seconds}")
        return cls(time.monotonic() + seconds)

    def check(self) -> None:
        if time.monotonic() > self.deadline:
            raise BudgetExhaustedError("search budget exhausted")


def _submasks(diff: int):
    """All submasks of ``diff``, the empty mask included."""
    sub = 0
    while True:
        yield sub
        if sub == diff:
            return
        sub = (sub - diff) & diff


class _PartitionSearch:
    """One (family, d) exact-cover instance over bitmask members."""

    def __init__(self, family: SubsetFamily, d: int, budget: SearchBudget | None):
        self.family = family
        self.d = d
        self.budget = budget
        self.n = family.n
        # Fixed member order: ascending cardinality, then numeric mask.
        self.masks = sorted(
            (m.mask for m in family.members), key=lambda b: (b.bit_count(), b)
        )
        self.index = {b: i for i, b in enumerate(self.masks)}
        self.deficient = [i for i, b in enumerate(self.masks) if b.bit_count() < d]
        self._ticks = 0

    def _tick(self) -> None:
        self._ticks += 1
        if self.budget is not None and self._ticks % 64 == 0:
            self.budget.check()

    def _interval_bitmap(self, lo: int, hi: int) -> int | None:
        """Bitmap of member indices in [lo, hi], or None if not inside P."""
        bm = 0
        index = self.index
        for sub in _submasks(lo ^ hi):
            i = index.get(lo | sub)
            if i is None:
                return None
            bm |= 1 << i
        return bm

    def _candidate_tops(self, member_mask: int) -> list[tuple[int, int]]:
        """(top, interval bitmap) choices for one deficient member."""
        need = self.d - member_mask.bit_count()
        free = [i for i in range(self.n) if not member_mask >> i & 1]
        out = []
        for combo in combinations(free, need):
            top = member_mask
            for i in combo:
                top |= 1 << i
            self._tick()
            bm = self._interval_bitmap(member_mask, top)
            if bm is not None:
                out.append((top, bm))
        out.sort()
        return out

    def run(self) -> IntervalPartition | None:
        if not self.masks:
            return IntervalPartition((), self.family)
        if not self.deficient:
            return self._build_witness([], 0)
        # Precompute admissible tops; a deficient member with none kills d.
        tops: list[list[tuple[int, int]]] = []
        for i in self.deficient:
            cands = self._candidate_tops(self.masks[i])
            if not cands:
                return None
            tops.append(cands)
        self.tops = tops
        # touch[member index] -> slots whose candidate intervals use it.
        touch: dict[int, set[int]] = {}
        for slot, cands in enumerate(tops):
            for _, bm in cands:
                x = bm
                while x:
                    low = x & -x
                    touch.setdefault(low.bit_length() - 1, set()).add(slot)
                    x ^= low
        self.touch = touch
        chosen: list[tuple[int, int]] = []
        if self._dfs(0, 0, chosen):
            covered = 0
            for slot, top in chosen:
                covered |= self._interval_bitmap(self.masks[self.deficient[slot]], top)
            return self._build_witness(chosen, covered)
        return None

    def _dfs(self, covered: int, ptr: int, chosen: list[tuple[int, int]]) -> bool:
        self._tick()
        deficient = self.deficient
        while ptr < len(deficient) and covered >> deficient[ptr] & 1:
            ptr += 1
        if ptr == len(deficient):
            return True
        for top, bm in self.tops[ptr]:
            if covered & bm:
                continue
            new_covered = covered | bm
            if not self._forward_ok(new_covered, ptr, bm):
                continue
            chosen.append((ptr, top))
            if self._dfs(new_covered, ptr + 1, chosen):
                return True
            chosen.pop()
        return False

    def _forward_ok(self, covered: int, ptr: int, just_covered: int) -> bool:
        """Every still-uncovered deficient member keeps an admissible top.

        Only slots whose candidates touch the freshly covered members can
        have lost options, so only those are re-checked.
        """
        affected: set[int] = set()
        x = just_covered
        touch = self.touch
        while x:
            low = x & -x
            affected |= touch.get(low.bit_length() - 1, ())
            x ^= low
        deficient = self.deficient
        for slot in affected:
            if slot <= ptr or covered >> deficient[slot] & 1:
                continue
            if not any(bm & covered == 0 for _, bm in self.tops[slot]):
                return False
        return True

    def _build_witness(
        self, chosen: list[tuple[int, int]], covered: int
    ) -> IntervalPartition:
        n = self.n
        intervals = [
            Interval(VarSet(self.masks[self.deficient[slot]], n), VarSet(top, n))
            for slot, top in chosen
        ]
        for i, b in enumerate(self.masks):
            if not covered >> i & 1:
                vs = VarSet(b, n)
                intervals.append(Interval(vs, vs))
        intervals.sort(key=lambda iv: (iv.lo.mask, iv.hi.mask))
        return IntervalPartition(tuple(intervals), self.family)


def has_partition(
    family: SubsetFamily, d: int, budget: SearchBudget | None = None
) -> IntervalPartition | None:
    """Witness partition with all tops of size >= d, or None if none exists.

    Exhaustive and exact; raises :class:`BudgetExhaustedError` when the
    budget runs out, which must never be read as "no partition".
    """
    if not 0 <= d <= family.n:
        raise ValueError(f"candidate depth {d} outside 0..{family.n}")
    witness = _PartitionSearch(family, d, budget).run()
    assert witness is None or verify_partition(witness, d).ok
    return witness


@dataclass(frozen=True)
class SdepthResult:
    """Tri-state outcome of an exact Stanley depth computation.

    ``status`` is "decided" or "undecided"; the latter only ever means
    the budget ran out at ``undecided_at`` before the deciding level.
    ``upper_bound`` is the best bound known when the search stopped.
    """

    status: str
    value: int | None = None
    witness: IntervalPartition | None = None
    upper_bound: int | None = None
    undecided_at: int | None = None

    @property
    def decided(self) -> bool:
        return self.status == "decided"


def sdepth(family: SubsetFamily, budget: SearchBudget | None = None) -> SdepthResult:
    """Exact Stanley depth of a family, with witness.

    Scans candidate depths downward starting from min(quasi-depth,
    largest member size); the first witnessed level is the answer.  The
    empty family returns n, matching the quasi-depth convention.
    """
    n = family.n
    if not family.members:
        return SdepthResult(
            "decided", n, IntervalPartition((), family), upper_bound=n
        )
    start = min(qdepth_from_alpha(alpha_vector(family)), family.max_cardinality())
    for d in range(start, -1, -1):
        try:
            witness = has_partition(family, d, budget)
        except BudgetExhaustedError:
            return SdepthResult(
                "undecided", upper_bound=d, undecided_at=d
            )
        if witness is not None:
            return SdepthResult("decided", d, witness, upper_bound=d)
    raise AssertionError("unreachable: d = 0 always admits the singleton partition")


def sdepth_bruteforce_oracle(family: SubsetFamily, cap: int | None = None) -> int:
    """Stanley depth by enumeration of *all* interval partitions.

    No normal form, no candidate-top restriction, no forward checking:
    for the first uncovered member every interval [F, G] of the family
    containing it is tried.  Exponential; guarded by a member cap and
    meant only as an independent test oracle.
    """
    limit = DEFAULT_ORACLE_CAP if cap is None else cap
    if len(family) > limit:
        raise OracleCapError(
            f"oracle cap is {limit} members, family has {len(family)}"
        )
    n = family.n
    if not family.members:
        return n
    masks = sorted((m.mask for m in family.members), key=lambda b: (b.bit_count(), b))
    index = {b: i for i, b in enumerate(masks)}
    size = len(masks)
    full = (1 << size) - 1

    # every interval of the family: (min top size irrelevant) bitmap keyed
    # by the members it covers, grouped by the members they contain
    def intervals_through(i: int) -> list[tuple[int, int]]:
        b = masks[i]
        out = []
        for lo_sub in _submasks(b):
            if lo_sub not in index:
                continue
            for g in masks:
                if g & b != b or lo_sub & ~g:
                    continue
                bm = 0
                ok = True
                for sub in _submasks(lo_sub ^ g):
                    j = index.get(lo_sub | sub)
                    if j is None:
                        ok = False
                        break
                    bm |= 1 << j
                if ok:
                    out.append((g.bit_count(), bm))
        return out

    through = [intervals_through(i) for i in range(size)]
    memo: dict[int, float] = {}

    def best(covered: int) -> float:
        if covered == full:
            return float("inf")
        hit = memo.get(covered)
        if hit is not None:
            return hit
        i = 0
        while covered >> i & 1:
            i += 1
        result = -1.0
        for top_size, bm in through[i]:
            if covered & bm:
                continue
            value = min(top_size, best(covered | bm))
            if value > result:
                result = value
        memo[covered] = result
        return result

    answer = best(0)
    assert answer >= 0
    return min(int(answer), n) if answer != float("inf") else n


def union_lower_bound(
    first: SubsetFamily,
    second: SubsetFamily,
    budget: SearchBudget | None = None,
) -> tuple[int, IntervalPartition]:
    """min(sdepth(P1), sdepth(P2)) as a certified lower bound for P1 | P2.

    The two families must be disjoint; the returned witness is the
    concatenation of the two optimal witnesses over the union family.
    """
    if first.n != second.n:
        raise AmbientMismatchError(
            f"ambient widths differ: {first.n} vs {second.n}"
        )
    if not first.isdisjoint(second):
        raise ValueError("families overlap; the union bound needs disjoint parts")
    r1 = sdepth(first, budget)
    r2 = sdepth(second, budget)
    if not (r1.decided and r2.decided):
        raise BudgetExhaustedError("budget exhausted before both parts decided")
    bound = min(r1.value, r2.value)
    union = first.union(second)
    intervals = tuple(r1.witness.intervals) + tuple(r2.witness.intervals)
    witness = IntervalPartition(intervals, union)
    assert verify_partition(witness, bound).ok
    return bound, witness
