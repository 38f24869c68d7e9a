# Copyright (C) 2024 Nice Zombies
"""Reduction of Sigma-3 equivalence relations to rank-1 groups."""
from __future__ import annotations

__all__: list[str] = [
    "AuditReport",
    "Chip",
    "ChipScheduler",
    "GroupFamilyView",
    "SequencingError",
    "Sigma3Reduction",
    "Sigma3Relation",
    "TripleMachine",
    "audit_invariants",
    "constant_relation",
    "e0_relation",
    "naive_oracle",
    "owner",
    "reduce_sigma3",
    "triple_prime",
]

import logging
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from sympy import factorint

from effalg._diagrams import JoinedStream, pair, unpair
from effalg._tfab import SubgroupDiagram, nth_prime, prime_position

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    _Stream = Callable[[int], int]
    _Triple = tuple[int, int, int]

logger: logging.Logger = logging.getLogger(__name__)


class SequencingError(RuntimeError):
    """A machine asked to skip or repeat a stage.

    :param expected: the next stage of the machine
    :param stage: the requested stage
    """

    def __init__(self, expected: int, stage: int) -> None:
        """Create a new sequencing error."""
        super().__init__(f"Expected stage {expected}, got {stage}")
        self.expected: int = expected
        self.stage: int = stage


SequencingError.__module__ = "effalg"


def triple_prime(m: int, n: int, k: int) -> int:
    """Get the prime reserved for a triple ``m < n``.

    Example:
        >>> from effalg import triple_prime
        >>> [triple_prime(0, 1, k) for k in range(3)]
        [2, 5, 13]

    """
    if not 0 <= m < n or k < 0:
        msg: str = f"Invalid triple {(m, n, k)}"
        raise ValueError(msg)

    return nth_prime(pair(pair(m, n - m - 1), k))


def owner(p: int) -> tuple[int, int, int]:
    """Get the triple a prime is reserved for."""
    code, k = unpair(prime_position(p))
    m, gap = unpair(code)
    return m, m + gap + 1, k


class _Guarded:
    def __init__(self, stream: _Stream, limit: int) -> None:
        self.stream: _Stream = stream
        self.limit: int = limit

    def __call__(self, index: int) -> int:
        if index >= self.limit:
            msg: str = f"Read of bit {index} exceeds the declared use"
            raise ValueError(msg)

        return self.stream(index)


@dataclass(frozen=True)
class Sigma3Relation:
    """A relation ``A E B`` iff ``exists x forall y exists z R(A, B, x, y, z)``.

    :param predicate: the computable matrix ``R``
    :param use: the number of bits of each stream a query may read
    :param name: a name for reports
    """

    predicate: Callable[[_Stream, _Stream, int, int, int], bool]
    use: Callable[[int, int, int], int]
    name: str = "R"

    def holds(self, a: _Stream, b: _Stream, x: int, y: int, z: int) -> bool:
        """Evaluate the matrix within its declared use."""
        limit: int = self.use(x, y, z)
        return self.predicate(
            _Guarded(a, limit), _Guarded(b, limit), x, y, z,
        )


Sigma3Relation.__module__ = "effalg"


def e0_relation() -> Sigma3Relation:
    """Get eventual equality: past some ``x`` every bit agrees."""
    return Sigma3Relation(
        lambda a, b, x, y, _: y <= x or a(y) == b(y),
        lambda _x, y, _z: y + 1,
        "e0",
    )


def constant_relation(value: bool) -> Sigma3Relation:  # noqa: FBT001
    """Get the relation where every pair or no pair is related."""
    return Sigma3Relation(
        lambda *_: value, lambda *_: 0,
        "const-true" if value else "const-false",
    )


class Chip(NamedTuple):
    """A chip awarded by the function of the pair ``m < n``."""

    m: int
    n: int
    value: int


Chip.__module__ = "effalg"


@dataclass
class _PairState:
    values: list[int] = field(default_factory=list)
    awarded: set[int] = field(default_factory=set)
    least: int = 0
    lengths: dict[int, int] = field(default_factory=dict)
    searched: dict[int, int] = field(default_factory=dict)
    snapshots: dict[int, tuple[int, ...]] = field(default_factory=dict)


class ChipScheduler:
    """Chip functions for every pair ``m < n`` of the family.

    The pair gives ``k`` infinitely many chips exactly when some ``x <= k``
    witnesses the relation between ``A_m`` and ``A_n``.

    Global stage ``<<m, n - m - 1>, t>`` belongs to the pair ``(m, n)`` as
    its local stage ``t``. Local stage ``2 <k, j>`` checks whether the
    agreement length of some ``x <= k`` grew since the last check for
    ``k``; if so ``k`` gets the chip. Every other stage awards the least
    value the pair never awarded.

    :param family: the streams, a sequence or a function from indices
    :param relation: the relation
    """

    def __init__(self, family: Sequence[_Stream] | Callable[[int], _Stream],
                 relation: Sigma3Relation) -> None:
        """Create a new chip scheduler."""
        self.size: int | None = None if callable(family) else len(family)
        self._get: Callable[[int], _Stream] = (
            family if callable(family) else family.__getitem__
        )
        self.relation: Sigma3Relation = relation
        self._pairs: dict[tuple[int, int], _PairState] = {}

    def _length(self, state: _PairState, m: int, n: int, x: int,
                bound: int) -> int:
        a, b = self._get(m), self._get(n)
        length: int = state.lengths.get(x, 0)
        z: int = state.searched.get(x, 0)
        while length < bound:
            while z <= bound and not self.relation.holds(a, b, x, length, z):
                z += 1

            if z > bound:
                break

            length, z = length + 1, 0

        state.lengths[x], state.searched[x] = length, z
        return length

    def _award(self, state: _PairState, m: int, n: int, t: int) -> int:
        stage: int = pair(pair(m, n - m - 1), t)
        if t % 2 == 0 and (self.size is None or n < self.size):
            k, _ = unpair(t // 2)
            lengths: tuple[int, ...] = tuple(
                self._length(state, m, n, x, stage) for x in range(k + 1)
            )
            snapshot: tuple[int, ...] = state.snapshots.get(
                k, (0,) * (k + 1),
            )
            if any(new > old for new, old in zip(lengths, snapshot)):
                state.snapshots[k] = lengths
                logger.debug("c(%d, %d) awards %d at stage %d", m, n, k,
                             stage)
                return k

        while state.least in state.awarded:
            state.least += 1

        return state.least

    def local(self, m: int, n: int, t: int) -> int:
        """Get the value of the chip of the pair at local stage ``t``."""
        state: _PairState = self._pairs.setdefault((m, n), _PairState())
        while len(state.values) <= t:
            value: int = self._award(state, m, n, len(state.values))
            state.awarded.add(value)
            state.values.append(value)

        return state.values[t]

    def chip(self, stage: int) -> Chip:
        """Get the chip awarded at a global stage."""
        code, t = unpair(stage)
        m, gap = unpair(code)
        return Chip(m, m + gap + 1, self.local(m, m + gap + 1, t))

    def count(self, m: int, n: int, k: int, stage: int) -> int:
        """Count the chips ``(m, n)`` awarded to ``k`` before a stage."""
        code: int = pair(m, n - m - 1)
        total: int = 0
        t: int = 0
        while pair(code, t) < stage:
            total += self.local(m, n, t) == k
            t += 1

        return total


ChipScheduler.__module__ = "effalg"


class TripleMachine:
    """The negative powers of ``p_{m,n,k}`` in every group of the family.

    With key exponent ``r`` every group contains ``p^-(r-1)``, a group
    contains ``p^-r`` when its side is the ``n`` side, and none contains
    ``p^-(r+1)``. The state at stage ``s`` is the state after the chips of
    the stages before ``s``.

    :param m: the smaller index
    :param n: the larger index
    :param k: the bound on the witness
    :param scheduler: the chip functions
    """

    def __init__(self, m: int, n: int, k: int,
                 scheduler: ChipScheduler) -> None:
        """Create a new triple machine at stage 0."""
        self.m: int = m
        self.n: int = n
        self.k: int = k
        self.N: int = n + k  # noqa: N815
        self.prime: int = triple_prime(m, n, k)
        self.scheduler: ChipScheduler = scheduler
        self.r: int = 1
        self.tags: list[bool] = [l == n for l in range(self.N + 1)]
        self.records: dict[int, int] = {}
        self.stage: int = 0
        self._starts: list[int] = [0]
        self._states: list[tuple[int, tuple[bool, ...]]] = [
            (1, tuple(self.tags)),
        ]

    def __repr__(self) -> str:
        """Get the representation."""
        return f"TripleMachine({self.m}, {self.n}, {self.k})"

    @property
    def promoted(self) -> bool:
        """Whether a promotion happened."""
        return self.r > 1

    def rank(self, l: int) -> int:  # noqa: E741
        """Get the position of an index in the order ``m, n, 0, 1, ...``."""
        if l == self.m:
            return 0

        return 1 if l == self.n else l + 2

    def n_side(self, l: int) -> bool:  # noqa: E741
        """Check if group ``l`` contains ``p^-r``."""
        return self.tags[l] if l <= self.N else self.promoted

    def exponent(self, l: int) -> int:  # noqa: E741
        """Get the largest ``e`` with ``p^-e`` in group ``l``."""
        return self.r if self.n_side(l) else self.r - 1

    def admits(self, l: int, e: int,  # noqa: E741
               stage: int | None = None) -> bool:
        """Check if ``p^-e`` belongs to group ``l``.

        :param l: the group
        :param e: the exponent
        :param stage: the stage, the current one by default
        :return: whether the power belongs to the group
        """
        if stage is None:
            return e < self.r or (e == self.r and self.n_side(l))

        self.advance(stage)
        r, tags = self._states[bisect_right(self._starts, stage) - 1]
        side: bool = tags[l] if l <= self.N else r > 1
        return e < r or (e == r and side)

    def _record(self, chip: Chip) -> None:
        if chip.value > self.N or chip.n > self.N:
            return

        j, l = sorted((chip.m, chip.n), key=self.rank)  # noqa: E741
        if l not in {self.m, self.n}:
            self.records[l] = j

    def _triggered(self) -> bool:
        return any(
            self.tags[l] != self.tags[j] for l, j in self.records.items()
        )

    def _promote(self, reason: str) -> None:
        self.r += 1
        tags: list[bool] = [False] * (self.N + 1)
        for l in sorted(range(self.N + 1), key=self.rank):  # noqa: E741
            if l == self.n:
                tags[l] = True
            elif l != self.m and l in self.records:
                tags[l] = tags[self.records[l]]

        self.tags = tags
        self._starts.append(self.stage + 1)
        self._states.append((self.r, tuple(tags)))
        logger.debug("%r promotes to r = %d on a %s at stage %d", self,
                     self.r, reason, self.stage)

    def step(self, stage: int) -> None:
        """Process the chip of a global stage.

        :param stage: the global stage, the one after the last processed
        :raises SequencingError: when a stage is skipped or repeated
        """
        if stage != self.stage:
            raise SequencingError(self.stage, stage)

        chip: Chip = self.scheduler.chip(stage)
        self._record(chip)
        if chip == (self.m, self.n, self.k):
            self._promote("chip")
        elif self._triggered():
            self._promote("disagreement")

        self.stage += 1

    def advance(self, stage: int) -> None:
        """Process the chips of the stages before ``stage``."""
        while self.stage < stage:
            self.step(self.stage)


TripleMachine.__module__ = "effalg"


class GroupFamilyView:
    """Denominator membership for one group of the family.

    :param reduction: the reduction deciding each prime
    :param index: the group
    """

    rank: int = 1

    def __init__(self, reduction: Sigma3Reduction, index: int) -> None:
        """Create a new view."""
        self.reduction: Sigma3Reduction = reduction
        self.index: int = index

    def admits(self, denominators: tuple[int, ...], stage: int) -> bool:
        """Check if ``1/d`` belongs to the group by a stage."""
        return all(
            self.reduction.admits(self.index, p, e, stage)
            for den in denominators for p, e in factorint(den).items()
        )


GroupFamilyView.__module__ = "effalg"


class Sigma3Reduction:
    """Groups ``G_l`` with ``A_m E A_n`` iff ``G_m`` and ``G_n`` are isomorphic.

    Each prime belongs to one triple and its machine alone decides which
    negative powers of it lie in each group, so machines run on demand.

    :param family: the streams, a sequence or a function from indices
    :param relation: the relation
    """

    def __init__(self, family: Sequence[_Stream] | Callable[[int], _Stream],
                 relation: Sigma3Relation) -> None:
        """Create a new reduction."""
        self.scheduler: ChipScheduler = ChipScheduler(family, relation)
        self.size: int | None = self.scheduler.size
        self._machines: dict[tuple[int, int, int], TripleMachine] = {}

    def machine(self, m: int, n: int, k: int,
                stage: int | None = None) -> TripleMachine:
        """Get the machine of a triple, advanced to a stage."""
        if (key := (m, n, k)) not in self._machines:
            self._machines[key] = TripleMachine(m, n, k, self.scheduler)

        result: TripleMachine = self._machines[key]
        if stage is not None:
            result.advance(stage)

        return result

    def admits(self, l: int, p: int, e: int,  # noqa: E741
               stage: int) -> bool:
        """Check if ``p^-e`` belongs to group ``l`` at a stage."""
        return self.machine(*owner(p)).admits(l, e, stage)

    def membership(self, l: int, q: Fraction | int,  # noqa: E741
                   stage: int) -> bool:
        """Check if a rational belongs to group ``l`` at a stage.

        Example:
            >>> from fractions import Fraction
            >>> from effalg import Sigma3Reduction, constant_relation
            >>> reduction = Sigma3Reduction([], constant_relation(False))
            >>> reduction.membership(1, Fraction(1, 2), 0)
            True
            >>> reduction.membership(0, Fraction(1, 2), 0)
            False

        """
        return GroupFamilyView(self, l).admits(
            (Fraction(q).denominator,), stage,
        )

    def group(self, l: int) -> SubgroupDiagram:  # noqa: E741
        """Get group ``l`` as a free-standing diagram."""
        return SubgroupDiagram(GroupFamilyView(self, l), f"G{l}")

    def key_exponents(self, triple: _Triple,
                      stages: Iterable[int]) -> list[tuple[int, int]]:
        """Get the key exponent of a triple at increasing stages."""
        return [
            (stage, self.machine(*triple, stage).r) for stage in stages
        ]


Sigma3Reduction.__module__ = "effalg"


def reduce_sigma3(family: Sequence[_Stream] | Callable[[int], _Stream],
                  relation: Sigma3Relation,
                  ) -> tuple[Sigma3Reduction, JoinedStream]:
    """Reduce a relation on a family of streams to rank-1 groups.

    :param family: the streams, a sequence or a function from indices
    :param relation: a relation that is an equivalence on the family
    :return: the reduction and the join of the groups
    """
    reduction: Sigma3Reduction = Sigma3Reduction(family, relation)
    if reduction.size is None:
        return reduction, JoinedStream(reduction.group)

    return reduction, JoinedStream([
        reduction.group(l) for l in range(reduction.size)  # noqa: E741
    ])


@dataclass
class AuditReport:
    """Violations found while auditing triple machines."""

    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        """Whether no violation was found."""
        return not self.violations


AuditReport.__module__ = "effalg"


def _audit_machine(machine: TripleMachine, report: AuditReport) -> None:
    report.checked += 1
    where: str = f"{machine!r} at stage {machine.stage}"
    if machine.tags[machine.m] or not machine.tags[machine.n]:
        report.violations.append(f"{where}: m and n on the same side")

    if machine.admits(machine.m, machine.r):
        report.violations.append(f"{where}: group m not behind")

    if not machine.admits(machine.n, machine.r):
        report.violations.append(f"{where}: group n not ahead")

    for l in range(machine.N + 2):  # noqa: E741
        if not machine.admits(l, machine.r - 1):
            report.violations.append(f"{where}: group {l} fell behind")

        if machine.admits(l, machine.r + 1):
            report.violations.append(f"{where}: group {l} two ahead")


def audit_invariants(reduction: Sigma3Reduction, stages: Iterable[int],
                     triples: Iterable[_Triple]) -> AuditReport:
    """Audit triple machines at increasing stages.

    :param reduction: the reduction
    :param stages: the stages to audit at, increasing
    :param triples: the triples to audit
    :return: the report
    """
    report: AuditReport = AuditReport()
    keys: list[_Triple] = list(triples)
    previous: dict[_Triple, int] = {}
    for stage in stages:
        for key in keys:
            machine: TripleMachine = reduction.machine(*key, stage)
            if machine.r < previous.get(key, 1):
                report.violations.append(
                    f"{machine!r} at stage {stage}: key exponent decreased",
                )

            previous[key] = machine.r
            _audit_machine(machine, report)

    return report


def naive_oracle(scheduler: ChipScheduler, stage: int, index_bound: int,
                 prime_bound: int) -> dict[int, set[Fraction]]:
    """Run the construction on explicit finite sets.

    Every group up to the index bound gets the powers ``1/p^e`` of the
    primes below the prime bound it contains at the stage.

    :param scheduler: the chip functions
    :param stage: the number of stages to run
    :param index_bound: the largest group index returned
    :param prime_bound: the bound on the primes
    :return: the generators of each group besides ``1``
    """
    triples: dict[int, _Triple] = {}
    p: int = 2
    while p < prime_bound:
        triples[p] = owner(p)
        p = nth_prime(prime_position(p) + 1)

    exponents: dict[int, list[int]] = {}
    for p, (m, n, k) in triples.items():
        exponents[p] = [0] * (max(index_bound, n + k) + 1)
        exponents[p][n] = 1

    for s in range(stage):
        for p, (m, n, k) in triples.items():
            big_n: int = n + k
            exps: list[int] = exponents[p]

            def rank(l: int, m: int = m, n: int = n) -> int:  # noqa: E741
                return 0 if l == m else 1 if l == n else l + 2

            r: int = exps[m] + 1
            lookback: dict[int, int] = {}
            for l in range(big_n + 1):  # noqa: E741
                if l in {m, n}:
                    continue

                for t in range(s, -1, -1):
                    chip: Chip = scheduler.chip(t)
                    if chip.value <= big_n and l in chip[:2]:
                        j: int = chip.m if chip.n == l else chip.n
                        if j <= big_n and rank(j) < rank(l):
                            lookback[l] = j
                            break

            if scheduler.chip(s) != (m, n, k) and not any(
                (exps[j] >= r) != (exps[l] >= r) for l, j in lookback.items()
            ):
                continue

            for l in range(len(exps)):  # noqa: E741
                exps[l] = r + 1 if l > big_n else max(exps[l], r)

            exps[n] = r + 1
            for l in sorted(range(big_n + 1), key=rank):  # noqa: E741
                if l not in {m, n} and l in lookback:
                    exps[l] = r + 1 if exps[lookback[l]] == r + 1 else r

    return {
        l: {
            Fraction(1, p ** e)
            for p, exps in exponents.items() for e in range(1, exps[l] + 1)
        }
        for l in range(index_bound + 1)
    }
