"""Bead abacus encoding of partitions.

An abacus with b beads holds them at the positions lam_i + b - i
(1-based rows, missing parts read as zero). Position 0 is the top;
"above" always means a smaller position. Removing a border strip of
length s is the same as moving a bead from position beta to the gap at
beta - s, and the strip height equals the number of beads strictly
between the two positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .partitions import Partition


class BeadCountTooSmall(ValueError):
    """Requested bead count is below the number of parts."""


class NotMovable(ValueError):
    """No bead at the source, or no gap at the destination."""


class BadRunner(ValueError):
    """Runner index outside 0..r-1."""


class IllegalMove(ValueError):
    """A move in a sequence is not applicable; carries the failing index."""

    def __init__(self, index: int, message: str):
        super().__init__(f"move {index}: {message}")
        self.index = index


class IncompatibleAbaci(ValueError):
    """Bead counts (total or per runner) differ between two abaci."""


class BeadMove(NamedTuple):
    from_position: int
    to_position: int


@dataclass(frozen=True)
class Abacus:
    bead_count: int
    bead_positions: frozenset[int]

    def __post_init__(self):
        beads = frozenset(int(p) for p in self.bead_positions)
        object.__setattr__(self, "bead_positions", beads)
        if any(p < 0 for p in beads):
            raise ValueError(f"bead positions must be non-negative: {sorted(beads)}")
        if len(beads) != self.bead_count:
            raise ValueError(
                f"bead_count {self.bead_count} != {len(beads)} distinct positions"
            )

    def has_bead(self, position: int) -> bool:
        return position in self.bead_positions

    def sorted_beads(self) -> list[int]:
        return sorted(self.bead_positions)

    def to_json(self) -> dict:
        return {"bead_count": self.bead_count, "beads": self.sorted_beads()}


def normalized_abacus(shape: Partition) -> Abacus:
    """Abacus of a partition with exactly as many beads as parts."""
    b = len(shape)
    return Abacus(b, frozenset(shape.part(i) + b - i for i in range(1, b + 1)))


def with_bead_count(abacus: Abacus, bead_count: int) -> Abacus:
    """Re-encode with more beads: shift every bead and pack new beads at the top."""
    delta = bead_count - abacus.bead_count
    if delta < 0:
        raise BeadCountTooSmall(
            f"cannot go from {abacus.bead_count} beads down to {bead_count}"
        )
    shifted = {p + delta for p in abacus.bead_positions}
    shifted.update(range(delta))
    return Abacus(bead_count, frozenset(shifted))


def abacus_of(shape: Partition, bead_count: int | None = None) -> Abacus:
    """Abacus of a partition at a chosen bead count (defaults to the part count)."""
    a = normalized_abacus(shape)
    if bead_count is None:
        return a
    if bead_count < len(shape):
        raise BeadCountTooSmall(f"{bead_count} beads < {len(shape)} parts")
    return with_bead_count(a, bead_count)


def partition_of(abacus: Abacus) -> Partition:
    """Partition encoded by an abacus; inverse of abacus_of at any bead count."""
    beads = sorted(abacus.bead_positions, reverse=True)
    b = abacus.bead_count
    parts = [beads[i] - b + i + 1 for i in range(b)]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def movable_beads(abacus: Abacus, s: int) -> set[int]:
    """Beads that can jump s positions up into a gap."""
    if s < 1:
        raise ValueError("step must be positive")
    return {
        p
        for p in abacus.bead_positions
        if p >= s and (p - s) not in abacus.bead_positions
    }


def swap_bead(abacus: Abacus, beta: int, s: int) -> Abacus:
    """Move the bead at beta up to the gap at beta - s."""
    if beta not in movable_beads(abacus, s):
        raise NotMovable(f"no movable bead at {beta} with step {s}")
    beads = set(abacus.bead_positions)
    beads.remove(beta)
    beads.add(beta - s)
    return Abacus(abacus.bead_count, frozenset(beads))


def strip_height(abacus: Abacus, beta: int, s: int) -> int:
    """Beads strictly between beta - s and beta; the height of the removed strip."""
    if beta not in movable_beads(abacus, s):
        raise NotMovable(f"no movable bead at {beta} with step {s}")
    return sum(1 for p in abacus.bead_positions if beta - s < p < beta)


def runner_positions(abacus: Abacus, r: int, t: int) -> tuple[bool, ...]:
    """Occupancy of runner t: positions t, t+r, t+2r, ... up to max bead + r."""
    if r < 1:
        raise ValueError("need at least one runner")
    if not 0 <= t < r:
        raise BadRunner(f"runner {t} not in 0..{r - 1}")
    top = max(abacus.bead_positions, default=-1) + r
    return tuple(p in abacus.bead_positions for p in range(t, top + 1, r))


def runner_beads(abacus: Abacus, r: int, t: int) -> list[int]:
    """Sorted bead positions lying on runner t."""
    if not 0 <= t < r:
        raise BadRunner(f"runner {t} not in 0..{r - 1}")
    return sorted(p for p in abacus.bead_positions if p % r == t)


def _apply_tracked(abacus: Abacus, moves: Sequence[BeadMove]):
    """Apply moves, tracking each bead by its original position."""
    origin = {p: p for p in abacus.bead_positions}
    for i, (src, dst) in enumerate(moves):
        if src not in origin:
            raise IllegalMove(i, f"no bead at {src}")
        if dst in origin:
            raise IllegalMove(i, f"no gap at {dst}")
        if dst < 0:
            raise IllegalMove(i, f"negative position {dst}")
        origin[dst] = origin.pop(src)
    final = Abacus(abacus.bead_count, frozenset(origin))
    return final, {orig: pos for pos, orig in origin.items()}


def apply_moves(abacus: Abacus, moves: Sequence[BeadMove]) -> Abacus:
    """Apply a sequence of bead moves left to right."""
    final, _ = _apply_tracked(abacus, moves)
    return final


def final_positions(abacus: Abacus, moves: Sequence[BeadMove]) -> dict[int, int]:
    """Map each bead's original position to its final position."""
    _, finals = _apply_tracked(abacus, moves)
    return finals


def inversion_sign(abacus: Abacus, moves: Sequence[BeadMove]):
    """Sign (-1)^|J| where J holds the bead pairs whose order was inverted.

    A pair {beta, beta'} with beta < beta' lands in J when the bead that
    started at beta finishes strictly below the one that started at beta'.
    The product of the strip signs of any removal sequence equals this sign.
    """
    finals = final_positions(abacus, moves)
    beads = sorted(finals)
    inverted = set()
    for i, b1 in enumerate(beads):
        for b2 in beads[i + 1 :]:
            if finals[b1] > finals[b2]:
                inverted.add(frozenset((b1, b2)))
    return (-1) ** len(inverted), frozenset(inverted)


def single_step_moves(source: Abacus, target: Abacus, r: int) -> list[BeadMove]:
    """A canonical sequence of single-step (length r) moves from source to target.

    Beads never change runner under single-step moves, so per runner the
    k-th bead of the source must travel to the k-th position of the target;
    walking each runner top-down keeps every intermediate position free.
    """
    if source.bead_count != target.bead_count:
        raise IncompatibleAbaci(
            f"bead counts {source.bead_count} != {target.bead_count}"
        )
    moves: list[BeadMove] = []
    for t in range(r):
        src = runner_beads(source, r, t)
        dst = runner_beads(target, r, t)
        if len(src) != len(dst):
            raise IncompatibleAbaci(f"runner {t}: {len(src)} beads vs {len(dst)}")
        for a, c in zip(src, dst):
            if c > a:
                raise IncompatibleAbaci(
                    f"runner {t}: bead at {a} cannot move down to {c}"
                )
            moves.extend(BeadMove(p, p - r) for p in range(a, c, -r))
    return moves
