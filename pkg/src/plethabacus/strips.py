"""Border strips, greedy strip decompositions and runner combinatorics.

The sign of interest, written sgn_r, is defined through repeated removal
of "final" r-border-strips: the unique strip meeting the first row where
outer and inner shapes differ. A skew shape whose chain of final strips
reaches the inner shape is called r-decomposable and its sign is the
product of (-1)^height over the chain; every other removal order gives
the same sign, which is also computable as an inversion count of bead
moves on the r-runner abacus.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .abacus import (
    Abacus,
    BeadMove,
    IncompatibleAbaci,
    abacus_of,
    final_positions,
    inversion_sign,
    movable_beads,
    partition_of,
    runner_beads,
    single_step_moves,
    strip_height,
    swap_bead,
)
from .partitions import (
    Box,
    Partition,
    SkewPartition,
    make_skew,
    minimal_distinct_row,
    subpartitions_of_size,
)


class EmptySkew(ValueError):
    """The skew shape has no boxes."""


class NotTypeIICase(ValueError):
    """The runner profile is not one type II with all others type I."""


class NotDivisible(ValueError):
    """Skew size is not a multiple of the strip length."""


@dataclass(frozen=True)
class BorderStrip:
    """A connected rim ribbon outer/inner, with its extreme boxes and height."""

    outer: Partition
    inner: Partition
    height: int
    top_right: Box
    bottom_left: Box

    @property
    def length(self) -> int:
        return self.outer.size() - self.inner.size()

    @property
    def sign(self) -> int:
        return (-1) ** self.height

    def to_json(self) -> dict:
        return {
            "outer": self.outer.to_json(),
            "inner": self.inner.to_json(),
            "height": self.height,
            "top_right": list(self.top_right),
            "bottom_left": list(self.bottom_left),
        }


def is_border_strip_pair(outer: Partition, inner: Partition) -> bool:
    """Whether outer/inner differ by one nonempty connected ribbon (no 2x2 block)."""
    if not outer.contains(inner):
        return False
    rows = [i for i in range(1, len(outer) + 1) if outer.part(i) > inner.part(i)]
    if not rows:
        return False
    if rows != list(range(rows[0], rows[-1] + 1)):
        return False
    # adjacent rows of a ribbon overlap in exactly one column
    return all(inner.part(i) == outer.part(i + 1) - 1 for i in rows[:-1])


def border_strip(outer: Partition, inner: Partition) -> BorderStrip:
    """Build a BorderStrip from its two shapes, measuring height from the rows."""
    if not is_border_strip_pair(outer, inner):
        raise ValueError(f"{outer}/{inner} is not a border strip")
    rows = [i for i in range(1, len(outer) + 1) if outer.part(i) > inner.part(i)]
    d, last = rows[0], rows[-1]
    return BorderStrip(
        outer=outer,
        inner=inner,
        height=last - d,
        top_right=Box(d, outer.part(d)),
        bottom_left=Box(last, inner.part(last) + 1),
    )


def border_strips(shape: Partition, s: int) -> list[BorderStrip]:
    """All removable s-border-strips of shape, via movable abacus beads."""
    a = abacus_of(shape)
    out = []
    for beta in sorted(movable_beads(a, s), reverse=True):
        strip = border_strip(shape, partition_of(swap_bead(a, beta, s)))
        assert strip.height == strip_height(a, beta, s)
        out.append(strip)
    return out


def border_strips_geometric(shape: Partition, s: int) -> list[BorderStrip]:
    """Brute-force s-strip search over subshapes; independent of the abacus."""
    out = []
    for mu in subpartitions_of_size(shape, shape.size() - s):
        if is_border_strip_pair(shape, mu):
            out.append(border_strip(shape, mu))
    out.sort(key=lambda st: st.top_right.row)
    return out


def final_border_strip(skew: SkewPartition, r: int) -> BorderStrip | None:
    """The unique r-strip of the outer shape meeting row d, staying over the inner.

    d is the first row where the shapes differ. On the abacus the strip is
    the move of the bead encoding box (d, outer_d) one step of size r,
    which exists exactly when the position r above that bead is a gap.
    """
    if skew.is_empty():
        raise EmptySkew(f"{skew.outer}/{skew.inner} has no boxes")
    lam, nu = skew.outer, skew.inner
    d = minimal_distinct_row(skew)
    b = max(len(lam), len(nu))
    a = abacus_of(lam, b)
    beta = lam.part(d) + b - d
    if beta - r < 0 or a.has_bead(beta - r):
        return None
    mu = partition_of(swap_bead(a, beta, r))
    if not mu.contains(nu):
        return None
    return border_strip(lam, mu)


@dataclass(frozen=True)
class Decomposition:
    """A maximal chain of final r-strip removals from outer down to inner."""

    chain: tuple[Partition, ...]
    strips: tuple[BorderStrip, ...]
    strip_length: int

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(st.height for st in self.strips)

    @property
    def sign(self) -> int:
        return (-1) ** sum(self.heights)

    def to_json(self) -> dict:
        return {
            "chain": [p.to_json() for p in self.chain],
            "heights": list(self.heights),
            "sign": self.sign,
        }


def r_decompose(skew: SkewPartition, r: int) -> Decomposition | None:
    """Greedy final-strip chain from outer to inner, or None if it gets stuck."""
    if skew.size() % r != 0:
        return None
    nu = skew.inner
    chain = [skew.outer]
    strips = []
    while chain[-1] != nu:
        strip = final_border_strip(make_skew(chain[-1], nu), r)
        if strip is None:
            return None
        strips.append(strip)
        chain.append(strip.inner)
    return Decomposition(tuple(chain), tuple(strips), r)


def decomposition_moves(dec: Decomposition, bead_count: int | None = None) -> list[BeadMove]:
    """Bead moves realizing the chain at a fixed bead count."""
    b = bead_count if bead_count is not None else max(len(p) for p in dec.chain)
    moves = []
    for before, after in zip(dec.chain, dec.chain[1:]):
        src = abacus_of(before, b).bead_positions
        dst = abacus_of(after, b).bead_positions
        (f,) = src - dst
        (t,) = dst - src
        moves.append(BeadMove(f, t))
    return moves


def order_independent_sign(lam: Partition, nu: Partition, r: int) -> int:
    """Common sign of every complete r-strip removal order from lam to nu, else 0.

    nu is reachable from lam exactly when, runner by runner, the bead
    counts agree and each bead's order-matched target is not below it;
    the sign is then the inversion sign of that forced matching.
    """
    if not lam.contains(nu) or (lam.size() - nu.size()) % r != 0:
        return 0
    b = max(len(lam), len(nu))
    a, c = abacus_of(lam, b), abacus_of(nu, b)
    finals = {}
    for t in range(r):
        src = runner_beads(a, r, t)
        dst = runner_beads(c, r, t)
        if len(src) != len(dst) or any(x > y for x, y in zip(dst, src)):
            return 0
        finals.update(zip(src, dst))
    beads = sorted(finals)
    inversions = sum(
        1
        for i, b1 in enumerate(beads)
        for b2 in beads[i + 1 :]
        if finals[b1] > finals[b2]
    )
    return (-1) ** inversions


def sgn_r(skew: SkewPartition, r: int) -> int:
    """Sign of the final-strip chain, or 0 when the skew is not r-decomposable."""
    dec = r_decompose(skew, r)
    if dec is None:
        return 0
    assert dec.sign == order_independent_sign(skew.outer, skew.inner, r)
    return dec.sign


class RunnerType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


def _runner_move_data(a: Abacus, c: Abacus, r: int, t: int):
    if a.bead_count != c.bead_count:
        raise IncompatibleAbaci(f"bead counts {a.bead_count} != {c.bead_count}")
    src = runner_beads(a, r, t)
    dst = runner_beads(c, r, t)
    if len(src) != len(dst):
        raise IncompatibleAbaci(f"runner {t}: {len(src)} beads vs {len(dst)}")
    return src, dst


def _is_decomposable_runner(beads: set[int], src_all: set[int], dst: list[int], r: int):
    """Interleaving test for one runner; beads is the runner's bead set of A."""
    moved_from = sorted(beads - set(dst))
    moved_to = sorted(set(dst) - beads)
    if len(moved_from) != len(moved_to):
        return False
    prev = None
    for alpha, beta in zip(moved_to, moved_from):
        if alpha >= beta:
            return False
        if prev is not None and alpha <= prev:
            return False
        # alpha and every step down to beta - r must be gaps
        if any(p in src_all for p in range(alpha, beta, r)):
            return False
        prev = beta
    return True


def runner_is_decomposable(a: Abacus, c: Abacus, r: int, t: int) -> bool:
    """Whether runner t of c arises from runner t of a by interleaved final moves."""
    src, dst = _runner_move_data(a, c, r, t)
    return _is_decomposable_runner(set(src), a.bead_positions, dst, r)


def classify_runner(a: Abacus, c: Abacus, r: int, t: int) -> RunnerType:
    """Type I: decomposable; II: one upward bead swap away; III: neither."""
    src, dst = _runner_move_data(a, c, r, t)
    beads = set(src)
    if _is_decomposable_runner(beads, a.bead_positions, dst, r):
        return RunnerType.I
    for eps in src:
        for gamma in range(eps - r, t - 1, -r):
            if gamma in beads:
                continue
            swapped = (beads - {eps}) | {gamma}
            all_swapped = (a.bead_positions - {eps}) | {gamma}
            if _is_decomposable_runner(swapped, all_swapped, dst, r):
                return RunnerType.II
    return RunnerType.III


def runner_profile(a: Abacus, c: Abacus, r: int) -> tuple[RunnerType, ...]:
    return tuple(classify_runner(a, c, r, t) for t in range(r))


@dataclass(frozen=True)
class PairingWitness:
    """Data pairing two cancelling summands of the sign recursion.

    delta and delta_star are the distinguished beads on the type II
    runner, gamma the shared landing gap, P every (bead, gap) swap that
    makes the runner decomposable, mu and mu_star the partitions after
    the two single-strip removals, and J/J_star the bead-pair inversion
    sets of the two canonical move sequences (of opposite parity).
    """

    delta: int
    delta_star: int
    gamma: int
    alpha: int
    alpha_star: int
    P: frozenset[tuple[int, int]]
    mu: Partition
    mu_star: Partition
    J: frozenset[frozenset[int]]
    J_star: frozenset[frozenset[int]]

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "delta_star": self.delta_star,
            "gamma": self.gamma,
            "alpha": self.alpha,
            "alpha_star": self.alpha_star,
            "P": sorted([e, g] for e, g in self.P),
            "mu": self.mu.to_json(),
            "mu_star": self.mu_star.to_json(),
            "J": sorted(sorted(p) for p in self.J),
            "J_star": sorted(sorted(p) for p in self.J_star),
        }


def _brute_force_pair_set(a: Abacus, c: Abacus, r: int, t: int):
    """All (bead, gap) swaps on runner t after which the runner is decomposable."""
    src, dst = _runner_move_data(a, c, r, t)
    beads = set(src)
    top = max(src + dst, default=t) + r
    pairs = set()
    for eps in src:
        for gamma in range(t, top + 1, r):
            if gamma in beads:
                continue
            swapped = (beads - {eps}) | {gamma}
            all_swapped = (a.bead_positions - {eps}) | {gamma}
            if _is_decomposable_runner(swapped, all_swapped, dst, r):
                pairs.add((eps, gamma))
    return frozenset(pairs)


def pairing_witness(a: Abacus, c: Abacus, r: int) -> list[PairingWitness]:
    """Witnesses of pairwise cancellation, one per admissible gap gamma.

    Requires exactly one type II runner, the rest type I. On that runner
    delta is the lowest bead whose neighbour above sits at or below the
    bead's forced final position, delta_star is that neighbour, and the
    gaps gamma run from the final position of the top of the bead block
    containing delta up to (but excluding) the next forced final position.
    """
    profile = runner_profile(a, c, r)
    if profile.count(RunnerType.II) != 1 or profile.count(RunnerType.III) > 0:
        raise NotTypeIICase(f"runner profile {[p.value for p in profile]}")
    t = profile.index(RunnerType.II)
    src = runner_beads(a, r, t)
    dst = runner_beads(c, r, t)

    delta_idx = max(
        (k for k in range(1, len(src)) if dst[k] <= src[k - 1]),
        default=None,
    )
    assert delta_idx is not None, "type II runner must have a stuck bead"
    delta, delta_star = src[delta_idx], src[delta_idx - 1]

    # walk up to the top of the contiguous block of beads jammed over delta
    i = delta_idx - 1
    while i > 0 and (src[i - 1] > dst[i] or dst[i] in a.bead_positions):
        i -= 1
    alpha_0, alpha_1 = dst[i], dst[i + 1]
    assert alpha_0 not in a.bead_positions
    alpha, alpha_star = dst[i], dst[delta_idx]

    pair_set = _brute_force_pair_set(a, c, r, t)
    gammas = list(range(alpha_0, alpha_1, r))
    assert pair_set == frozenset(
        (eps, g) for eps in (delta, delta_star) for g in gammas
    )

    witnesses = []
    for gamma in gammas:
        b_ab = Abacus(a.bead_count, (a.bead_positions - {delta}) | {gamma})
        walk = [BeadMove(p, p - r) for p in range(delta, delta_star, -r)]
        tail = single_step_moves(b_ab, c, r)
        seq = [BeadMove(delta, gamma)] + tail
        seq_star = [BeadMove(delta_star, gamma)] + walk + tail
        _, inv = inversion_sign(a, seq)
        _, inv_star = inversion_sign(a, seq_star)
        assert len(inv) % 2 != len(inv_star) % 2
        finals = final_positions(a, seq)
        assert finals[delta] == alpha and finals[delta_star] == alpha_star
        witnesses.append(
            PairingWitness(
                delta=delta,
                delta_star=delta_star,
                gamma=gamma,
                alpha=alpha,
                alpha_star=alpha_star,
                P=pair_set,
                mu=partition_of(b_ab),
                mu_star=partition_of(
                    Abacus(a.bead_count, (a.bead_positions - {delta_star}) | {gamma})
                ),
                J=inv,
                J_star=inv_star,
            )
        )
    return witnesses


@dataclass(frozen=True)
class RecursionSummand:
    """One term sgn(outer/mu) * sgn_r(mu/inner) of the sign recursion."""

    mu: Partition
    strip_length: int
    strip_sign: int
    tail_sign: int

    @property
    def value(self) -> int:
        return self.strip_sign * self.tail_sign


@dataclass(frozen=True)
class SignRecursionReport:
    """Both sides of m * sgn_r = sum over strips, with every summand listed."""

    skew: SkewPartition
    r: int
    m: int
    sgn_r_value: int
    summands: tuple[RecursionSummand, ...]

    @property
    def lhs(self) -> int:
        return self.m * self.sgn_r_value

    @property
    def rhs(self) -> int:
        return sum(s.value for s in self.summands)


def sign_recursion_check(skew: SkewPartition, r: int) -> SignRecursionReport:
    """Evaluate both sides of the strip-length recursion for sgn_r.

    Summands range over removals of a single border strip of length
    divisible by r whose complement still contains the inner shape,
    ordered by runner index and then by bead position descending.
    """
    if skew.size() % r != 0:
        raise NotDivisible(f"size {skew.size()} not divisible by {r}")
    lam, nu = skew.outer, skew.inner
    m = skew.size() // r
    b = max(len(lam), len(nu), 1)
    a = abacus_of(lam, b)
    entries = []
    for q in range(1, m + 1):
        s = q * r
        for beta in movable_beads(a, s):
            mu = partition_of(swap_bead(a, beta, s))
            if not mu.contains(nu):
                continue
            strip_sign = (-1) ** strip_height(a, beta, s)
            tail = sgn_r(make_skew(mu, nu), r)
            entries.append((beta % r, -beta, q, RecursionSummand(mu, s, strip_sign, tail)))
    entries.sort(key=lambda e: e[:3])
    return SignRecursionReport(
        skew=skew,
        r=r,
        m=m,
        sgn_r_value=sgn_r(skew, r),
        summands=tuple(e[3] for e in entries),
    )
