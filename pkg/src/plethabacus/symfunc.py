"""Signed expansions of s_nu times p_r, and of s_nu times p_r plethysm h_m.

Both products expand in the Schur basis with every coefficient read off
an abacus: multiplying by p_s adds one border strip of length s (sign
(-1)^height), and multiplying by p_r applied to h_m adds m strips of
length r whose greedy removal chain works back down to nu.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abacus import Abacus, abacus_of, partition_of, runner_beads
from .partitions import Partition, make_partition, make_skew
from .strips import r_decompose


@dataclass(frozen=True)
class SchurExpansion:
    """Finitely supported integer combination of Schur functions of one degree."""

    degree: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {p: c for p, c in self.terms.items() if c != 0}
        for p in clean:
            if p.size() != self.degree:
                raise ValueError(f"{p} does not have degree {self.degree}")
        object.__setattr__(self, "terms", clean)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms sorted by partition, descending lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def coefficient(self, p: Partition) -> int:
        return self.terms.get(p, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p, c in self.items():
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            body = ",".join(str(x) for x in p.parts)
            bits.append(f"{sign} {mag}s[{body}]")
        return " ".join(bits)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"lambda": p.to_json(), "coeff": c} for p, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        return cls(
            data["degree"],
            {make_partition(t["lambda"]): t["coeff"] for t in data["terms"]},
        )


def _strip_additions(nu: Partition, s: int) -> list[tuple[Partition, int]]:
    """All (lam, height) with lam/nu a border strip of length s, via down moves."""
    b = len(nu) + s
    a = abacus_of(nu, b)
    out = []
    for beta in a.bead_positions:
        if a.has_bead(beta + s):
            continue
        lam = partition_of(Abacus(b, (a.bead_positions - {beta}) | {beta + s}))
        height = sum(1 for p in a.bead_positions if beta < p < beta + s)
        out.append((lam, height))
    return out


def mn_multiply(nu: Partition, r: int) -> SchurExpansion:
    """Expansion of s_nu * p_r: one signed term per added r-border-strip."""
    if r < 1:
        raise ValueError(f"strip length {r} must be >= 1")
    terms = {}
    for lam, height in _strip_additions(nu, r):
        assert lam not in terms
        terms[lam] = (-1) ** height
    return SchurExpansion(nu.size() + r, terms)


def _runner_raises(steps: list[int], total: int) -> list[list[int]]:
    """Distributions of `total` downward runner steps over beads at `steps`.

    Each bead may move down any amount that keeps it strictly above the
    next bead's starting point; the last bead is unbounded. These are
    exactly the raises of one runner that stay r-decomposable.
    """
    caps = [steps[j + 1] - steps[j] - 1 for j in range(len(steps) - 1)]
    caps.append(total)
    out = []

    def go(j: int, left: int, acc: list[int]):
        if j == len(steps):
            if left == 0:
                out.append(acc.copy())
            return
        for d in range(0, min(caps[j], left) + 1):
            acc.append(steps[j] + d)
            go(j + 1, left - d, acc)
            acc.pop()

    go(0, total, [])
    return out


def plethystic_mn(nu: Partition, r: int, m: int) -> SchurExpansion:
    """Expansion of s_nu * (p_r applied to h_m): sgn_r(lam/nu) over lam.

    Candidates lam are generated runner by runner on the abacus of nu
    padded to len(nu) + r*m beads, so only r-decomposable shapes appear.
    """
    if r < 1 or m < 0:
        raise ValueError(f"need r >= 1 and m >= 0, got r={r}, m={m}")
    if m == 0:
        return SchurExpansion(nu.size(), {nu: 1})
    b = len(nu) + r * m
    c = abacus_of(nu, b)
    per_runner = []
    for t in range(r):
        steps = [(p - t) // r for p in runner_beads(c, r, t)]
        per_runner.append([_runner_raises(steps, j) for j in range(m + 1)])

    terms: dict[Partition, int] = {}

    def assemble(t: int, left: int, beads: list[int]):
        for j in range(left + 1) if t < r - 1 else [left]:
            for raised in per_runner[t][j]:
                positions = beads + [t + r * e for e in raised]
                if t < r - 1:
                    assemble(t + 1, left - j, positions)
                else:
                    lam = partition_of(Abacus(b, frozenset(positions)))
                    dec = r_decompose(make_skew(lam, nu), r)
                    assert dec is not None and lam not in terms
                    terms[lam] = dec.sign

    assemble(0, m, [])
    return SchurExpansion(nu.size() + r * m, terms)


def plethystic_mn_multi(nu: Partition, r: int, ms: list[int]) -> SchurExpansion:
    """Expansion of s_nu * (p_r applied to h_{m_1} * ... * h_{m_d})."""
    acc = SchurExpansion(nu.size(), {nu: 1})
    for m in ms:
        terms: dict[Partition, int] = {}
        for p, c in acc.terms.items():
            for q, d in plethystic_mn(p, r, m).terms.items():
                terms[q] = terms.get(q, 0) + c * d
        acc = SchurExpansion(acc.degree + r * m, terms)
    return acc


def power_product_pleth(nu: Partition, rs: list[int], m: int) -> SchurExpansion:
    """Expansion of s_nu * product over i of (p_{r_i} applied to h_m)."""
    acc = SchurExpansion(nu.size(), {nu: 1})
    for r in rs:
        terms: dict[Partition, int] = {}
        for p, c in acc.terms.items():
            for q, d in plethystic_mn(p, r, m).terms.items():
                terms[q] = terms.get(q, 0) + c * d
        acc = SchurExpansion(acc.degree + r * m, terms)
    return acc
