"""Partitions, nodes, residues and multipartitions.

Partitions are plain tuples of weakly decreasing positive integers with no
trailing zeros; the empty partition is ``()``.  A node is a 0-based
``(row, col)`` pair; the node in row ``r``, column ``c`` of a partition
charged at ``m`` has content ``m - r + c`` and residue ``(m - r + c) % e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Partition = tuple[int, ...]

ADDABLE = "A"
REMOVABLE = "R"


def check_partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a Partition tuple.

    Raises ValueError on negative parts or increasing sequences; trailing
    zeros are stripped.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def first_part(lam: Partition) -> int:
    """Length of the first row (0 for the empty partition)."""
    return lam[0] if lam else 0


def length(lam: Partition) -> int:
    """Number of (nonzero) rows."""
    return len(lam)


def size(lam: Partition) -> int:
    return sum(lam)


def is_e_restricted(lam: Partition, e: int) -> bool:
    """True iff every consecutive difference (last part included) is < e."""
    if e < 2:
        raise ValueError(f"e must be >= 2, got {e}")
    for k in range(len(lam)):
        nxt = lam[k + 1] if k + 1 < len(lam) else 0
        if lam[k] - nxt >= e:
            return False
    return True


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of mu fits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(mu[k] <= lam[k] for k in range(len(mu)))


def content(row: int, col: int, m: int) -> int:
    return m - row + col


def residue(row: int, col: int, m: int, e: int) -> int:
    return (m - row + col) % e


def boundary_nodes(lam: Partition, m: int, e: int, i: int):
    """Addable and removable i-nodes of lam, ordered from row 0 downward.

    Returns a list of ((row, col), tag) with tag ADDABLE or REMOVABLE.
    Each row contributes at most one node of residue i; row len(lam) can
    contribute the addable node at the start of a new row.
    """
    i %= e
    out = []
    ell = len(lam)
    for r in range(ell + 1):
        cur = lam[r] if r < ell else 0
        nxt = lam[r + 1] if r + 1 < ell else 0
        addable_ok = r == 0 or lam[r - 1] > cur
        if addable_ok and residue(r, cur, m, e) == i:
            out.append(((r, cur), ADDABLE))
        if r < ell and cur > nxt and residue(r, cur - 1, m, e) == i:
            out.append(((r, cur - 1), REMOVABLE))
    return out


def add_node(lam: Partition, row: int) -> Partition:
    """Add one box at the end of the given row (row may equal len(lam))."""
    if row == len(lam):
        return lam + (1,)
    return lam[:row] + (lam[row] + 1,) + lam[row + 1:]


def remove_node(lam: Partition, row: int) -> Partition:
    """Remove the last box of the given row."""
    new = lam[:row] + (lam[row] - 1,) + lam[row + 1:]
    return check_partition(new)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest part first."""

    def rec(rest: int, cap: int, prefix: tuple):
        if rest == 0:
            yield prefix
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, prefix + (p,))

    yield from rec(n, n, ())


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def e_restricted_partitions(max_n: int, e: int) -> Iterator[Partition]:
    for lam in partitions_up_to(max_n):
        if is_e_restricted(lam, e):
            yield lam


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of e-restricted partitions with per-component charges.

    Component k lives in the level-one crystal of highest weight indexed by
    charges[k]; the tuple is an element of the tensor crystal.
    """

    components: tuple[Partition, ...]
    charges: tuple[int, ...]
    e: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError(f"e must be >= 2, got {self.e}")
        if len(self.components) != len(self.charges) or not self.components:
            raise ValueError("components and charges must have equal positive length")
        comps = tuple(check_partition(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "charges", tuple(c % self.e for c in self.charges))
        for c in comps:
            if not is_e_restricted(c, self.e):
                raise ValueError(f"component {c} is not {self.e}-restricted")

    @property
    def r(self) -> int:
        return len(self.components)

    def total_size(self) -> int:
        return sum(size(c) for c in self.components)

    def replace_component(self, k: int, lam: Partition) -> "Multipartition":
        comps = list(self.components)
        comps[k] = lam
        return Multipartition(tuple(comps), self.charges, self.e)

    def to_json_dict(self) -> dict:
        return {
            "e": self.e,
            "charges": list(self.charges),
            "components": [list(c) for c in self.components],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Multipartition":
        return cls(
            tuple(tuple(c) for c in d["components"]),
            tuple(d["charges"]),
            int(d["e"]),
        )
