"""Beta numbers and the e-runner abacus: up/down bead moves, roof and base.

A BetaSet stores the cofinite set J = Z_{<=s} union extras in normal form
(s maximal, extras a descending tuple of integers > s).  The charge is not
stored; it is determined by m = s + len(extras), since for a partition of
charge m the beta numbers are j_k = lam_k + m - k and the tail is m - k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, check_partition, is_e_restricted, size


@dataclass(frozen=True)
class BetaSet:
    """Normalized beta-number set on an e-runner abacus."""

    e: int
    s: int
    extras: tuple[int, ...]  # descending, all > s

    def __post_init__(self):
        if self.e < 2:
            raise ValueError(f"e must be >= 2, got {self.e}")
        extras = sorted(set(self.extras), reverse=True)
        s = self.s
        if any(x <= s for x in extras):
            raise ValueError("extras must exceed the threshold")
        while extras and extras[-1] == s + 1:
            extras.pop()
            s += 1
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "extras", tuple(extras))

    @property
    def charge(self) -> int:
        return self.s + len(self.extras)

    def __contains__(self, x: int) -> bool:
        return x <= self.s or x in self.extras

    def beads_above(self) -> tuple[int, ...]:
        """The finitely many beads above the threshold, largest first."""
        return self.extras

    def largest(self) -> int:
        return self.extras[0] if self.extras else self.s

    def with_bead(self, x: int) -> "BetaSet":
        if x in self:
            raise ValueError(f"{x} already in beta set")
        return BetaSet(self.e, self.s, self.extras + (x,))

    def without_bead(self, x: int) -> "BetaSet":
        if x in self.extras:
            return BetaSet(self.e, self.s, tuple(y for y in self.extras if y != x))
        if x > self.s:
            raise ValueError(f"{x} not in beta set")
        # removing a bead from the solid tail splits it into extras
        extras = self.extras + tuple(range(self.s, x, -1))
        return BetaSet(self.e, x - 1, extras)

    def move_bead(self, src: int, dst: int) -> "BetaSet":
        return self.without_bead(src).with_bead(dst)


def to_beta(lam: Partition, m: int, e: int) -> BetaSet:
    """Beta numbers j_k = lam_k + m - k of charge m."""
    lam = check_partition(lam)
    ell = len(lam)
    extras = tuple(lam[k] + m - k for k in range(ell))
    return BetaSet(e, m - ell, extras)


def from_beta(beta: BetaSet) -> Partition:
    """The partition whose beta numbers of charge beta.charge form beta."""
    m = beta.charge
    return check_partition(
        tuple(j - m + k for k, j in enumerate(beta.extras))
    )


def slidable_up(beta: BetaSet) -> list[int]:
    """U(J): beads whose position one row up (x - e) is empty.

    Only beads above the threshold can slide, so the set is finite.
    """
    return [x for x in beta.extras if (x - beta.e) not in beta]


def is_core(beta: BetaSet) -> bool:
    return not slidable_up(beta)


def up_step(beta: BetaSet) -> BetaSet:
    """One up move: remove p = max U(J), insert q = min V(J).

    Returns the input unchanged when no bead can slide up.
    """
    u = slidable_up(beta)
    if not u:
        return beta
    e = beta.e
    p = max(u)
    # q = min{x > p : x not on p's runner, x - e occupied, x empty}
    limit = p + e * (len(beta.extras) + 2)
    q = None
    for x in range(p + 1, limit + 1):
        if (x - p) % e != 0 and (x - e) in beta and x not in beta:
            q = x
            break
    if q is None:
        raise ValueError("no landing spot for up move; input not e-restricted?")
    return beta.move_bead(p, q)


def down_step(beta: BetaSet) -> BetaSet:
    """One down move: remove q' = min W(J), insert p' - e with p' = min U(J)."""
    u = slidable_up(beta)
    if not u:
        return beta
    e = beta.e
    p = min(u)
    w = [p]
    for x in range(p - e + 1, beta.s + 1):
        if (x + e) not in beta:
            w.append(x)
    for x in beta.extras:
        if x > p - e and (x + e) not in beta:
            w.append(x)
    q = min(w)
    return beta.move_bead(q, p - e)


def _fixpoint(beta: BetaSet, step) -> BetaSet:
    lam = from_beta(beta)
    watchdog = size(lam) + (len(lam) + 1) * beta.e + 4
    for _ in range(watchdog + 1):
        nxt = step(beta)
        if nxt == beta:
            return beta
        beta = nxt
    raise RuntimeError("abacus fixpoint iteration exceeded watchdog bound")


def roof_beta(beta: BetaSet) -> BetaSet:
    return _fixpoint(beta, up_step)


def base_beta(beta: BetaSet) -> BetaSet:
    return _fixpoint(beta, down_step)


def roof(lam: Partition, m: int, e: int) -> Partition:
    """The e-core reached by exhaustively sliding beads up."""
    return from_beta(roof_beta(to_beta(lam, m, e)))


def base(lam: Partition, m: int, e: int) -> Partition:
    """The e-core reached by exhaustively applying the down move."""
    return from_beta(base_beta(to_beta(lam, m, e)))


def base_incremental(beta: BetaSet) -> BetaSet:
    """Base computed by peeling the beads above the threshold one at a time.

    Rebuilds the set from the solid tail, re-basing after each reinserted
    bead; the intermediate sets all correspond to e-restricted partitions.
    """
    cur = BetaSet(beta.e, beta.s, ())
    for j in reversed(beta.extras):  # smallest first
        cur = base_beta(cur).with_bead(j)
        lam = from_beta(cur)
        if not is_e_restricted(lam, beta.e):
            raise AssertionError(f"intermediate {lam} not {beta.e}-restricted")
    return base_beta(cur)


def runner_maxima(beta: BetaSet) -> dict[int, int]:
    """M_i = largest bead on runner i, for each residue class i in [0, e)."""
    e = beta.e
    out = {}
    for i in range(e):
        best = beta.s - ((beta.s - i) % e)
        for x in beta.extras:
            if x % e == i:
                best = max(best, x)
                break  # extras are descending
        out[i] = best
    return out


def render(beta: BetaSet, rows_above: int = 1) -> str:
    """Plain-text e-runner display; beads shown as their positions."""
    e = beta.e
    lo = min([beta.s] + list(beta.extras)) - e * rows_above
    hi = max([beta.s] + list(beta.extras))
    first = lo - (lo % e)
    last = hi - (hi % e) + e - 1
    lines = []
    width = max(len(str(first)), len(str(last))) + 1
    for start in range(first, last + 1, e):
        cells = []
        for x in range(start, start + e):
            cells.append(str(x).rjust(width) if x in beta else " " * (width - 1) + ".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
