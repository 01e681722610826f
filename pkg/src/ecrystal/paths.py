"""Stretched crystal elements with exact rational masses.

An element lambda of the level-one crystal corresponds, for sufficiently
divisible h, to a tensor power word nu_1^{a_1 h} (x) ... (x) nu_s^{(1-a_{s-1})h}
of e-cores.  We work directly in the divisible-h limit: a StretchedElement
stores the cores with their total rational masses, and the operator f acts
by exact block arithmetic.  This yields the LS-path direction data, the
ceiling/floor cores, and the Mullineux map.

All masses are Fractions; floating point is never used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .crystal import e_op, eps, f as crystal_f, is_e_core, phi, weyl_s
from .partitions import Partition, contains, is_e_restricted


@dataclass(frozen=True)
class StretchedElement:
    """Segments (core, mass) with masses summing to 1.

    Cores strictly decrease in containment left to right; the leftmost
    core is the ceiling and the rightmost the floor.
    """

    e: int
    m: int
    segments: tuple[tuple[Partition, Fraction], ...]

    def __post_init__(self):
        segs = tuple((tuple(core), Fraction(mass)) for core, mass in self.segments)
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise ValueError("a stretched element needs at least one segment")
        if sum(q for _, q in segs) != 1:
            raise ValueError(f"masses do not sum to 1: {segs}")
        for core, q in segs:
            if q <= 0:
                raise ValueError(f"nonpositive mass {q}")
            if not is_e_core(core, self.e):
                raise ValueError(f"{core} is not a {self.e}-core")
        for (a, _), (b, _) in zip(segs, segs[1:]):
            if a == b or not contains(a, b):
                raise ValueError(f"cores not strictly decreasing: {a} !> {b}")

    def ceiling(self) -> Partition:
        return self.segments[0][0]

    def floor_core(self) -> Partition:
        return self.segments[-1][0]

    def to_json_dict(self) -> dict:
        return {
            "segments": [
                {"core": list(core), "mass": f"{q.numerator}/{q.denominator}"}
                for core, q in self.segments
            ]
        }


def unit_element(core: Partition, m: int, e: int) -> StretchedElement:
    return StretchedElement(e, m, ((tuple(core), Fraction(1)),))


def _merged(segments) -> tuple:
    out = []
    for core, q in segments:
        if q == 0:
            continue
        if out and out[-1][0] == core:
            out[-1] = (core, out[-1][1] + q)
        else:
            out.append((core, q))
    return tuple(out)


def stretched_f(p: StretchedElement, i: int) -> StretchedElement | None:
    """The operator f on a stretched element, by exact block arithmetic.

    The tensor word reads the rightmost segment first, so in signature
    order segment s comes before segment s-1 and so on.  Each core is an
    s_i-core, contributing either a pure R-block or a pure A-block; an
    R-block cancels A-letter mass in segments to its left (read later).
    Total f-mass 1 is then deposited into the surviving A-mass starting
    at the word's right end, i.e. at the leftmost segment; a segment
    absorbing letter mass t converts copy mass t/phi_i into s_i(core),
    placed before the untouched remainder.  Returns None when less than
    unit A-mass survives.
    """
    e, m = p.e, p.m
    segs = list(p.segments)
    phis = [phi(core, i, m, e) for core, _ in segs]
    epss = [eps(core, i, m, e) for core, _ in segs]
    cancelled = [Fraction(0)] * len(segs)  # copy mass, per segment
    pending = Fraction(0)  # uncancelled R-letter mass
    for j in range(len(segs) - 1, -1, -1):
        if epss[j]:
            pending += epss[j] * segs[j][1]
        elif phis[j]:
            used = min(pending, phis[j] * segs[j][1])
            pending -= used
            cancelled[j] = used / phis[j]
    surviving = [
        phis[j] * (segs[j][1] - cancelled[j]) if phis[j] else Fraction(0)
        for j in range(len(segs))
    ]
    if sum(surviving) < 1:
        return None
    remaining = Fraction(1)
    out = []
    for j, (core, q) in enumerate(segs):
        give = min(remaining, surviving[j])
        remaining -= give
        if give > 0:
            converted = give / phis[j]
            out.append((weyl_s(core, i, m, e), converted))
            out.append((core, q - converted))
        else:
            out.append((core, q))
    return StretchedElement(e, m, _merged(out))


def _peel_word(lam: Partition, m: int, e: int) -> list[int]:
    """Residues peeling lam to empty, smallest residue with eps > 0 first."""
    word = []
    lam = tuple(lam)
    while lam:
        for i in range(e):
            if eps(lam, i, m, e) > 0:
                word.append(i)
                lam = e_op(lam, i, m, e)
                break
        else:
            raise ValueError(f"{lam} cannot be peeled; not in the crystal?")
    return word


def ls_path(lam: Partition, m: int, e: int) -> StretchedElement:
    """The LS-path direction data of lam: cores with rational masses.

    Peels lam to the empty partition, then replays the word through
    stretched_f from the unit path; the result does not depend on the
    peeling word, since the identification with the path realization is
    a crystal isomorphism.
    """
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    word = _peel_word(lam, m, e)
    p = unit_element((), m, e)
    for i in reversed(word):
        p = stretched_f(p, i)
        if p is None:
            raise AssertionError("replay died; peeling/replay mismatch")
    return p


def ceil(lam: Partition, m: int, e: int) -> Partition:
    """The first LS-path direction core (equals the abacus roof)."""
    return ls_path(lam, m, e).ceiling()


def floor(lam: Partition, m: int, e: int) -> Partition:
    """The last LS-path direction core (equals the abacus base)."""
    return ls_path(lam, m, e).floor_core()


def mullineux(lam: Partition, m: int, e: int) -> Partition:
    """The Mullineux map: negate residues along any path from empty.

    Peel lam by e at residues r_1, r_2, ...; rebuild from empty applying
    f at residues 2m - r_k, last peeled first.  An involution.
    """
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    word = _peel_word(lam, m, e)
    out: Partition = ()
    for r in reversed(word):
        out = crystal_f(out, (2 * m - r) % e, m, e)
        if out is None:
            raise AssertionError("Mullineux rebuild died")
    return out
