"""Non-recursive membership tests for highest-weight components.

tau_m, the bipartition and level-r criteria, Demazure membership, and the
closed-form e=2 (Mathas) and e=3 (Fayers) conditions used as cross-checks.

Conventions: the crystal element is lambda (x) mu with lambda at charge 0
and mu at charge m; the Hecke-algebra bipartition label is the reversed
pair (mu, lambda).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import BetaSet, base, from_beta, roof, runner_maxima, to_beta
from .crystal import coset_to_core, f as crystal_f, is_e_core
from .partitions import (
    Multipartition,
    Partition,
    check_partition,
    contains,
    first_part,
    is_e_restricted,
    length,
)
from .paths import mullineux


def tau(lam: Partition, m: int, e: int) -> Partition:
    """Add e to the m largest runner maxima of an e-core at charge 0.

    The result is the e-core at charge m whose Young diagram is
    nu_i = lam_i + e - m for i < m and min(lam_i + e - m, lam_{i-m})
    for i >= m; both forms are computed and compared.
    """
    lam = check_partition(lam)
    if not 0 <= m < e:
        raise ValueError(f"m must satisfy 0 <= m < e, got m={m}, e={e}")
    if not is_e_core(lam, e):
        raise ValueError(f"{lam} is not a {e}-core")
    if m == 0:
        return lam
    beta = to_beta(lam, 0, e)
    maxima = sorted(runner_maxima(beta).values(), reverse=True)
    assert len(set(maxima)) == e, "runner maxima must be pairwise distinct"
    grown = beta
    for x in maxima[:m]:
        grown = grown.with_bead(x + e)
    abacus_form = from_beta(grown)

    ell = len(lam)
    young_form = []
    for i in range(ell + m):
        part = lam[i] if i < ell else 0
        if i < m:
            young_form.append(part + e - m)
        else:
            young_form.append(min(part + e - m, lam[i - m]))
    young_form = check_partition(young_form)
    assert abacus_form == young_form, (lam, m, e, abacus_form, young_form)
    return abacus_form


@dataclass(frozen=True)
class KleshchevVerdict:
    """Outcome of a containment criterion with its certificate.

    boundaries lists (index, left_core, right_core, holds) for each
    checked containment left_core >= right_core; failure is the first
    non-holding entry, or None when accepted.
    """

    accepted: bool
    boundaries: tuple

    @property
    def failure(self):
        for entry in self.boundaries:
            if not entry[3]:
                return entry
        return None

    def __bool__(self) -> bool:
        return self.accepted


def is_kleshchev_bipartition(lam: Partition, mu: Partition, m: int, e: int) -> KleshchevVerdict:
    """Test lambda (x) mu in B(Lambda_0 + Lambda_m).

    Criterion: tau_m(base(lambda)) contains roof(mu), with lambda at
    charge 0 and mu at charge m.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    for p in (lam, mu):
        if not is_e_restricted(p, e):
            raise ValueError(f"{p} is not {e}-restricted")
    left = tau(base(lam, 0, e), m % e, e)
    right = roof(mu, m, e)
    ok = contains(left, right)
    return KleshchevVerdict(ok, ((0, left, right, ok),))


def is_kleshchev_multi(mp: Multipartition) -> KleshchevVerdict:
    """Level-r criterion for charges (0^d, m^(r-d)).

    Checks base(component k) contains roof(component k+1) at each of the
    r-1 boundaries, applying tau_m only where the charge jumps from 0 to
    m.  Other charge patterns are rejected; use the crystal closure
    directly for those.
    """
    charges = mp.charges
    d = 0
    while d < mp.r and charges[d] == 0:
        d += 1
    tail = set(charges[d:])
    if len(tail) > 1:
        raise ValueError(
            f"unsupported charge pattern {charges}: need d zeros followed by "
            "copies of a single residue m"
        )
    m = tail.pop() if tail else 0
    e = mp.e
    boundaries = []
    accepted = True
    for k in range(mp.r - 1):
        left = base(mp.components[k], charges[k], e)
        if k == d - 1 and d < mp.r:
            left = tau(left, m, e)
        right = roof(mp.components[k + 1], charges[k + 1], e)
        ok = contains(left, right)
        boundaries.append((k, left, right, ok))
        accepted = accepted and ok
    return KleshchevVerdict(accepted, tuple(boundaries))


def in_demazure_lower(lam: Partition, y, m: int, e: int) -> bool:
    """Membership in the lower Demazure crystal B_y: roof(lam) inside y.empty."""
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    return contains(coset_to_core(y, m, e), roof(lam, m, e))


def in_demazure_upper(lam: Partition, w, m: int, e: int) -> bool:
    """Membership in the upper Demazure crystal B^w: base(lam) contains w.empty."""
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    return contains(base(lam, m, e), coset_to_core(w, m, e))


def demazure_product_core(y, m: int, e: int) -> Partition:
    """The core of the Demazure product of the word y, applied to empty.

    Folds f^max right to left; on a core this applies s_i when the length
    increases and does nothing otherwise, so non-reduced words collapse to
    the Demazure product rather than the plain Weyl product.  The lower
    Demazure crystal of the word equals {lam : roof(lam) inside this core}.
    """
    from .crystal import f_max

    core: Partition = ()
    for i in reversed(tuple(y)):
        core = f_max(core, i, m, e)
    return core


def demazure_monomial_closure(y, m: int, e: int) -> set:
    """All f_{i_1}^{a_1} ... f_{i_l}^{a_l} applied to empty, for the word y.

    Brute-force realization of the lower Demazure crystal from its
    definition; exponential in the word length, oracle use only.
    """
    word = tuple(y)
    elements = {()}
    for i in reversed(word):
        grown = set(elements)
        for lam in elements:
            cur = lam
            while True:
                cur = crystal_f(cur, i, m, e)
                if cur is None:
                    break
                grown.add(cur)
        elements = grown
    return elements


def mathas_e2_check(mp: Multipartition) -> bool:
    """Closed e=2 criterion: a(comp_i) - l(comp_{i+1}) >= delta - 1.

    delta is 1 when consecutive charges agree and 0 otherwise.
    """
    if mp.e != 2:
        raise ValueError(f"only defined for e = 2, got e={mp.e}")
    for i in range(mp.r - 1):
        delta = 1 if mp.charges[i] == mp.charges[i + 1] else 0
        a_i = first_part(mp.components[i]) - length(mp.components[i + 1])
        if a_i < delta - 1:
            return False
    return True


_FAYERS_OFFSETS = {0: (0, 0), 1: (-2, -1), 2: (-1, -2)}


def fayers_e3_check(lam: Partition, mu: Partition, m: int) -> bool:
    """Closed e=3 criterion via the Mullineux map.

    m=0: a(lam) >= l(m(mu)) and a(m(lam)) >= l(mu); for m=1,2 the right
    sides drop by the offsets (2,1) and (1,2) respectively.
    """
    e = 3
    if m not in _FAYERS_OFFSETS:
        raise ValueError(f"m must be 0, 1 or 2, got {m}")
    off1, off2 = _FAYERS_OFFSETS[m]
    lam, mu = check_partition(lam), check_partition(mu)
    return (
        first_part(lam) >= length(mullineux(mu, m, e)) + off1
        and first_part(mullineux(lam, 0, e)) >= length(mu) + off2
    )
