"""Crystal structure on restricted (multi)partitions.

Signature words, RA-deletion, the operators f/e, weights, the Weyl group
action, and the dictionary between e-cores and reduced words.

A signature letter is a triple (component, node, tag).  For a tensor of r
partitions the word reads component r-1 first, then r-2, ..., 0, each from
the first row to the last; a single global RA-deletion then determines
where the operators act.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import slidable_up, to_beta
from .partitions import (
    ADDABLE,
    REMOVABLE,
    Multipartition,
    Partition,
    add_node,
    boundary_nodes,
    remove_node,
    size,
)


def _tag(letter) -> str:
    return letter if isinstance(letter, str) else letter[-1]


def signature(mp: Multipartition, i: int) -> list:
    """The i-signature word of a multipartition, last component read first."""
    word = []
    for k in range(mp.r - 1, -1, -1):
        for node, tag in boundary_nodes(mp.components[k], mp.charges[k], mp.e, i):
            word.append((k, node, tag))
    return word


def reduce_signature(word):
    """Survivors of RA-deletion, in word order.

    Each R cancels the nearest not-yet-cancelled A to its right; the final
    sequence reads A...A R...R and is independent of cancellation order.
    Accepts plain "A"/"R" strings or letter tuples ending in a tag.
    """
    survivors = []
    for letter in word:
        if _tag(letter) == REMOVABLE:
            survivors.append(letter)
        elif survivors and _tag(survivors[-1]) == REMOVABLE:
            survivors.pop()
        else:
            survivors.append(letter)
    return survivors


def _coerce(x, i, m, e):
    """Wrap a bare partition into a one-component tensor if needed."""
    if isinstance(x, Multipartition):
        return x, False
    if m is None or e is None:
        raise ValueError("bare partitions need explicit m and e")
    return Multipartition((tuple(x),), (m,), e), True


def f(x, i, m=None, e=None):
    """Kashiwara operator adding an i-node at the rightmost surviving A.

    Returns None when the operator sends x to zero.  Accepts either a
    Multipartition or a bare partition with m and e supplied.
    """
    mp, bare = _coerce(x, i, m, e)
    surv = [l for l in reduce_signature(signature(mp, i)) if l[2] == ADDABLE]
    if not surv:
        return None
    k, (row, _col), _ = surv[-1]
    out = mp.replace_component(k, add_node(mp.components[k], row))
    return out.components[0] if bare else out


def e_op(x, i, m=None, e=None):
    """Kashiwara operator removing the i-node at the leftmost surviving R."""
    mp, bare = _coerce(x, i, m, e)
    surv = [l for l in reduce_signature(signature(mp, i)) if l[2] == REMOVABLE]
    if not surv:
        return None
    k, (row, _col), _ = surv[0]
    out = mp.replace_component(k, remove_node(mp.components[k], row))
    return out.components[0] if bare else out


def phi(x, i, m=None, e=None) -> int:
    mp, _ = _coerce(x, i, m, e)
    return sum(1 for l in reduce_signature(signature(mp, i)) if l[2] == ADDABLE)


def eps(x, i, m=None, e=None) -> int:
    mp, _ = _coerce(x, i, m, e)
    return sum(1 for l in reduce_signature(signature(mp, i)) if l[2] == REMOVABLE)


def f_max(x, i, m=None, e=None):
    for _ in range(phi(x, i, m, e)):
        x = f(x, i, m, e)
    return x


def e_max(x, i, m=None, e=None):
    for _ in range(eps(x, i, m, e)):
        x = e_op(x, i, m, e)
    return x


@dataclass(frozen=True)
class WeightVector:
    """wt = sum_k Lambda_{charges[k]} - sum_i counts[i] * alpha_i."""

    e: int
    charges: tuple[int, ...]
    counts: tuple[int, ...]


def node_counts(lam: Partition, m: int, e: int) -> tuple[int, ...]:
    """N_i = number of nodes of residue i."""
    counts = [0] * e
    for r, part in enumerate(lam):
        for c in range(part):
            counts[(m - r + c) % e] += 1
    return tuple(counts)


def weight(x, m=None, e=None) -> WeightVector:
    mp, _ = _coerce(x, 0, m, e)
    counts = [0] * mp.e
    for lam, charge in zip(mp.components, mp.charges):
        for i, n in enumerate(node_counts(lam, charge, mp.e)):
            counts[i] += n
    return WeightVector(mp.e, mp.charges, tuple(counts))


def cartan_pairing(j: int, i: int, e: int) -> int:
    """<alpha_j, h_i> for affine type A with e nodes."""
    if j % e == i % e:
        return 2
    return -sum(1 for k in (i - 1, i + 1) if k % e == j % e)


def level_pairing(wt: WeightVector, i: int) -> int:
    """wt(h_i), via the Cartan pairing."""
    i %= wt.e
    out = sum(1 for c in wt.charges if c == i)
    for j, n in enumerate(wt.counts):
        out -= n * cartan_pairing(j, i, wt.e)
    return out


def node_pairing(x, i, m=None, e=None) -> int:
    """wt(h_i) counted directly as #addable minus #removable i-nodes."""
    mp, _ = _coerce(x, i, m, e)
    word = signature(mp, i)
    return sum(1 if l[2] == ADDABLE else -1 for l in word)


def weyl_s(x, i, m=None, e=None):
    """Weyl group action: f^t if t = wt(h_i) >= 0, else e^(-t)."""
    t = node_pairing(x, i, m, e)
    step = f if t >= 0 else e_op
    for _ in range(abs(t)):
        x = step(x, i, m, e)
    return x


def is_e_core(lam: Partition, e: int) -> bool:
    return not slidable_up(to_beta(lam, 0, e))


def is_s_i_core(lam: Partition, m: int, e: int, i: int) -> bool:
    """No bead on runner i or i+1 can slide up."""
    i %= e
    forbidden = {i, (i + 1) % e}
    return all(x % e not in forbidden for x in slidable_up(to_beta(lam, m, e)))


def core_to_coset(lam: Partition, m: int, e: int) -> tuple[int, ...]:
    """Reduced word w with w applied to the empty partition giving the core.

    Peels the core by e^max at the residue of the last row's right end;
    letters are listed leftmost-applied-last, so the first peeled residue
    is the first letter.
    """
    if not is_e_core(lam, e):
        raise ValueError(f"{lam} is not a {e}-core")
    word = []
    while lam:
        row = len(lam) - 1
        i = (m - row + lam[row] - 1) % e
        word.append(i)
        lam = e_max(lam, i, m, e)
    return tuple(word)


def coset_to_core(word, m: int, e: int) -> Partition:
    """Apply the word right-to-left to the empty partition via weyl_s."""
    lam: Partition = ()
    for i in reversed(tuple(word)):
        lam = weyl_s(lam, i, m, e)
    return lam


def empty_tensor(charges, e: int) -> Multipartition:
    return Multipartition(((),) * len(charges), tuple(charges), e)


def crystal_closure(charges, e: int, depth: int):
    """Breadth-first f-closure of the empty tensor up to total size depth.

    Returns (nodes, edges) with edges (source, residue, target); nodes is a
    set of Multipartitions, the highest-weight component truncated at the
    given total size.
    """
    start = empty_tensor(charges, e)
    nodes = {start}
    edges = []
    frontier = [start]
    while frontier:
        nxt = []
        for mp in frontier:
            if mp.total_size() >= depth:
                continue
            for i in range(e):
                child = f(mp, i)
                if child is None:
                    continue
                edges.append((mp, i, child))
                if child not in nodes:
                    nodes.add(child)
                    nxt.append(child)
        frontier = nxt
    return nodes, edges


def closure_to_dot(nodes, edges) -> str:
    """DOT rendering; node label = JSON multipartition, edge label = residue."""
    import json

    def label(mp):
        return json.dumps(mp.to_json_dict(), separators=(",", ":"))

    lines = ["digraph crystal {"]
    index = {mp: f"n{k}" for k, mp in enumerate(sorted(nodes, key=label))}
    for mp, name in index.items():
        lines.append(f"  {name} [label={json.dumps(label(mp))}];")
    for src, i, dst in edges:
        lines.append(f"  {index[src]} -> {index[dst]} [label={i}];")
    lines.append("}")
    return "\n".join(lines)


def signature_from_beta(lam: Partition, m: int, e: int, i: int):
    """The i-signature read off beta numbers; cross-check oracle.

    Bead j is an R-letter when j = i+1 mod e and an A-letter when j = i,
    reading beads in decreasing order down to row len(lam); the deeper
    solid tail cancels out in adjacent pairs, except that the letter at
    row len(lam) is kept only when it is an A (the genuine addable node
    at the foot of the diagram).
    """
    i %= e
    beta = to_beta(lam, m, e)
    word = []
    beads = list(beta.extras) + [beta.s]
    for k, j in enumerate(beads):
        if j % e == (i + 1) % e and k < len(beads) - 1:
            word.append((0, (k, j - m + k - 1), REMOVABLE))
        elif j % e == i:
            word.append((0, (k, j - m + k), ADDABLE))
    return word
