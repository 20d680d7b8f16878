"""Pseudo-Levi subsystems Phi_J for J in the extended simple set.

Index 0 denotes alpha_0 = -theta; 1..n are the simple roots.  Root subsets
are handled in simple-root coordinates throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import bareiss_rank, hermite_rows, in_integer_span, smith_invariants
from .rootsystem import RootSystem

Component = tuple[str, int]  # ("A", 3), ("A~", 2), ("C", 3), ...


# -- type recognition ---------------------------------------------------------

def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def recognize_connected(cartan: Sequence[Sequence[int]]) -> Component:
    """Type of a connected Cartan matrix (convention cartan[i][j] = <a_i, a_j>)."""
    n = len(cartan)
    if n == 1:
        return ("A", 1)
    bonds = {}
    for i in range(n):
        for j in range(i + 1, n):
            if cartan[i][j]:
                bonds[(i, j)] = cartan[i][j] * cartan[j][i]
    if len(bonds) != n - 1:
        raise ValueError("diagram is not a tree")
    mult = max(bonds.values())
    if mult == 3:
        return ("G", 2)
    if mult == 2:
        if n == 2:
            return ("C", 2)  # B2 = C2
        if n == 4:
            (i, j), = [k for k, v in bonds.items() if v == 2]
            # the double bond sits in the middle for F4
            degs = [sum(1 for (a, b) in bonds if x in (a, b)) for x in range(n)]
            if degs[i] == 2 and degs[j] == 2:
                return ("F", 4)
        # a_i short iff |<a_i,a_j>| = 1 < |<a_j,a_i>| across the double bond
        (i, j), = [k for k, v in bonds.items() if v == 2]
        short = i if abs(cartan[j][i]) == 2 else j
        # the end node of the double bond is the distinguished one
        degs = [sum(1 for (a, b) in bonds if x in (a, b)) for x in range(n)]
        end = i if degs[i] == 1 else j
        return ("B", n) if end == short else ("C", n)
    degs = [sum(1 for (a, b) in bonds if x in (a, b)) for x in range(n)]
    branch = [x for x in range(n) if degs[x] == 3]
    if not branch:
        return ("A", n)
    b = branch[0]
    adj = {x: [y for y in range(n) if y != x and cartan[x][y]] for x in range(n)}
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    raise ValueError(f"unrecognized diagram with arms {arms}")


def canonical_component(c: Component) -> list[Component]:
    """Apply the low-rank coincidences A1=B1=C1, B2=C2, D2=A1A1, D3=A3."""
    label, r = c
    tilde = label.endswith("~")
    base = label.rstrip("~")
    if r <= 0:
        return []
    if base in ("B", "C") and r == 1:
        base = "A"
    if base == "B" and r == 2:
        base = "C"
    if base == "D" and r == 2:
        return canonical_component((base[:0] + "A" + ("~" if tilde else ""), 1)) * 2
    if base == "D" and r == 3:
        base = "A"
    if base == "D" and r == 1:
        return []
    return [(base + ("~" if tilde else ""), r)]


def canonical(components: Iterable[Component]) -> tuple[Component, ...]:
    out: list[Component] = []
    for c in components:
        out.extend(canonical_component(c))
    return tuple(sorted(out))


def format_components(components: Sequence[Component], torus_rank: int = 0) -> str:
    s = "".join(f"{lab}{r}" for lab, r in components)
    if torus_rank:
        s += f"T{torus_rank}"
    return s or "T0"


# -- subsystems ---------------------------------------------------------------

@dataclass
class SubsystemReport:
    J: tuple[int, ...]
    roots: list[tuple]
    base: list[tuple]
    components: tuple[Component, ...]
    dim: int
    torus_rank: int
    invariant_factors: list[int] = field(default_factory=list)

    @property
    def label(self) -> str:
        return format_components(self.components, self.torus_rank)


def closed_subsystem_from_roots(rs: RootSystem, roots: Iterable[tuple]) -> tuple[list[tuple], tuple[Component, ...], int]:
    """Base, recognized components and central torus rank of a root subsystem."""
    roots = sorted(set(roots))
    rset = set(roots)
    pos = [r for r in roots if sum(r) > 0]
    sums = {tuple(a + b for a, b in zip(x, y)) for x, y in combinations(pos, 2)}
    base = [r for r in pos if r not in sums]
    comps = []
    if base:
        k = len(base)
        cart = [[rs.coeff_pairing(base[i], base[j]) for j in range(k)] for i in range(k)]
        for comp in _components(cart):
            sub = [[cart[i][j] for j in comp] for i in comp]
            label, r = recognize_connected(sub)
            if not rs.simply_laced and label in "ADE":
                if all(not _is_long(rs, base[i]) for i in comp):
                    label += "~"
            comps.append((label, r))
    rank = bareiss_rank(base) if base else 0
    assert all(tuple(-x for x in r) in rset for r in roots)
    return base, canonical(comps), rs.rank - rank


def _is_long(rs: RootSystem, c: Sequence[int]) -> bool:
    return rs.norm2(c) == max(rs.gram[i][i] for i in range(rs.rank))


def subsystem(rs: RootSystem, J: Iterable[int]) -> SubsystemReport:
    """Phi_J = Z-span(Delta_J) intersected with Phi."""
    J = tuple(sorted(set(J)))
    ext = rs.extended_coeffs()
    gens = [ext[j] for j in J]
    hnf = hermite_rows(gens)
    roots = [c for c in rs._coeff_list if in_integer_span(hnf, c)] if gens else []
    base, comps, trank = closed_subsystem_from_roots(rs, roots)
    return SubsystemReport(
        J=J, roots=roots, base=base, components=comps, dim=rs.rank + len(roots),
        torus_rank=trank, invariant_factors=center_factors(rs, J),
    )


def weight_rows(rs: RootSystem, J: Iterable[int]) -> list[list[int]]:
    """Delta_J expressed in the fundamental-weight basis."""
    ext = rs.extended_coeffs()
    n = rs.rank
    return [[sum(ext[j][k] * rs.cartan[k][i] for k in range(n)) for i in range(n)] for j in J]


def center_factors(rs: RootSystem, J: Iterable[int]) -> list[int]:
    rows = weight_rows(rs, sorted(set(J)))
    return smith_invariants(rows) if rows else []


def p_prime_part(d: int, p: int) -> int:
    if p:
        while d % p == 0:
            d //= p
    return d


def reduced_center(rs: RootSystem, J: Iterable[int], p: int) -> tuple[int, int, list[int]]:
    """(torus rank, order of the finite part in characteristic p, invariant factors).

    The center of L_J is Hom(X / <Delta_J>, k^*); a cyclic factor Z/d contributes
    the p'-part of d once p-power torsion collapses.
    """
    J = sorted(set(J))
    factors = center_factors(rs, J)
    rank = len(factors)
    order = 1
    for d in factors:
        order *= p_prime_part(d, p)
    return rs.rank - rank, order, factors


def find_pseudolevi_of_type(rs: RootSystem, target: Iterable[Component], torus_rank: int | None = None) -> list[tuple[int, ...]]:
    """All J in the extended simple set whose subsystem has the given components."""
    want = canonical(target)
    hits = []
    for k in range(rs.rank + 2):
        for J in combinations(range(rs.rank + 1), k):
            rep = subsystem(rs, J)
            if rep.components == want and (torus_rank is None or rep.torus_rank == torus_rank):
                hits.append(J)
    return hits
