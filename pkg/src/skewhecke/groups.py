"""Finite groups via full multiplication tables.

Elements are indices 0..n-1 with 0 the identity.  Symmetric and dihedral
groups carry permutation data and cycle-notation names.  Coset spaces record
left cosets, the H-action on them, and the double-coset orbits together with
their stabilizers H \\cap gHg^{-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GroupAxiomError(ValueError):
    """A purported multiplication table fails the group axioms."""


# ---------------------------------------------------------------------------
# permutation helpers (tuples p with p[i] = image of i, 0-indexed)

def perm_compose(p, q):
    """(p*q)(x) = p(q(x))."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_cycle_notation(p) -> str:
    """Cycle notation with 1-indexed points, 'id' for the identity."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) if out else "id"


def parse_cycles(s: str, n: int):
    """Parse cycle notation like '(1 2)(3 4)' or '(12)' into a permutation of n points."""
    s = s.strip()
    if s in ("id", "()", "e", "1"):
        return tuple(range(n))
    perm = list(range(n))
    depth_items: list[list[int]] = []
    i = 0
    while i < len(s):
        if s[i] == "(":
            j = s.index(")", i)
            body = s[i + 1 : j].replace(",", " ")
            if " " in body.strip():
                pts = [int(t) - 1 for t in body.split()]
            else:
                pts = [int(ch) - 1 for ch in body.strip()]
            depth_items.append(pts)
            i = j + 1
        elif s[i].isspace():
            i += 1
        else:
            raise ValueError(f"bad cycle notation: {s!r}")
    # compose cycles left to right as maps applied right-to-left
    for pts in reversed(depth_items):
        new = list(perm)
        for k, pt in enumerate(pts):
            if pt < 0 or pt >= n:
                raise ValueError(f"point {pt + 1} out of range in {s!r}")
            new[pt] = perm[pts[(k + 1) % len(pts)]]
        perm = new
    return tuple(perm)


# ---------------------------------------------------------------------------


class FiniteGroup:
    def __init__(self, table, names=None, perms=None, check=True):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        if names is None:
            names = ["id"] + [f"g{i}" for i in range(1, self.order)]
        self.names = tuple(names)
        self.perms = tuple(perms) if perms is not None else None
        if check:
            self._check_axioms()
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupAxiomError(f"element {a} has no inverse")
        self.inv_table = tuple(inv)

    def _check_axioms(self):
        n = self.order
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupAxiomError("malformed multiplication table")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupAxiomError("index 0 is not a two-sided identity")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupAxiomError(
                            f"non-associative at ({a},{b},{c})"
                        )

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv_table[a]

    def name(self, a: int) -> str:
        return self.names[a]

    def element_by_name(self, name: str) -> int:
        name = name.strip()
        if name in self.names:
            return self.names.index(name)
        if self.perms is not None:
            p = parse_cycles(name, len(self.perms[0]))
            return self.perms.index(p)
        if name.startswith("g") and name[1:].isdigit():
            return int(name[1:])
        raise ValueError(f"unknown element {name!r}")

    def conjugate(self, s: int, a: int) -> int:
        return self.mul(self.mul(s, a), self.inverse(s))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def group_from_table(table, names=None) -> FiniteGroup:
    return FiniteGroup(table, names=names)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on n points; identity first, remaining permutations in lex order."""
    perms = sorted(itertools.permutations(range(n)))
    # lex order already puts the identity first
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[perm_compose(p, q)] for q in perms] for p in perms]
    names = [perm_cycle_notation(p) for p in perms]
    return FiniteGroup(table, names=names, perms=perms, check=False)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["id"] + [f"t^{i}" if i > 1 else "t" for i in range(1, n)]
    return FiniteGroup(table, names=names, check=False)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n as permutations of n vertices."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if n <= 2:
        # degenerate cases where the vertex permutation action is unfaithful
        if n == 1:
            return cyclic_group(2)
        G, _, _, _, _ = direct_product(cyclic_group(2), cyclic_group(2))
        return G
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    perms = []
    r = tuple(range(n))
    for _ in range(n):
        perms.append(r)
        r = perm_compose(rot, r)
    for p in list(perms):
        perms.append(perm_compose(ref, p))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[perm_compose(p, q)] for q in perms] for p in perms]
    names = [perm_cycle_notation(p) for p in perms]
    return FiniteGroup(table, names=names, perms=perms, check=False)


def direct_product(G1: FiniteGroup, G2: FiniteGroup):
    """Returns (G, embed1, embed2, project1, project2); pairs in lex order."""
    pairs = [(a, b) for a in range(G1.order) for b in range(G2.order)]
    index = {p: i for i, p in enumerate(pairs)}
    table = [
        [index[(G1.mul(a, c), G2.mul(b, d))] for (c, d) in pairs]
        for (a, b) in pairs
    ]
    names = [f"({G1.name(a)},{G2.name(b)})" for (a, b) in pairs]
    G = FiniteGroup(table, names=names, check=False)
    embed1 = [index[(a, 0)] for a in range(G1.order)]
    embed2 = [index[(0, b)] for b in range(G2.order)]
    project1 = [a for (a, b) in pairs]
    project2 = [b for (a, b) in pairs]
    return G, embed1, embed2, project1, project2


@dataclass
class SemidirectProduct:
    group: FiniteGroup
    embed_n: list          # N element -> index in the product
    embed_k: list          # K element -> index in the product
    project_k: list        # product element -> K element
    normal_part: list      # product element -> N element


def semidirect_product(N: FiniteGroup, K: FiniteGroup, act) -> SemidirectProduct:
    """N x| K for a K-action on N by automorphisms; act(k, n) -> n.

    Verifies that each act(k, -) is an automorphism and that the assignment is
    a homomorphism K -> Aut(N).  Product: (n1,k1)(n2,k2) = (n1 * k1.n2, k1k2).
    """
    for k in range(K.order):
        if act(k, 0) != 0:
            raise GroupAxiomError(f"act({k},-) does not fix the identity")
        for a in range(N.order):
            for b in range(N.order):
                if act(k, N.mul(a, b)) != N.mul(act(k, a), act(k, b)):
                    raise GroupAxiomError(
                        f"act({k},-) is not a homomorphism at ({a},{b})"
                    )
    for k1 in range(K.order):
        for k2 in range(K.order):
            k12 = K.mul(k1, k2)
            for a in range(N.order):
                if act(k12, a) != act(k1, act(k2, a)):
                    raise GroupAxiomError(
                        f"action is not a homomorphism K -> Aut(N) at ({k1},{k2},{a})"
                    )
    pairs = [(a, b) for a in range(N.order) for b in range(K.order)]
    index = {p: i for i, p in enumerate(pairs)}
    table = []
    for (n1, k1) in pairs:
        row = []
        for (n2, k2) in pairs:
            row.append(index[(N.mul(n1, act(k1, n2)), K.mul(k1, k2))])
        table.append(row)
    names = [f"({N.name(a)};{K.name(b)})" for (a, b) in pairs]
    G = FiniteGroup(table, names=names, check=False)
    return SemidirectProduct(
        group=G,
        embed_n=[index[(a, 0)] for a in range(N.order)],
        embed_k=[index[(0, b)] for b in range(K.order)],
        project_k=[b for (a, b) in pairs],
        normal_part=[a for (a, b) in pairs],
    )


def power_group(L: FiniteGroup, k: int):
    """L^k as a FiniteGroup, plus the tuple list (for factor-permuting actions)."""
    tuples = list(itertools.product(range(L.order), repeat=k))
    index = {t: i for i, t in enumerate(tuples)}
    table = [
        [index[tuple(L.mul(a[i], b[i]) for i in range(k))] for b in tuples]
        for a in tuples
    ]
    names = ["(" + ",".join(L.name(x) for x in t) + ")" for t in tuples]
    G = FiniteGroup(table, names=names, check=False)
    return G, tuples, index


def group_make(spec) -> FiniteGroup:
    """Build a group from a text descriptor: symmetric(n), cyclic(n), dihedral(n)."""
    s = str(spec).strip().lower()
    for prefix, fn in (
        ("symmetric", symmetric_group),
        ("cyclic", cyclic_group),
        ("dihedral", dihedral_group),
    ):
        if s.startswith(prefix + "(") and s.endswith(")"):
            return fn(int(s[len(prefix) + 1 : -1]))
    raise ValueError(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------


class Subgroup:
    def __init__(self, group: FiniteGroup, elements, check=True):
        self.group = group
        self.elements = tuple(sorted(set(elements)))
        if check:
            if 0 not in self.elements:
                raise GroupAxiomError("subgroup must contain the identity")
            es = set(self.elements)
            for a in self.elements:
                if group.inverse(a) not in es:
                    raise GroupAxiomError(f"not closed under inversion at {a}")
                for b in self.elements:
                    if group.mul(a, b) not in es:
                        raise GroupAxiomError(f"not closed at ({a},{b})")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in set(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.group is self.group
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((id(self.group), self.elements))

    def generators(self) -> list:
        """A small generating set, found greedily."""
        gens: list[int] = []
        current = {0}
        for a in self.elements:
            if a not in current:
                gens.append(a)
                current = set(
                    subgroup_from_generators(self.group, gens).elements
                )
                if len(current) == self.order:
                    break
        return gens

    def as_group(self):
        """This subgroup as a standalone FiniteGroup plus the embedding list."""
        elems = list(self.elements)
        index = {e: i for i, e in enumerate(elems)}
        # reorder so identity is first (it is: sorted, and 0 in subgroup)
        table = [
            [index[self.group.mul(a, b)] for b in elems] for a in elems
        ]
        names = [self.group.name(e) for e in elems]
        perms = None
        if self.group.perms is not None:
            perms = [self.group.perms[e] for e in elems]
        K = FiniteGroup(table, names=names, perms=perms, check=False)
        return K, elems

    def __repr__(self):
        return f"Subgroup(order={self.order})"


def subgroup_from_generators(G: FiniteGroup, gens) -> Subgroup:
    elems = {0}
    frontier = [0]
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"generator index {g} out of range")
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for g in gens:
                x = G.mul(a, g)
                if x not in elems:
                    elems.add(x)
                    changed = True
    return Subgroup(G, elems, check=False)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [0], check=False)


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order), check=False)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    hs = set(H.elements)
    return all(
        G.conjugate(s, h) in hs for s in range(G.order) for h in H.elements
    )


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, s: int) -> Subgroup:
    return Subgroup(G, [G.conjugate(s, h) for h in H.elements], check=False)


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    assert H.group is K.group
    return Subgroup(H.group, set(H.elements) & set(K.elements), check=False)


def quotient_group(G: FiniteGroup, N: Subgroup):
    """(G/N, projection list).  Requires N normal."""
    if not is_normal(G, N):
        raise GroupAxiomError("subgroup is not normal")
    ns = set(N.elements)
    coset_of = [None] * G.order
    cosets = []
    for a in range(G.order):
        if coset_of[a] is None:
            members = sorted(G.mul(a, h) for h in N.elements)
            ci = len(cosets)
            cosets.append(tuple(members))
            for m in members:
                coset_of[m] = ci
    # reorder so that the coset of the identity is index 0, rest by min element
    order = sorted(range(len(cosets)), key=lambda ci: (0 not in cosets[ci], cosets[ci][0]))
    relabel = {old: new for new, old in enumerate(order)}
    cosets = [cosets[old] for old in order]
    coset_of = [relabel[c] for c in coset_of]
    reps = [c[0] for c in cosets]
    table = [
        [coset_of[G.mul(reps[i], reps[j])] for j in range(len(cosets))]
        for i in range(len(cosets))
    ]
    names = [f"[{G.name(r)}]" for r in reps]
    Q = FiniteGroup(table, names=names, check=False)
    return Q, coset_of


# ---------------------------------------------------------------------------


@dataclass
class DoubleCoset:
    rep_coset: int          # coset index of the orbit representative
    rep_element: int        # canonical group element representing HgH
    coset_indices: tuple    # all left-coset indices in the H-orbit
    stabilizer: Subgroup    # H \cap gHg^{-1} for g = rep_element
    transversal: dict = field(default_factory=dict)  # coset -> h with h.rep_coset = coset


class CosetSpace:
    """Left cosets of H in G with the H-action and double-coset orbits."""

    def __init__(self, G: FiniteGroup, H: Subgroup):
        if H.group is not G:
            raise ValueError("subgroup does not belong to the given group")
        self.G = G
        self.H = H
        coset_of = [None] * G.order
        cosets = []
        for a in range(G.order):
            if coset_of[a] is None:
                members = tuple(sorted(G.mul(a, h) for h in H.elements))
                ci = len(cosets)
                cosets.append(members)
                for m in members:
                    coset_of[m] = ci
        # order cosets by minimal element; identity coset H comes first
        order = sorted(range(len(cosets)), key=lambda ci: cosets[ci][0])
        relabel = {old: new for new, old in enumerate(order)}
        self.cosets = [cosets[old] for old in order]
        self.coset_of = [relabel[c] for c in coset_of]
        self.reps = [c[0] for c in self.cosets]
        self.n = len(self.cosets)
        # H-action on coset indices
        self.h_action = {
            h: [self.coset_of[G.mul(h, self.reps[ci])] for ci in range(self.n)]
            for h in H.elements
        }
        self.double_cosets = self._compute_orbits()
        self.orbit_of_coset = [None] * self.n
        for oi, dc in enumerate(self.double_cosets):
            for ci in dc.coset_indices:
                self.orbit_of_coset[ci] = oi

    def _compute_orbits(self):
        G, H = self.G, self.H
        seen = [False] * self.n
        orbits = []
        for ci in range(self.n):
            if seen[ci]:
                continue
            members = set()
            transversal = {}
            stack = [(ci, 0)]
            while stack:
                cj, h = stack.pop()
                if cj in members:
                    continue
                members.add(cj)
                transversal[cj] = h
                for hh in H.elements:
                    ck = self.h_action[hh][cj]
                    if ck not in members:
                        stack.append((ck, G.mul(hh, h)))
            # orbit representative: coset with the minimal representative
            rep_coset = min(members, key=lambda c: self.reps[c])
            # recompute transversal relative to rep_coset
            transversal2 = {rep_coset: 0}
            frontier = [rep_coset]
            while frontier:
                cj = frontier.pop()
                for hh in H.elements:
                    ck = self.h_action[hh][cj]
                    if ck not in transversal2:
                        transversal2[ck] = G.mul(hh, transversal2[cj])
                        frontier.append(ck)
            g = self.reps[rep_coset]
            stab = [
                h for h in H.elements if self.h_action[h][rep_coset] == rep_coset
            ]
            orbits.append(
                DoubleCoset(
                    rep_coset=rep_coset,
                    rep_element=g,
                    coset_indices=tuple(sorted(members)),
                    stabilizer=Subgroup(G, stab, check=False),
                    transversal=transversal2,
                )
            )
            for m in members:
                seen[m] = True
        orbits.sort(key=lambda dc: self.reps[dc.rep_coset])
        return orbits

    def coset_index_of_element(self, g: int) -> int:
        return self.coset_of[g]

    def __repr__(self):
        return (
            f"CosetSpace(|G|={self.G.order}, |H|={self.H.order}, "
            f"cosets={self.n}, double_cosets={len(self.double_cosets)})"
        )


def coset_space(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    return CosetSpace(G, H)
