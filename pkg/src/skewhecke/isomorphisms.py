"""Structural isomorphisms and embeddings between skew Hecke algebra models.

Implements the matrix model (G-invariant matrices over A), the corner-ring
model inside the skew group algebra, the full-matrix-algebra description of
the function-algebra case, transports along group-level operations (quotients,
products, intermediate subgroups, conjugation, semidirect products), cocycle
perturbations of the action, opposite algebras, and a generic exact checker
for algebra maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebras import (
    GroupAlgebra,
    FunctionAlgebra,
    InvariantSubalgebra,
    MatrixAlgebra,
    OppositeAlgebra,
    TensorAlgebra,
    cocycle_perturbed_action,
    element_inverse,
    group_automorphism_action,
    opposite_action,
    restricted_action,
    tensor_product_action,
)
from .groups import (
    Subgroup,
    conjugate_subgroup,
    direct_product,
    full_subgroup,
    is_normal,
    quotient_group,
    semidirect_product,
)
from .hecke import (
    HeckeContext,
    HeckeElement,
    classical_context,
    hecke_as_based_algebra,
)


# ---------------------------------------------------------------------------
# generic exact verification of algebra maps


@dataclass
class AlgebraMapReport:
    name: str
    ok: bool
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.name}: {status}"]
        for k, v in sorted(self.details.items()):
            lines.append(f"  {k}: {v}")
        for check, witness in self.failures:
            lines.append(f"  FAIL {check}: witness {witness}")
        return "\n".join(lines)


def verify_algebra_map(
    name,
    basis,
    apply_map,
    one_src,
    one_target,
    field,
    vectorize=None,
    target_dim=None,
    rng=None,
    max_pairs=None,
    anti=False,
):
    """Exact checks that a linear map on a spanned domain is an algebra map.

    ``basis`` spans the domain; elements must support +, *, scale, ==.
    Checks: unit, linearity (on sampled combinations), multiplicativity on
    basis pairs (exhaustive unless max_pairs caps it, then seeded sampling),
    and, if ``vectorize`` is given, injectivity by exact rank (plus
    surjectivity when target_dim is known).  ``anti=True`` checks
    F(xy) = F(y)F(x) instead.
    """
    failures = []
    details = {"basis_size": len(basis)}
    if apply_map(one_src) != one_target:
        failures.append(("unit", "F(1) != 1"))
    images = [apply_map(b) for b in basis]
    # linearity spot checks on random small combinations
    if rng is not None and len(basis) >= 2:
        for _ in range(10):
            i = rng.randrange(len(basis))
            j = rng.randrange(len(basis))
            c = field.from_int(rng.randint(-3, 3))
            x = basis[i] + basis[j].scale(c)
            if apply_map(x) != images[i] + images[j].scale(c):
                failures.append(("linearity", (i, j)))
                break
    pairs = [(i, j) for i in range(len(basis)) for j in range(len(basis))]
    if max_pairs is not None and len(pairs) > max_pairs:
        if rng is None:
            raise ValueError("sampling pairs requires an rng")
        pairs = [pairs[rng.randrange(len(pairs))] for _ in range(max_pairs)]
        details["pairs"] = f"{max_pairs} sampled"
    else:
        details["pairs"] = f"{len(pairs)} exhaustive"
    for i, j in pairs:
        lhs = apply_map(basis[i] * basis[j])
        rhs = images[j] * images[i] if anti else images[i] * images[j]
        if lhs != rhs:
            failures.append(("multiplicativity", (i, j)))
            break
    if vectorize is not None:
        vecs = [vectorize(im) for im in images]
        r = linalg.rank(field, vecs)
        details["rank"] = r
        if r != len(basis):
            failures.append(("injectivity", f"rank {r} < dim {len(basis)}"))
        if target_dim is not None:
            details["target_dim"] = target_dim
            if r != target_dim:
                failures.append(
                    ("surjectivity", f"rank {r} != target dim {target_dim}")
                )
    return AlgebraMapReport(name=name, ok=not failures, failures=failures,
                            details=details)


@dataclass
class Transport:
    """An isomorphism (or embedding) between two Hecke-algebra models."""

    source: object
    target: object
    forward: object
    backward: object = None
    info: dict = dc_field(default_factory=dict)


# ---------------------------------------------------------------------------
# matrix model: phi |-> (M_{gH,kH}) = alpha_k phi(k^-1 gH)


def _group_generators(G):
    return full_subgroup(G).generators()


class HeckeMatrix:
    """An n x n matrix over A in the coset-indexed model.

    The product matching convolution is (M * N)_{s,k} = sum_g M_{g,k} N_{s,g};
    transposition turns it into the standard matrix product, entries multiplied
    in the same order.
    """

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: HeckeContext, entries):
        self.ctx = ctx
        self.entries = entries

    def __add__(self, other):
        return HeckeMatrix(
            self.ctx,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def scale(self, c):
        return HeckeMatrix(
            self.ctx, [[a.scale(c) for a in row] for row in self.entries]
        )

    def __mul__(self, other):
        if not isinstance(other, HeckeMatrix) or other.ctx is not self.ctx:
            return NotImplemented
        n = self.ctx.cosets.n
        A = self.ctx.A
        out = []
        for s in range(n):
            row = []
            for k in range(n):
                acc = A.zero()
                for g in range(n):
                    a = self.entries[g][k]
                    if a.is_zero:
                        continue
                    b = other.entries[s][g]
                    if b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return HeckeMatrix(self.ctx, out)

    def __eq__(self, other):
        return (
            isinstance(other, HeckeMatrix)
            and other.ctx is self.ctx
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def to_vector(self, labels):
        out = []
        for row in self.entries:
            for a in row:
                out.extend(a.to_vector(labels))
        return out

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(a) for a in row) + "]" for row in self.entries
        )


def to_matrix(phi: HeckeElement) -> HeckeMatrix:
    ctx = phi.ctx
    cs = ctx.cosets
    G = ctx.G
    exp = phi.expand()
    entries = []
    for i in range(cs.n):
        g = cs.reps[i]
        row = []
        for j in range(cs.n):
            k = cs.reps[j]
            row.append(
                ctx.action.apply(k, exp[cs.coset_of[G.mul(G.inverse(k), g)]])
            )
        entries.append(row)
    return HeckeMatrix(ctx, entries)


def matrix_invariance_witness(ctx: HeckeContext, entries):
    """None if alpha_s M_{s^-1 gH, s^-1 kH} = M_{gH,kH} for all s; else witness.

    Checking a generating set of G suffices (the condition is a G-action's
    fixed-point equation).
    """
    cs = ctx.cosets
    G = ctx.G
    for s in _group_generators(G):
        si = G.inverse(s)
        moved = [cs.coset_of[G.mul(si, cs.reps[i])] for i in range(cs.n)]
        for i in range(cs.n):
            for j in range(cs.n):
                if ctx.action.apply(s, entries[moved[i]][moved[j]]) != entries[i][j]:
                    return (s, i, j)
    return None


def from_matrix(ctx: HeckeContext, entries) -> HeckeElement:
    """Inverse of ``to_matrix`` on G-invariant matrices; validated."""
    witness = matrix_invariance_witness(ctx, entries)
    if witness is not None:
        s, i, j = witness
        raise ValueError(
            f"matrix is not G-invariant: fails for s={ctx.G.name(s)} at "
            f"cosets ({i},{j})"
        )
    # column of the identity coset: M_{gH,H} = phi(gH)
    values = {}
    for oi, orbit in enumerate(ctx.orbits):
        values[oi] = entries[orbit.rep_coset][0]
    return ctx.from_values(values)


def matrix_unit_matrix(ctx: HeckeContext) -> HeckeMatrix:
    n = ctx.cosets.n
    A = ctx.A
    return HeckeMatrix(
        ctx,
        [[A.one() if i == j else A.zero() for j in range(n)] for i in range(n)],
    )


def relativise(ctx: HeckeContext, a) -> HeckeMatrix:
    """A^H -> matrix model: a |-> diag(alpha_{k_i} a) over coset reps k_i."""
    for s in ctx.H.generators():
        if ctx.action.apply(s, a) != a:
            raise ValueError("element is not H-invariant")
    cs = ctx.cosets
    A = ctx.A
    entries = [
        [
            ctx.action.apply(cs.reps[i], a) if i == j else A.zero()
            for j in range(cs.n)
        ]
        for i in range(cs.n)
    ]
    return HeckeMatrix(ctx, entries)


def matrix_multiplicativity_witness(ctx: HeckeContext, pairs):
    """None if to_matrix(x*y) = to_matrix(x) * to_matrix(y) on all pairs.

    The matrix product is the reversed-composition convention of HeckeMatrix,
    checked componentwise; a failing pair index is returned as witness.
    """
    for idx, (x, y) in enumerate(pairs):
        if to_matrix(x.convolve(y)) != to_matrix(x) * to_matrix(y):
            return idx
    return None


# ---------------------------------------------------------------------------
# corner model inside the skew group algebra


def to_corner(ctx: HeckeContext, sga, phi: HeckeElement):
    """phi |-> sum_{g in G} (1/|H|) phi(gH) . g in A x| G."""
    f = ctx.field
    inv = f.inv(f.from_int(ctx.H.order))
    exp = phi.expand()
    x = sga.zero()
    for g in range(ctx.G.order):
        a = exp[ctx.cosets.coset_of[g]]
        if not a.is_zero:
            x = x + sga.term(a.scale(inv), g)
    return x


def from_corner(ctx: HeckeContext, sga, x) -> HeckeElement:
    """Inverse of ``to_corner``: phi(gH) = |H| . (A-coefficient of g in x)."""
    f = ctx.field
    h = f.from_int(ctx.H.order)
    values = {}
    for oi, orbit in enumerate(ctx.orbits):
        g = ctx.cosets.reps[orbit.rep_coset]
        values[oi] = sga.coefficient_function(x, g).scale(h)
    return ctx.from_values(values)


# ---------------------------------------------------------------------------
# function-algebra coefficients: full matrix algebra over the scalars


class StoneModel:
    """H_R(G, H, R^G, left translation) ~= M_n(R) with n = [G : H].

    The map composes the matrix model with transposition and evaluation of
    each function entry at the group identity.
    """

    def __init__(self, ctx: HeckeContext):
        if not isinstance(ctx.A, FunctionAlgebra) or ctx.A.G is not ctx.G:
            raise ValueError("model requires A = functions on G")
        if ctx.action.name != "left_translation":
            raise ValueError("model requires the left-translation action")
        self.ctx = ctx
        self.n = ctx.cosets.n
        self.matrices = MatrixAlgebra(ctx.field, self.n)
        self._solver = None

    def apply(self, phi: HeckeElement):
        f = self.ctx.field
        T = to_matrix(phi)
        coeffs = {}
        for i in range(self.n):
            for j in range(self.n):
                # transpose, then evaluate the function entry at the identity
                c = T.entries[j][i].coeffs.get(0, f.zero)
                if not f.is_zero(c):
                    coeffs[(i, j)] = c
        return self.matrices.element(coeffs)

    def _ensure_solver(self):
        if self._solver is None:
            labels = self.matrices.labels()
            self._basis = self.ctx.basis_hecke_elements()
            vecs = [self.apply(b).to_vector(labels) for b in self._basis]
            self._solver = linalg.CoordinateSolver(
                self.ctx.field, vecs, n=len(labels)
            )

    def preimage(self, m) -> HeckeElement:
        self._ensure_solver()
        labels = self.matrices.labels()
        coords = self._solver.coordinates(m.to_vector(labels))
        if coords is None:
            raise ValueError("matrix is not in the image (bug: map is onto)")
        out = self.ctx.zero()
        for b, c in zip(self._basis, coords):
            out = out + b.scale(c)
        return out


def stone_model(field, G, H: Subgroup) -> StoneModel:
    from .algebras import FunctionAlgebra as FA, left_translation_action

    A = FA(field, G)
    act = left_translation_action(G, A)
    ctx = HeckeContext(G, H, A, act, verify_action=False)
    return StoneModel(ctx)


# ---------------------------------------------------------------------------
# transports along group operations


def quotient_transport(ctx: HeckeContext, N: Subgroup) -> Transport:
    """For N normal in G with N <= H: pass to (G/N, H/N, A^N)."""
    G, H, A = ctx.G, ctx.H, ctx.A
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal")
    if not set(N.elements) <= set(H.elements):
        raise ValueError("normal subgroup is not contained in H")
    Q, proj = quotient_group(G, N)
    section = [None] * Q.order
    for g in range(G.order):
        q = proj[g]
        if section[q] is None or g < section[q]:
            section[q] = g
    HQ = Subgroup(Q, {proj[h] for h in H.elements}, check=False)
    AN = InvariantSubalgebra(A, N.generators(), ctx.action)
    actQ = AN.induced_action(Q, section)
    target = HeckeContext(Q, HQ, AN, actQ, verify_action=False)

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        values = {}
        for oi, orbit in enumerate(target.orbits):
            g = section[target.cosets.reps[orbit.rep_coset]]
            v = AN.express(exp[ctx.cosets.coset_of[g]])
            if v is None:
                raise ValueError("value is not N-invariant (bug)")
            values[oi] = v
        return target.from_values(values)

    def backward(psi: HeckeElement) -> HeckeElement:
        exp = psi.expand()
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = AN.include(exp[target.cosets.coset_of[proj[g]]])
        return ctx.from_values(values)

    return Transport(source=ctx, target=target, forward=forward,
                     backward=backward, info={"quotient_order": Q.order})


def product_transport(ctx1: HeckeContext, ctx2: HeckeContext) -> Transport:
    """Tensor product of two contexts vs the context of the product group.

    The target is the Hecke context of (G1 x G2, H1 x H2, A1 (x) A2); the
    source is the tensor product of the two materialized Hecke algebras.
    """
    Gp, e1, e2, p1, p2 = direct_product(ctx1.G, ctx2.G)
    Hp = Subgroup(
        Gp,
        {Gp.mul(e1[h1], e2[h2]) for h1 in ctx1.H.elements for h2 in ctx2.H.elements},
        check=False,
    )
    Ap = TensorAlgebra(ctx1.A, ctx2.A)
    actp = tensor_product_action(Gp, p1, p2, ctx1.action, ctx2.action, Ap)
    target = HeckeContext(Gp, Hp, Ap, actp, verify_action=False)

    B1, to_h1, _ = hecke_as_based_algebra(ctx1)
    B2, to_h2, _ = hecke_as_based_algebra(ctx2)
    BT = TensorAlgebra(B1, B2)

    def pair_image(phi1: HeckeElement, phi2: HeckeElement) -> HeckeElement:
        exp1 = phi1.expand()
        exp2 = phi2.expand()
        values = {}
        for oi, orbit in enumerate(target.orbits):
            p = target.cosets.reps[orbit.rep_coset]
            v = Ap.pure(
                exp1[ctx1.cosets.coset_of[p1[p]]],
                exp2[ctx2.cosets.coset_of[p2[p]]],
            )
            values[oi] = v
        return target.from_values(values)

    image_cache = {}

    def forward(x) -> HeckeElement:
        out = target.zero()
        for (i, j), c in x.coeffs.items():
            im = image_cache.get((i, j))
            if im is None:
                im = pair_image(to_h1(B1.basis_element(i)), to_h2(B2.basis_element(j)))
                image_cache[(i, j)] = im
            out = out + im.scale(c)
        return out

    return Transport(source=BT, target=target, forward=forward,
                     info={"target_dim": target.dimension()})


def intermediate_embed(ctx: HeckeContext, K: Subgroup) -> Transport:
    """For H <= K <= G: extend-by-zero embedding of the (K, H) context."""
    if not set(ctx.H.elements) <= set(K.elements):
        raise ValueError("H is not contained in K")
    Kgrp, embed = K.as_group()
    pos = {g: i for i, g in enumerate(embed)}
    HK = Subgroup(Kgrp, [pos[h] for h in ctx.H.elements], check=False)
    actK = restricted_action(Kgrp, embed, ctx.action)
    source = HeckeContext(Kgrp, HK, ctx.A, actK, verify_action=False,
                          degree_cap=ctx.degree_cap)
    kset = set(embed)

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = ctx.cosets.reps[orbit.rep_coset]
            if g in kset:
                values[oi] = exp[source.cosets.coset_of[pos[g]]]
        return ctx.from_values(values)

    return Transport(source=source, target=ctx, forward=forward,
                     info={"index": ctx.cosets.n, "sub_index": source.cosets.n})


def conjugate_transport(ctx: HeckeContext, s: int) -> Transport:
    """Replace H by sHs^-1: phi'(xH') = alpha_s phi(s^-1 x s H)."""
    G = ctx.G
    H2 = conjugate_subgroup(G, ctx.H, s)
    target = HeckeContext(G, H2, ctx.A, ctx.action, verify_action=False,
                          degree_cap=ctx.degree_cap)
    si = G.inverse(s)

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        values = {}
        for oi, orbit in enumerate(target.orbits):
            x = target.cosets.reps[orbit.rep_coset]
            values[oi] = ctx.action.apply(
                s, exp[ctx.cosets.coset_of[G.mul(G.mul(si, x), s)]]
            )
        return target.from_values(values)

    def backward(psi: HeckeElement) -> HeckeElement:
        exp = psi.expand()
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            x = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = ctx.action.apply(
                si, exp[target.cosets.coset_of[G.mul(G.mul(s, x), si)]]
            )
        return ctx.from_values(values)

    return Transport(source=ctx, target=target, forward=forward,
                     backward=backward, info={"conjugator": G.name(s)})


def semidirect_transport(field, N, K, act, H: Subgroup) -> Transport:
    """H_R(K, H, R[N], alpha) vs the classical algebra of (N x| K, H).

    ``act(k, n)`` is the K-action on N by automorphisms, ``H`` a subgroup of K.
    The map sends phi to psi with psi((n;k)H~) = coefficient of n in phi(kH).
    """
    A = GroupAlgebra(field, N)
    alpha = group_automorphism_action(K, A, act)
    source = HeckeContext(K, H, A, alpha, verify_action=False)

    sd = semidirect_product(N, K, act)
    Gt = sd.group
    Ht = Subgroup(Gt, [sd.embed_k[h] for h in H.elements], check=False)
    target = classical_context(field, Gt, Ht)
    scalars = target.A

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        f = field
        values = {}
        for oi, orbit in enumerate(target.orbits):
            g = target.cosets.reps[orbit.rep_coset]
            n, k = sd.normal_part[g], sd.project_k[g]
            c = exp[source.cosets.coset_of[k]].coeffs.get(n, f.zero)
            if not f.is_zero(c):
                values[oi] = scalars.from_scalar(c)
        return target.from_values(values)

    def backward(psi: HeckeElement) -> HeckeElement:
        exp = psi.expand()
        f = field
        values = {}
        for oi, orbit in enumerate(source.orbits):
            k = source.cosets.reps[orbit.rep_coset]
            coeffs = {}
            for n in range(N.order):
                g = Gt.mul(sd.embed_n[n], sd.embed_k[k])
                c = exp[target.cosets.coset_of[g]].coeffs.get(0, f.zero)
                if not f.is_zero(c):
                    coeffs[n] = c
            values[oi] = A.element(coeffs)
        return source.from_values(values)

    return Transport(source=source, target=target, forward=forward,
                     backward=backward,
                     info={"dim": source.dimension(),
                           "classical_dim": target.dimension()})


# ---------------------------------------------------------------------------
# cocycle perturbations


class CocycleConditionError(ValueError):
    def __init__(self, failures):
        self.failures = failures
        lines = ["cocycle conditions violated:"]
        for check, witness in failures:
            lines.append(f"  {check}: witness {witness}")
        super().__init__("\n".join(lines))


def cocycle_verify(ctx: HeckeContext, chi: dict):
    """Failure witnesses for the cocycle conditions (empty list = valid).

    (a) chi(gg') = chi(g) . alpha_g chi(g'); (c) chi(h) = 1 for h in H;
    each chi(g) must be a unit.
    """
    G, A = ctx.G, ctx.A
    failures = []
    for g in range(G.order):
        if g not in chi:
            failures.append(("completeness", f"missing chi({G.name(g)})"))
            return failures
    from .scalars import NotAUnitError

    for g in range(G.order):
        try:
            element_inverse(chi[g])
        except NotAUnitError:
            failures.append(("unit", f"chi({G.name(g)}) is not a unit"))
            return failures
    for g in range(G.order):
        for g2 in range(G.order):
            lhs = chi[G.mul(g, g2)]
            rhs = chi[g] * ctx.action.apply(g, chi[g2])
            if lhs != rhs:
                failures.append(("cocycle", (G.name(g), G.name(g2))))
                break
    one = A.one()
    for h in ctx.H.elements:
        if chi[h] != one:
            failures.append(("trivial_on_H", G.name(h)))
    return failures


def cocycle_transport(ctx: HeckeContext, chi: dict, check=True) -> Transport:
    """Perturb alpha to beta_g = chi(g) alpha_g(-) chi(g)^-1; same algebra.

    The map multiplies each value by chi(g)^-1 on the right:
    phi'(gH) = phi(gH) . chi(g)^-1.
    """
    if check:
        failures = cocycle_verify(ctx, chi)
        if failures:
            raise CocycleConditionError(failures)
    beta = cocycle_perturbed_action(ctx.action, chi)
    target = HeckeContext(ctx.G, ctx.H, ctx.A, beta, verify_action=False,
                          degree_cap=ctx.degree_cap)
    inv_chi = {g: element_inverse(u) for g, u in chi.items()}

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        values = {}
        for oi, orbit in enumerate(target.orbits):
            g = target.cosets.reps[orbit.rep_coset]
            values[oi] = exp[ctx.cosets.coset_of[g]] * inv_chi[g]
        return target.from_values(values)

    def backward(psi: HeckeElement) -> HeckeElement:
        exp = psi.expand()
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = exp[target.cosets.coset_of[g]] * chi[g]
        return ctx.from_values(values)

    return Transport(source=ctx, target=target, forward=forward,
                     backward=backward)


def coboundary_from_unit(ctx: HeckeContext, u) -> dict:
    """chi(g) = u . (alpha_g u)^-1, the coboundary of a unit u of A."""
    return {
        g: u * element_inverse(ctx.action.apply(g, u))
        for g in range(ctx.G.order)
    }


# ---------------------------------------------------------------------------
# opposite algebras


def opposite_transport(ctx: HeckeContext) -> Transport:
    """Anti-isomorphism onto the (A^op, alpha^op) context.

    phi |-> (gH |-> alpha_g phi(g^-1 H)); reverses products.
    """
    Aop = OppositeAlgebra(ctx.A)
    actop = opposite_action(ctx.action, Aop)
    target = HeckeContext(ctx.G, ctx.H, Aop, actop, verify_action=False,
                          degree_cap=ctx.degree_cap)
    G = ctx.G

    def forward(phi: HeckeElement) -> HeckeElement:
        exp = phi.expand()
        values = {}
        for oi, orbit in enumerate(target.orbits):
            x = target.cosets.reps[orbit.rep_coset]
            values[oi] = Aop.to_op(
                ctx.action.apply(x, exp[ctx.cosets.coset_of[G.inverse(x)]])
            )
        return target.from_values(values)

    def backward(psi: HeckeElement) -> HeckeElement:
        exp = psi.expand()
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            x = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = Aop.from_op(
                actop.apply(x, exp[target.cosets.coset_of[G.inverse(x)]])
            )
        return ctx.from_values(values)

    return Transport(source=ctx, target=target, forward=forward,
                     backward=backward)


# ---------------------------------------------------------------------------
# degenerate shapes with independent descriptions


def special_case_trivial_action(ctx: HeckeContext) -> Transport:
    """Trivial action: the algebra is A tensor the classical Hecke algebra."""
    if ctx.action.name != "trivial":
        raise ValueError("requires the trivial action")
    cl = classical_context(ctx.field, ctx.G, ctx.H)
    B, _, _ = hecke_as_based_algebra(cl)
    T = TensorAlgebra(ctx.A, B)

    def forward(phi: HeckeElement):
        out = T.zero()
        for oi, v in phi.values.items():
            out = out + T.pure(v, B.basis_element(oi))
        return out

    def backward(x):
        f = ctx.field
        values = {}
        for (la, oi), c in x.coeffs.items():
            acc = values.get(oi, ctx.A.zero())
            values[oi] = acc + ctx.A.basis_element(la).scale(c)
        return ctx.from_values(values)

    return Transport(source=ctx, target=T, forward=forward, backward=backward)


def special_case_full_subgroup(ctx: HeckeContext) -> Transport:
    """H = G: evaluation at the unique coset identifies the algebra with A^G."""
    if ctx.H.order != ctx.G.order:
        raise ValueError("requires H = G")
    AG = InvariantSubalgebra(ctx.A, ctx.H.generators(), ctx.action)

    def forward(phi: HeckeElement):
        v = AG.express(phi.value(0))
        if v is None:
            raise ValueError("value is not G-invariant (bug)")
        return v

    def backward(a):
        return ctx.from_values({0: AG.include(a)})

    return Transport(source=ctx, target=AG, forward=forward, backward=backward)


def special_case_trivial_subgroup(ctx: HeckeContext) -> Transport:
    """H = 1: the algebra is the skew group algebra A x| G."""
    from .skewgroup import SkewGroupAlgebra

    if ctx.H.order != 1:
        raise ValueError("requires H = 1")
    sga = SkewGroupAlgebra(ctx.A, ctx.G, ctx.action)

    def forward(phi: HeckeElement):
        exp = phi.expand()
        x = sga.zero()
        for g in range(ctx.G.order):
            a = exp[ctx.cosets.coset_of[g]]
            if not a.is_zero:
                x = x + sga.term(a, g)
        return x

    def backward(x):
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = sga.coefficient_function(x, g)
        return ctx.from_values(values)

    return Transport(source=ctx, target=sga, forward=forward, backward=backward)


def special_case_normal_subgroup(ctx: HeckeContext) -> Transport:
    """H normal in G: the algebra is A^H x| (G/H)."""
    from .skewgroup import SkewGroupAlgebra

    if not is_normal(ctx.G, ctx.H):
        raise ValueError("requires H normal in G")
    Q, proj = quotient_group(ctx.G, ctx.H)
    section = [None] * Q.order
    for g in range(ctx.G.order):
        q = proj[g]
        if section[q] is None or g < section[q]:
            section[q] = g
    AH = InvariantSubalgebra(ctx.A, ctx.H.generators(), ctx.action)
    actQ = AH.induced_action(Q, section)
    sga = SkewGroupAlgebra(AH, Q, actQ)

    def forward(phi: HeckeElement):
        exp = phi.expand()
        x = sga.zero()
        for q in range(Q.order):
            v = AH.express(exp[ctx.cosets.coset_of[section[q]]])
            if v is None:
                raise ValueError("value is not H-invariant (bug)")
            if not v.is_zero:
                x = x + sga.term(v, q)
        return x

    def backward(x):
        values = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = ctx.cosets.reps[orbit.rep_coset]
            values[oi] = AH.include(sga.coefficient_function(x, proj[g]))
        return ctx.from_values(values)

    return Transport(source=ctx, target=sga, forward=forward, backward=backward,
                     info={"quotient_order": Q.order})
