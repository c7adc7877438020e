"""Skew Hecke algebras: H-invariant maps G/H -> A under convolution.

Elements are stored in the double-coset normal form: one value per H-orbit of
left cosets, each value fixed by the orbit's stabilizer H \\cap gHg^{-1}.  The
full coset assignment is recovered on demand via the H-transversal of each
orbit, and the convolution is evaluated over left-coset representatives.
"""

from __future__ import annotations

from . import linalg
from .algebras import (
    AlgebraElement,
    BasedAlgebra,
    GroupAction,
    element_from_vector,
    scalar_algebra,
    trivial_action,
)
from .groups import CosetSpace, FiniteGroup, Subgroup


class StabilizerInvarianceError(ValueError):
    """A purported Hecke value is not fixed by its orbit stabilizer."""

    def __init__(self, orbit, witness_h):
        self.orbit = orbit
        self.witness_h = witness_h
        super().__init__(
            f"value at double-coset orbit {orbit} is not fixed by stabilizer "
            f"element {witness_h}"
        )


class HeckeContext:
    """The data (G, H, A, alpha) with its coset space and module basis."""

    def __init__(self, G: FiniteGroup, H: Subgroup, A: BasedAlgebra,
                 action: GroupAction, verify_action=True, degree_cap=None):
        if action.G is not G or action.A is not A:
            raise ValueError("action does not match (G, A)")
        self.G = G
        self.H = H
        self.A = A
        self.action = action
        self.field = A.field
        self.degree_cap = degree_cap
        if verify_action and not action.verified:
            report = action.verify(degree_cap=degree_cap)
            if not report.ok:
                raise ValueError(f"invalid group action:\n{report}")
        self.cosets = CosetSpace(G, H)
        self.orbits = self.cosets.double_cosets
        self._orbit_cache = {}

    # -- double-coset module structure ---------------------------------------

    @property
    def graded(self):
        return self.A.graded

    def n_cosets(self):
        return self.cosets.n

    def orbit_invariant_basis(self, oi, degree=None):
        return self._orbit_data(oi, degree)[0]

    def _orbit_data(self, oi, degree=None):
        key = (oi, degree)
        data = self._orbit_cache.get(key)
        if data is None:
            from .algebras import invariants_compute

            stab = self.orbits[oi].stabilizer
            basis = invariants_compute(
                self.A, stab.generators(), self.action, degree=degree
            )
            labels = self.A.basis_labels(degree)
            solver = linalg.CoordinateSolver(
                self.field, [v.to_vector(labels) for v in basis], n=len(labels)
            )
            data = (basis, labels, solver)
            self._orbit_cache[key] = data
        return data

    def module_basis(self, degree=None):
        """List of (orbit_index, invariant AlgebraElement) pairs."""
        out = []
        for oi in range(len(self.orbits)):
            for v in self.orbit_invariant_basis(oi, degree):
                out.append((oi, v))
        return out

    def basis_hecke_elements(self, degree=None):
        return [
            HeckeElement(self, {oi: v}) for oi, v in self.module_basis(degree)
        ]

    def dimension(self, degree=None) -> int:
        return len(self.module_basis(degree))

    def module_coordinates(self, phi: "HeckeElement", degree=None):
        """Coordinates of phi in the module basis (same order); exact."""
        coords = []
        for oi in range(len(self.orbits)):
            basis, labels, solver = self._orbit_data(oi, degree)
            v = phi.values.get(oi, self.A.zero())
            if degree is not None:
                v = self.A.element(
                    {l: c for l, c in v.coeffs.items() if self.A.degree(l) == degree}
                )
            c = solver.coordinates(v.to_vector(labels))
            if c is None:
                raise StabilizerInvarianceError(oi, "?")
            coords.extend(c)
        return coords

    # -- element constructors -------------------------------------------------

    def validate_value(self, oi, value: AlgebraElement):
        stab = self.orbits[oi].stabilizer
        for s in stab.generators():
            if self.action.apply(s, value) != value:
                raise StabilizerInvarianceError(oi, s)

    def from_values(self, values) -> "HeckeElement":
        """Build an element from per-double-coset values (list or dict); checked."""
        if isinstance(values, dict):
            items = values.items()
        else:
            items = enumerate(values)
        vals = {}
        for oi, v in items:
            if v.is_zero:
                continue
            self.validate_value(oi, v)
            vals[oi] = v
        return HeckeElement(self, vals)

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def identity(self) -> "HeckeElement":
        """The unit: value 1_A at the identity coset H, zero elsewhere."""
        return HeckeElement(self, {0: self.A.one()})

    def embed_invariant(self, a: AlgebraElement) -> "HeckeElement":
        """A^H -> H, a |-> delta_{H,a}; requires a to be H-fixed."""
        for s in self.H.generators():
            if self.action.apply(s, a) != a:
                raise ValueError(
                    f"element is not H-invariant (moved by {self.G.name(s)})"
                )
        if a.is_zero:
            return self.zero()
        return HeckeElement(self, {0: a})

    def embed_scalar_hecke(self, rho: "HeckeElement") -> "HeckeElement":
        """H_R(G,H) -> H_R(G,H,A,alpha) by composing with R -> A."""
        src = rho.ctx
        if src.G is not self.G or src.H != self.H:
            raise ValueError("classical element lives over a different (G, H)")
        one = self.A.one()
        vals = {}
        for oi, v in rho.values.items():
            c = v.coeffs.get(0, self.field.zero)
            if not self.field.is_zero(c):
                vals[oi] = one.scale(c)
        return HeckeElement(self, vals)

    def random_element(self, rng, degree=None, coeff_range=(-3, 3)) -> "HeckeElement":
        lo, hi = coeff_range
        vals = {}
        for oi in range(len(self.orbits)):
            if self.graded and degree is None:
                v = self.A.zero()
                for d in range(self.degree_cap + 1 if self.degree_cap else 3):
                    for b in self.orbit_invariant_basis(oi, d):
                        v = v + b.scale(self.field.from_int(rng.randint(lo, hi)))
            else:
                v = self.A.zero()
                for b in self.orbit_invariant_basis(oi, degree):
                    v = v + b.scale(self.field.from_int(rng.randint(lo, hi)))
            if not v.is_zero:
                vals[oi] = v
        return HeckeElement(self, vals)

    def __repr__(self):
        return (
            f"HeckeContext(|G|={self.G.order}, |H|={self.H.order}, "
            f"cosets={self.cosets.n}, orbits={len(self.orbits)})"
        )


class HeckeElement:
    __slots__ = ("ctx", "values")

    def __init__(self, ctx: HeckeContext, values: dict):
        self.ctx = ctx
        self.values = {oi: v for oi, v in values.items() if not v.is_zero}

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.values)
        for oi, v in other.values.items():
            s = out.get(oi)
            out[oi] = v if s is None else s + v
        return HeckeElement(self.ctx, out)

    def __neg__(self):
        return HeckeElement(self.ctx, {oi: -v for oi, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HeckeElement(
            self.ctx, {oi: v.scale(c) for oi, v in self.values.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and other.ctx is self.ctx
            and other.values == self.values
        )

    def __hash__(self):
        return hash(frozenset((oi, v) for oi, v in self.values.items()))

    @property
    def is_zero(self):
        return not self.values

    def value(self, oi) -> AlgebraElement:
        return self.values.get(oi, self.ctx.A.zero())

    # -- expansion and convolution --------------------------------------------

    def expand(self):
        """Full assignment coset index -> value, via phi(h gH) = alpha_h phi(gH)."""
        ctx = self.ctx
        out = {}
        for oi, orbit in enumerate(ctx.orbits):
            v = self.values.get(oi)
            for ci in orbit.coset_indices:
                if v is None:
                    out[ci] = ctx.A.zero()
                else:
                    h = orbit.transversal[ci]
                    out[ci] = ctx.action.apply(h, v)
        return out

    def convolve(self, other: "HeckeElement", reps=None, validate=True) -> "HeckeElement":
        """(phi * psi)(gH) = sum over coset reps kH of phi(kH) alpha_k psi(k^-1 gH)."""
        self._check(other)
        ctx = self.ctx
        G = ctx.G
        cs = ctx.cosets
        if reps is None:
            reps = cs.reps
        phi_exp = self.expand()
        psi_exp = other.expand()
        vals = {}
        for oi, orbit in enumerate(ctx.orbits):
            g = cs.reps[orbit.rep_coset]
            total = ctx.A.zero()
            for ci in range(cs.n):
                a = phi_exp[ci]
                if a.is_zero:
                    continue
                k = reps[ci]
                target = cs.coset_of[G.mul(G.inverse(k), g)]
                b = psi_exp[target]
                if b.is_zero:
                    continue
                total = total + a * ctx.action.apply(k, b)
            if not total.is_zero:
                if validate:
                    ctx.validate_value(oi, total)
                vals[oi] = total
        return HeckeElement(ctx, vals)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.convolve(other)

    def expectation(self) -> AlgebraElement:
        """The conditional expectation phi |-> phi(H) in A^H."""
        return self.value(0)

    def homogeneous_degree(self):
        """Common degree of all values, or None if inhomogeneous.

        The zero element is homogeneous of every degree; reported as 0.
        """
        if not self.values:
            return 0
        degs = {v.homogeneous_degree() for v in self.values.values()}
        if len(degs) == 1 and None not in degs:
            return degs.pop()
        return None

    def _check(self, other):
        if other.ctx is not self.ctx:
            raise ValueError("elements live in different Hecke contexts")

    def __str__(self):
        ctx = self.ctx
        if not self.values:
            return "0"
        parts = []
        for oi in sorted(self.values):
            rep = ctx.cosets.reps[ctx.orbits[oi].rep_coset]
            parts.append(f"{ctx.G.name(rep)}H -> {self.values[oi]}")
        return "; ".join(parts)

    def __repr__(self):
        return f"<Hecke {self}>"


# ---------------------------------------------------------------------------
# module-level operation aliases


def hecke_from_values(ctx, values):
    return ctx.from_values(values)


def hecke_expand(phi: HeckeElement):
    return phi.expand()


def convolve(phi: HeckeElement, psi: HeckeElement):
    return phi.convolve(psi)


def hecke_identity(ctx):
    return ctx.identity()


def embed_invariant(ctx, a):
    return ctx.embed_invariant(a)


def embed_scalar_hecke(ctx, rho):
    return ctx.embed_scalar_hecke(rho)


def expectation(phi: HeckeElement):
    return phi.expectation()


def graded_degree(phi: HeckeElement):
    return phi.homogeneous_degree()


def classical_context(field, G, H) -> HeckeContext:
    """H_R(G,H): the A = R, trivial-action context."""
    A = scalar_algebra(field)
    return HeckeContext(G, H, A, trivial_action(G, A), verify_action=False)


def classical_structure_constants_counting(field, cosets: CosetSpace):
    """Structure constants of H_R(G,H) by direct double-coset counting.

    Independent of the convolution implementation: c_{ijk} counts left cosets
    kH inside double coset i with k^{-1} g_k H inside double coset j, for g_k
    the representative of double coset k.
    """
    G = cosets.G
    orbits = cosets.double_cosets
    out = {}
    for i, Di in enumerate(orbits):
        for j in range(len(orbits)):
            for k, Dk in enumerate(orbits):
                g = cosets.reps[Dk.rep_coset]
                count = 0
                for ci in Di.coset_indices:
                    krep = cosets.reps[ci]
                    target = cosets.coset_of[G.mul(G.inverse(krep), g)]
                    if cosets.orbit_of_coset[target] == j:
                        count += 1
                if count:
                    out[(i, j, k)] = field.from_int(count)
    return out


def structure_constants(ctx: HeckeContext, degree_cap=None):
    """Materialize the product on the double-coset module basis.

    Returns (basis, rows) where basis is the module-basis descriptor list and
    rows are (i, j, k, coeff) with basis_i * basis_j = sum_k c ... basis_k.
    For graded contexts the basis covers degrees 0..degree_cap and outputs are
    expressed in the degree-(d_i + d_j) basis.
    """
    if ctx.graded:
        if degree_cap is None:
            degree_cap = ctx.degree_cap
            if degree_cap is None:
                raise ValueError("graded context needs a degree cap")
        basis = []
        index_ranges = {}
        for d in range(degree_cap + 1):
            mb = ctx.module_basis(d)
            index_ranges[d] = (len(basis), len(mb))
            basis.extend((oi, v, d) for oi, v in mb)
        rows = []
        for i, (oi, vi, di) in enumerate(basis):
            for j, (oj, vj, dj) in enumerate(basis):
                phi = HeckeElement(ctx, {oi: vi})
                psi = HeckeElement(ctx, {oj: vj})
                prod = phi.convolve(psi)
                dk = di + dj
                coords = ctx.module_coordinates(prod, degree=dk)
                if dk <= degree_cap:
                    start, _ = index_ranges[dk]
                else:
                    start = None
                for t, c in enumerate(coords):
                    if not ctx.field.is_zero(c):
                        k = (start + t) if start is not None else ("deg", dk, t)
                        rows.append((i, j, k, c))
        return basis, rows
    basis = [(oi, v, 0) for oi, v in ctx.module_basis()]
    rows = []
    for i, (oi, vi, _) in enumerate(basis):
        for j, (oj, vj, _) in enumerate(basis):
            prod = HeckeElement(ctx, {oi: vi}).convolve(HeckeElement(ctx, {oj: vj}))
            coords = ctx.module_coordinates(prod)
            for k, c in enumerate(coords):
                if not ctx.field.is_zero(c):
                    rows.append((i, j, k, c))
    return basis, rows


def hecke_as_based_algebra(ctx: HeckeContext):
    """Materialize a finite Hecke context as a StructureConstantAlgebra.

    Returns (B, to_hecke, from_hecke) where to_hecke maps B elements to
    HeckeElements and from_hecke inverts it on the nose.
    """
    from .algebras import StructureConstantAlgebra

    basis, rows = structure_constants(ctx)
    products: dict = {}
    for i, j, k, c in rows:
        products.setdefault((i, j), {})[k] = c
    unit_coords = ctx.module_coordinates(ctx.identity())
    one = {
        k: c for k, c in enumerate(unit_coords) if not ctx.field.is_zero(c)
    }
    names = []
    for oi, v, _ in basis:
        rep = ctx.cosets.reps[ctx.orbits[oi].rep_coset]
        names.append(f"[{ctx.G.name(rep)}H:{v}]")
    B = StructureConstantAlgebra(ctx.field, len(basis), products, one, names=names)
    elements = [HeckeElement(ctx, {oi: v}) for oi, v, _ in basis]

    def to_hecke(x):
        out = ctx.zero()
        for i, c in x.coeffs.items():
            out = out + elements[i].scale(c)
        return out

    def from_hecke(phi):
        coords = ctx.module_coordinates(phi)
        return B.element({i: c for i, c in enumerate(coords)})

    return B, to_hecke, from_hecke
