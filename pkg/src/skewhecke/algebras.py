"""Based algebras with exact structure constants, group actions, invariants.

An algebra here always has a distinguished basis: a finite label list, or a
graded label universe enumerable per degree.  Elements are sparse
label -> scalar maps with no stored zeros.  Actions are given per group
element on basis labels and extended linearly; polynomial actions are given
on exponent vectors directly (variable permutations send monomials to
monomials).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg
from .scalars import NotAUnitError


class BasedAlgebra:
    """Base class; subclasses define labels/products for each algebra family."""

    graded = False
    commutative = False

    def __init__(self, field):
        self.field = field
        self._product_cache = {}

    # -- basis interface ----------------------------------------------------

    def labels(self):
        raise NotImplementedError

    def degree(self, label) -> int:
        return 0

    def enumerate_degree(self, d):
        if d == 0:
            return list(self.labels())
        return []

    @property
    def is_finite(self) -> bool:
        return not self.graded

    @property
    def dim(self) -> int:
        return len(self.labels())

    def basis_labels(self, degree=None):
        if self.graded:
            if degree is None:
                raise ValueError("graded algebra needs a degree for enumeration")
            return self.enumerate_degree(degree)
        return self.labels()

    # -- products -----------------------------------------------------------

    def product_on_basis(self, l1, l2) -> dict:
        raise NotImplementedError

    def product_cached(self, l1, l2) -> dict:
        key = (l1, l2)
        out = self._product_cache.get(key)
        if out is None:
            out = self.product_on_basis(l1, l2)
            self._product_cache[key] = out
        return out

    def one_coeffs(self) -> dict:
        raise NotImplementedError

    # -- element constructors ----------------------------------------------

    def element(self, coeffs) -> "AlgebraElement":
        f = self.field
        clean = {l: c for l, c in coeffs.items() if not f.is_zero(c)}
        return AlgebraElement(self, clean)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.element(self.one_coeffs())

    def basis_element(self, label) -> "AlgebraElement":
        return AlgebraElement(self, {label: self.field.one})

    def from_scalar(self, c) -> "AlgebraElement":
        return self.one().scale(c)

    # -- printing -----------------------------------------------------------

    def label_str(self, label) -> str:
        return str(label)

    def label_sort_key(self, label):
        return (self.degree(label), repr(label))


class AlgebraElement:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: BasedAlgebra, coeffs: dict):
        self.alg = alg
        self.coeffs = coeffs

    def __add__(self, other):
        f = self.alg.field
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            s = f.add(out.get(l, f.zero), c)
            if f.is_zero(s):
                out.pop(l, None)
            else:
                out[l] = s
        return AlgebraElement(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.alg.field
        return AlgebraElement(self.alg, {l: f.neg(c) for l, c in self.coeffs.items()})

    def scale(self, c):
        f = self.alg.field
        if f.is_zero(c):
            return AlgebraElement(self.alg, {})
        return AlgebraElement(self.alg, {l: f.mul(c, x) for l, x in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        f = self.alg.field
        out: dict = {}
        for l1, c1 in self.coeffs.items():
            for l2, c2 in other.coeffs.items():
                c12 = f.mul(c1, c2)
                for l3, c3 in self.alg.product_cached(l1, l2).items():
                    s = f.add(out.get(l3, f.zero), f.mul(c12, c3))
                    if f.is_zero(s):
                        out.pop(l3, None)
                    else:
                        out[l3] = s
        return AlgebraElement(self.alg, out)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneous_degree(self):
        """Degree if homogeneous (zero counts as any degree -> None), else None."""
        degs = {self.alg.degree(l) for l in self.coeffs}
        if len(degs) == 1:
            return degs.pop()
        return None

    def to_vector(self, labels):
        f = self.alg.field
        return [self.coeffs.get(l, f.zero) for l in labels]

    def __str__(self):
        if not self.coeffs:
            return "0"
        f = self.alg.field
        parts = []
        for l in sorted(self.coeffs, key=self.alg.label_sort_key):
            c = self.coeffs[l]
            ls = self.alg.label_str(l)
            cs = f.format(c)
            if ls == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ls)
            else:
                parts.append(f"{cs}*{ls}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


def element_from_vector(alg, labels, vec):
    f = alg.field
    return alg.element({l: c for l, c in zip(labels, vec) if not f.is_zero(c)})


# ---------------------------------------------------------------------------
# algebra families


class GroupAlgebra(BasedAlgebra):
    """R[K]: basis indexed by group elements, product from the group table."""

    def __init__(self, field, K):
        super().__init__(field)
        self.K = K
        self.commutative = all(
            K.mul(a, b) == K.mul(b, a) for a in range(K.order) for b in range(K.order)
        )

    def labels(self):
        return list(range(self.K.order))

    def product_on_basis(self, l1, l2):
        return {self.K.mul(l1, l2): self.field.one}

    def one_coeffs(self):
        return {0: self.field.one}

    def label_str(self, label):
        n = self.K.name(label)
        return "1" if label == 0 else f"[{n}]"

    def label_sort_key(self, label):
        return (0, label)


class FunctionAlgebra(BasedAlgebra):
    """R^G: indicator functions delta_g under the pointwise product."""

    commutative = True

    def __init__(self, field, G):
        super().__init__(field)
        self.G = G

    def labels(self):
        return list(range(self.G.order))

    def product_on_basis(self, l1, l2):
        if l1 == l2:
            return {l1: self.field.one}
        return {}

    def one_coeffs(self):
        return {g: self.field.one for g in range(self.G.order)}

    def label_str(self, label):
        return f"delta[{self.G.name(label)}]"

    def label_sort_key(self, label):
        return (0, label)


class PolynomialAlgebra(BasedAlgebra):
    """R[x_1..x_n], graded by total degree; labels are exponent tuples.

    Element arithmetic is exact and unbounded in degree; ``degree_cap`` only
    bounds basis enumeration requests.
    """

    graded = True
    commutative = True

    def __init__(self, field, nvars, degree_cap):
        super().__init__(field)
        if nvars < 1:
            raise ValueError("need at least one variable")
        if degree_cap < 0:
            raise ValueError("degree_cap must be >= 0")
        self.nvars = nvars
        self.degree_cap = degree_cap

    def degree(self, label):
        return sum(label)

    def enumerate_degree(self, d):
        if d < 0:
            return []
        if d > self.degree_cap:
            raise ValueError(
                f"degree {d} beyond enumeration cap {self.degree_cap}"
            )
        out = []
        for bars in itertools.combinations(range(d + self.nvars - 1), self.nvars - 1):
            exps = []
            prev = -1
            for b in bars:
                exps.append(b - prev - 1)
                prev = b
            exps.append(d + self.nvars - 2 - prev)
            out.append(tuple(exps))
        out.sort(reverse=True)  # lex-descending: x1^d first
        return out

    def labels(self):
        raise ValueError("polynomial algebras have no finite basis; use enumerate_degree")

    @property
    def is_finite(self):
        return False

    def product_on_basis(self, l1, l2):
        return {tuple(a + b for a, b in zip(l1, l2)): self.field.one}

    def one_coeffs(self):
        return {(0,) * self.nvars: self.field.one}

    def variable(self, i) -> AlgebraElement:
        """x_i, 1-indexed."""
        e = [0] * self.nvars
        e[i - 1] = 1
        return self.basis_element(tuple(e))

    def label_str(self, label):
        if not any(label):
            return "1"
        parts = []
        for i, e in enumerate(label):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def label_sort_key(self, label):
        return (sum(label), tuple(-e for e in label))


class MatrixAlgebra(BasedAlgebra):
    """M_n(R) on matrix units E[i,j] (labels are 0-indexed (i, j) pairs)."""

    def __init__(self, field, n):
        super().__init__(field)
        if n < 1:
            raise ValueError("n >= 1 required")
        self.n = n
        self.commutative = n == 1

    def labels(self):
        return [(i, j) for i in range(self.n) for j in range(self.n)]

    def product_on_basis(self, l1, l2):
        (i, j), (k, l) = l1, l2
        if j == k:
            return {(i, l): self.field.one}
        return {}

    def one_coeffs(self):
        return {(i, i): self.field.one for i in range(self.n)}

    def label_str(self, label):
        i, j = label
        return f"E[{i + 1},{j + 1}]"

    def label_sort_key(self, label):
        return (0, label)


class TensorAlgebra(BasedAlgebra):
    """A (x) B on pair labels; componentwise product, degrees add."""

    def __init__(self, A: BasedAlgebra, B: BasedAlgebra):
        if A.field != B.field:
            raise ValueError("tensor factors must share the scalar field")
        super().__init__(A.field)
        self.A = A
        self.B = B
        self.graded = A.graded or B.graded
        self.commutative = A.commutative and B.commutative

    def labels(self):
        return [(a, b) for a in self.A.labels() for b in self.B.labels()]

    def degree(self, label):
        return self.A.degree(label[0]) + self.B.degree(label[1])

    def enumerate_degree(self, d):
        out = []
        for da in range(d + 1):
            la = self.A.enumerate_degree(da)
            lb = self.B.enumerate_degree(d - da)
            out.extend((a, b) for a in la for b in lb)
        return out

    @property
    def is_finite(self):
        return self.A.is_finite and self.B.is_finite

    def product_on_basis(self, l1, l2):
        f = self.field
        pa = self.A.product_cached(l1[0], l2[0])
        pb = self.B.product_cached(l1[1], l2[1])
        return {
            (a, b): f.mul(ca, cb)
            for a, ca in pa.items()
            for b, cb in pb.items()
        }

    def one_coeffs(self):
        f = self.field
        oa = self.A.one_coeffs()
        ob = self.B.one_coeffs()
        return {
            (a, b): f.mul(ca, cb) for a, ca in oa.items() for b, cb in ob.items()
        }

    def pure(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        f = self.field
        return self.element(
            {
                (a, b): f.mul(ca, cb)
                for a, ca in x.coeffs.items()
                for b, cb in y.coeffs.items()
            }
        )

    def label_str(self, label):
        return f"{self.A.label_str(label[0])}(x){self.B.label_str(label[1])}"


class OppositeAlgebra(BasedAlgebra):
    """A^op: same basis, reversed product."""

    def __init__(self, A: BasedAlgebra):
        super().__init__(A.field)
        self.A = A
        self.graded = A.graded
        self.commutative = A.commutative

    def labels(self):
        return self.A.labels()

    def degree(self, label):
        return self.A.degree(label)

    def enumerate_degree(self, d):
        return self.A.enumerate_degree(d)

    @property
    def is_finite(self):
        return self.A.is_finite

    def product_on_basis(self, l1, l2):
        return self.A.product_cached(l2, l1)

    def one_coeffs(self):
        return self.A.one_coeffs()

    def label_str(self, label):
        return self.A.label_str(label)

    def to_op(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self, dict(x.coeffs))

    def from_op(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.A, dict(x.coeffs))


class StructureConstantAlgebra(BasedAlgebra):
    """Finite-dimensional algebra given by an explicit structure-constant table."""

    def __init__(self, field, size, products, one_coeffs_, names=None, commutative=False):
        super().__init__(field)
        self.size = size
        self._products = products  # (i, j) -> {k: c}; missing means zero
        self._one = dict(one_coeffs_)
        self.names = names or [f"b{i}" for i in range(size)]
        self.commutative = commutative

    def labels(self):
        return list(range(self.size))

    def product_on_basis(self, l1, l2):
        return self._products.get((l1, l2), {})

    def one_coeffs(self):
        return dict(self._one)

    def label_str(self, label):
        return self.names[label]

    def label_sort_key(self, label):
        return (0, label)


def scalar_algebra(field) -> StructureConstantAlgebra:
    """R itself as a one-dimensional based algebra."""
    return StructureConstantAlgebra(
        field, 1, {(0, 0): {0: field.one}}, {0: field.one}, names=["1"],
        commutative=True,
    )


# functional aliases matching the operation names used elsewhere
def algebra_group(field, K):
    return GroupAlgebra(field, K)


def algebra_functions(field, G):
    return FunctionAlgebra(field, G)


def algebra_polynomial(field, nvars, degree_cap):
    return PolynomialAlgebra(field, nvars, degree_cap)


def algebra_matrix(field, n):
    return MatrixAlgebra(field, n)


def algebra_tensor(A, B):
    return TensorAlgebra(A, B)


def algebra_opposite(A):
    return OppositeAlgebra(A)


# ---------------------------------------------------------------------------
# structural checks


def check_associativity(A: BasedAlgebra, degree_cap=None, max_triples=None, rng=None):
    """Associativity + unitality on basis triples; exhaustive when small.

    Returns a list of violation witnesses (empty = pass).
    """
    if A.graded:
        cap = degree_cap if degree_cap is not None else 2
        labels = []
        for d in range(cap + 1):
            labels.extend(A.enumerate_degree(d))
    else:
        labels = A.labels()
    one = A.one()
    failures = []
    for l in labels:
        b = A.basis_element(l)
        if one * b != b or b * one != b:
            failures.append(("unit", l))
    triples = [(a, b, c) for a in labels for b in labels for c in labels]
    if max_triples is not None and len(triples) > max_triples and rng is not None:
        triples = [triples[rng.randrange(len(triples))] for _ in range(max_triples)]
    for la, lb, lc in triples:
        ea, eb, ec = A.basis_element(la), A.basis_element(lb), A.basis_element(lc)
        if (ea * eb) * ec != ea * (eb * ec):
            failures.append(("associativity", (la, lb, lc)))
    return failures


# ---------------------------------------------------------------------------
# group actions


@dataclass
class ActionReport:
    ok: bool
    failures: list = dc_field(default_factory=list)

    def __str__(self):
        if self.ok:
            return "action verification: PASS"
        lines = ["action verification: FAIL"]
        for check, witness in self.failures:
            lines.append(f"  {check}: witness {witness}")
        return "\n".join(lines)


class GroupAction:
    """An action of G on A by algebra automorphisms, given on basis labels."""

    def __init__(self, G, A: BasedAlgebra, on_label, name="action"):
        self.G = G
        self.A = A
        self._on_label = on_label
        self.name = name
        self._cache = {}
        self.verified = False

    def on_label(self, g: int, label) -> AlgebraElement:
        key = (g, label)
        out = self._cache.get(key)
        if out is None:
            out = self._on_label(g, label)
            self._cache[key] = out
        return out

    def apply(self, g: int, x: AlgebraElement) -> AlgebraElement:
        if g == 0:
            return x
        out = self.A.zero()
        for l, c in x.coeffs.items():
            out = out + self.on_label(g, l).scale(c)
        return out

    def verify(self, degree_cap=None) -> ActionReport:
        A, G = self.A, self.G
        if A.graded:
            cap = degree_cap if degree_cap is not None else 2
            labels = []
            for d in range(cap + 1):
                labels.extend(A.enumerate_degree(d))
        else:
            labels = A.labels()
        failures = []
        for l in labels:
            if self.on_label(0, l) != A.basis_element(l):
                failures.append(("identity", l))
        for g in range(G.order):
            for k in range(G.order):
                gk = G.mul(g, k)
                for l in labels:
                    if self.apply(g, self.on_label(k, l)) != self.on_label(gk, l):
                        failures.append(("composition", (g, k, l)))
                        break
        one = A.one()
        for g in range(G.order):
            if self.apply(g, one) != one:
                failures.append(("unit", g))
            for l1 in labels:
                for l2 in labels:
                    lhs = self.apply(g, A.basis_element(l1) * A.basis_element(l2))
                    rhs = self.on_label(g, l1) * self.on_label(g, l2)
                    if lhs != rhs:
                        failures.append(("multiplicativity", (g, l1, l2)))
                        break
        if A.graded:
            for g in range(G.order):
                for l in labels:
                    img = self.on_label(g, l)
                    if not img.is_zero and img.homogeneous_degree() != A.degree(l):
                        failures.append(("degree", (g, l)))
        self.verified = not failures
        return ActionReport(ok=not failures, failures=failures)


def trivial_action(G, A) -> GroupAction:
    return GroupAction(G, A, lambda g, l: A.basis_element(l), name="trivial")


def permutation_variable_action(G, A: PolynomialAlgebra) -> GroupAction:
    """Variable-permuting action of a permutation group on R[x_1..x_n]."""
    if G.perms is None:
        raise ValueError("group carries no permutation data")
    if len(G.perms[0]) != A.nvars:
        raise ValueError("permutation degree does not match variable count")

    def on_label(g, label):
        p = G.perms[g]
        out = [0] * A.nvars
        for i, e in enumerate(label):
            out[p[i]] = e
        return A.basis_element(tuple(out))

    return GroupAction(G, A, on_label, name="permute_variables")


def left_translation_action(G, A: FunctionAlgebra) -> GroupAction:
    """alpha_g delta_k = delta_{gk} on the function algebra of G."""
    if A.G is not G:
        raise ValueError("function algebra must live on the acting group")
    return GroupAction(
        G, A, lambda g, k: A.basis_element(G.mul(g, k)), name="left_translation"
    )


def group_automorphism_action(G, A: GroupAlgebra, phi) -> GroupAction:
    """Linear extension of a G-action on the group K by automorphisms.

    phi(g, n) is the image of the K-element n under g.
    """
    return GroupAction(G, A, lambda g, n: A.basis_element(phi(g, n)), name="group_automorphism")


def conjugation_action(G, A: GroupAlgebra) -> GroupAction:
    if A.K is not G:
        raise ValueError("conjugation action needs A = R[G]")
    return group_automorphism_action(G, A, lambda g, n: G.conjugate(g, n))


def tensor_product_action(Gprod, project1, project2, act1: GroupAction, act2: GroupAction, A: TensorAlgebra) -> GroupAction:
    def on_label(g, label):
        x = act1.on_label(project1[g], label[0])
        y = act2.on_label(project2[g], label[1])
        return A.pure(x, y)

    return GroupAction(Gprod, A, on_label, name="tensor")


def opposite_action(act: GroupAction, A_op: OppositeAlgebra) -> GroupAction:
    def on_label(g, label):
        return A_op.to_op(act.on_label(g, label))

    return GroupAction(act.G, A_op, on_label, name=f"{act.name}^op")


def restricted_action(K, embed, act: GroupAction) -> GroupAction:
    """Restriction of an action to a subgroup-as-group K with embedding list."""
    return GroupAction(
        K, act.A, lambda k, l: act.on_label(embed[k], l), name=f"{act.name}|K"
    )


def quotient_lift_action(Q, section, act: GroupAction, A) -> GroupAction:
    """Action of a quotient group via a section (list: Q element -> G element).

    Only valid when the kernel acts trivially on A; verified by the caller.
    """
    return GroupAction(Q, A, lambda q, l: act.on_label(section[q], l), name=f"{act.name}^N")


def element_inverse(a: AlgebraElement) -> AlgebraElement:
    """Inverse of a unit in a finite-basis algebra, by exact linear solve."""
    A = a.alg
    labels = A.labels()
    f = A.field
    # left-multiplication matrix: columns are a * e_j
    cols = [(a * A.basis_element(l)).to_vector(labels) for l in labels]
    rows = [[cols[j][i] for j in range(len(labels))] for i in range(len(labels))]
    rhs = A.one().to_vector(labels)
    x = linalg.solve(f, rows, rhs)
    if x is None:
        raise NotAUnitError("element is not a unit")
    inv = element_from_vector(A, labels, x)
    if a * inv != A.one() or inv * a != A.one():
        raise NotAUnitError("element has no two-sided inverse")
    return inv


def cocycle_perturbed_action(act: GroupAction, chi: dict) -> GroupAction:
    """beta_g a = chi(g) (alpha_g a) chi(g)^{-1} for a family of units chi."""
    A = act.A
    inverses = {g: element_inverse(u) for g, u in chi.items()}

    def on_label(g, label):
        return chi[g] * act.on_label(g, label) * inverses[g]

    return GroupAction(act.G, A, on_label, name=f"{act.name}^chi")


def action_make(spec: str, G, A) -> GroupAction:
    """Build one of the named actions from a text descriptor."""
    s = spec.strip().lower()
    if s == "trivial":
        return trivial_action(G, A)
    if s in ("permute_variables", "permutation"):
        return permutation_variable_action(G, A)
    if s == "left_translation":
        return left_translation_action(G, A)
    if s == "conjugation":
        return conjugation_action(G, A)
    raise ValueError(f"unknown action spec {spec!r}")


def action_verify(action: GroupAction, degree_cap=None) -> ActionReport:
    return action.verify(degree_cap=degree_cap)


# ---------------------------------------------------------------------------
# invariants


def invariants_compute(A: BasedAlgebra, S_elements, action: GroupAction, degree=None):
    """Exact basis of the S-fixed subspace of A (or of its degree-d part).

    S_elements is an iterable of group-element indices; invariance is imposed
    for each of them, so pass generators (or the whole subgroup).
    """
    if A.graded and degree is None:
        raise ValueError("graded algebra requires a degree")
    labels = A.basis_labels(degree)
    f = A.field
    gens = [s for s in S_elements if s != 0]
    rows = []
    for s in gens:
        cols = []
        for l in labels:
            img = action.on_label(s, l) - A.basis_element(l)
            cols.append(img.to_vector(labels))
        for i in range(len(labels)):
            rows.append([cols[j][i] for j in range(len(labels))])
    vectors = linalg.nullspace(f, rows, ncols=len(labels))
    return [element_from_vector(A, labels, v) for v in vectors]


def averaging_image(A: BasedAlgebra, S_elements, action: GroupAction, degree=None):
    """Image basis of the averaging operator (1/|S|) sum alpha_s; needs |S| a unit."""
    labels = A.basis_labels(degree)
    f = A.field
    S = list(S_elements)
    inv = f.inv(f.from_int(len(S)))
    span = linalg.SpanBasis(f, len(labels))
    out = []
    for l in labels:
        img = A.zero()
        for s in S:
            img = img + action.on_label(s, l)
        img = img.scale(inv)
        if span.insert(img.to_vector(labels)):
            out.append(img)
    return out


class InvariantSubalgebra(BasedAlgebra):
    """A^S as a based algebra; labels are indices into the invariant basis.

    Finite case: labels 0..m-1.  Graded case: labels (d, i) with per-degree
    bases computed lazily up to the underlying enumeration cap.
    """

    def __init__(self, A: BasedAlgebra, S_elements, action: GroupAction):
        super().__init__(A.field)
        self.A = A
        self.S_elements = list(S_elements)
        self.action = action
        self.graded = A.graded
        self.commutative = A.commutative
        self._by_degree = {}
        if not A.graded:
            self._finite_basis = invariants_compute(A, self.S_elements, action)
            self._finite_labels = A.labels()
            self._solver = linalg.CoordinateSolver(
                A.field,
                [v.to_vector(self._finite_labels) for v in self._finite_basis],
                n=len(self._finite_labels),
            )

    # -- degree machinery ---------------------------------------------------

    def _degree_data(self, d):
        data = self._by_degree.get(d)
        if data is None:
            basis = invariants_compute(self.A, self.S_elements, self.action, degree=d)
            labels = self.A.enumerate_degree(d)
            solver = linalg.CoordinateSolver(
                self.field, [v.to_vector(labels) for v in basis], n=len(labels)
            )
            data = (basis, labels, solver)
            self._by_degree[d] = data
        return data

    def labels(self):
        if self.graded:
            raise ValueError("graded invariant subalgebra has no finite basis")
        return list(range(len(self._finite_basis)))

    def degree(self, label):
        return label[0] if self.graded else 0

    def enumerate_degree(self, d):
        if not self.graded:
            return super().enumerate_degree(d)
        basis, _, _ = self._degree_data(d)
        return [(d, i) for i in range(len(basis))]

    @property
    def is_finite(self):
        return not self.graded

    # -- inclusion / expression ---------------------------------------------

    def include_label(self, label) -> AlgebraElement:
        if self.graded:
            d, i = label
            return self._degree_data(d)[0][i]
        return self._finite_basis[label]

    def include(self, x: AlgebraElement) -> AlgebraElement:
        out = self.A.zero()
        for l, c in x.coeffs.items():
            out = out + self.include_label(l).scale(c)
        return out

    def express(self, a: AlgebraElement):
        """Express an invariant element of A in this basis; None if not invariant."""
        if self.graded:
            out: dict = {}
            by_deg: dict = {}
            for l, c in a.coeffs.items():
                by_deg.setdefault(self.A.degree(l), {})[l] = c
            for d, coeffs in by_deg.items():
                basis, labels, solver = self._degree_data(d)
                vec = [coeffs.get(l, self.field.zero) for l in labels]
                coords = solver.coordinates(vec)
                if coords is None:
                    return None
                for i, c in enumerate(coords):
                    if not self.field.is_zero(c):
                        out[(d, i)] = c
            return AlgebraElement(self, out)
        coords = self._solver.coordinates(a.to_vector(self._finite_labels))
        if coords is None:
            return None
        return self.element({i: c for i, c in enumerate(coords)})

    # -- algebra structure ---------------------------------------------------

    def product_on_basis(self, l1, l2):
        prod = self.include_label(l1) * self.include_label(l2)
        expr = self.express(prod)
        if expr is None:
            raise ArithmeticError("invariant subalgebra is not closed (bug)")
        return dict(expr.coeffs)

    def one_coeffs(self):
        expr = self.express(self.A.one())
        if expr is None:
            raise ArithmeticError("unit is not invariant (bug)")
        return dict(expr.coeffs)

    def label_str(self, label):
        return f"inv<{self.A.label_str(max(self.include_label(label).coeffs, key=self.A.label_sort_key))}+..>" \
            if len(self.include_label(label).coeffs) > 1 else \
            self.A.label_str(next(iter(self.include_label(label).coeffs)))

    def induced_action(self, Q, lift) -> GroupAction:
        """Action of a group Q on A^S, where lift maps Q elements to G elements.

        Each lift(q) must preserve the invariant subspace; express() failures
        surface as errors.
        """

        def on_label(q, label):
            img = self.action.apply(lift[q] if not callable(lift) else lift(q),
                                    self.include_label(label))
            expr = self.express(img)
            if expr is None:
                raise ArithmeticError("induced action does not preserve invariants")
            return expr

        return GroupAction(Q, self, on_label, name="induced")
