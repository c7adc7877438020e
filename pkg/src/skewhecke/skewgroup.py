"""The skew group algebra A x| G, its Hecke idempotent, and corner bases.

Elements are sparse maps (basis label of A, group element) -> scalar with the
twisted product (a.g)(b.k) = a (alpha_g b) . (gk).
"""

from __future__ import annotations

from . import linalg
from .algebras import AlgebraElement, BasedAlgebra, GroupAction
from .scalars import NotAUnitError


class SkewGroupAlgebra:
    def __init__(self, A: BasedAlgebra, G, action: GroupAction):
        if action.A is not A or action.G is not G:
            raise ValueError("action does not match (A, G)")
        self.A = A
        self.G = G
        self.action = action
        self.field = A.field

    def element(self, coeffs: dict) -> "SkewGroupElement":
        f = self.field
        clean = {k: c for k, c in coeffs.items() if not f.is_zero(c)}
        return SkewGroupElement(self, clean)

    def zero(self):
        return SkewGroupElement(self, {})

    def one(self):
        return self.element({(l, 0): c for l, c in self.A.one_coeffs().items()})

    def term(self, a: AlgebraElement, g: int) -> "SkewGroupElement":
        return self.element({(l, g): c for l, c in a.coeffs.items()})

    def basis_pairs(self, degree=None):
        labels = self.A.basis_labels(degree)
        return [(l, g) for l in labels for g in range(self.G.order)]

    @property
    def dim(self):
        return self.A.dim * self.G.order

    def coefficient_function(self, x: "SkewGroupElement", g: int) -> AlgebraElement:
        """The A-coefficient of the group element g in x."""
        return self.A.element(
            {l: c for (l, gg), c in x.coeffs.items() if gg == g}
        )


class SkewGroupElement:
    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: SkewGroupAlgebra, coeffs: dict):
        self.parent = parent
        self.coeffs = coeffs

    def __add__(self, other):
        f = self.parent.field
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = f.add(out.get(k, f.zero), c)
            if f.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return SkewGroupElement(self.parent, out)

    def __neg__(self):
        f = self.parent.field
        return SkewGroupElement(
            self.parent, {k: f.neg(c) for k, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.parent.field
        if f.is_zero(c):
            return SkewGroupElement(self.parent, {})
        return SkewGroupElement(
            self.parent, {k: f.mul(c, x) for k, x in self.coeffs.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, SkewGroupElement) or other.parent is not self.parent:
            return NotImplemented
        p = self.parent
        f = p.field
        A, G, act = p.A, p.G, p.action
        out: dict = {}
        for (l1, g), c1 in self.coeffs.items():
            for (l2, k), c2 in other.coeffs.items():
                gk = G.mul(g, k)
                c12 = f.mul(c1, c2)
                twisted = act.on_label(g, l2)
                for lt, ct in twisted.coeffs.items():
                    for l3, c3 in A.product_cached(l1, lt).items():
                        key = (l3, gk)
                        s = f.add(out.get(key, f.zero), f.mul(c12, f.mul(ct, c3)))
                        if f.is_zero(s):
                            out.pop(key, None)
                        else:
                            out[key] = s
        return SkewGroupElement(p, out)

    def __eq__(self, other):
        return (
            isinstance(other, SkewGroupElement)
            and other.parent is self.parent
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def is_zero(self):
        return not self.coeffs

    def to_vector(self, pairs):
        f = self.parent.field
        return [self.coeffs.get(p, f.zero) for p in pairs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        p = self.parent
        f = p.field
        parts = []
        for (l, g) in sorted(
            self.coeffs, key=lambda k: (k[1], p.A.label_sort_key(k[0]))
        ):
            c = self.coeffs[(l, g)]
            parts.append(f"{f.format(c)}*{p.A.label_str(l)}.{p.G.name(g)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


def skew_multiply(x: SkewGroupElement, y: SkewGroupElement) -> SkewGroupElement:
    if x.parent is not y.parent:
        raise ValueError("elements live in different skew group algebras")
    return x * y


def hecke_idempotent(sga: SkewGroupAlgebra, H) -> SkewGroupElement:
    """e_H = (1/|H|) sum_h 1_A . h; requires |H| a unit in the field."""
    f = sga.field
    try:
        inv = f.inv(f.from_int(H.order))
    except NotAUnitError as exc:
        raise NotAUnitError(
            f"|H| = {H.order} is not a unit; corner-ring model unavailable"
        ) from exc
    coeffs: dict = {}
    for l, c in sga.A.one_coeffs().items():
        for h in H.elements:
            coeffs[(l, h)] = f.mul(inv, c)
    e = sga.element(coeffs)
    if e * e != e:
        raise ArithmeticError("e_H is not idempotent (bug)")
    return e


def corner_basis(sga: SkewGroupAlgebra, e: SkewGroupElement, degree=None):
    """Exact basis of e (A x| G) e, spanned by {e.(b,g).e} and rank-reduced."""
    pairs = sga.basis_pairs(degree)
    span = linalg.SpanBasis(sga.field, len(pairs))
    basis = []
    for (l, g) in pairs:
        x = e * sga.term(sga.A.basis_element(l), g) * e
        if x.is_zero:
            continue
        if span.insert(x.to_vector(pairs)):
            basis.append(x)
    return basis
