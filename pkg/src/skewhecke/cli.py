"""Command-line front end: dims, mul, sc (structure constants), verify.

A job configuration is a line-oriented key = value document:

    field = rationals              # or prime_field(p)
    group = symmetric(3)           # symmetric(n) | cyclic(n) | dihedral(n)
    subgroup = (1 2)               # generator list, comma separated; or trivial | full
    algebra = polynomial(3)        # scalar | functions | group(self) | group(<spec>)
                                   # | matrix(n) | polynomial(nvars)
    action = permute_variables     # trivial | left_translation | conjugation
    degree_cap = 2                 # graded contexts only

Hecke elements are written as a parenthesised list of per-double-coset values
in canonical orbit order, e.g. ``(2; 1)`` or ``(x3; x1 + -1*x2)``; values use
the per-family label syntax (monomials ``x1^2*x3``, group elements ``[(1 2)]``,
indicator functions ``delta[(1 2)]``, matrix units ``E[1,2]``).
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from dataclasses import dataclass

from . import linalg
from .algebras import (
    FunctionAlgebra,
    GroupAlgebra,
    MatrixAlgebra,
    PolynomialAlgebra,
    StructureConstantAlgebra,
    conjugation_action,
    left_translation_action,
    permutation_variable_action,
    scalar_algebra,
    trivial_action,
    trivial_action as _trivial_action,
)
from .groups import (
    Subgroup,
    cyclic_group,
    full_subgroup,
    group_make,
    power_group,
    subgroup_from_generators,
    symmetric_group,
    trivial_subgroup,
)
from .hecke import (
    HeckeContext,
    HeckeElement,
    classical_context,
    classical_structure_constants_counting,
    structure_constants,
)
from .scalars import NotAUnitError, field_make
from .skewgroup import SkewGroupAlgebra, corner_basis, hecke_idempotent
from .isomorphisms import (
    CocycleConditionError,
    StoneModel,
    cocycle_transport,
    conjugate_transport,
    from_corner,
    from_matrix,
    intermediate_embed,
    matrix_invariance_witness,
    matrix_multiplicativity_witness,
    matrix_unit_matrix,
    product_transport,
    quotient_transport,
    semidirect_transport,
    opposite_transport,
    to_corner,
    to_matrix,
    verify_algebra_map,
)


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    field: str = "rationals"
    group: str = "symmetric(3)"
    subgroup: str = "(1 2)"
    algebra: str = "scalar"
    action: str = "trivial"
    degree_cap: int = 2

    def canonical(self) -> str:
        return (
            f"field = {self.field}\n"
            f"group = {self.group}\n"
            f"subgroup = {self.subgroup}\n"
            f"algebra = {self.algebra}\n"
            f"action = {self.action}\n"
            f"degree_cap = {self.degree_cap}\n"
        )


def parse_config(text: str) -> JobConfig:
    cfg = JobConfig()
    known = {"field", "group", "subgroup", "algebra", "action", "degree_cap"}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key == "degree_cap":
            try:
                cfg.degree_cap = int(value)
            except ValueError:
                raise ConfigError(f"line {lineno}: degree_cap must be an integer")
        else:
            setattr(cfg, key, value)
    return cfg


@dataclass
class BuiltContext:
    cfg: JobConfig
    ctx: HeckeContext


def build_context(cfg: JobConfig) -> BuiltContext:
    field = field_make(cfg.field)
    G = group_make(cfg.group)
    sub = cfg.subgroup.strip().lower()
    if sub == "trivial":
        H = trivial_subgroup(G)
    elif sub == "full":
        H = full_subgroup(G)
    else:
        gens = [G.element_by_name(t.strip()) for t in _split_top(cfg.subgroup, ",")]
        H = subgroup_from_generators(G, gens)
    alg = cfg.algebra.strip().lower()
    if alg == "scalar":
        A = scalar_algebra(field)
    elif alg == "functions":
        A = FunctionAlgebra(field, G)
    elif alg.startswith("group(") and alg.endswith(")"):
        inner = alg[6:-1].strip()
        K = G if inner == "self" else group_make(inner)
        A = GroupAlgebra(field, K)
    elif alg.startswith("matrix(") and alg.endswith(")"):
        A = MatrixAlgebra(field, int(alg[7:-1]))
    elif alg.startswith("polynomial(") and alg.endswith(")"):
        nvars = int(alg[11:-1])
        # enumeration cap must cover products of two capped module elements
        A = PolynomialAlgebra(field, nvars, 2 * cfg.degree_cap)
    else:
        raise ConfigError(f"unknown algebra spec {cfg.algebra!r}")
    act = cfg.action.strip().lower()
    if act == "trivial":
        action = trivial_action(G, A)
    elif act in ("permute_variables", "permutation"):
        action = permutation_variable_action(G, A)
    elif act == "left_translation":
        action = left_translation_action(G, A)
    elif act == "conjugation":
        action = conjugation_action(G, A)
    else:
        raise ConfigError(f"unknown action spec {cfg.action!r}")
    ctx = HeckeContext(G, H, A, action, degree_cap=cfg.degree_cap)
    return BuiltContext(cfg=cfg, ctx=ctx)


# ---------------------------------------------------------------------------
# element literals


def _split_top(s: str, seps: str):
    """Split at top level, treating (...) and [...] as opaque."""
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (p.strip() for p in parts) if p]


_COEFF_RE = re.compile(r"^-?\d+(/\d+)?")


def parse_algebra_element(A, s: str):
    field = A.field
    s = s.strip()
    if s in ("0", ""):
        return A.zero()
    out = A.zero()
    for term in _split_top(s, "+"):
        sign = field.one
        term = term.strip()
        while term.startswith("-"):
            sign = field.neg(sign)
            term = term[1:].strip()
        m = _COEFF_RE.match(term)
        coeff = field.one
        rest = term
        if m and not term.startswith("x"):
            coeff = field.parse(m.group(0))
            rest = term[m.end():].strip()
            if rest.startswith("*"):
                rest = rest[1:].strip()
        coeff = field.mul(sign, coeff)
        if rest in ("", "1"):
            out = out + A.one().scale(coeff)
        else:
            out = out + A.basis_element(_parse_label(A, rest)).scale(coeff)
    return out


def _parse_label(A, s: str):
    s = s.strip()
    if isinstance(A, PolynomialAlgebra):
        exps = [0] * A.nvars
        for factor in s.split("*"):
            factor = factor.strip()
            m = re.fullmatch(r"x(\d+)(\^(\d+))?", factor)
            if not m:
                raise ValueError(f"bad monomial factor {factor!r}")
            i = int(m.group(1))
            if not 1 <= i <= A.nvars:
                raise ValueError(f"variable x{i} out of range")
            exps[i - 1] += int(m.group(3) or 1)
        return tuple(exps)
    if isinstance(A, GroupAlgebra):
        if s.startswith("[") and s.endswith("]"):
            return A.K.element_by_name(s[1:-1])
        return A.K.element_by_name(s)
    if isinstance(A, FunctionAlgebra):
        m = re.fullmatch(r"delta\[(.*)\]", s)
        if not m:
            raise ValueError(f"bad indicator-function label {s!r}")
        return A.G.element_by_name(m.group(1))
    if isinstance(A, MatrixAlgebra):
        m = re.fullmatch(r"E\[(\d+),(\d+)\]", s)
        if not m:
            raise ValueError(f"bad matrix-unit label {s!r}")
        i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
        if not (0 <= i < A.n and 0 <= j < A.n):
            raise ValueError(f"matrix-unit index out of range in {s!r}")
        return (i, j)
    if isinstance(A, StructureConstantAlgebra):
        if s in A.names:
            return A.names.index(s)
        raise ValueError(f"unknown basis label {s!r}")
    raise ValueError(f"no literal syntax for {type(A).__name__}")


def parse_hecke_element(ctx: HeckeContext, s: str) -> HeckeElement:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("Hecke element literal must be parenthesised")
    parts = _split_top(s[1:-1], ";,")
    if len(parts) != len(ctx.orbits):
        raise ValueError(
            f"expected {len(ctx.orbits)} double-coset values, got {len(parts)}"
        )
    values = {i: parse_algebra_element(ctx.A, p) for i, p in enumerate(parts)}
    return ctx.from_values(values)


def format_hecke_element(phi: HeckeElement) -> str:
    parts = []
    for oi in range(len(phi.ctx.orbits)):
        parts.append(str(phi.value(oi)))
    return "(" + "; ".join(parts) + ")"


# ---------------------------------------------------------------------------
# subcommands


def cmd_dims(built: BuiltContext, write):
    ctx = built.ctx
    write(f"|G| = {ctx.G.order}")
    write(f"|H| = {ctx.H.order}")
    write(f"[G:H] = {ctx.cosets.n}")
    write(f"double cosets = {len(ctx.orbits)}")
    for oi, orbit in enumerate(ctx.orbits):
        rep = ctx.cosets.reps[orbit.rep_coset]
        write(
            f"orbit {oi}: rep {ctx.G.name(rep)}, size {len(orbit.coset_indices)}, "
            f"stabilizer order {orbit.stabilizer.order}"
        )
    if ctx.graded:
        for d in range(ctx.degree_cap + 1):
            per = [len(ctx.orbit_invariant_basis(oi, d)) for oi in range(len(ctx.orbits))]
            write(
                f"degree {d}: dim A_{d} = {len(ctx.A.enumerate_degree(d))}, "
                f"invariants per orbit = {per}, dim = {sum(per)}"
            )
        total = sum(ctx.dimension(d) for d in range(ctx.degree_cap + 1))
        write(f"dim (degrees 0..{ctx.degree_cap}) = {total}")
    else:
        write(f"dim A = {ctx.A.dim}")
        per = [len(ctx.orbit_invariant_basis(oi)) for oi in range(len(ctx.orbits))]
        write(f"invariants per orbit = {per}")
        write(f"dim = {ctx.dimension()}")
    return 0


def cmd_mul(built: BuiltContext, lit1: str, lit2: str, write):
    ctx = built.ctx
    phi = parse_hecke_element(ctx, lit1)
    psi = parse_hecke_element(ctx, lit2)
    write(format_hecke_element(phi.convolve(psi)))
    return 0


def cmd_sc(built: BuiltContext, write):
    ctx = built.ctx
    cap = ctx.degree_cap if ctx.graded else None
    basis, rows = structure_constants(ctx, degree_cap=cap)
    for i, (oi, v, d) in enumerate(basis):
        rep = ctx.cosets.reps[ctx.orbits[oi].rep_coset]
        deg = f", degree {d}" if ctx.graded else ""
        write(f"# {i}: orbit {oi} (rep {ctx.G.name(rep)}){deg}, value {v}")
    f = ctx.field
    for i, j, k, c in rows:
        write(f"{i}\t{j}\t{k}\t{f.format(c)}")
    return 0


# ---------------------------------------------------------------------------
# verification suites


class SuiteRun:
    def __init__(self, write):
        self.write = write
        self.failed = 0
        self.executed = 0

    def record(self, name, ok, detail=""):
        self.executed += 1
        status = "PASS" if ok else "FAIL"
        if not ok:
            self.failed += 1
        suffix = f" ({detail})" if detail else ""
        self.write(f"{name}: {status}{suffix}")

    def skip(self, name, reason):
        self.write(f"{name}: SKIP ({reason})")


def _random_elements(ctx, rng, count):
    return [ctx.random_element(rng) for _ in range(count)]


def suite_assoc(run: SuiteRun, ctx, rng):
    bad = None
    for _ in range(100):
        x, y, z = _random_elements(ctx, rng, 3)
        if (x * y) * z != x * (y * z):
            bad = (x, y, z)
            break
    run.record("assoc.random_triples", bad is None,
               "100 triples" if bad is None else f"witness {bad}")
    one = ctx.identity()
    x = ctx.random_element(rng)
    run.record("assoc.unit", one * x == x and x * one == x)


def suite_decomp(run: SuiteRun, ctx, rng):
    degree = 1 if ctx.graded else None
    basis = ctx.module_basis(degree)
    run.record("decomp.basis_nonempty", len(basis) > 0, f"dim {len(basis)}")
    # bijection: coordinates of a random element round-trip
    x = ctx.random_element(rng, degree=degree)
    coords = ctx.module_coordinates(x, degree=degree)
    y = ctx.zero()
    for (oi, v), c in zip(basis, coords):
        y = y + HeckeElement(ctx, {oi: v}).scale(c)
    run.record("decomp.bijection_roundtrip", y == x)
    # bimodule law: delta_{H,a} * phi * delta_{H,a'} has values a v alpha_g a'
    bad = None
    a = _random_invariant(ctx, rng)
    ap = _random_invariant(ctx, rng)
    da, dap = ctx.embed_invariant(a), ctx.embed_invariant(ap)
    for oi, v in basis:
        phi = HeckeElement(ctx, {oi: v})
        lhs = da.convolve(phi).convolve(dap)
        g = ctx.cosets.reps[ctx.orbits[oi].rep_coset]
        expected = a * v * ctx.action.apply(g, ap)
        if lhs.values != ({oi: expected} if not expected.is_zero else {}):
            bad = oi
            break
    run.record("decomp.bimodule_law", bad is None,
               "" if bad is None else f"witness orbit {bad}")


def _random_invariant(ctx, rng, degree=None):
    from .algebras import invariants_compute

    if ctx.graded:
        out = ctx.A.zero()
        for d in range(ctx.degree_cap + 1):
            for b in invariants_compute(ctx.A, ctx.H.generators(), ctx.action, degree=d):
                out = out + b.scale(ctx.field.from_int(rng.randint(-2, 2)))
        return out
    out = ctx.A.zero()
    for b in invariants_compute(ctx.A, ctx.H.generators(), ctx.action):
        out = out + b.scale(ctx.field.from_int(rng.randint(-2, 2)))
    return out


def suite_matrix(run: SuiteRun, ctx, rng):
    xs = _random_elements(ctx, rng, 5)
    ok = all(from_matrix(ctx, to_matrix(x).entries) == x for x in xs)
    run.record("matrix.roundtrip", ok)
    ok = all(matrix_invariance_witness(ctx, to_matrix(x).entries) is None for x in xs)
    run.record("matrix.image_invariant", ok)
    pairs = [(ctx.random_element(rng), ctx.random_element(rng)) for _ in range(20)]
    w = matrix_multiplicativity_witness(ctx, pairs)
    run.record("matrix.multiplicativity", w is None,
               "20 pairs" if w is None else f"witness pair {w}")
    run.record("matrix.unit", to_matrix(ctx.identity()) == matrix_unit_matrix(ctx))
    if not ctx.graded:
        labels = ctx.A.labels()
        vecs = [to_matrix(b).to_vector(labels) for b in ctx.basis_hecke_elements()]
        r = linalg.rank(ctx.field, vecs)
        run.record("matrix.injective", r == ctx.dimension(), f"rank {r}")


def suite_corner(run: SuiteRun, ctx, rng):
    if ctx.graded:
        run.skip("corner", "coefficient algebra is infinite-dimensional")
        return
    sga = SkewGroupAlgebra(ctx.A, ctx.G, ctx.action)
    try:
        e = hecke_idempotent(sga, ctx.H)
    except NotAUnitError as exc:
        run.skip("corner", f"unavailable: {exc}")
        return
    run.record("corner.idempotent", e * e == e)
    xs = _random_elements(ctx, rng, 5)
    run.record("corner.roundtrip",
               all(from_corner(ctx, sga, to_corner(ctx, sga, x)) == x for x in xs))
    run.record("corner.image_in_corner",
               all(e * to_corner(ctx, sga, x) * e == to_corner(ctx, sga, x) for x in xs))
    ok = True
    for _ in range(20):
        x, y = _random_elements(ctx, rng, 2)
        if to_corner(ctx, sga, x * y) != to_corner(ctx, sga, x) * to_corner(ctx, sga, y):
            ok = False
            break
    run.record("corner.multiplicativity", ok, "20 pairs")
    run.record("corner.unit", to_corner(ctx, sga, ctx.identity()) == e)
    cb = corner_basis(sga, e)
    run.record("corner.dimension", len(cb) == ctx.dimension(),
               f"corner dim {len(cb)}, module dim {ctx.dimension()}")


def suite_stone(run: SuiteRun, ctx, rng):
    if not isinstance(ctx.A, FunctionAlgebra) or ctx.A.G is not ctx.G \
            or ctx.action.name != "left_translation":
        run.skip("stone", "requires the function algebra with left translation")
        return
    sm = StoneModel(ctx)
    n = sm.n
    run.record("stone.size", n == ctx.cosets.n, f"n = {n} = [G:H]")
    ok = True
    for _ in range(20):
        x, y = _random_elements(ctx, rng, 2)
        if sm.apply(x * y) != sm.apply(x) * sm.apply(y):
            ok = False
            break
    run.record("stone.multiplicativity", ok, "20 pairs")
    labels = sm.matrices.labels()
    vecs = [sm.apply(b).to_vector(labels) for b in ctx.basis_hecke_elements()]
    r = linalg.rank(ctx.field, vecs)
    run.record("stone.bijective", r == n * n and ctx.dimension() == n * n,
               f"rank {r}, dim {ctx.dimension()}, n^2 = {n * n}")
    # matrix-unit relations through preimages
    ok = True
    B = {}
    for i in range(n):
        for j in range(n):
            B[(i, j)] = sm.preimage(sm.matrices.basis_element((i, j)))
    for (i, j) in B:
        for (k, l) in B:
            prod = B[(i, j)] * B[(k, l)]
            expected = B[(i, l)] if j == k else ctx.zero()
            if prod != expected:
                ok = False
                break
    run.record("stone.matrix_units", ok, f"{n ** 4} relations")
    if ctx.G.order == 6 and ctx.H.order == 2:
        run.record(
            "stone.rank_discrepancy_flag", n == 3,
            "computed target is M_3 (|G/H| = 3); a rank-2 / M_2 description "
            "is inconsistent and is overridden",
        )


def suite_group_ops(run: SuiteRun, ctx, rng):
    f = ctx.field
    # conjugation on the configured context (finite coefficients only)
    if not ctx.graded and ctx.H.order < ctx.G.order:
        s = next(g for g in range(ctx.G.order) if g not in ctx.H)
        tr = conjugate_transport(ctx, s)
        rep = verify_algebra_map(
            "conjugate", ctx.basis_hecke_elements(), tr.forward,
            ctx.identity(), tr.target.identity(), f,
            vectorize=tr.target.module_coordinates,
            target_dim=tr.target.dimension(), rng=rng, max_pairs=60,
        )
        run.record("group_ops.conjugate", rep.ok, f"s = {ctx.G.name(s)}")
    else:
        run.skip("group_ops.conjugate", "needs finite coefficients and H < G")
    # the remaining transports run on fixed small fixtures
    G3 = symmetric_group(3)
    H3 = subgroup_from_generators(G3, [G3.element_by_name("(1 2)")])
    A3 = FunctionAlgebra(f, G3)
    ctx3 = HeckeContext(G3, H3, A3, left_translation_action(G3, A3),
                        verify_action=False)
    # quotient: S_3, H = A_3 normal? use N = A_3 <= H = A_3
    N3 = subgroup_from_generators(G3, [G3.element_by_name("(1 2 3)")])
    ctxq = HeckeContext(G3, N3, A3, left_translation_action(G3, A3),
                        verify_action=False)
    trq = quotient_transport(ctxq, N3)
    rep = verify_algebra_map(
        "quotient", ctxq.basis_hecke_elements(), trq.forward,
        ctxq.identity(), trq.target.identity(), f,
        vectorize=trq.target.module_coordinates,
        target_dim=trq.target.dimension(), rng=rng, max_pairs=60,
    )
    run.record("group_ops.quotient", rep.ok, "(S3, A3) / A3")
    # product with (C2, 1, R[C2])
    C2 = cyclic_group(2)
    A2 = GroupAlgebra(f, C2)
    ctx2 = HeckeContext(C2, trivial_subgroup(C2), A2, trivial_action(C2, A2),
                        verify_action=False)
    trp = product_transport(ctx3, ctx2)
    BT = trp.source
    basis = [BT.basis_element(l) for l in BT.labels()]
    rep = verify_algebra_map(
        "product", basis, trp.forward, BT.one(), trp.target.identity(), f,
        vectorize=trp.target.module_coordinates,
        target_dim=trp.target.dimension(), rng=rng, max_pairs=60,
    )
    run.record("group_ops.product", rep.ok, "(S3,S2) x (C2,1)")
    # intermediate: 1 <= C3 <= S3 (extend by zero)
    ctxt = HeckeContext(G3, trivial_subgroup(G3), A3,
                        left_translation_action(G3, A3), verify_action=False)
    K3 = subgroup_from_generators(G3, [G3.element_by_name("(1 2 3)")])
    tre = intermediate_embed(ctxt, K3)
    rep = verify_algebra_map(
        "intermediate", tre.source.basis_hecke_elements(), tre.forward,
        tre.source.identity(), ctxt.identity(), f,
        vectorize=ctxt.module_coordinates, rng=rng, max_pairs=60,
    )
    run.record("group_ops.intermediate", rep.ok, "C3 <= S3, injective")
    # semidirect: (Z/2)^3 x| S3 with H = S2
    Ncube, tuples, index = power_group(cyclic_group(2), 3)
    K = symmetric_group(3)

    def act(k, n):
        p = K.perms[k]
        t = tuples[n]
        out = [0, 0, 0]
        for i in range(3):
            out[p[i]] = t[i]
        return index[tuple(out)]

    Hs = subgroup_from_generators(K, [K.element_by_name("(1 2)")])
    trs = semidirect_transport(f, Ncube, K, act, Hs)
    rep = verify_algebra_map(
        "semidirect", trs.source.basis_hecke_elements(), trs.forward,
        trs.source.identity(), trs.target.identity(), f,
        vectorize=trs.target.module_coordinates,
        target_dim=trs.target.dimension(), rng=rng, max_pairs=60,
    )
    run.record("group_ops.semidirect", rep.ok,
               f"dim {trs.info['dim']} = {trs.info['classical_dim']}")


def suite_cocycle(run: SuiteRun, ctx, rng):
    f = ctx.field
    # inner-action fixture: trivial action on R[S3], H = 1, chi(g) = [g]
    G3 = symmetric_group(3)
    A = GroupAlgebra(f, G3)
    ctxc = HeckeContext(G3, trivial_subgroup(G3), A, trivial_action(G3, A),
                        verify_action=False)
    chi = {g: A.basis_element(g) for g in range(G3.order)}
    try:
        tr = cocycle_transport(ctxc, chi)
        rep = verify_algebra_map(
            "cocycle", ctxc.basis_hecke_elements(), tr.forward,
            ctxc.identity(), tr.target.identity(), f,
            vectorize=tr.target.module_coordinates,
            target_dim=tr.target.dimension(), rng=rng, max_pairs=60,
        )
        run.record("cocycle.inner_fixture", rep.ok,
                   "trivial action perturbed to conjugation")
    except CocycleConditionError as exc:
        run.record("cocycle.inner_fixture", False, str(exc))
    # violation of triviality on H must be detected
    H2 = subgroup_from_generators(G3, [G3.element_by_name("(1 2)")])
    ctxv = HeckeContext(G3, H2, A, trivial_action(G3, A), verify_action=False)
    try:
        cocycle_transport(ctxv, chi)
        run.record("cocycle.violation_detected", False, "no error raised")
    except CocycleConditionError as exc:
        witnessed = any(c == "trivial_on_H" for c, _ in exc.failures)
        run.record("cocycle.violation_detected", witnessed,
                   f"witness {exc.failures}")


def suite_opposite(run: SuiteRun, ctx, rng):
    tr = opposite_transport(ctx)
    ok = True
    for _ in range(20):
        x, y = _random_elements(ctx, rng, 2)
        if tr.forward(x * y) != tr.forward(y) * tr.forward(x):
            ok = False
            break
    run.record("opposite.anti_multiplicative", ok, "20 pairs")
    run.record("opposite.unit", tr.forward(ctx.identity()) == tr.target.identity())
    xs = _random_elements(ctx, rng, 5)
    run.record("opposite.roundtrip",
               all(tr.backward(tr.forward(x)) == x for x in xs))


def suite_graded(run: SuiteRun, ctx, rng):
    if not ctx.graded:
        run.skip("graded", "coefficient algebra is not graded")
        return
    cap = ctx.degree_cap
    ok = True
    for d1 in range(cap + 1):
        for d2 in range(cap + 1 - d1):
            for oi, v in ctx.module_basis(d1):
                for oj, w in ctx.module_basis(d2):
                    p = HeckeElement(ctx, {oi: v}) * HeckeElement(ctx, {oj: w})
                    if not p.is_zero and p.homogeneous_degree() != d1 + d2:
                        ok = False
    run.record("graded.degree_additive", ok, f"degrees 0..{cap}")


def suite_s3(run: SuiteRun, ctx, rng):
    G = ctx.G
    if G.order != 6 or G.perms is None or ctx.H.order != 2 \
            or G.element_by_name("(1 2)") not in ctx.H:
        run.skip("s3_fixtures", "requires (S3, S2 = <(1 2)>)")
        return
    t12 = G.element_by_name("(1 2)")
    t23 = G.element_by_name("(2 3)")
    t13 = G.element_by_name("(1 3)")
    act = ctx.action
    degree = 1 if ctx.graded else None
    ok = True
    for _ in range(30):
        a, ap = _random_invariant(ctx, rng), _random_invariant(ctx, rng)
        b = _random_free(ctx, rng)
        bp = _random_free(ctx, rng)
        phi = ctx.from_values({0: a, 1: b})
        psi = ctx.from_values({0: ap, 1: bp})
        prod = phi.convolve(psi)
        t = b * act.apply(t23, bp)
        first = a * ap + t + act.apply(t12, t)
        second = a * bp + b * act.apply(t23, ap) \
            + act.apply(t12, b) * act.apply(t13, bp)
        if prod.value(0) != first or prod.value(1) != second:
            ok = False
            break
    run.record("s3_fixtures.product_formula", ok, "30 random pairs")
    # classical specialization: (0,1)*(0,1) = (2,1)
    cl = classical_context(ctx.field, G, ctx.H)
    one = cl.A.one()
    t = cl.from_values({1: one})
    sq = t.convolve(t)
    ok = sq.value(0) == one.scale(ctx.field.from_int(2)) and sq.value(1) == one
    run.record("s3_fixtures.classical_square", ok, "(0,1)^2 = (2,1)")


def _random_free(ctx, rng):
    if ctx.graded:
        out = ctx.A.zero()
        for d in range(ctx.degree_cap + 1):
            for l in ctx.A.enumerate_degree(d):
                out = out + ctx.A.basis_element(l).scale(
                    ctx.field.from_int(rng.randint(-2, 2)))
        return out
    out = ctx.A.zero()
    for l in ctx.A.labels():
        out = out + ctx.A.basis_element(l).scale(
            ctx.field.from_int(rng.randint(-2, 2)))
    return out


SUITES = {
    "assoc": suite_assoc,
    "decomp": suite_decomp,
    "matrix": suite_matrix,
    "corner": suite_corner,
    "stone": suite_stone,
    "group_ops": suite_group_ops,
    "cocycle": suite_cocycle,
    "opposite": suite_opposite,
    "graded": suite_graded,
    "s3_fixtures": suite_s3,
}


def cmd_verify(built: BuiltContext, suite: str, seed: int, write):
    ctx = built.ctx
    write("verify report")
    write(f"seed = {seed}")
    write("config:")
    for line in built.cfg.canonical().rstrip().splitlines():
        write("  " + line)
    names = list(SUITES) if suite == "all" else [suite]
    run = SuiteRun(write)
    for name in names:
        rng = random.Random(seed)
        SUITES[name](run, ctx, rng)
    write(f"checks executed = {run.executed}, failed = {run.failed}")
    return 0 if run.failed == 0 else 1


# ---------------------------------------------------------------------------


def main(argv=None):
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="path to a job configuration file")
    common.add_argument("--seed", type=int)
    common.add_argument("--degree-cap", type=int)
    common.add_argument("--out", help="write output to this path instead of stdout")
    parser = argparse.ArgumentParser(
        prog="skewhecke",
        description="Exact skew Hecke algebra computations and verification.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", help="print dimension data", parents=[common])
    p_mul = sub.add_parser("mul", help="convolve two Hecke element literals",
                           parents=[common])
    p_mul.add_argument("phi")
    p_mul.add_argument("psi")
    sub.add_parser("sc", help="emit structure constants (tab-separated)",
                   parents=[common])
    p_ver = sub.add_parser("verify", help="run a verification suite",
                           parents=[common])
    p_ver.add_argument("suite", choices=["all"] + list(SUITES))
    args = parser.parse_args(argv)
    config_path = getattr(args, "config", None)
    seed = getattr(args, "seed", 0)
    degree_cap = getattr(args, "degree_cap", None)
    out_path = getattr(args, "out", None)

    if config_path:
        with open(config_path, "r", encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    else:
        cfg = JobConfig()
    if degree_cap is not None:
        cfg.degree_cap = degree_cap

    lines = []

    def write(s):
        lines.append(s)

    try:
        built = build_context(cfg)
        if args.command == "dims":
            code = cmd_dims(built, write)
        elif args.command == "mul":
            code = cmd_mul(built, args.phi, args.psi, write)
        elif args.command == "sc":
            code = cmd_sc(built, write)
        else:
            code = cmd_verify(built, args.suite, seed, write)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
