"""Randomized generators and the exact-equality law suite.

Every law is an equation between two independently computed values of
exact arithmetic, so checks use plain ==, never tolerances. (An inexact
scalar instance must not be wired into this harness.) Checks refute
rather than prove: each law draws `cases` samples from a stream derived
from (seed, law name), so runs are reproducible and parallelizable
without changing results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .dist import (
    Dist,
    FiniteSpace,
    biproduct_merge,
    biproduct_split,
    dirac,
    dist_add,
    dist_sub,
    flatten,
    linear_extend,
    pushforward,
    scale,
    total,
)
from .errors import NoPrimitiveError, SelectionError
from .line import (
    AffineMap,
    Step,
    center_of_gravity,
    convolution_power,
    convolve,
    derivative,
    expectation,
    expectation_as_mu,
    fn_derivative,
    homothety,
    interval,
    leibniz_residual,
    moment,
    primitive,
    translate,
)
from .pairing import (
    TestFn,
    check_frobenius,
    check_switch,
    constant_one,
    density,
    eval_at_eta,
    fn_action,
    fn_pointwise_mul,
    pair,
    pairing_equals_action_total,
    semantics,
)
from .probability import (
    condition,
    is_independent,
    is_probability,
    marginals,
    normalize,
    rv_sum,
)
from .quantities import UnitTagged, from_pure, rescale_unit, to_pure
from .scalars import BOOLEANS, RATIONALS, Semiring
from .strength import (
    FunTable,
    check_1linear,
    check_2linear,
    check_bilinear,
    check_linear,
    cotensor_strength,
    extend_1linear,
    extend_1linear_via_strength,
    extend_2linear,
    extend_2linear_via_strength,
    extend_bilinear,
    strength_left,
    strength_right,
    tensor,
    tensor_iterated,
)

STEPS = (Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(-1, 3))

_ATOMS_A = ("a", "b", "c", "d", "e")
_ATOMS_B = ("u", "v", "w", "s", "t")
_ATOMS_C = ("k", "m", "n", "g", "h")


@dataclass(frozen=True)
class GenConfig:
    """Reproducibility knobs for the sample streams."""

    seed: int = 0
    cases: int = 200
    max_support: int = 4
    coefficient_bound: int = 8
    space_size: int = 3

    def __post_init__(self):
        if self.cases < 1:
            raise ValueError("cases must be at least 1")
        if self.max_support < 1:
            raise ValueError("max_support must be at least 1")
        if not 1 <= self.space_size <= 5:
            raise ValueError("space_size must be between 1 and 5")


@dataclass
class LawReport:
    law: str
    statement: str
    cases_run: int
    passed: bool
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        out = {
            "law": self.law,
            "statement": self.statement,
            "cases_run": self.cases_run,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


# -- generators ---------------------------------------------------------------


def space_a(cfg: GenConfig) -> FiniteSpace:
    return FiniteSpace(_ATOMS_A[: cfg.space_size])


def space_b(cfg: GenConfig) -> FiniteSpace:
    return FiniteSpace(_ATOMS_B[: cfg.space_size])


def space_c(cfg: GenConfig) -> FiniteSpace:
    return FiniteSpace(_ATOMS_C[: cfg.space_size])


def gen_scalar(rng, cfg: GenConfig, semiring: Semiring = RATIONALS, nonzero=True):
    """A random scalar with numerator/denominator inside the bound.

    With coefficient_bound == 1 this emits only 1 and -1 over a ring,
    and only 1 over a rig.
    """
    if semiring.name == "boolean":
        return True if nonzero else rng.choice((False, True))
    b = cfg.coefficient_bound
    num = rng.randint(1, b) if nonzero else rng.randint(0, b)
    num *= rng.choice((1, -1))
    return Fraction(num, rng.randint(1, b))


def gen_dist(rng, cfg, space: FiniteSpace, semiring: Semiring = RATIONALS,
             min_support=0) -> Dist:
    k = rng.randint(min_support, min(cfg.max_support, len(space)))
    points = rng.sample(space.elements, k)
    return Dist(((x, gen_scalar(rng, cfg, semiring)) for x in points), semiring)


def _line_candidates(cfg) -> tuple:
    b = cfg.coefficient_bound
    pool = {Fraction(n, d) for n in range(-b, b + 1) for d in (1, 2, 3)}
    return tuple(sorted(pool))


def gen_rational_point(rng, cfg) -> Fraction:
    return rng.choice(_line_candidates(cfg))


def gen_line_dist(rng, cfg, min_support=0) -> Dist:
    k = rng.randint(min_support, cfg.max_support)
    points = rng.sample(_line_candidates(cfg), k)
    return Dist((x, gen_scalar(rng, cfg)) for x in points)


def gen_nested(rng, cfg, space, semiring: Semiring = RATIONALS, depth=2,
               min_support=0) -> Dist:
    """A mixture of mixtures ... of distributions, `depth` layers deep."""
    if depth <= 1:
        return gen_dist(rng, cfg, space, semiring, min_support=min_support)
    k = rng.randint(min_support, cfg.max_support)
    return Dist(
        (
            (gen_nested(rng, cfg, space, semiring, depth - 1), gen_scalar(rng, cfg, semiring))
            for _ in range(k)
        ),
        semiring,
    )


def gen_map(rng, domain: FiniteSpace, codomain: FiniteSpace) -> FunTable:
    return FunTable(domain, {x: rng.choice(codomain.elements) for x in domain})


def gen_fun_table(rng, domain: FiniteSpace, codomain: FiniteSpace) -> FunTable:
    return gen_map(rng, domain, codomain)


def gen_scalar_table(rng, cfg, domain: FiniteSpace,
                     semiring: Semiring = RATIONALS) -> FunTable:
    return FunTable(
        domain, {x: gen_scalar(rng, cfg, semiring, nonzero=False) for x in domain}
    )


def gen_event(rng, domain: FiniteSpace) -> FunTable:
    """A random 0/1 table (a multiplicative idempotent, i.e. an event)."""
    return FunTable(domain, {x: Fraction(rng.choice((0, 1))) for x in domain})


def gen_dist_table(rng, cfg, domain: FiniteSpace, codomain: FiniteSpace,
                   semiring: Semiring = RATIONALS) -> FunTable:
    """A table whose values are distributions (a tabulated kernel)."""
    return FunTable(
        domain, {x: gen_dist(rng, cfg, codomain, semiring) for x in domain}
    )


def gen_prob_dist(rng, cfg, space: FiniteSpace) -> Dist:
    """A signed distribution with total exactly 1."""
    k = rng.randint(1, min(cfg.max_support, len(space)))
    points = rng.sample(space.elements, k)
    weights = [gen_scalar(rng, cfg) for _ in points[:-1]]
    weights.append(1 - sum(weights))
    return Dist(zip(points, weights))


def gen_prob_line_dist(rng, cfg) -> Dist:
    k = rng.randint(1, cfg.max_support)
    points = rng.sample(_line_candidates(cfg), k)
    weights = [gen_scalar(rng, cfg) for _ in points[:-1]]
    weights.append(1 - sum(weights))
    return Dist(zip(points, weights))


def gen_prob_pair_dist(rng, cfg) -> Dist:
    """A total-1 joint over rational pairs, usually correlated."""
    candidates = _line_candidates(cfg)
    k = rng.randint(1, cfg.max_support)
    points = {(rng.choice(candidates), rng.choice(candidates)) for _ in range(k)}
    points = sorted(points)
    weights = [gen_scalar(rng, cfg) for _ in points[:-1]]
    weights.append(1 - sum(weights))
    return Dist(zip(points, weights))


def gen_nonzero_total_line_dist(rng, cfg) -> Dist:
    while True:
        p = gen_line_dist(rng, cfg, min_support=1)
        if total(p) != 0:
            return p


def gen_affine(rng, cfg) -> AffineMap:
    return AffineMap(
        gen_scalar(rng, cfg, nonzero=False), gen_scalar(rng, cfg, nonzero=False)
    )


def gen_step(rng) -> Step:
    return Step(rng.choice(STEPS))


def gen_poly_fn(rng, cfg) -> TestFn:
    """A random quadratic as a scalar test function on the line."""
    c0, c1, c2 = (gen_scalar(rng, cfg, nonzero=False) for _ in range(3))

    def poly(x):
        return c0 + c1 * x + c2 * x * x

    fn = TestFn.scalar(poly)
    fn.label = f"{c0} + ({c1})x + ({c2})x^2"
    return fn


def gen_dist_valued_line_fn(rng, cfg) -> TestFn:
    """A total, distribution-valued function on the line, of the shape
    x -> sum of w_i * dirac(u_i * x + v_i)."""
    terms = [
        (gen_scalar(rng, cfg), gen_rational_point(rng, cfg), gen_rational_point(rng, cfg))
        for _ in range(rng.randint(1, 2))
    ]

    def kernel(x):
        return Dist((u * x + v, w) for w, u, v in terms)

    return TestFn.dist_valued(kernel)


def gen_balanced_line_dist(rng, cfg, step: Step) -> Dist:
    """A distribution with zero total on every step-translation orbit,
    i.e. one that is guaranteed to have a primitive."""
    d = step.d
    acc = Dist.empty()
    for _ in range(rng.randint(1, 3)):
        x0 = gen_rational_point(rng, cfg)
        block = []
        ws = []
        for _ in range(rng.randint(1, 3)):
            w = gen_scalar(rng, cfg)
            block.append((x0 + rng.randint(-4, 4) * d, w))
            ws.append(w)
        block.append((x0 + rng.randint(-4, 4) * d, -sum(ws)))
        acc = dist_add(acc, Dist(block))
    return acc


# -- the registry --------------------------------------------------------------


@dataclass
class Law:
    name: str
    statement: str
    case: Callable = field(compare=False)
    deterministic: bool = False


LAWS: "dict[str, Law]" = {}


def law(name: str, statement: str, deterministic: bool = False):
    def register(fn):
        LAWS[name] = Law(name, statement, fn, deterministic)
        return fn

    return register


def _neq(desc: str, lhs, rhs) -> Optional[str]:
    if lhs == rhs:
        return None
    return f"{desc}: {lhs!r} != {rhs!r}"


def run_law(name: str, cfg: GenConfig) -> LawReport:
    if name not in LAWS:
        raise SelectionError(
            f"unknown law {name!r}; known laws: {', '.join(sorted(LAWS))}"
        )
    entry = LAWS[name]
    rng = random.Random(f"{cfg.seed}:{name}")
    n = 1 if entry.deterministic else cfg.cases
    for i in range(1, n + 1):
        bad = entry.case(rng, cfg)
        if bad is not None:
            return LawReport(name, entry.statement, i, False, bad)
    return LawReport(name, entry.statement, n, True)


def run_suite(cfg: GenConfig, selection=None) -> list:
    """Run the selected laws (all by default); one report per law."""
    names = list(LAWS) if selection is None else list(selection)
    return [run_law(name, cfg) for name in names]


# -- core monad/module laws ----------------------------------------------------


@law("scalar_field_laws",
     "rational +/* are associative, commutative, distributive; - and / invert")
def _scalar_field_laws(rng, cfg):
    sr = RATIONALS
    a, b, c = (gen_scalar(rng, cfg, nonzero=False) for _ in range(3))
    checks = [
        _neq("(a+b)+c = a+(b+c)", sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c))),
        _neq("a+b = b+a", sr.add(a, b), sr.add(b, a)),
        _neq("(ab)c = a(bc)", sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c))),
        _neq("ab = ba", sr.mul(a, b), sr.mul(b, a)),
        _neq("a(b+c) = ab+ac", sr.mul(a, sr.add(b, c)),
             sr.add(sr.mul(a, b), sr.mul(a, c))),
        _neq("0*a = 0", sr.mul(sr.zero, a), sr.zero),
        _neq("a-a = 0", sr.sub(a, a), sr.zero),
    ]
    if a != 0:
        checks.append(_neq("a * (1/a) = 1", sr.mul(a, sr.inv(a)), sr.one))
    for bad in checks:
        if bad:
            return f"a={a}, b={b}, c={c}; {bad}"
    return None


@law("boolean_rig_laws",
     "boolean or/and form a commutative rig (no negation, no inverses)")
def _boolean_rig_laws(rng, cfg):
    sr = BOOLEANS
    a, b, c = (rng.choice((False, True)) for _ in range(3))
    checks = [
        _neq("(a+b)+c = a+(b+c)", sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c))),
        _neq("a+b = b+a", sr.add(a, b), sr.add(b, a)),
        _neq("(ab)c = a(bc)", sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c))),
        _neq("ab = ba", sr.mul(a, b), sr.mul(b, a)),
        _neq("a(b+c) = ab+ac", sr.mul(a, sr.add(b, c)),
             sr.add(sr.mul(a, b), sr.mul(a, c))),
        _neq("0*a = 0", sr.mul(sr.zero, a), sr.zero),
        _neq("1*a = a", sr.mul(sr.one, a), a),
        _neq("0+a = a", sr.add(sr.zero, a), a),
        _neq("neg is absent", sr.is_ring, False),
        _neq("inv is absent", sr.has_inverses, False),
    ]
    for bad in checks:
        if bad:
            return f"a={a}, b={b}, c={c}; {bad}"
    return None


def _monad_law_case(rng, cfg, semiring):
    sp = space_a(cfg)
    p = gen_dist(rng, cfg, sp, semiring)
    unit_outer = flatten(dirac(p, semiring))
    unit_inner = flatten(pushforward(lambda x: dirac(x, semiring), p))
    bad = _neq("flatten(dirac(P)) = P", unit_outer, p) or _neq(
        "flatten(map dirac P) = P", unit_inner, p
    )
    if bad:
        return f"P={p!r}; {bad}"
    ppp = gen_nested(rng, cfg, sp, semiring, depth=3)
    bad = _neq(
        "flatten.flatten = flatten.map(flatten)",
        flatten(flatten(ppp)),
        flatten(pushforward(flatten, ppp)),
    )
    if bad:
        return f"PPP={ppp!r}; {bad}"
    return None


@law("monad_laws",
     "flatten and dirac satisfy the unit and associativity laws of a monad")
def _monad_laws(rng, cfg):
    return _monad_law_case(rng, cfg, RATIONALS)


def _functor_law_case(rng, cfg, semiring):
    sa, sb, sc = space_a(cfg), space_b(cfg), space_c(cfg)
    p = gen_dist(rng, cfg, sa, semiring)
    f = gen_map(rng, sa, sb)
    g = gen_map(rng, sb, sc)
    bad = _neq("pushforward(id) = id", pushforward(lambda x: x, p), p) or _neq(
        "pushforward(g.f) = pushforward(g).pushforward(f)",
        pushforward(lambda x: g(f(x)), p),
        pushforward(g, pushforward(f, p)),
    )
    if bad:
        return f"P={p!r}, f={f!r}, g={g!r}; {bad}"
    return None


@law("functor_laws", "pushforward preserves identities and composition")
def _functor_laws(rng, cfg):
    return _functor_law_case(rng, cfg, RATIONALS)


@law("total_pushforward", "total(pushforward(f, P)) = total(P) for every f")
def _total_pushforward(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa)
    f = gen_map(rng, sa, sb)
    bad = _neq("total is pushforward-invariant", total(pushforward(f, p)), total(p))
    return f"P={p!r}, f={f!r}; {bad}" if bad else None


@law("linear_extension",
     "linear extension restricts to f on point masses, is additive and "
     "homogeneous, and equals flatten after pushforward")
def _linear_extension(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    f = gen_dist_table(rng, cfg, sa, sb)
    ext = lambda p: linear_extend(f, p, zero=Dist.empty())
    p, q = gen_dist(rng, cfg, sa), gen_dist(rng, cfg, sa)
    c = gen_scalar(rng, cfg)
    x = rng.choice(sa.elements)
    checks = [
        _neq("ext(dirac(x)) = f(x)", ext(dirac(x)), f(x)),
        _neq("ext = flatten.pushforward(f)", ext(p), flatten(pushforward(f, p))),
        _neq("ext(P+Q) = ext(P)+ext(Q)", ext(dist_add(p, q)),
             dist_add(ext(p), ext(q))),
        _neq("ext(cP) = c ext(P)", ext(scale(c, p)), scale(c, ext(p))),
        _neq("extension of dirac is the identity",
             linear_extend(lambda y: dirac(y), p, zero=Dist.empty()), p),
    ]
    for bad in checks:
        if bad:
            return f"P={p!r}, Q={q!r}, c={c}, f={f!r}; {bad}"
    return None


@law("biproduct",
     "split/merge over tagged points are mutually inverse module "
     "isomorphisms and totals add")
def _biproduct(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    a, b = gen_dist(rng, cfg, sa), gen_dist(rng, cfg, sb)
    m = biproduct_merge(a, b)
    a2, b2 = biproduct_split(m)
    c = gen_scalar(rng, cfg)
    a3, b3 = gen_dist(rng, cfg, sa), gen_dist(rng, cfg, sb)
    m3 = biproduct_merge(a3, b3)
    sl, sr_ = biproduct_split(dist_add(m, m3))
    checks = [
        _neq("split(merge(A,B)) = (A,B)", (a2, b2), (a, b)),
        _neq("merge(split(M)) = M", biproduct_merge(a2, b2), m),
        _neq("total(merge) = total(A)+total(B)", total(m), total(a) + total(b)),
        _neq("split respects +", (sl, sr_), (dist_add(a, a3), dist_add(b, b3))),
        _neq("split respects scale", biproduct_split(scale(c, m)),
             (scale(c, a), scale(c, b))),
        _neq("merge(0,0) = 0", biproduct_merge(Dist.empty(), Dist.empty()),
             Dist.empty()),
    ]
    for bad in checks:
        if bad:
            return f"A={a!r}, B={b!r}; {bad}"
    return None


@law("additivity",
     "sampled linear maps are additive/homogeneous; tensor, convolution "
     "and the pairing are bi-additive")
def _additivity(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    f = gen_map(rng, sa, sb)
    phi = gen_scalar_table(rng, cfg, sa)
    c = gen_scalar(rng, cfg)
    p, q = gen_dist(rng, cfg, sa), gen_dist(rng, cfg, sa)
    linear_maps = [
        ("pushforward", lambda r: pushforward(f, r)),
        ("scale", lambda r: scale(c, r)),
        ("reweight", lambda r: fn_action(r, phi)),
    ]
    for name, g in linear_maps:
        bad = _neq(f"{name} additive", g(dist_add(p, q)), dist_add(g(p), g(q))) or _neq(
            f"{name} homogeneous", g(scale(c, p)), scale(c, g(p))
        )
        if bad:
            return f"P={p!r}, Q={q!r}, c={c}; {bad}"
    r, s = gen_dist(rng, cfg, sb), gen_dist(rng, cfg, sb)
    bad = (
        _neq("tensor left-additive", tensor(dist_add(p, q), r),
             dist_add(tensor(p, r), tensor(q, r)))
        or _neq("tensor right-additive", tensor(p, dist_add(r, s)),
                dist_add(tensor(p, r), tensor(p, s)))
        or _neq("pairing additive in P",
                pair(dist_add(p, q), phi, zero=Fraction(0)),
                pair(p, phi, zero=Fraction(0)) + pair(q, phi, zero=Fraction(0)))
    )
    if bad:
        return f"P={p!r}, Q={q!r}, R={r!r}, S={s!r}; {bad}"
    lp, lq = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    lr = gen_line_dist(rng, cfg)
    bad = _neq("convolution left-additive", convolve(dist_add(lp, lq), lr),
               dist_add(convolve(lp, lr), convolve(lq, lr)))
    if bad:
        return f"P={lp!r}, Q={lq!r}, R={lr!r}; {bad}"
    return None


@law("linearity_closure",
     "pointwise sums and scalar multiples of linear maps are linear again")
def _linearity_closure(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    f1 = gen_map(rng, sa, sb)
    f2 = gen_map(rng, sa, sb)
    phi = gen_scalar_table(rng, cfg, sa)
    c = gen_scalar(rng, cfg)
    table2 = gen_scalar_table(rng, cfg, sb)
    g1 = lambda p: pushforward(f1, p)
    g2 = lambda p: fn_action(pushforward(f2, p), table2)
    g3 = lambda p: fn_action(p, phi)
    combined = [
        ("g1+g2", lambda p: dist_add(g1(p), g2(p))),
        ("c*g1", lambda p: scale(c, g1(p))),
        ("g1+g3", lambda p: dist_add(g1(p), g3(p))),
    ]
    for name, g in combined:
        mix = gen_nested(rng, cfg, sa, depth=2)
        if not check_linear(g, [mix]):
            return f"{name} failed linearity on mixture {mix!r}"
    return None


@law("scale_equivariance",
     "pushforward, flatten, reweighting and the derivative all commute "
     "with scalar multiplication")
def _scale_equivariance(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    c = gen_scalar(rng, cfg)
    p = gen_dist(rng, cfg, sa)
    f = gen_map(rng, sa, sb)
    bad = _neq("pushforward equivariant", pushforward(f, scale(c, p)),
               scale(c, pushforward(f, p)))
    if bad:
        return f"P={p!r}, c={c}; {bad}"
    pp = gen_nested(rng, cfg, sa, depth=2)
    bad = _neq("flatten equivariant", flatten(scale(c, pp)), scale(c, flatten(pp)))
    if bad:
        return f"PP={pp!r}, c={c}; {bad}"
    lp = gen_line_dist(rng, cfg)
    step = gen_step(rng)
    bad = _neq("derivative equivariant", derivative(scale(c, lp), step),
               scale(c, derivative(lp, step)))
    if bad:
        return f"P={lp!r}, c={c}, d={step.d}; {bad}"
    return None


# -- strength and Fubini laws ---------------------------------------------------


@law("strength_units",
     "the strengths send point masses to point masses on pairs and agree "
     "with tensoring against a dirac")
def _strength_units(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    x, y = rng.choice(sa.elements), rng.choice(sb.elements)
    q = gen_dist(rng, cfg, sb)
    checks = [
        _neq("strength_left(x, dirac(y)) = dirac((x,y))",
             strength_left(x, dirac(y)), dirac((x, y))),
        _neq("strength_right(dirac(x), y) = dirac((x,y))",
             strength_right(dirac(x), y), dirac((x, y))),
        _neq("strength_left = tensor against dirac",
             strength_left(x, q), tensor(dirac(x), q)),
        _neq("strength_left(x, 0) = 0", strength_left(x, Dist.empty()),
             Dist.empty()),
    ]
    for bad in checks:
        if bad:
            return f"x={x!r}, y={y!r}, Q={q!r}; {bad}"
    return None


@law("strength_pentagons",
     "the strengths commute with mixing: linear in their distribution slot")
def _strength_pentagons(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    x = rng.choice(sa.elements)
    qq = gen_nested(rng, cfg, sb, depth=2)
    if not check_2linear(strength_left, [(x, qq)]):
        return f"strength_left pentagon failed at x={x!r}, QQ={qq!r}"
    y = rng.choice(sb.elements)
    pp = gen_nested(rng, cfg, sa, depth=2)
    if not check_1linear(strength_right, [(pp, y)]):
        return f"strength_right pentagon failed at PP={pp!r}, y={y!r}"
    return None


@law("extension_triangles",
     "partial-linear extensions restrict to the original map on point masses")
def _extension_triangles(rng, cfg):
    sa, sb = space_a(cfg), space_c(cfg)
    values = {
        (x, y): gen_dist(rng, cfg, space_b(cfg)) for x in sa for y in sb
    }
    f = lambda x, y: values[(x, y)]
    x, y = rng.choice(sa.elements), rng.choice(sb.elements)
    ext2 = extend_2linear(f, zero=Dist.empty())
    ext1 = extend_1linear(f, zero=Dist.empty())
    extb = extend_bilinear(f, zero=Dist.empty())
    checks = [
        _neq("2-linear triangle", ext2(x, dirac(y)), f(x, y)),
        _neq("1-linear triangle", ext1(dirac(x), y), f(x, y)),
        _neq("bilinear triangle", extb(dirac(x), dirac(y)), f(x, y)),
    ]
    for bad in checks:
        if bad:
            return f"x={x!r}, y={y!r}; {bad}"
    return None


@law("extension_uniqueness",
     "the direct weighted-sum extension and the strength-routed extension "
     "of the same map agree (uniqueness of partial-linear extensions)")
def _extension_uniqueness(rng, cfg):
    sa, sb = space_a(cfg), space_c(cfg)
    values = {
        (x, y): gen_dist(rng, cfg, space_b(cfg)) for x in sa for y in sb
    }
    f = lambda x, y: values[(x, y)]
    x = rng.choice(sa.elements)
    q = gen_dist(rng, cfg, sb)
    p = gen_dist(rng, cfg, sa)
    y = rng.choice(sb.elements)
    z = Dist.empty()
    bad = _neq(
        "2-linear extension unique",
        extend_2linear(f, zero=z)(x, q),
        extend_2linear_via_strength(f, zero=z)(x, q),
    ) or _neq(
        "1-linear extension unique",
        extend_1linear(f, zero=z)(p, y),
        extend_1linear_via_strength(f, zero=z)(p, y),
    )
    if bad:
        return f"x={x!r}, Q={q!r}, P={p!r}, y={y!r}; {bad}"
    scalars = {(x, y): gen_scalar(rng, cfg, nonzero=False) for x in sa for y in sb}
    g = lambda x, y: scalars[(x, y)]
    bad = _neq(
        "scalar-valued 2-linear extension unique",
        extend_2linear(g, zero=Fraction(0))(x, q),
        extend_2linear_via_strength(g, zero=Fraction(0))(x, q),
    )
    if bad:
        return f"x={x!r}, Q={q!r}; {bad}"
    # the bilinear extension is stage-order independent: extending the
    # first slot first agrees with extending the second slot first
    second_first = linear_extend(
        lambda y: linear_extend(lambda xx: f(xx, y), p, zero=Dist.empty()),
        q,
        zero=Dist.empty(),
    )
    bad = _neq(
        "bilinear extension stage order",
        extend_bilinear(f, zero=Dist.empty())(p, q),
        second_first,
    )
    if bad:
        return f"P={p!r}, Q={q!r}; {bad}"
    return None


def _fubini_case(rng, cfg, semiring):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa, semiring)
    q = gen_dist(rng, cfg, sb, semiring)
    bad = _neq("tensor = tensor_iterated", tensor(p, q), tensor_iterated(p, q))
    return f"P={p!r}, Q={q!r}; {bad}" if bad else None


@law("fubini",
     "the two extension orders build the same tensor: Fubini's theorem "
     "for finite mixtures")
def _fubini(rng, cfg):
    return _fubini_case(rng, cfg, RATIONALS)


@law("tensor_bilinear", "tensor is linear in each argument separately")
def _tensor_bilinear(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    pp = gen_nested(rng, cfg, sa, depth=2)
    qq = gen_nested(rng, cfg, sb, depth=2)
    if not check_bilinear(tensor, [(pp, qq)]):
        return f"tensor bilinearity failed on PP={pp!r}, QQ={qq!r}"
    return None


@law("tensor_total", "total(P (x) Q) = total(P) * total(Q)")
def _tensor_total(rng, cfg):
    p = gen_dist(rng, cfg, space_a(cfg))
    q = gen_dist(rng, cfg, space_b(cfg))
    bad = _neq("multiplicative totals", total(tensor(p, q)), total(p) * total(q))
    return f"P={p!r}, Q={q!r}; {bad}" if bad else None


@law("tensor_symmetry_associativity",
     "tensor is symmetric and associative up to relabeling pair points")
def _tensor_symmetry_associativity(rng, cfg):
    p = gen_dist(rng, cfg, space_a(cfg))
    q = gen_dist(rng, cfg, space_b(cfg))
    r = gen_dist(rng, cfg, space_c(cfg))
    twist = lambda xy: (xy[1], xy[0])
    assoc = lambda xyz: (xyz[0][0], (xyz[0][1], xyz[1]))
    bad = _neq(
        "twist . tensor = tensor . swap", pushforward(twist, tensor(p, q)),
        tensor(q, p)
    ) or _neq(
        "reassociation",
        pushforward(assoc, tensor(tensor(p, q), r)),
        tensor(p, tensor(q, r)),
    )
    return f"P={p!r}, Q={q!r}, R={r!r}; {bad}" if bad else None


@law("tensor_initial",
     "bilinear extension of the dirac pairing is the tensor; 2-linear "
     "extension of it is the strength")
def _tensor_initial(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    unit_pair = lambda x, y: dirac((x, y))
    p, q = gen_dist(rng, cfg, sa), gen_dist(rng, cfg, sb)
    x = rng.choice(sa.elements)
    bad = _neq(
        "extend_bilinear(dirac pair) = tensor",
        extend_bilinear(unit_pair, zero=Dist.empty())(p, q),
        tensor(p, q),
    ) or _neq(
        "extend_2linear(dirac pair) = strength_left",
        extend_2linear(unit_pair, zero=Dist.empty())(x, q),
        strength_left(x, q),
    )
    return f"P={p!r}, Q={q!r}, x={x!r}; {bad}" if bad else None


@law("cotensor",
     "evaluating a mixture of function tables at a point equals mixing "
     "the evaluations, naturally in the codomain")
def _cotensor(rng, cfg):
    sa, sb, sc = space_a(cfg), space_b(cfg), space_c(cfg)
    tables = [gen_fun_table(rng, sa, sb) for _ in range(rng.randint(1, 3))]
    pf = Dist((t, gen_scalar(rng, cfg)) for t in tables)
    x = rng.choice(sa.elements)
    g = tables[0]
    bad = _neq(
        "cotensor of a point mass evaluates the table",
        cotensor_strength(dirac(g), x), dirac(g(x))
    )
    if bad:
        return f"g={g!r}, x={x!r}; {bad}"
    direct = cotensor_strength(pf, x)
    mixed = linear_extend(
        lambda t: dirac(t(x)), pf, zero=Dist.empty()
    )
    bad = _neq("cotensor is linear in the mixture", direct, mixed)
    if bad:
        return f"PF={pf!r}, x={x!r}; {bad}"
    h = gen_map(rng, sb, sc)
    bad = _neq(
        "cotensor natural in the codomain",
        cotensor_strength(pushforward(lambda t: FunTable(sa, {a: h(t(a)) for a in sa}), pf), x),
        pushforward(h, cotensor_strength(pf, x)),
    )
    if bad:
        return f"PF={pf!r}, h={h!r}, x={x!r}; {bad}"
    return None


# -- pairing laws ----------------------------------------------------------------


@law("pairing_unit", "<dirac(x), phi> = phi(x)")
def _pairing_unit(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    x = rng.choice(sa.elements)
    phi = gen_scalar_table(rng, cfg, sa)
    psi = gen_dist_table(rng, cfg, sa, sb)
    bad = _neq("scalar case", pair(dirac(x), phi), phi(x)) or _neq(
        "vector case", pair(dirac(x), psi), psi(x)
    )
    return f"x={x!r}; {bad}" if bad else None


@law("pairing_extranatural", "<pushforward(f, P), phi> = <P, phi . f>")
def _pairing_extranatural(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa)
    f = gen_map(rng, sa, sb)
    phi = gen_scalar_table(rng, cfg, sb)
    bad = _neq(
        "extranaturality",
        pair(pushforward(f, p), phi, zero=Fraction(0)),
        pair(p, lambda x: phi(f(x)), zero=Fraction(0)),
    )
    return f"P={p!r}, f={f!r}; {bad}" if bad else None


@law("total_as_pairing", "total(P) = <P, 1>")
def _total_as_pairing(rng, cfg):
    p = gen_dist(rng, cfg, space_a(cfg))
    bad = _neq("total = <-, 1>", total(p), pair(p, constant_one()))
    return f"P={p!r}; {bad}" if bad else None


@law("pairing_bilinear",
     "the pairing is linear in the distribution and in the test function")
def _pairing_bilinear(rng, cfg):
    sa = space_a(cfg)
    pp = gen_nested(rng, cfg, sa, depth=2)
    phi = gen_scalar_table(rng, cfg, sa)
    if not check_1linear(lambda p, t: pair(p, t, zero=Fraction(0)), [(pp, phi)]):
        return f"pairing not linear in P on PP={pp!r}, phi={phi!r}"
    p = gen_dist(rng, cfg, sa)
    tables = [gen_scalar_table(rng, cfg, sa) for _ in range(rng.randint(1, 3))]
    tt = Dist((t, gen_scalar(rng, cfg)) for t in tables)
    if not tt.is_empty():
        if not check_2linear(lambda r, t: pair(r, t, zero=Fraction(0)), [(p, tt)]):
            return f"pairing not linear in phi on P={p!r}, TT={tt!r}"
    return None


@law("semantics_monic",
     "evaluating the semantics functional at x -> dirac(x) recovers P")
def _semantics_monic(rng, cfg):
    p = gen_dist(rng, cfg, space_a(cfg))
    bad = _neq("enough test functions", eval_at_eta(semantics(p)), p)
    return f"P={p!r}; {bad}" if bad else None


@law("switch", "<P |- phi, psi> = <P, phi * psi>")
def _switch(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa)
    phi = gen_scalar_table(rng, cfg, sa)
    psi = TestFn.from_table(gen_dist_table(rng, cfg, sa, sb))
    chi = TestFn.from_table(gen_scalar_table(rng, cfg, sa))
    if not check_switch(p, phi, psi):
        return f"switch failed (vector psi): P={p!r}, phi={phi!r}, psi={psi.fn!r}"
    if not check_switch(p, phi, chi):
        return f"switch failed (scalar psi): P={p!r}, phi={phi!r}, psi={chi.fn!r}"
    return None


@law("action_total", "<P, phi> = total(P |- phi)")
def _action_total(rng, cfg):
    sa = space_a(cfg)
    p = gen_dist(rng, cfg, sa)
    phi = gen_scalar_table(rng, cfg, sa)
    if not pairing_equals_action_total(p, phi):
        return f"P={p!r}, phi={phi!r}"
    return None


@law("action_monoid",
     "reweighting is associative and unitary: (P|-phi)|-psi = P|-(phi*psi), "
     "P|-1 = P")
def _action_monoid(rng, cfg):
    sa = space_a(cfg)
    p = gen_dist(rng, cfg, sa)
    phi1 = gen_scalar_table(rng, cfg, sa)
    phi2 = gen_scalar_table(rng, cfg, sa)
    both = fn_pointwise_mul(phi1, phi2)
    bad = _neq(
        "associativity",
        fn_action(fn_action(p, phi1), phi2),
        fn_action(p, both),
    ) or _neq("unit", fn_action(p, constant_one()), p)
    return f"P={p!r}, phi1={phi1!r}, phi2={phi2!r}; {bad}" if bad else None


@law("frobenius", "pushforward(f, P) |- phi = pushforward(f, P |- (phi . f))")
def _frobenius(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa)
    f = gen_map(rng, sa, sb)
    phi = gen_scalar_table(rng, cfg, sb)
    if not check_frobenius(f, p, phi):
        return f"P={p!r}, f={f!r}, phi={phi!r}"
    return None


@law("density_round_trip",
     "whenever Q/P exists, reweighting P by it recovers Q; the density of "
     "P in itself is the constant 1")
def _density_round_trip(rng, cfg):
    sa = space_a(cfg)
    p = gen_dist(rng, cfg, sa, min_support=1)
    sub = [x for x in p.support() if rng.random() < 0.7]
    q = Dist((x, gen_scalar(rng, cfg, nonzero=False)) for x in sub)
    phi = density(q, p)
    bad = _neq("P |- (Q/P) = Q", fn_action(p, phi), q)
    if bad:
        return f"P={p!r}, Q={q!r}; {bad}"
    self_density = density(p, p)
    bad = _neq(
        "P/P = 1 on the support",
        set(self_density.values()),
        {Fraction(1)} if len(p) else set(),
    )
    return f"P={p!r}; {bad}" if bad else None


# -- line calculus laws -----------------------------------------------------------


@law("convolution_monoid",
     "convolution is associative and commutative with unit dirac(0)")
def _convolution_monoid(rng, cfg):
    p, q, r = (gen_line_dist(rng, cfg) for _ in range(3))
    bad = (
        _neq("associative", convolve(convolve(p, q), r), convolve(p, convolve(q, r)))
        or _neq("commutative", convolve(p, q), convolve(q, p))
        or _neq("unit", convolve(p, dirac(Fraction(0))), p)
    )
    return f"P={p!r}, Q={q!r}, R={r!r}; {bad}" if bad else None


@law("convolution_total", "total(P * Q) = total(P) * total(Q)")
def _convolution_total(rng, cfg):
    p, q = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    bad = _neq("multiplicative totals", total(convolve(p, q)), total(p) * total(q))
    return f"P={p!r}, Q={q!r}; {bad}" if bad else None


@law("expectation_unit", "E(dirac(x)) = x and moment(P, 0) = total(P)")
def _expectation_unit(rng, cfg):
    x = gen_rational_point(rng, cfg)
    p = gen_line_dist(rng, cfg)
    bad = _neq("E(dirac(x)) = x", expectation(dirac(x)), x) or _neq(
        "moment 0 is the total", moment(p, 0), total(p)
    )
    return f"x={x}, P={p!r}; {bad}" if bad else None


@law("expectation_convolution", "E(P*Q) = E(P) total(Q) + total(P) E(Q)")
def _expectation_convolution(rng, cfg):
    p, q = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    bad = _neq(
        "product rule for expectations",
        expectation(convolve(p, q)),
        expectation(p) * total(q) + total(p) * expectation(q),
    )
    return f"P={p!r}, Q={q!r}; {bad}" if bad else None


@law("expectation_as_mu",
     "the pure-monad route to expectation (reading scalars as unit-space "
     "masses, flattening, and totalling) agrees with <P, x>")
def _expectation_as_mu(rng, cfg):
    p = gen_line_dist(rng, cfg)
    x = gen_rational_point(rng, cfg)
    bad = (
        _neq("mixture route = pairing route", expectation_as_mu(p), expectation(p))
        or _neq("on point masses", expectation_as_mu(dirac(x)), x)
        or _neq("on zero", expectation_as_mu(Dist.empty()), Fraction(0))
    )
    return f"P={p!r}; {bad}" if bad else None


@law("homothety_translation",
     "E(bP) = bE(P); translation is convolution with a point mass; "
     "translations shift total-1 expectations")
def _homothety_translation(rng, cfg):
    p = gen_line_dist(rng, cfg)
    a = gen_rational_point(rng, cfg)
    b = gen_rational_point(rng, cfg)
    checks = [
        _neq("homothety scales E", expectation(homothety(p, b)),
             b * expectation(p)),
        _neq("translate = convolve with dirac", translate(p, a),
             convolve(p, dirac(a))),
        _neq("E after translation", expectation(translate(p, a)),
             expectation(p) + total(p) * a),
    ]
    for bad in checks:
        if bad:
            return f"P={p!r}, a={a}, b={b}; {bad}"
    unit = gen_prob_line_dist(rng, cfg)
    bad = _neq("total-1 translation", expectation(translate(unit, a)),
               expectation(unit) + a)
    return f"P={unit!r}, a={a}; {bad}" if bad else None


@law("affine_expectation", "E(f(P)) = f(E(P)) for affine f and total-1 P")
def _affine_expectation(rng, cfg):
    p = gen_prob_line_dist(rng, cfg)
    f = gen_affine(rng, cfg)
    bad = _neq("affine equivariance", expectation(
        pushforward(f, p)), f(expectation(p)))
    return f"P={p!r}, f={f!r}; {bad}" if bad else None


@law("cg_affine",
     "the center of gravity is affine-equivariant: cg(f(P)) = f(cg(P))")
def _cg_affine(rng, cfg):
    p = gen_nonzero_total_line_dist(rng, cfg)
    f = gen_affine(rng, cfg)
    bad = _neq("cg equivariance", center_of_gravity(pushforward(f, p)),
               f(center_of_gravity(p)))
    return f"P={p!r}, f={f!r}; {bad}" if bad else None


@law("derivative_total", "the derivative of any distribution has total 0")
def _derivative_total(rng, cfg):
    p = gen_line_dist(rng, cfg)
    step = gen_step(rng)
    bad = _neq("total(P') = 0", total(derivative(p, step)), Fraction(0))
    return f"P={p!r}, d={step.d}; {bad}" if bad else None


@law("derivative_expectation", "E(P') = total(P)")
def _derivative_expectation(rng, cfg):
    p = gen_line_dist(rng, cfg)
    step = gen_step(rng)
    bad = _neq("E(P') = total(P)", expectation(derivative(p, step)), total(p))
    return f"P={p!r}, d={step.d}; {bad}" if bad else None


@law("derivative_switch", "<P', phi> = <P, phi'>")
def _derivative_switch(rng, cfg):
    p = gen_line_dist(rng, cfg)
    step = gen_step(rng)
    phi = gen_poly_fn(rng, cfg)
    lhs = pair(derivative(p, step), phi)
    rhs = pair(p, fn_derivative(phi, step))
    bad = _neq("scalar test functions", lhs, rhs)
    if bad:
        return f"P={p!r}, d={step.d}, phi={getattr(phi, 'label', phi)!r}; {bad}"
    psi = gen_dist_valued_line_fn(rng, cfg)
    bad = _neq(
        "vector test functions",
        pair(derivative(p, step), psi),
        pair(p, fn_derivative(psi, step)),
    )
    return f"P={p!r}, d={step.d}; {bad}" if bad else None


@law("derivative_convolution", "(P*Q)' = P'*Q = P*Q'")
def _derivative_convolution(rng, cfg):
    p, q = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    step = gen_step(rng)
    lhs = derivative(convolve(p, q), step)
    bad = _neq("(P*Q)' = P'*Q", lhs, convolve(derivative(p, step), q)) or _neq(
        "(P*Q)' = P*Q'", lhs, convolve(p, derivative(q, step))
    )
    return f"P={p!r}, Q={q!r}, d={step.d}; {bad}" if bad else None


@law("derivative_translation", "differentiation commutes with translation")
def _derivative_translation(rng, cfg):
    p = gen_line_dist(rng, cfg)
    t = gen_rational_point(rng, cfg)
    step = gen_step(rng)
    bad = _neq(
        "translation invariance",
        derivative(translate(p, t), step),
        translate(derivative(p, step), t),
    )
    return f"P={p!r}, t={t}, d={step.d}; {bad}" if bad else None


@law("derivative_linear",
     "differentiation is additive, homogeneous, and commutes with mixing")
def _derivative_linear(rng, cfg):
    p, q = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    c = gen_scalar(rng, cfg)
    step = gen_step(rng)
    ddt = lambda r: derivative(r, step)
    bad = _neq("additive", ddt(dist_add(p, q)), dist_add(ddt(p), ddt(q))) or _neq(
        "homogeneous", ddt(scale(c, p)), scale(c, ddt(p))
    )
    if bad:
        return f"P={p!r}, Q={q!r}, c={c}, d={step.d}; {bad}"
    mixtures = Dist(
        ((gen_line_dist(rng, cfg), gen_scalar(rng, cfg)) for _ in range(2))
    )
    if not check_linear(ddt, [mixtures]):
        return f"mixing failed on {mixtures!r} with d={step.d}"
    return None


@law("integration",
     "primitive and derivative are mutually inverse where primitives exist")
def _integration(rng, cfg):
    step = gen_step(rng)
    p = gen_line_dist(rng, cfg)
    bad = _neq(
        "primitive(P') = P", primitive(derivative(p, step), step), p
    )
    if bad:
        return f"P={p!r}, d={step.d}; {bad}"
    q = gen_balanced_line_dist(rng, cfg, step)
    bad = _neq(
        "(primitive(Q))' = Q", derivative(primitive(q, step), step), q
    )
    if bad:
        return f"Q={q!r}, d={step.d}; {bad}"
    bad = _neq("primitive(0) = 0", primitive(Dist.empty(), step), Dist.empty())
    return f"d={step.d}; {bad}" if bad else None


@law("interval_laws",
     "interval(a,b)' = dirac(b) - dirac(a), its total is b - a, and it "
     "matches the primitive construction")
def _interval_laws(rng, cfg):
    step = gen_step(rng)
    a = gen_rational_point(rng, cfg)
    n = rng.randint(-5, 5)
    b = a + n * step.d
    comb = interval(a, b, step)
    endpoints = dist_sub(dirac(b), dirac(a))
    checks = [
        _neq("defining equation", derivative(comb, step), endpoints),
        _neq("total", total(comb), b - a),
        _neq("primitive route", primitive(endpoints, step), comb),
        _neq("[a,a] = 0", interval(a, a, step), Dist.empty()),
    ]
    for bad in checks:
        if bad:
            return f"a={a}, b={b}, d={step.d}; {bad}"
    return None


@law("interval_powers",
     "convolution powers of intervals keep multiplicative totals "
     "((2a)^k for [-a,a]); expectations grow linearly at -a*d per power, "
     "because the comb realizing an interval is left-closed and hence "
     "not symmetric",
     deterministic=True)
def _interval_powers(rng, cfg):
    d = Fraction(1, 4)
    unit = interval(Fraction(-1, 2), Fraction(1, 2), Step(d))
    wide = interval(Fraction(-1), Fraction(1), Step(Fraction(1, 2)))
    bad = _neq("E([-a,a]) = -a*d", expectation(unit), -Fraction(1, 2) * d)
    if bad:
        return bad
    for k in range(6):
        pk = convolution_power(unit, k)
        bad = _neq(f"total of power {k}", total(pk), Fraction(1)) or _neq(
            f"expectation of power {k}", expectation(pk), k * expectation(unit)
        )
        if bad:
            return bad
        bad = _neq(
            f"total of [-1,1]^*{k}", total(convolution_power(wide, k)),
            Fraction(2) ** k
        )
        if bad:
            return bad
    return None


@law("leibniz_residual",
     "the exact product-rule defect (P'|-phi - P|-phi') - (P|-phi)' equals "
     "(phi(x+d)-phi(x)) (dirac(x+d)-dirac(x))/d on point masses, is linear "
     "in P, and vanishes for constant phi; the two-sided product rule "
     "itself needs nilpotent steps and is deliberately not asserted")
def _leibniz_residual(rng, cfg):
    step = gen_step(rng)
    d = step.d
    x = gen_rational_point(rng, cfg)
    phi = gen_poly_fn(rng, cfg)
    closed = scale(
        (phi(x + d) - phi(x)) / d, dist_sub(dirac(x + d), dirac(x))
    )
    bad = _neq("closed form on point masses",
               leibniz_residual(dirac(x), phi, step), closed)
    if bad:
        return f"x={x}, d={d}, phi={getattr(phi, 'label', phi)!r}; {bad}"
    p, q = gen_line_dist(rng, cfg), gen_line_dist(rng, cfg)
    res = lambda r: leibniz_residual(r, phi, step)
    c = gen_scalar(rng, cfg)
    bad = _neq("additive in P", res(dist_add(p, q)), dist_add(res(p), res(q))) or _neq(
        "homogeneous in P", res(scale(c, p)), scale(c, res(p))
    )
    if bad:
        return f"P={p!r}, Q={q!r}, c={c}, d={d}; {bad}"
    const = TestFn.scalar(lambda _: Fraction(5, 3))
    bad = _neq("constant phi", leibniz_residual(p, const, step), Dist.empty())
    return f"P={p!r}, d={d}; {bad}" if bad else None


# -- probability laws --------------------------------------------------------------


@law("conditioning",
     "<P|phi, psi> <P, phi> = <P, phi psi>; conditioning keeps total 1 "
     "and conditioning on the sure event changes nothing")
def _conditioning(rng, cfg):
    sa = space_a(cfg)
    p = gen_prob_dist(rng, cfg, sa)
    event = None
    for _ in range(50):
        candidate = gen_event(rng, sa)
        if pair(p, candidate, zero=Fraction(0)) != 0:
            event = candidate
            break
    if event is None:
        return None  # astronomically unlikely; skip this draw
    psi = gen_scalar_table(rng, cfg, sa)
    conditioned = condition(p, event)
    mass = pair(p, event)
    checks = [
        _neq(
            "conditional pairing identity",
            pair(conditioned, psi) * mass,
            pair(p, fn_pointwise_mul(event, psi)),
        ),
        _neq("total 1", total(conditioned), Fraction(1)),
        _neq("sure event", condition(p, constant_one()), p),
    ]
    for bad in checks:
        if bad:
            return f"P={p!r}, event={event!r}, psi={psi!r}; {bad}"
    return None


@law("marginals_tensor",
     "the marginals of a tensor of total-1 distributions are the factors, "
     "and tensors are independent")
def _marginals_tensor(rng, cfg):
    p = gen_prob_dist(rng, cfg, space_a(cfg))
    q = gen_prob_dist(rng, cfg, space_b(cfg))
    j = tensor(p, q)
    m1, m2 = marginals(j)
    bad = _neq("marginals recover factors", (m1, m2), (p, q)) or _neq(
        "tensor joints are independent", is_independent(j), True
    )
    if bad:
        return f"P={p!r}, Q={q!r}; {bad}"
    correlated = Dist({(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)})
    bad = _neq("correlated joint detected", is_independent(correlated), False)
    return bad


@law("rv_sum",
     "the distribution of a coordinate sum pushes the joint along +; its "
     "expectation splits even under dependence; tensor joints convolve")
def _rv_sum(rng, cfg):
    j = gen_prob_pair_dist(rng, cfg)
    m1, m2 = marginals(j)
    s = rv_sum(j)
    bad = _neq(
        "E(X+Y) = E(X) + E(Y)", expectation(s), expectation(m1) + expectation(m2)
    ) or _neq("mass preserved", total(s), total(j))
    if bad:
        return f"J={j!r}; {bad}"
    p, q = gen_prob_line_dist(rng, cfg), gen_prob_line_dist(rng, cfg)
    bad = _neq("independent sum = convolution", rv_sum(tensor(p, q)), convolve(p, q))
    return f"P={p!r}, Q={q!r}; {bad}" if bad else None


@law("probability_closure",
     "total-1 distributions are closed under tensor and convolution but "
     "not under scaling")
def _probability_closure(rng, cfg):
    p, q = gen_prob_line_dist(rng, cfg), gen_prob_line_dist(rng, cfg)
    checks = [
        _neq("tensor stays total-1", is_probability(tensor(p, q)), True),
        _neq("convolution stays total-1", is_probability(convolve(p, q)), True),
        _neq("scaling leaves", is_probability(scale(2, p)), False),
        _neq("normalize lands in total-1",
             is_probability(normalize(scale(7, p))), True),
    ]
    for bad in checks:
        if bad:
            return f"P={p!r}, Q={q!r}; {bad}"
    return None


# -- quantity laws ------------------------------------------------------------------


@law("unit_determined",
     "a quantity's pure value is fully determined by the unit scalar: "
     "tagging is invertible, unit conversion preserves the pure value, "
     "equal units give equal pure values, and conversion to pure commutes "
     "with pushforward, addition and scaling")
def _unit_determined(rng, cfg):
    sa, sb = space_a(cfg), space_b(cfg)
    p = gen_dist(rng, cfg, sa)
    u = gen_scalar(rng, cfg)
    u2 = gen_scalar(rng, cfg)
    m = from_pure(p, u)
    checks = [
        _neq("to_pure inverts from_pure", to_pure(m), p),
        _neq("rescaling preserves the pure value",
             to_pure(rescale_unit(m, u2)), p),
        _neq("same unit, same tagging", rescale_unit(m, u), m),
    ]
    for bad in checks:
        if bad:
            return f"P={p!r}, u={u}, u2={u2}; {bad}"
    body = gen_dist(rng, cfg, sa, min_support=1)
    if u != u2:
        if to_pure(UnitTagged(u, body)) == to_pure(UnitTagged(u2, body)):
            return f"distinct units {u} != {u2} agreed on body {body!r}"
    f = gen_map(rng, sa, sb)
    c = gen_scalar(rng, cfg)
    q = gen_dist(rng, cfg, sa)
    checks = [
        _neq("commutes with pushforward",
             pushforward(f, to_pure(UnitTagged(u, body))),
             to_pure(UnitTagged(u, pushforward(f, body)))),
        _neq("commutes with +",
             to_pure(UnitTagged(u, dist_add(body, q))),
             dist_add(to_pure(UnitTagged(u, body)), to_pure(UnitTagged(u, q)))),
        _neq("commutes with scale",
             to_pure(UnitTagged(u, scale(c, body))),
             scale(c, to_pure(UnitTagged(u, body)))),
    ]
    for bad in checks:
        if bad:
            return f"body={body!r}, u={u}, c={c}; {bad}"
    return None


# -- genericity over the boolean rig -------------------------------------------------


@law("bool_monad_functor",
     "the monad and functor laws hold over the boolean rig (the "
     "possibility/powerset reading of distributions)")
def _bool_monad_functor(rng, cfg):
    return _monad_law_case(rng, cfg, BOOLEANS) or _functor_law_case(
        rng, cfg, BOOLEANS
    )


@law("bool_fubini", "Fubini holds over the boolean rig")
def _bool_fubini(rng, cfg):
    return _fubini_case(rng, cfg, BOOLEANS)
