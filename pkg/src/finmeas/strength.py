"""Strengths, the two Fubini tensor maps, and partial-linear extensions.

Commutativity of the mixture monad is the statement that the two ways of
tensoring distributions agree. `tensor` uses the direct product formula;
`tensor_iterated` rebuilds the product through nested mixtures in the
opposite extension order, so their equality is checked, not assumed.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from .dist import (
    Dist,
    FiniteSpace,
    _same_semiring,
    add_values,
    as_point,
    flatten,
    linear_extend,
    point_key,
    pushforward,
    scale_value,
    zero_like,
)
from .errors import DomainError


class FunTable:
    """A total function on a FiniteSpace, given by an explicit table.

    Tables are immutable and hashable, so a distribution over function
    tables is itself a valid Dist. Calling a table outside its domain is
    a DomainError.
    """

    __slots__ = ("domain", "_map")

    def __init__(self, domain: FiniteSpace, mapping: Mapping):
        table = {as_point(x): v for x, v in mapping.items()}
        if set(table) != set(domain.elements):
            raise DomainError("table must be defined on exactly the domain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "_map", table)

    def __setattr__(self, name, value):
        raise AttributeError("FunTable is immutable")

    def __call__(self, x):
        x = as_point(x)
        if x not in self._map:
            raise DomainError(f"{x!r} is outside the table's domain")
        return self._map[x]

    def items(self):
        return tuple((x, self._map[x]) for x in self.domain)

    def values(self):
        return tuple(self._map[x] for x in self.domain)

    def __eq__(self, other):
        return (
            isinstance(other, FunTable)
            and self.domain == other.domain
            and self._map == other._map
        )

    def __hash__(self):
        return hash((self.domain, self.values()))

    def _point_key(self):
        return (
            tuple(point_key(x) for x in self.domain),
            tuple(point_key(v) for v in self.values()),
        )

    def __repr__(self):
        body = ", ".join(f"{x!r}: {v!r}" for x, v in self.items())
        return f"FunTable({{{body}}})"


def enumerate_tables(domain: FiniteSpace, codomain: FiniteSpace, limit: int | None = 64):
    """All functions domain -> codomain as FunTables, in a fixed order.

    Raises ValueError past `limit` functions; exhaustive enumeration is
    only meant for small spaces.
    """
    count = len(codomain) ** len(domain) if len(domain) else 1
    if limit is not None and count > limit:
        raise ValueError(f"{count} functions exceed the enumeration limit {limit}")
    tables = []
    for values in product(codomain.elements, repeat=len(domain)):
        tables.append(FunTable(domain, dict(zip(domain.elements, values))))
    return tables


# -- tensorial strengths -----------------------------------------------------


def strength_left(x, q: Dist) -> Dist:
    """Let the plain point x ride along on the left of the distribution q:
    the distribution {(x, y): q(y)}."""
    x = as_point(x)
    return Dist((((x, y), c) for y, c in q.items()), q.semiring)


def strength_right(p: Dist, y) -> Dist:
    """Mirror of strength_left: {(x, y): p(x)} for a fixed right point y."""
    y = as_point(y)
    return Dist((((x, y), c) for x, c in p.items()), p.semiring)


def tensor(p: Dist, q: Dist) -> Dist:
    """Product distribution {(x, y): p(x)*q(y)} (the direct formula)."""
    sr = _same_semiring(p, q)
    return Dist(
        (((x, y), sr.mul(c, d)) for x, c in p.items() for y, d in q.items()),
        sr,
    )


def tensor_iterated(p: Dist, q: Dist) -> Dist:
    """The tensor rebuilt in the opposite extension order.

    Pair each point of p with q whole, expand those inner products, and
    mix. Agreement with `tensor` on all inputs is the Fubini property of
    the monad, and is what the law suite checks.
    """
    _same_semiring(p, q)
    paired = strength_right(p, q)
    expanded = pushforward(lambda xy: strength_left(xy[0], xy[1]), paired)
    return flatten(expanded)


def cotensor_strength(pf: Dist, x):
    """Evaluate a distribution over function tables at a domain point:
    the image distribution of the tables' values at x."""
    x = as_point(x)
    return pushforward(lambda table: table(x), pf)


# -- module structure maps ----------------------------------------------------


def structure_map(d: Dist, zero=None):
    """Evaluate a distribution over module elements down to one element.

    Dist-valued points mix by flatten; scalar points take the weighted
    sum of the points themselves; function tables mix pointwise (the
    canonical algebra on a function space). `zero` disambiguates the
    empty case.
    """
    if d.is_empty():
        if zero is None:
            raise ValueError("structure_map of empty distribution needs zero=")
        return zero
    first = next(iter(d))
    if isinstance(first, Dist):
        return flatten(d)
    if isinstance(first, FunTable):
        return _table_mixture(d)
    sr = d.semiring
    return sr.sum(sr.mul(c, sr.coerce(x)) for x, c in d.items())


def _table_mixture(d: Dist) -> FunTable:
    sr = d.semiring
    tables = d.support()
    domain = tables[0].domain
    if any(t.domain != domain for t in tables):
        raise DomainError("cannot mix tables over different domains")
    out = {}
    for x in domain:
        acc = None
        for table, w in d.items():
            term = scale_value(sr, w, table(x))
            acc = term if acc is None else add_values(sr, acc, term)
        out[x] = acc
    return FunTable(domain, out)


# -- partial-linear extensions ----------------------------------------------


def extend_2linear(f, zero=None):
    """Extend f(x, y), given on plain points, to accept a distribution in
    the second slot, linearly: (x, Q) -> sum of Q(y)*f(x, y)."""

    def extended(x, q: Dist):
        return linear_extend(lambda y: f(x, y), q, zero=zero)

    return extended


def extend_1linear(f, zero=None):
    """Mirror of extend_2linear for the first slot."""

    def extended(p: Dist, y):
        return linear_extend(lambda x: f(x, y), p, zero=zero)

    return extended


def extend_bilinear(f, zero=None):
    """Extend f(x, y) to distributions in both slots (staged: first slot
    first, then the second)."""
    second = extend_2linear(f, zero=zero)

    def extended(p: Dist, q: Dist):
        return linear_extend(lambda x: second(x, q), p, zero=zero)

    return extended


def extend_2linear_via_strength(f, zero=None):
    """Independent construction of the same second-slot extension, routed
    through strength_left and the module structure map instead of a
    direct weighted sum. Used to cross-check extend_2linear."""

    def extended(x, q: Dist):
        image = pushforward(lambda xy: f(xy[0], xy[1]), strength_left(x, q))
        return structure_map(image, zero=_resolve_zero(zero, f, q))

    return extended


def extend_1linear_via_strength(f, zero=None):
    def extended(p: Dist, y):
        image = pushforward(lambda xy: f(xy[0], xy[1]), strength_right(p, y))
        return structure_map(image, zero=_resolve_zero(zero, f, p))

    return extended


def _resolve_zero(zero, f, d: Dist):
    if zero is not None:
        return zero
    z = getattr(f, "zero", None)
    return z if z is not None else d.semiring.zero


# -- linearity predicates ----------------------------------------------------
#
# Linearity of a map into a module is an infinite quantification; these
# predicates refute it on sampled inputs. Arithmetic being exact, any
# violation on a sampled input is detected with certainty. The suite's
# canonical regime feeds them 1000 samples with supports of size <= 4
# and coefficients bounded by 8 in numerator and denominator.


def check_linear(g, samples: Iterable) -> bool:
    """g: Dist -> module value. Each sample is a distribution over
    distributions; g is linear iff it commutes with mixing."""
    for mixture in samples:
        rhs = g(flatten(mixture))
        image = pushforward(g, mixture)
        if structure_map(image, zero=zero_like(rhs, mixture.semiring)) != rhs:
            return False
    return True


def check_2linear(f, samples: Iterable) -> bool:
    """f: (point, module element) -> module value. Each sample is a pair
    (x, mm) with mm a distribution over module elements."""
    for x, mm in samples:
        rhs = f(x, structure_map(mm, zero=Dist.empty(mm.semiring)))
        image = pushforward(lambda m: f(x, m), mm)
        if structure_map(image, zero=zero_like(rhs, mm.semiring)) != rhs:
            return False
    return True


def check_1linear(f, samples: Iterable) -> bool:
    """Mirror of check_2linear; samples are pairs (mm, y)."""
    for mm, y in samples:
        rhs = f(structure_map(mm, zero=Dist.empty(mm.semiring)), y)
        image = pushforward(lambda m: f(m, y), mm)
        if structure_map(image, zero=zero_like(rhs, mm.semiring)) != rhs:
            return False
    return True


def check_bilinear(f, samples: Iterable) -> bool:
    """Samples are pairs (mm, nn) of distributions over module elements;
    checks linearity in each argument with the other one mixed down."""
    for mm, nn in samples:
        a = structure_map(mm, zero=Dist.empty(mm.semiring))
        b = structure_map(nn, zero=Dist.empty(nn.semiring))
        if not check_1linear(f, [(mm, b)]):
            return False
        if not check_2linear(f, [(a, nn)]):
            return False
    return True
