"""Finite-support distributions and the monad structure on them.

A Dist is a finite map from support points to nonzero scalars of some
exact semiring. Points live in a closed value universe: rationals,
string atoms, pairs, Left/Right tagged points, nested Dist values
(needed for mixtures of mixtures), and function tables. The universe is
totally ordered so every distribution iterates and prints
deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .errors import DomainError
from .scalars import RATIONALS, Semiring


@dataclass(frozen=True)
class Left:
    value: object


@dataclass(frozen=True)
class Right:
    value: object


class FiniteSpace:
    """An explicit finite list of points, duplicate-free, in a fixed order.

    Used wherever functions must be enumerated or tabulated exhaustively.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable):
        elems = tuple(as_point(x) for x in elements)
        if len(set(elems)) != len(elems):
            raise ValueError("FiniteSpace elements must be duplicate-free")
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSpace is immutable")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return as_point(x) in self.elements

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"FiniteSpace({list(self.elements)!r})"


def as_point(x):
    """Canonicalize a value into the point universe.

    Numbers become Fractions; floats are rejected outright to preserve
    exactness. Pairs are 2-tuples of points.
    """
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; use Fraction or a 'p/q' string")
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        if len(x) != 2:
            raise TypeError("only pairs (2-tuples) are points")
        return (as_point(x[0]), as_point(x[1]))
    if isinstance(x, Left):
        return Left(as_point(x.value))
    if isinstance(x, Right):
        return Right(as_point(x.value))
    if isinstance(x, Dist):
        return x
    if hasattr(x, "_point_key"):
        return x
    raise TypeError(f"{x!r} is not in the point universe")


def point_key(x):
    """Total-order sort key over the whole point universe."""
    if isinstance(x, bool) or isinstance(x, (int, Fraction)):
        return (0, Fraction(x))
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, point_key(x[0]), point_key(x[1]))
    if isinstance(x, Left):
        return (3, 0, point_key(x.value))
    if isinstance(x, Right):
        return (3, 1, point_key(x.value))
    if isinstance(x, Dist):
        return (4, x._order_key())
    if hasattr(x, "_point_key"):
        return (5, type(x).__name__, x._point_key())
    raise TypeError(f"{x!r} is not in the point universe")


class Dist:
    """Finite-support distribution: point -> nonzero scalar weight.

    Canonical form is maintained by construction (zero weights dropped,
    duplicate points merged), so equality of distributions is plain
    structural equality. Values are immutable and hashable, which lets a
    Dist itself serve as a support point of an outer Dist.
    """

    __slots__ = ("semiring", "_w", "_sorted", "_hash")

    def __init__(self, weights=(), semiring: Semiring = RATIONALS):
        w = {}
        items = weights.items() if hasattr(weights, "items") else weights
        for x, c in items:
            x = as_point(x)
            c = semiring.add(w[x], semiring.coerce(c)) if x in w else semiring.coerce(c)
            w[x] = c
        for x in [x for x, c in w.items() if c == semiring.zero]:
            del w[x]
        object.__setattr__(self, "semiring", semiring)
        object.__setattr__(self, "_w", w)
        object.__setattr__(self, "_sorted", None)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def empty(cls, semiring: Semiring = RATIONALS) -> "Dist":
        return cls((), semiring)

    def __setattr__(self, name, value):
        raise AttributeError("Dist is immutable")

    # -- canonical views ---------------------------------------------------

    def items(self) -> Tuple:
        """Support/weight pairs in point order (deterministic)."""
        if self._sorted is None:
            pairs = tuple(sorted(self._w.items(), key=lambda it: point_key(it[0])))
            object.__setattr__(self, "_sorted", pairs)
        return self._sorted

    def support(self) -> Tuple:
        return tuple(x for x, _ in self.items())

    def __getitem__(self, x):
        return self._w.get(as_point(x), self.semiring.zero)

    def __contains__(self, x):
        return as_point(x) in self._w

    def __len__(self):
        return len(self._w)

    def __iter__(self):
        return iter(self.support())

    def is_empty(self) -> bool:
        return not self._w

    def _order_key(self):
        return (self.semiring.name,) + tuple(
            (point_key(x), c) for x, c in self.items()
        )

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Dist):
            return NotImplemented
        return self.semiring.name == other.semiring.name and self._w == other._w

    def __hash__(self):
        if self._hash is None:
            h = hash((self.semiring.name, frozenset(self._w.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{_show_point(x)}: {c}" for x, c in self.items())
        tag = "" if self.semiring is RATIONALS else f", {self.semiring.name}"
        return f"Dist({{{body}}}{tag})"

    # -- module arithmetic -------------------------------------------------

    def __add__(self, other):
        return dist_add(self, other)

    def __sub__(self, other):
        return dist_sub(self, other)

    def __neg__(self):
        if self.semiring.neg is None:
            raise TypeError(f"{self.semiring.name} distributions have no negation")
        neg = self.semiring.neg
        return Dist(((x, neg(c)) for x, c in self._w.items()), self.semiring)

    def __mul__(self, c):
        return scale(c, self)

    __rmul__ = __mul__


def _show_point(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        return f"({_show_point(x[0])}, {_show_point(x[1])})"
    if isinstance(x, Left):
        return f"Left({_show_point(x.value)})"
    if isinstance(x, Right):
        return f"Right({_show_point(x.value)})"
    return repr(x)


def _same_semiring(p: Dist, q: Dist) -> Semiring:
    if p.semiring.name != q.semiring.name:
        raise TypeError(
            f"mixed scalar semirings: {p.semiring.name} vs {q.semiring.name}"
        )
    return p.semiring


# -- the monad -------------------------------------------------------------


def dirac(x, semiring: Semiring = RATIONALS) -> Dist:
    """The unit: the point mass at x (weight 1)."""
    return Dist({x: semiring.one}, semiring)


def pushforward(f, p: Dist) -> Dist:
    """Image distribution along f, summing weights of collapsed fibers."""
    return Dist(((f(x), c) for x, c in p._w.items()), p.semiring)


def flatten(pp: Dist) -> Dist:
    """Monad multiplication: evaluate a mixture of distributions.

    Every support point of pp must itself be a Dist over pp's semiring;
    the result is the weighted sum of the inner distributions.
    """
    sr = pp.semiring
    acc = {}
    for inner, c in pp._w.items():
        if not isinstance(inner, Dist):
            raise TypeError(f"flatten needs Dist-valued points, got {inner!r}")
        _same_semiring(pp, inner)
        for y, v in inner._w.items():
            w = sr.mul(c, v)
            acc[y] = sr.add(acc[y], w) if y in acc else w
    return Dist(acc, sr)


def total(p: Dist):
    """Sum of all weights (the distribution's overall mass)."""
    return p.semiring.sum(p._w.values())


def scale(c, p: Dist) -> Dist:
    c = p.semiring.coerce(c)
    return Dist(((x, p.semiring.mul(c, w)) for x, w in p._w.items()), p.semiring)


def dist_add(p: Dist, q: Dist) -> Dist:
    sr = _same_semiring(p, q)
    acc = dict(p._w)
    for x, c in q._w.items():
        acc[x] = sr.add(acc[x], c) if x in acc else c
    return Dist(acc, sr)


def dist_sub(p: Dist, q: Dist) -> Dist:
    """Pointwise difference; requires ring scalars."""
    _same_semiring(p, q)
    return dist_add(p, -q)


# -- values of paired/extended maps ----------------------------------------
#
# Maps out of a distribution land in a module: either the scalars
# themselves or another distribution space. These helpers give the two
# shapes one arithmetic.


def scale_value(sr: Semiring, c, v):
    if isinstance(v, Dist):
        return scale(c, v)
    return sr.mul(c, sr.coerce(v))


def add_values(sr: Semiring, a, b):
    if isinstance(a, Dist) or isinstance(b, Dist):
        return dist_add(a, b)
    return sr.add(a, b)


def sub_values(sr: Semiring, a, b):
    if isinstance(a, Dist) or isinstance(b, Dist):
        return dist_sub(a, b)
    return sr.sub(a, b)


def zero_like(v, sr: Semiring = RATIONALS):
    if isinstance(v, Dist):
        return Dist.empty(v.semiring)
    return sr.zero


def linear_extend(f, p: Dist, zero=None):
    """Linear extension of f over the unit: the weighted sum of f's values.

    f maps points to scalars or to distributions; the result is
    sum of p(x)*f(x) in the matching module. `zero` supplies the result
    for an empty p when it cannot be inferred (defaults to f.zero when f
    carries one, else the scalar zero).
    """
    sr = p.semiring
    acc = None
    for x, c in p._w.items():
        term = scale_value(sr, c, f(x))
        acc = term if acc is None else add_values(sr, acc, term)
    if acc is not None:
        return acc
    if zero is not None:
        return zero
    z = getattr(f, "zero", None)
    return z if z is not None else sr.zero


# -- biproduct structure ----------------------------------------------------


def biproduct_split(p: Dist) -> Tuple[Dist, Dist]:
    """Split a distribution over tagged points into its two components."""
    left, right = {}, {}
    for x, c in p._w.items():
        if isinstance(x, Left):
            left[x.value] = c
        elif isinstance(x, Right):
            right[x.value] = c
        else:
            raise DomainError(f"point {x!r} carries no Left/Right tag")
    return Dist(left, p.semiring), Dist(right, p.semiring)


def biproduct_merge(p: Dist, q: Dist) -> Dist:
    """Inverse of biproduct_split: re-tag and take the disjoint union."""
    sr = _same_semiring(p, q)
    merged = {Left(x): c for x, c in p._w.items()}
    merged.update({Right(y): c for y, c in q._w.items()})
    return Dist(merged, sr)
