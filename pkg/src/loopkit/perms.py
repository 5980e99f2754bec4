"""Permutations of {1..n} and finitely generated permutation groups."""

from __future__ import annotations

import math
import re

from . import errors

DEFAULT_CAP = 2_000_000

_CYCLES_RE = re.compile(r"(\s*\([\d\s,]*\)\s*)+")


class Perm:
    """Immutable permutation of 1..n.

    Stored as a padded image tuple: img[0] is a sentinel 0 so img[x] is the
    image of the 1-based point x.  Composition is right-to-left,
    (p * q)(x) == p(q(x)).
    """

    __slots__ = ("img", "_order")

    def __init__(self, images):
        img = (0, *(int(v) for v in images))
        if sorted(img[1:]) != list(range(1, len(img))):
            raise ValueError(f"not a bijection of 1..{len(img) - 1}: {images!r}")
        self.img = img
        self._order = None

    @classmethod
    def _raw(cls, padded):
        # trusted padded tuple, no validation
        p = object.__new__(cls)
        p.img = padded
        p._order = None
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree + 1)))

    @property
    def degree(self):
        return len(self.img) - 1

    def __call__(self, x):
        return self.img[x]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if other.degree != self.degree:
            raise errors.DegreeMismatch(
                f"degrees differ: {self.degree} vs {other.degree}"
            )
        return Perm._raw(tuple(map(self.img.__getitem__, other.img)))

    def inverse(self):
        inv = [0] * len(self.img)
        for x, y in enumerate(self.img):
            inv[y] = x
        inv[0] = 0
        return Perm._raw(tuple(inv))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self):
        """Disjoint cycles of length >= 2, each starting at its minimum."""
        seen = [False] * len(self.img)
        out = []
        for start in range(1, len(self.img)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.img[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.img[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    @property
    def order(self):
        if self._order is None:
            self._order = math.lcm(*(len(c) for c in self.cycles()))
        return self._order

    def is_identity(self):
        return all(self.img[x] == x for x in range(len(self.img)))

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __lt__(self, other):
        return self.img < other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({self.cycle_string()}, degree={self.degree})"


def parse_cycles(text, degree):
    """Parse disjoint-cycle notation like "(2,6)(3,7)" into a Perm.

    "()" is the identity; points are 1-based and must not exceed degree.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    s = text.strip()
    if not s or not _CYCLES_RE.fullmatch(s):
        raise errors.Malformed(f"bad cycle notation: {text!r}")
    img = list(range(degree + 1))
    seen = set()
    for grp in re.findall(r"\(([^()]*)\)", s):
        if not grp.strip():
            continue
        parts = [tok.strip() for tok in grp.split(",")]
        try:
            pts = [int(tok) for tok in parts]
        except ValueError:
            raise errors.Malformed(f"bad cycle notation: {text!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise errors.PointOutOfRange(p, degree)
            if p in seen:
                raise errors.OverlappingCycles(p)
            seen.add(p)
        if len(pts) >= 2:
            for a, b in zip(pts, pts[1:]):
                img[a] = b
            img[pts[-1]] = pts[0]
    return Perm._raw(tuple(img))


def fractional_power(p, num, den):
    """p raised to num/den inside the cyclic group <p>.

    Requires gcd(den, order of p) = 1; then den has an inverse t modulo the
    order and the result is p**(num*t), the unique q in <p> with
    q**den == p**num.
    """
    if den < 1:
        raise ValueError("denominator must be a positive integer")
    m = p.order
    if math.gcd(den, m) != 1:
        raise errors.NotCoprime(
            f"denominator {den} shares a factor with the order {m}"
        )
    t = pow(den, -1, m)
    return p ** ((num * t) % m)


class PermGroup:
    """Permutation group given by generators; elements found by plain closure."""

    def __init__(self, degree, generators=(), cap=DEFAULT_CAP):
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise errors.DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
        self.degree = degree
        self.generators = gens
        self.cap = cap
        self._elements = None

    @classmethod
    def from_elements(cls, degree, elements):
        g = cls(degree, tuple(sorted(set(elements))))
        g._elements = frozenset(g.generators)
        return g

    def elements(self):
        if self._elements is None:
            self._elements = _closure(self.generators, self.degree, self.cap)
        return self._elements

    @property
    def order(self):
        return len(self.elements())

    def __contains__(self, p):
        return p in self.elements()

    def sorted_elements(self):
        return sorted(self.elements())

    def __repr__(self):
        size = "?" if self._elements is None else len(self._elements)
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)}, order={size})"


def _closure(gens, degree, cap):
    ident = Perm.identity(degree)
    els = {ident}
    gens = [g for g in dict.fromkeys(gens) if g != ident]
    frontier = list(els)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in els:
                    if len(els) >= cap:
                        raise errors.CapExceeded(len(els), cap)
                    els.add(q)
                    new.append(q)
        frontier = new
    return frozenset(els)


def group_closure(generators, cap=DEFAULT_CAP, degree=None):
    """Close a generator list under composition; raises CapExceeded past cap."""
    gens = tuple(generators)
    if degree is None:
        degree = gens[0].degree if gens else 1
    group = PermGroup(degree, gens, cap=cap)
    group.elements()
    return group
