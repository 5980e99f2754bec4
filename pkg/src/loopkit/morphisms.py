"""Automorphisms, semiautomorphisms, and the Moufang star condition.

The star condition is the identity (xy)(z*f(x)) = x((yz)*f(x)) for a fixed
map f; a loop is Moufang exactly when some automorphism satisfies it (the
identity map works for every Moufang loop).
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from . import errors
from .isomorphism import search_morphisms
from .loops import (
    Verdict,
    check_identity_property,
    core_property_report,
    inn_generators,
)
from .perms import PermGroup

ENUM_BOUND = 16


def _np_img(f):
    return np.asarray(f.img, dtype=np.int64)


def _require_degree(loop, f):
    if f.degree != loop.n:
        raise errors.DegreeMismatch(f"map degree {f.degree} != loop order {loop.n}")


def is_automorphism(loop, f):
    """f(1) = 1 and f(x*y) = f(x)*f(y) for all pairs; witness is the first
    violating pair."""
    _require_degree(loop, f)
    T = loop._t
    F = _np_img(f)
    neq = F[T[1:, 1:]] != T[np.ix_(F[1:], F[1:])]
    hits = np.argwhere(neq)
    if len(hits):
        i, j = hits[0]
        return Verdict(False, (int(i) + 1, int(j) + 1))
    return Verdict(True)


def is_semiautomorphism(loop, f):
    """f(1) = 1 and f(x(yx)) = f(x)(f(y)f(x)) for all pairs."""
    _require_degree(loop, f)
    if f(1) != 1:
        return Verdict(False, (1,), "does not fix the identity element")
    T, n = loop._t, loop.n
    F = _np_img(f)
    idx = np.arange(1, n + 1)
    X, Y = idx[:, None], idx[None, :]
    lhs = F[T[X, T[Y, X]]]
    rhs = T[F[X], T[F[Y], F[X]]]
    hits = np.argwhere(lhs != rhs)
    if len(hits):
        i, j = hits[0]
        return Verdict(False, (int(i) + 1, int(j) + 1))
    return Verdict(True)


def satisfies_star(loop, f):
    """The raw star check (xy)(z*f(x)) = x((yz)*f(x)) over all triples;
    f may be any bijection, not just an automorphism."""
    _require_degree(loop, f)
    T, n = loop._t, loop.n
    idx = np.arange(1, n + 1)
    Y, Z = idx[:, None], idx[None, :]
    TYZ = T[Y, Z]
    for x in range(1, n + 1):
        fx = f(x)
        neq = T[T[x, Y], T[Z, fx]] != T[x, T[TYZ, fx]]
        hits = np.argwhere(neq)
        if len(hits):
            i, j = hits[0]
            return Verdict(False, (x, int(i) + 1, int(j) + 1))
    return Verdict(True)


def _enumerate(loop, law, max_order):
    if loop.n > max_order:
        raise errors.OrderTooLarge(loop.n, max_order)
    found = search_morphisms(loop, loop, law)
    check = is_automorphism if law == "hom" else is_semiautomorphism
    for f in found:
        if not check(loop, f):
            raise AssertionError("search returned a bad map")  # engine bug
    return PermGroup.from_elements(loop.n, found)


def automorphism_group(loop, max_order=ENUM_BOUND):
    """All automorphisms, by backtracking over identity-fixing bijections."""
    return _enumerate(loop, "hom", max_order)


def semiautomorphism_group(loop, max_order=ENUM_BOUND):
    """All semiautomorphisms, by backtracking over identity-fixing bijections."""
    return _enumerate(loop, "semi", max_order)


def find_star_automorphisms(loop, max_order=ENUM_BOUND):
    """The automorphisms satisfying the star condition, sorted canonically.

    Nonempty exactly when the loop is Moufang; the identity map always
    qualifies in that case.
    """
    return [
        f
        for f in automorphism_group(loop, max_order=max_order).sorted_elements()
        if satisfies_star(loop, f)
    ]


def is_semiautomorphic_ip(loop):
    """Flexible, inverse property, and every inner mapping a semiautomorphism.

    Semiautomorphisms are closed under composition and inverse, so checking
    the inner-mapping generators suffices.
    """
    flex = check_identity_property(loop, "flexible")
    if not flex:
        return Verdict(False, flex.witness, "not flexible")
    ip = check_identity_property(loop, "inverse_property")
    if not ip:
        return Verdict(False, ip.witness, "not an inverse property loop")
    for theta in inn_generators(loop):
        v = is_semiautomorphism(loop, theta)
        if not v:
            return Verdict(
                False,
                v.witness,
                f"inner mapping {theta.cycle_string()} is not a semiautomorphism",
            )
    return Verdict(True)


def property_report(loop):
    """The full PropertyReport, semiautomorphic_ip included."""
    return replace(core_property_report(loop), semiautomorphic_ip=is_semiautomorphic_ip(loop))
