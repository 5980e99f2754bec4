"""Extensions of a loop by a cyclic group, and the fixture zoo.

Two builders share the element numbering (x, u^m) -> m*|N| + x, so the base
loop always sits at ids 1..|N|:

* semidirect_product: (x, u^m)(y, u^n) = (x * f^m(y), u^{m+n}) for an
  identity-fixing action f of order dividing k.
* gagola_extension: (x, u^m)(y, u^n) =
  (g^{2m+n}( g^{-2m-n}(x) * g^{m-n}(y) ), u^{m+n}) where f is a
  semiautomorphism of order coprime to 3 and g is the unique cube root of f
  inside <f>.  chein_double is the k = 2 case written out directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .loops import (
    Loop,
    Verdict,
    check_identity_property,
    is_normal_subloop,
    is_power_associative,
)
from .morphisms import is_automorphism, is_semiautomorphism, satisfies_star
from .perms import Perm, fractional_power


@dataclass(frozen=True)
class CyclicActionSpec:
    """Action of a cyclic group of order k on a loop, given by the image f
    of the chosen generator.  Valid when f fixes 1 and f^k is the identity
    (so the order of f divides k, but f need not have order exactly k)."""

    k: int
    f: Perm

    def validate(self, loop):
        if not isinstance(self.k, int) or self.k < 1:
            raise errors.SpecInvalid(f"k must be a positive integer, got {self.k!r}")
        if self.f.degree != loop.n:
            raise errors.SpecInvalid(
                f"action degree {self.f.degree} does not match loop order {loop.n}"
            )
        if self.f(1) != 1:
            raise errors.SpecInvalid("f does not fix the identity element 1")
        if self.k % self.f.order != 0:
            raise errors.SpecInvalid(
                f"f^k is not the identity (|f| = {self.f.order} does not divide k = {self.k})"
            )


def _power_images(f, count, modulus=None):
    """Padded numpy image arrays of f^0 .. f^(count-1) (exponents mod modulus)."""
    n = f.degree
    powers = []
    cur = Perm.identity(n)
    steps = modulus if modulus is not None else count
    for _ in range(steps):
        powers.append(np.asarray(cur.img, dtype=np.int64))
        cur = f * cur
    if modulus is None:
        return powers
    return [powers[m % modulus] for m in range(count)]


def _extension_name(tag, base, k, f):
    return f"{tag}({base.name or '?'},k={k},f={f.cycle_string()})"


def semidirect_product(base, spec, name=None):
    """The order |N|*k loop with (x, u^m)(y, u^n) = (x * f^m(y), u^{m+n})."""
    spec.validate(base)
    n, k = base.n, spec.k
    fpow = _power_images(spec.f, k, modulus=spec.f.order)
    TN = base._t
    idx = np.arange(1, n + 1)
    table = np.zeros((n * k, n * k), dtype=np.int64)
    for m in range(k):
        fm = fpow[m]
        rows = slice(m * n, (m + 1) * n)
        for nn in range(k):
            offset = ((m + nn) % k) * n
            table[rows, nn * n : (nn + 1) * n] = TN[np.ix_(idx, fm[1:])] + offset
    return Loop(table, name=name or _extension_name("semidirect", base, k, spec.f))


def moufang_semidirect_check(base, spec):
    """True iff every power of the action is an automorphism satisfying the
    star condition -- equivalently, iff the semidirect product is Moufang."""
    spec.validate(base)
    fi = Perm.identity(base.n)
    for i in range(spec.k):
        aut = is_automorphism(base, fi)
        if not aut:
            return Verdict(False, aut.witness, f"f^{i} is not an automorphism of the base")
        star = satisfies_star(base, fi)
        if not star:
            return Verdict(False, star.witness, f"f^{i} violates the star identity")
        fi = spec.f * fi
    return Verdict(True)


def gagola_extension(base, spec, name=None):
    """The cyclic extension twisted by fractional powers of a semiautomorphism.

    Exponents (2m+n)/3, (-2m-n)/3, (m-n)/3 are taken as powers of the cube
    root g of f, reduced mod |f|; the u-coordinate adds mod k.  Well defined
    because |f| divides k, so the choice of representatives for m, n cannot
    change any g-power.
    """
    spec.validate(base)
    f = spec.f
    semi = is_semiautomorphism(base, f)
    if not semi:
        raise errors.NotSemiautomorphism(semi.witness)
    o = f.order
    if math.gcd(o, 3) != 1:
        raise errors.OrderNotCoprimeTo3(o)
    g = fractional_power(f, 1, 3)
    gpow = _power_images(g, o)
    n, k = base.n, spec.k
    TN = base._t
    table = np.zeros((n * k, n * k), dtype=np.int64)
    for m in range(k):
        rows = slice(m * n, (m + 1) * n)
        for nn in range(k):
            e1 = gpow[(2 * m + nn) % o]
            e2 = gpow[(-2 * m - nn) % o]
            e3 = gpow[(m - nn) % o]
            offset = ((m + nn) % k) * n
            block = e1[TN[np.ix_(e2[1:], e3[1:])]]
            table[rows, nn * n : (nn + 1) * n] = block + offset
    return Loop(table, name=name or _extension_name("gagola", base, k, f))


def inversion_permutation(loop):
    """The map x -> x^-1; NoTwoSidedInverse if some element lacks one."""
    return Perm._raw(tuple([0] + [loop.inverse_of(x) for x in loop.elements]))


def chein_double(base, f=None, name=None):
    """The order-2|N| extension built from the three doubling formulas

        xu * y = (x f(y)) u,   x * yu = f(f(x) f(y)) u,   xu * yu = f(f(x) y),

    with x*y on the base block.  f defaults to inversion and must be an
    involutive semiautomorphism; the table coincides with
    gagola_extension(base, k=2, f).
    """
    if f is None:
        f = inversion_permutation(base)
    if f.degree != base.n:
        raise errors.SpecInvalid(
            f"action degree {f.degree} does not match loop order {base.n}"
        )
    if not (f * f).is_identity():
        raise errors.SpecInvalid("f must be an involution (f*f = identity)")
    semi = is_semiautomorphism(base, f)
    if not semi:
        raise errors.NotSemiautomorphism(semi.witness)
    n = base.n
    TN = base._t
    F = np.asarray(f.img, dtype=np.int64)
    idx = np.arange(1, n + 1)
    table = np.zeros((2 * n, 2 * n), dtype=np.int64)
    table[:n, :n] = TN[1:, 1:]
    table[n:, :n] = TN[np.ix_(idx, F[1:])] + n
    table[:n, n:] = F[TN[np.ix_(F[1:], F[1:])]] + n
    table[n:, n:] = F[TN[np.ix_(F[1:], idx)]]
    return Loop(table, name=name or f"chein({base.name or '?'},f={f.cycle_string()})")


def verify_gagola_decomposition(loop, base_elements, u):
    """Check that a Moufang loop really is the twisted cyclic extension of the
    given normal subloop by <u>, and reconstruct the twisting map.

    Computes f(x) = (u*x)*u^-1 on the subloop (asserting the alternative
    bracketing u*(x*u^-1) agrees), verifies f is a semiautomorphism of the
    induced subloop, and replays the extension multiplication against every
    entry of the table.  Returns f as a permutation of the induced subloop
    (elements renumbered 1..|N| in increasing id order).
    """
    mou = check_identity_property(loop, "moufang")
    if not mou:
        raise errors.NotMoufang(mou.witness)
    base = frozenset(base_elements)
    if not is_normal_subloop(loop, base):
        raise errors.NotNormal(f"{sorted(base)} is not invariant under the inner mappings")
    loop._check_elem(u)

    cyc = loop.subloop_closure((u,))
    h = len(cyc)
    if math.gcd(h, 3) != 1:
        raise errors.NotCoprimeTo3(h)
    upow = [1]
    for _ in range(h - 1):
        upow.append(loop.mul(upow[-1], u))
    if set(upow) != set(cyc) or len(set(upow)) != h:
        raise errors.FactorizationFailed(f"<{u}> is not cyclic of order {h}")

    if len(base) * h != loop.n:
        raise errors.FactorizationFailed(
            f"|N| * |<u>| = {len(base)} * {h} != |G| = {loop.n}"
        )
    factor = {}
    for m in range(h):
        for x in sorted(base):
            g = loop.mul(x, upow[m])
            if g in factor:
                raise errors.FactorizationFailed(
                    f"element {g} factors as x*u^m in two ways"
                )
            factor[g] = (x, m)
    if len(factor) != loop.n:
        raise errors.FactorizationFailed("some element does not factor as x*u^m")

    u_inv = loop.inverse_of(u)
    conj = {}
    for x in sorted(base):
        a = loop.mul(loop.mul(u, x), u_inv)
        b = loop.mul(u, loop.mul(x, u_inv))
        if a != b:
            raise errors.FormulaMismatch(
                "(u*x)*u^-1 and u*(x*u^-1) disagree", witness=(x,)
            )
        if a not in base:
            raise errors.FormulaMismatch(
                "conjugation by u leaves the subloop", witness=(x,)
            )
        conj[x] = a

    ordered = sorted(base)
    to_new = {x: i + 1 for i, x in enumerate(ordered)}
    sub_rows = [[to_new[loop.mul(a, b)] for b in ordered] for a in ordered]
    induced = Loop(sub_rows, name="decomposed-base")
    f = Perm._raw(tuple([0] + [to_new[conj[x]] for x in ordered]))
    semi = is_semiautomorphism(induced, f)
    if not semi:
        raise errors.FormulaMismatch(
            "conjugation by u is not a semiautomorphism of the subloop",
            witness=semi.witness,
        )

    o = f.order
    g3 = fractional_power(f, 1, 3)
    gp = [g3 ** e for e in range(o)]
    for m in range(h):
        for nn in range(h):
            e1 = gp[(2 * m + nn) % o]
            e2 = gp[(-2 * m - nn) % o]
            e3 = gp[(m - nn) % o]
            um, un, uout = upow[m], upow[nn], upow[(m + nn) % h]
            for x in ordered:
                xm = loop.mul(x, um)
                for y in ordered:
                    got = loop.mul(xm, loop.mul(y, un))
                    z = induced.mul(e2(to_new[x]), e3(to_new[y]))
                    want = loop.mul(ordered[e1(z) - 1], uout)
                    if got != want:
                        raise errors.FormulaMismatch(
                            "extension formula does not reproduce the table",
                            witness=(x, m, y, nn),
                        )
    return f


# -- the zoo -------------------------------------------------------------------

_L5_ROWS = (
    (1, 2, 3, 4, 5),
    (2, 1, 4, 5, 3),
    (3, 4, 5, 2, 1),
    (4, 5, 1, 3, 2),
    (5, 3, 2, 1, 4),
)


def _cyclic(n, name):
    return Loop([[(i + j - 2) % n + 1 for j in range(1, n + 1)] for i in range(1, n + 1)],
                name=name)


def _xor_loop(n, name):
    return Loop([[((i - 1) ^ (j - 1)) + 1 for j in range(1, n + 1)] for i in range(1, n + 1)],
                name=name)


def _from_perms(perms, name):
    index = {p: i + 1 for i, p in enumerate(perms)}
    return Loop([[index[p * q] for q in perms] for p in perms], name=name)


def _build_s3():
    r = Perm([2, 3, 1])
    s = Perm([1, 3, 2])
    e = Perm.identity(3)
    return _from_perms([e, r, r * r, s, s * r, s * r * r], "s3")


def _build_d4():
    r = Perm([2, 3, 4, 1])
    s = Perm([1, 4, 3, 2])
    e = Perm.identity(4)
    return _from_perms([e, r, r ** 2, r ** 3, s, s * r, s * r ** 2, s * r ** 3], "d4")


def _build_q8():
    # ids 1..8 = +1, -1, +i, -i, +j, -j, +k, -k; units 0..3 = 1, i, j, k
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def decode(i):
        return (1 if (i - 1) % 2 == 0 else -1, (i - 1) // 2)

    def encode(sign, unit):
        return unit * 2 + (1 if sign == 1 else 2)

    rows = []
    for a in range(1, 9):
        sa, ua = decode(a)
        row = []
        for b in range(1, 9):
            sb, ub = decode(b)
            sp, up = unit_mul[(ua, ub)]
            row.append(encode(sa * sb * sp, up))
        rows.append(row)
    return Loop(rows, name="q8")


def _assert_zoo(cond, name, what):
    if not cond:
        raise AssertionError(f"zoo fixture {name} failed its defining check: {what}")


_ZOO_BUILDERS = {}


def _register_zoo():
    for n in range(1, 13):
        _ZOO_BUILDERS[f"z{n}"] = lambda n=n: _cyclic(n, f"z{n}")
    _ZOO_BUILDERS["v4"] = lambda: _xor_loop(4, "v4")
    _ZOO_BUILDERS["z2cubed"] = lambda: _xor_loop(8, "z2cubed")
    _ZOO_BUILDERS["steiner8"] = lambda: _xor_loop(8, "steiner8")
    _ZOO_BUILDERS["s3"] = _build_s3
    _ZOO_BUILDERS["d4"] = _build_d4
    _ZOO_BUILDERS["q8"] = _build_q8
    _ZOO_BUILDERS["l5"] = lambda: Loop(_L5_ROWS, name="l5")
    _ZOO_BUILDERS["chein-s3"] = lambda: chein_double(zoo_loop("s3"), name="chein-s3")
    _ZOO_BUILDERS["chein-q8"] = lambda: chein_double(zoo_loop("q8"), name="chein-q8")


_register_zoo()

ZOO_NAMES = tuple(_ZOO_BUILDERS)

_zoo_cache = {}


def zoo_loop(name):
    """A named fixture loop, validated against its defining properties."""
    if name not in _ZOO_BUILDERS:
        raise errors.UnknownName(name, known=ZOO_NAMES)
    if name not in _zoo_cache:
        loop = _ZOO_BUILDERS[name]()
        _validate_zoo(name, loop)
        _zoo_cache[name] = loop
    return _zoo_cache[name]


def _validate_zoo(name, loop):
    if name.startswith("z") or name in ("v4", "s3", "d4", "q8"):
        _assert_zoo(check_identity_property(loop, "associative").ok, name, "associative")
    if name in ("steiner8", "z2cubed"):
        # the order-8 Steiner loop from the unique 7-point triple system is
        # the elementary abelian group of order 8, so both names share a table
        _assert_zoo(check_identity_property(loop, "steiner").ok, name, "steiner")
        _assert_zoo(check_identity_property(loop, "associative").ok, name, "associative")
    if name == "l5":
        _assert_zoo(not check_identity_property(loop, "associative").ok, name, "nonassociative")
        _assert_zoo(not check_identity_property(loop, "inverse_property").ok, name, "non-IP")
        _assert_zoo(not is_power_associative(loop).ok, name, "non-power-associative")
    if name.startswith("chein-"):
        _assert_zoo(check_identity_property(loop, "moufang").ok, name, "moufang")
        _assert_zoo(not check_identity_property(loop, "associative").ok, name, "nonassociative")
