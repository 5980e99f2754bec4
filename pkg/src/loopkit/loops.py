"""Finite loops as Cayley tables, with exhaustive identity-property checks.

A loop of order n is a Latin square on 1..n whose element 1 is a two-sided
identity.  Tables are padded internally: row/column 0 hold a sentinel 0 so
every lookup stays 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from . import errors
from .perms import Perm

MAX_ORDER = 512

IDENTITY_PROPERTIES = (
    "associative",
    "commutative",
    "flexible",
    "inverse_property",
    "moufang",
    "steiner",
)


@dataclass(frozen=True)
class Verdict:
    """A boolean check outcome, with the first violating tuple when false."""

    ok: bool
    witness: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class PropertyReport:
    """All single-loop property verdicts (semiautomorphic_ip is filled by
    the morphisms module, which needs inner mappings)."""

    associative: Verdict
    commutative: Verdict
    flexible: Verdict
    has_two_sided_inverses: Verdict
    inverse_property: Verdict
    power_associative: Verdict
    diassociative: Verdict
    moufang: Verdict
    steiner: Verdict
    semiautomorphic_ip: Verdict | None = None

    def items(self):
        for f in fields(self):
            yield f.name, getattr(self, f.name)


class Loop:
    """An order-n loop given by its Cayley table.  Immutable."""

    __slots__ = ("n", "name", "_t", "_rows", "_ld_rows", "_rd_rows", "_inv")

    def __init__(self, rows, name=None, max_order=MAX_ORDER):
        mat = np.asarray(rows)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
            raise errors.BadDimensions(f"expected a nonempty square table, got shape {mat.shape}")
        if not np.issubdtype(mat.dtype, np.integer):
            raise errors.BadElementId("table entries must be integers")
        n = int(mat.shape[0])
        if n > max_order:
            raise errors.BadDimensions(f"order {n} exceeds the configured maximum {max_order}")
        bad = np.argwhere((mat < 1) | (mat > n))
        if len(bad):
            i, j = bad[0]
            raise errors.BadElementId(
                f"entry at row {i + 1}, column {j + 1} is {int(mat[i, j])}, outside 1..{n}"
            )

        t = np.zeros((n + 1, n + 1), dtype=np.int64)
        t[1:, 1:] = mat
        _validate_latin(t, n)

        expect = np.arange(1, n + 1)
        if not (np.array_equal(t[1, 1:], expect) and np.array_equal(t[1:, 1], expect)):
            raise errors.NoIdentity(found=_find_identity(t, n))

        t.setflags(write=False)
        self.n = n
        self.name = name
        self._t = t
        self._rows = tuple(tuple(int(v) for v in t[i]) for i in range(n + 1))

        # division tables: ld[a][b] solves a*x = b, rd[b][a] solves y*a = b
        ld = np.zeros_like(t)
        rd = np.zeros_like(t)
        for i in range(1, n + 1):
            ld[i, t[i, 1:]] = expect
        for j in range(1, n + 1):
            rd[t[1:, j], j] = expect
        self._ld_rows = tuple(tuple(int(v) for v in ld[i]) for i in range(n + 1))
        self._rd_rows = tuple(tuple(int(v) for v in rd[i]) for i in range(n + 1))
        self._inv = -1  # lazily computed two-sided inverse vector

    # -- basic operations ---------------------------------------------------

    @property
    def elements(self):
        return range(1, self.n + 1)

    def _check_elem(self, x):
        if not 1 <= x <= self.n:
            raise IndexError(f"element {x} outside 1..{self.n}")
        return x

    def mul(self, a, b):
        """a*b by table lookup."""
        return self._rows[self._check_elem(a)][self._check_elem(b)]

    def ldiv(self, a, b):
        """The unique x with a*x = b."""
        return self._ld_rows[self._check_elem(a)][self._check_elem(b)]

    def rdiv(self, b, a):
        """The unique y with y*a = b."""
        return self._rd_rows[self._check_elem(b)][self._check_elem(a)]

    def translation(self, x, side):
        """Left translation y -> x*y (row x) or right translation y -> y*x."""
        self._check_elem(x)
        if side == "left":
            return Perm._raw(self._rows[x])
        if side == "right":
            return Perm._raw(tuple(int(v) for v in self._t[:, x]))
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def inverse_of(self, x):
        """x's two-sided inverse; NoTwoSidedInverse if the one-sided ones differ."""
        self._check_elem(x)
        left = self._rd_rows[1][x]   # y with y*x = 1
        right = self._ld_rows[x][1]  # b with x*b = 1
        if left != right:
            raise errors.NoTwoSidedInverse(x, left, right)
        return left

    def _inverses(self):
        """Padded tuple of two-sided inverses, or None if some element lacks one."""
        if self._inv == -1:
            inv = [0]
            for x in range(1, self.n + 1):
                left = self._rd_rows[1][x]
                if left != self._ld_rows[x][1]:
                    inv = None
                    break
                inv.append(left)
            self._inv = tuple(inv) if inv is not None else None
        return self._inv

    # -- subloops -----------------------------------------------------------

    def _closure_ordered(self, gens):
        """Closure of gens U {1} under mul/ldiv/rdiv, in discovery order."""
        if not gens:
            raise ValueError("generating set must be nonempty")
        n = self.n
        seen = [False] * (n + 1)
        out = []

        def add(e):
            if not seen[e]:
                seen[e] = True
                out.append(e)

        add(1)
        for g in sorted(set(gens)):
            add(self._check_elem(g))
        rows, ld, rd = self._rows, self._ld_rows, self._rd_rows
        i = 0
        while i < len(out):
            a = out[i]
            for j in range(i + 1):
                b = out[j]
                add(rows[a][b])
                add(rows[b][a])
                add(ld[a][b])
                add(ld[b][a])
                add(rd[a][b])
                add(rd[b][a])
            i += 1
        return out

    def subloop_closure(self, gens):
        """Smallest subset containing gens U {1} closed under mul, ldiv, rdiv."""
        return tuple(sorted(self._closure_ordered(gens)))

    def relabel(self, perm):
        """The isomorphic copy with element x renamed perm(x); perm must fix 1."""
        if perm.degree != self.n:
            raise errors.DegreeMismatch(f"permutation degree {perm.degree} != order {self.n}")
        if perm(1) != 1:
            raise ValueError("relabeling must fix the identity element 1")
        return Loop(_relabel_grid([list(r[1:]) for r in self._rows[1:]], list(perm.img)),
                    name=self.name)

    # -- plumbing -----------------------------------------------------------

    def rows(self):
        """The table as a list of lists (1-based values, no padding)."""
        return [list(r[1:]) for r in self._rows[1:]]

    def __eq__(self, other):
        return isinstance(other, Loop) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Loop(order={self.n}{label})"


def _validate_latin(t, n):
    expect = np.arange(1, n + 1)
    if not (np.sort(t[1:, 1:], axis=1) == expect).all():
        for i in range(1, n + 1):
            seen = {}
            for j in range(1, n + 1):
                v = int(t[i, j])
                if v in seen:
                    raise errors.NotLatin("row", i, v, (seen[v], j))
                seen[v] = j
    if not (np.sort(t[1:, 1:], axis=0) == expect[:, None]).all():
        for j in range(1, n + 1):
            seen = {}
            for i in range(1, n + 1):
                v = int(t[i, j])
                if v in seen:
                    raise errors.NotLatin("column", j, v, (seen[v], i))
                seen[v] = i


def _find_identity(t, n):
    expect = np.arange(1, n + 1)
    for e in range(1, n + 1):
        if np.array_equal(t[e, 1:], expect) and np.array_equal(t[1:, e], expect):
            return e
    return None


def _relabel_grid(grid, sigma):
    # sigma: padded image list; new[sigma[i]][sigma[j]] = sigma[old[i][j]]
    n = len(grid)
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        si = sigma[i + 1] - 1
        row = grid[i]
        for j in range(n):
            new[si][sigma[j + 1] - 1] = sigma[row[j]]
    return new


# -- parsing and serialization ----------------------------------------------

def parse_table(text, relabel=False, max_order=MAX_ORDER):
    """Parse the plain-text table format into a validated Loop.

    Format: optional '#' comment lines anywhere (a '# name: <label>' comment
    sets the name); the first significant line is the order n; then n lines
    of n whitespace-separated integers in 1..n, row i listing i*1 .. i*n.
    With relabel=True a table whose identity is some element other than 1 is
    renumbered by swapping that element with 1.
    """
    if hasattr(text, "read"):
        text = text.read()
    name = None
    significant = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comment = stripped[1:].strip()
            if name is None and comment.lower().startswith("name:"):
                name = comment[5:].strip() or None
            continue
        significant.append(stripped)
    if not significant:
        raise errors.BadDimensions("no table data found")
    head = significant[0].split()
    if len(head) != 1:
        raise errors.BadDimensions(f"expected the order alone on the first line, got {significant[0]!r}")
    try:
        n = int(head[0])
    except ValueError:
        raise errors.BadDimensions(f"bad order line {significant[0]!r}") from None
    if n < 1:
        raise errors.BadDimensions(f"order must be positive, got {n}")
    if len(significant) - 1 != n:
        raise errors.BadDimensions(f"expected {n} table rows, found {len(significant) - 1}")
    grid = []
    for i, line in enumerate(significant[1:], start=1):
        toks = line.split()
        if len(toks) != n:
            raise errors.BadDimensions(f"row {i} has {len(toks)} entries, expected {n}")
        row = []
        for j, tok in enumerate(toks, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise errors.BadElementId(f"row {i}, column {j}: {tok!r} is not an integer") from None
            row.append(v)
        grid.append(row)

    if relabel:
        mat = np.asarray(grid)
        if ((mat >= 1) & (mat <= n)).all():
            t = np.zeros((n + 1, n + 1), dtype=np.int64)
            t[1:, 1:] = mat
            _validate_latin(t, n)
            e = _find_identity(t, n)
            if e is None:
                raise errors.NoIdentity(found=None)
            if e != 1:
                sigma = list(range(n + 1))
                sigma[1], sigma[e] = e, 1
                grid = _relabel_grid(grid, sigma)
    return Loop(grid, name=name, max_order=max_order)


def serialize_table(loop):
    """Serialize in the same format parse_table reads (with a name header)."""
    lines = []
    if loop.name:
        lines.append(f"# name: {loop.name}")
    lines.append(str(loop.n))
    for row in loop.rows():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


# -- identity properties -----------------------------------------------------

def _first_pair(neq):
    hits = np.argwhere(neq)
    if not len(hits):
        return None
    i, j = hits[0]
    return (int(i) + 1, int(j) + 1)


def check_identity_property(loop, which):
    """Decide one identity property by exhaustive scan.

    Returns a Verdict whose witness is the lexicographically first violating
    tuple.  'moufang' evaluates all four equivalent Moufang identities and
    reports against the first, (xy)(zx) = x((yz)x).
    """
    if which == "associative":
        return _check_associative(loop)
    if which == "commutative":
        return _check_commutative(loop)
    if which == "flexible":
        return _check_flexible(loop)
    if which == "inverse_property":
        return _check_inverse_property(loop)
    if which == "moufang":
        return _check_moufang(loop)
    if which == "steiner":
        return _check_steiner(loop)
    raise ValueError(f"unknown property {which!r}; expected one of {IDENTITY_PROPERTIES}")


def _check_associative(loop):
    T, n = loop._t, loop.n
    idx = np.arange(1, n + 1)
    Y, Z = idx[:, None], idx[None, :]
    TYZ = T[Y, Z]
    for x in range(1, n + 1):
        neq = T[T[x, Y], Z] != T[x, TYZ]
        w = _first_pair(neq)
        if w:
            return Verdict(False, (x, *w))
    return Verdict(True)


def _check_commutative(loop):
    body = loop._t[1:, 1:]
    w = _first_pair(body != body.T)
    return Verdict(True) if w is None else Verdict(False, w)


def _check_flexible(loop):
    T, n = loop._t, loop.n
    idx = np.arange(1, n + 1)
    X, Y = idx[:, None], idx[None, :]
    lhs = T[T[X, Y], X]
    rhs = T[X, T[Y, X]]
    w = _first_pair(lhs != rhs)
    return Verdict(True) if w is None else Verdict(False, w)


def has_two_sided_inverses(loop):
    """Every element has equal left and right inverses."""
    inv = loop._inverses()
    if inv is not None:
        return Verdict(True)
    for x in range(1, loop.n + 1):
        if loop._rd_rows[1][x] != loop._ld_rows[x][1]:
            return Verdict(False, (x,), "no two-sided inverse")
    raise AssertionError("unreachable")


def _check_inverse_property(loop):
    two = has_two_sided_inverses(loop)
    if not two:
        return two
    T, n = loop._t, loop.n
    inv = np.asarray(loop._inverses())
    idx = np.arange(1, n + 1)
    X, Y = idx[:, None], idx[None, :]
    viol = (T[T[Y, inv[X]], X] != Y) | (T[X, T[inv[X], Y]] != Y)
    w = _first_pair(viol)
    return Verdict(True) if w is None else Verdict(False, w)


def moufang_forms(loop):
    """Verdicts of the four equivalent Moufang identities, in the order
    (xy)(zx)=x((yz)x), (xy)(zx)=(x(yz))x, ((xy)x)z=x(y(xz)), ((zx)y)x=z(x(yx))."""
    T, n = loop._t, loop.n
    idx = np.arange(1, n + 1)
    Y, Z = idx[:, None], idx[None, :]
    TYZ = T[Y, Z]
    out = []

    def scan(make):
        for x in range(1, n + 1):
            w = _first_pair(make(x))
            if w:
                return Verdict(False, (x, *w))
        return Verdict(True)

    out.append(scan(lambda x: T[T[x, Y], T[Z, x]] != T[x, T[TYZ, x]]))
    out.append(scan(lambda x: T[T[x, Y], T[Z, x]] != T[T[x, TYZ], x]))
    out.append(scan(lambda x: T[T[T[x, Y], x], Z] != T[x, T[Y, T[x, Z]]]))
    out.append(scan(lambda x: T[T[T[Z, x], Y], x] != T[Z, T[x, T[Y, x]]]))
    return tuple(out)


def _check_moufang(loop):
    forms = moufang_forms(loop)
    verdicts = {f.ok for f in forms}
    if len(verdicts) != 1:
        # the four identities are equivalent in any loop; disagreement is a bug
        raise errors.LoopError(f"Moufang forms disagree on {loop!r}: {forms}")
    return forms[0]


def _check_steiner(loop):
    T, n = loop._t, loop.n
    idx = np.arange(1, n + 1)
    X, Y = idx[:, None], idx[None, :]
    body = T[1:, 1:]
    viol = (body != body.T) | (T[X, T[Y, X]] != Y)
    w = _first_pair(viol)
    return Verdict(True) if w is None else Verdict(False, w)


def _first_assoc_violation(loop, ordered):
    rows = loop._rows
    for a in ordered:
        ra = rows[a]
        for b in ordered:
            ab = ra[b]
            rb = rows[b]
            rab = rows[ab]
            for c in ordered:
                if rab[c] != ra[rb[c]]:
                    return (a, b, c)
    return None


def is_power_associative(loop):
    """Each single element generates an associative subloop.

    The witness pairs the generator with the first violating triple, triples
    scanned in closure-discovery order (so the generator shows up early).
    """
    for x in range(1, loop.n + 1):
        cl = loop._closure_ordered((x,))
        w = _first_assoc_violation(loop, cl)
        if w:
            return Verdict(False, ((x,), w))
    return Verdict(True)


def is_diassociative(loop):
    """Each pair of elements generates an associative subloop."""
    verified = []
    for x in range(1, loop.n + 1):
        for y in range(x, loop.n + 1):
            cl = loop._closure_ordered((x, y))
            fs = frozenset(cl)
            if any(fs <= v for v in verified):
                continue
            w = _first_assoc_violation(loop, cl)
            if w:
                return Verdict(False, ((x, y), w))
            verified.append(fs)
    return Verdict(True)


# -- mapping-group generators -------------------------------------------------

def mlt_generators(loop):
    """The 2n translations L_x, R_x (duplicates removed)."""
    gens = []
    for side in ("left", "right"):
        for x in loop.elements:
            gens.append(loop.translation(x, side))
    return list(dict.fromkeys(gens))


def inn_generators(loop):
    """Standard inner-mapping generators, all fixing 1:
    R(x,y) = R_{xy}^-1 R_y R_x, L(x,y) = L_{yx}^-1 L_y L_x, T(x) = L_x^-1 R_x."""
    left = [None] + [loop.translation(x, "left") for x in loop.elements]
    right = [None] + [loop.translation(x, "right") for x in loop.elements]
    rows = loop._rows
    gens = []
    for x in loop.elements:
        for y in loop.elements:
            gens.append(right[rows[x][y]].inverse() * right[y] * right[x])
            gens.append(left[rows[y][x]].inverse() * left[y] * left[x])
    for x in loop.elements:
        gens.append(left[x].inverse() * right[x])
    return list(dict.fromkeys(gens))


def is_normal_subloop(loop, subset):
    """True iff the subloop is setwise invariant under every inner-mapping
    generator.  Raises NotASubloop when the subset is not closed."""
    sub = frozenset(subset)
    if not sub:
        raise errors.NotASubloop("empty set")
    if sub != frozenset(loop.subloop_closure(sub)):
        raise errors.NotASubloop(f"{sorted(sub)} is not closed under mul/ldiv/rdiv")
    for theta in inn_generators(loop):
        if frozenset(theta(x) for x in sub) != sub:
            return False
    return True


# -- reports and exhaustive generation ----------------------------------------

def core_property_report(loop):
    """PropertyReport with every field except semiautomorphic_ip (see morphisms)."""
    return PropertyReport(
        associative=_check_associative(loop),
        commutative=_check_commutative(loop),
        flexible=_check_flexible(loop),
        has_two_sided_inverses=has_two_sided_inverses(loop),
        inverse_property=_check_inverse_property(loop),
        power_associative=is_power_associative(loop),
        diassociative=is_diassociative(loop),
        moufang=_check_moufang(loop),
        steiner=_check_steiner(loop),
    )


def all_loop_tables(n):
    """Yield every order-n loop with identity 1 (i.e. every reduced Latin
    square bordered by 1..n), in lexicographic table order."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        yield Loop([[1]])
        return
    grid = [list(range(1, n + 1))] + [[0] * n for _ in range(n - 1)]
    for i in range(1, n):
        grid[i][0] = i + 1
    col_used = [set(grid[i][j] for i in range(n) if grid[i][j]) for j in range(n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(k):
        if k == len(cells):
            yield Loop([row[:] for row in grid])
            return
        i, j = cells[k]
        row_used = set(grid[i][:j])
        for v in range(1, n + 1):
            if v in row_used or v in col_used[j]:
                continue
            grid[i][j] = v
            col_used[j].add(v)
            yield from fill(k + 1)
            grid[i][j] = 0
            col_used[j].remove(v)

    yield from fill(0)
