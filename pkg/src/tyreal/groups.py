"""Finite abelian groups, generalized dihedral groups, bicharacters and
bicocycles, with desk-scale enumeration and validation.

Group elements are plain tuples: ``(e1, ..., ek)`` for a product of cyclic
factors, and ``((e1, ..., ek), eps)`` with ``eps in {0, 1}`` for a generalized
dihedral group, where the degree map is the second component.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm

from .scalars import CycloScalar, is_root_of_unity


class FinAbGroup:
    """Product of cyclic groups Z/n1 x ... x Z/nk, written additively."""

    def __init__(self, orders):
        orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in orders):
            raise ValueError("cyclic orders must be >= 1")
        self.orders = orders

    @property
    def one(self):
        return (0,) * len(self.orders)

    def elements(self) -> list:
        return list(itertools.product(*(range(n) for n in self.orders)))

    def mul(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def inv(self, a):
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def degree(self, a) -> int:
        return 0

    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    def element_order(self, a) -> int:
        out = 1
        for x, n in zip(a, self.orders):
            out = lcm(out, n // gcd(x, n))
        return out

    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    def generators(self) -> list:
        gens = []
        for k, n in enumerate(self.orders):
            if n > 1:
                e = [0] * len(self.orders)
                e[k] = 1
                gens.append(tuple(e))
        return gens

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __repr__(self):
        return f"FinAbGroup{self.orders}"


class GenDihedralGroup:
    """A x| Z/2 with Z/2 acting on the abelian group A by inversion.

    Elements are ((a1, ..., ak), eps); the degree map is eps, a homomorphism
    onto Z/2 with kernel A.
    """

    def __init__(self, base: FinAbGroup):
        self.base = base

    @property
    def one(self):
        return (self.base.one, 0)

    def elements(self) -> list:
        return [(a, e) for e in (0, 1) for a in self.base.elements()]

    def mul(self, x, y):
        a, e = x
        b, d = y
        if e:
            b = self.base.inv(b)
        return (self.base.mul(a, b), (e + d) % 2)

    def inv(self, x):
        a, e = x
        if e:
            return x  # reflections are involutions under the inversion action
        return (self.base.inv(a), 0)

    def degree(self, x) -> int:
        return x[1]

    def order(self) -> int:
        return 2 * self.base.order()

    def kernel_elements(self) -> list:
        return [(a, 0) for a in self.base.elements()]

    def generators(self) -> list:
        gens = [(a, 0) for a in self.base.generators()]
        gens.append((self.base.one, 1))
        return gens

    def __eq__(self, other):
        return isinstance(other, GenDihedralGroup) and self.base == other.base

    def __repr__(self):
        return f"GenDihedralGroup(base={self.base!r})"


class RawGradedGroup:
    """A finite group given by an explicit multiplication table plus a degree
    map to Z/2.  Used to probe graded groups that are not semidirect products,
    e.g. Z/4 graded by parity."""

    def __init__(self, elements, mul_table, degree_map):
        self._elements = list(elements)
        self._mul = dict(mul_table)
        self._deg = dict(degree_map)
        idx = {e: True for e in self._elements}
        self.one = next(e for e in self._elements
                        if all(self._mul[(e, x)] == x for x in idx))

    @classmethod
    def cyclic_mod4_graded(cls) -> "RawGradedGroup":
        els = [0, 1, 2, 3]
        mul = {(a, b): (a + b) % 4 for a in els for b in els}
        deg = {a: a % 2 for a in els}
        return cls(els, mul, deg)

    def elements(self):
        return list(self._elements)

    def mul(self, a, b):
        return self._mul[(a, b)]

    def inv(self, a):
        return next(b for b in self._elements if self.mul(a, b) == self.one)

    def degree(self, a):
        return self._deg[a]

    def order(self):
        return len(self._elements)

    def kernel_elements(self):
        return [a for a in self._elements if self._deg[a] == 0]

    def generators(self):
        """A greedy minimal generating set."""
        gens: list = []
        closure = {self.one}
        for x in self._elements:
            if x in closure:
                continue
            gens.append(x)
            frontier = [self.one]
            closure = {self.one}
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = self.mul(y, g)
                        if z not in closure:
                            closure.add(z)
                            nxt.append(z)
                frontier = nxt
            if len(closure) == len(self._elements):
                break
        return gens


def _conj_word(value: CycloScalar, *degrees: int) -> CycloScalar:
    """Apply complex conjugation once per odd degree among the arguments."""
    return value.conj_pow(sum(degrees))


class FlavorReport:
    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        return f"FlavorReport(ok={self.ok}, violations={len(self.violations)})"


class Bicharacter:
    """Dense table chi(a, b) on an abelian group, values in Q(zeta_M).

    Flavors: 'real-symmetric', 'complex-symmetric', 'skew-symmetric',
    'hermitian'.
    """

    FLAVORS = ("real-symmetric", "complex-symmetric", "skew-symmetric", "hermitian")

    def __init__(self, group: FinAbGroup, table: dict, flavor: str):
        if flavor not in self.FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.group = group
        self.table = dict(table)
        self.flavor = flavor

    @classmethod
    def from_function(cls, group, fn, flavor) -> "Bicharacter":
        els = group.elements()
        return cls(group, {(a, b): fn(a, b) for a in els for b in els}, flavor)

    def __call__(self, a, b) -> CycloScalar:
        return self.table[(a, b)]

    def values_modulus(self) -> int:
        out = 1
        for v in self.table.values():
            out = lcm(out, v.M)
        return out

    def check_flavor(self) -> FlavorReport:
        return check_flavor(self)

    def is_nondegenerate(self) -> bool:
        return is_nondegenerate(self)


class Bicocycle:
    """Galois-twisted bicharacter on a degree-graded group G (Def-6.9-style):

        chi(a, bc) = chi(a, b) * chi(a, c)^b
        chi(ab, c) = chi(a, c)^b * chi(b, c)
        chi(a, b)  = chi(b, a)^{gab}

    where lambda^x conjugates once per odd degree and g contributes degree 1
    iff the Galois flag conjugates.
    """

    def __init__(self, group, g: str, table: dict):
        if g not in ("id", "conj"):
            raise ValueError("g must be 'id' or 'conj'")
        self.group = group
        self.g = g
        self.table = dict(table)

    @property
    def g_degree(self) -> int:
        return 1 if self.g == "conj" else 0

    def __call__(self, a, b) -> CycloScalar:
        return self.table[(a, b)]

    def values_modulus(self) -> int:
        out = 1
        for v in self.table.values():
            out = lcm(out, v.M)
        return out

    def check(self) -> FlavorReport:
        return check_flavor(self)

    def restriction_nondegenerate(self) -> bool:
        """Nondegeneracy of the restriction to the degree-0 kernel."""
        G = self.group
        kernel = G.kernel_elements()
        one = CycloScalar.one()
        for a in kernel:
            if a == G.one:
                continue
            if all(self.table[(a, b)] == one for b in kernel):
                return False
        return True


def is_nondegenerate(chi: Bicharacter) -> bool:
    """True iff chi(a, -) is a nontrivial character for every a != 1.

    For multiplicative tables this is equivalent to the character sums
    sum_b chi(a, b) vanishing for a != 1.
    """
    G = chi.group
    one = CycloScalar.one()
    for a in G.elements():
        if a == G.one:
            continue
        if all(chi.table[(a, b)] == one for b in G.elements()):
            return False
    return True


def check_flavor(chi) -> FlavorReport:
    """Verify multiplicativity and the symmetry demanded by the flavor.

    Works for Bicharacter (plain multiplicativity) and Bicocycle (twisted
    laws plus g-symmetry).  Returns every violation found.
    """
    bad = []
    G = chi.group
    els = G.elements()
    table = chi.table
    for a in els:
        for b in els:
            if (a, b) not in table:
                bad.append(("missing", (a, b)))
    if bad:
        return FlavorReport(bad)
    for v in table.values():
        if is_root_of_unity(v) is None:
            bad.append(("not-root-of-unity", v))
            break

    if isinstance(chi, Bicocycle):
        gdeg = chi.g_degree
        deg = G.degree
        for a in els:
            for b in els:
                for c in els:
                    lhs = table[(a, G.mul(b, c))]
                    rhs = table[(a, b)] * _conj_word(table[(a, c)], deg(b))
                    if lhs != rhs:
                        bad.append(("right-cocycle", (a, b, c)))
                    lhs = table[(G.mul(a, b), c)]
                    rhs = _conj_word(table[(a, c)], deg(b)) * table[(b, c)]
                    if lhs != rhs:
                        bad.append(("left-cocycle", (a, b, c)))
        for a in els:
            for b in els:
                if table[(a, b)] != _conj_word(table[(b, a)], gdeg, deg(a), deg(b)):
                    bad.append(("g-symmetry", (a, b)))
        return FlavorReport(bad)

    for a in els:
        for b in els:
            for c in els:
                if table[(a, G.mul(b, c))] != table[(a, b)] * table[(a, c)]:
                    bad.append(("right-multiplicativity", (a, b, c)))
                if table[(G.mul(a, b), c)] != table[(a, c)] * table[(b, c)]:
                    bad.append(("left-multiplicativity", (a, b, c)))
    for a in els:
        for b in els:
            u, v = table[(a, b)], table[(b, a)]
            if chi.flavor in ("real-symmetric", "complex-symmetric"):
                if u != v:
                    bad.append(("symmetry", (a, b)))
                if chi.flavor == "real-symmetric" and not u.is_real():
                    bad.append(("real-valued", (a, b)))
            elif chi.flavor == "skew-symmetric":
                if not (u * v).is_one():
                    bad.append(("skew-symmetry", (a, b)))
            elif chi.flavor == "hermitian":
                if u != v.conj():
                    bad.append(("hermitian-symmetry", (a, b)))
    return FlavorReport(bad)


# ---------------------------------------------------------------------------
# enumeration over GF(2)
# ---------------------------------------------------------------------------

def _gf2_invertible(B) -> bool:
    n = len(B)
    M = [row[:] for row in B]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return False
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col]:
                M[r] = [(x + y) % 2 for x, y in zip(M[r], M[col])]
    return True


def enumerate_real_bichars(n: int):
    """All nondegenerate symmetric bicharacters (Z/2)^n -> {+-1}, plus orbit
    representatives under basis change.

    Forms correspond to invertible symmetric matrices B over GF(2) via
    chi(x, y) = (-1)^(x^T B y).  Over GF(2) the congruence class is decided by
    whether the form is alternating (zero diagonal): non-alternating forms are
    congruent to the identity, alternating ones to the symplectic form (n even).
    """
    if n > 5:
        raise ValueError("desk scale only: n <= 5")
    group = FinAbGroup((2,) * n)
    one = CycloScalar.one()
    neg = -one

    def bichar_from_matrix(B):
        def fn(x, y):
            s = sum(x[i] * B[i][j] * y[j] for i in range(n) for j in range(n))
            return neg if s % 2 else one
        return Bicharacter.from_function(group, fn, "real-symmetric")

    mats = []
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    for bits in itertools.product((0, 1), repeat=len(idx)):
        B = [[0] * n for _ in range(n)]
        for (i, j), v in zip(idx, bits):
            B[i][j] = B[j][i] = v
        if _gf2_invertible(B):
            mats.append(B)

    forms = [bichar_from_matrix(B) for B in mats]
    reps = []
    if any(any(B[i][i] for i in range(n)) for B in mats):
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        reps.append(bichar_from_matrix(ident))
    if any(all(B[i][i] == 0 for i in range(n)) for B in mats):
        sympl = [[0] * n for _ in range(n)]
        for k in range(0, n - 1, 2):
            sympl[k][k + 1] = sympl[k + 1][k] = 1
        reps.append(bichar_from_matrix(sympl))
    return forms, reps


def enumerate_skew_bichars(group: FinAbGroup, order_bound: int | None = None):
    """All nondegenerate skew-symmetric bicharacters on a small abelian group,
    determined by root-of-unity values on generator pairs."""
    gens = group.generators()
    if not gens:
        triv = Bicharacter.from_function(group, lambda a, b: CycloScalar.one(),
                                         "skew-symmetric")
        return [triv]
    bound = order_bound or lcm(group.exponent(), 2)
    roots = [CycloScalar.root_of_unity(bound, k) for k in range(bound)]
    out = []
    pairs = [(g, h) for g in gens for h in gens]
    for choice in itertools.product(range(bound), repeat=len(pairs)):
        vals = {p: roots[c] for p, c in zip(pairs, choice)}

        def fn(x, y, vals=vals):
            acc = CycloScalar.one()
            for i, g in enumerate(gens):
                for j, h in enumerate(gens):
                    e = x[i] * y[j]
                    if e:
                        acc = acc * vals[(g, h)] ** e
            return acc

        chi = Bicharacter.from_function(group, fn, "skew-symmetric")
        if chi.check_flavor().ok and chi.is_nondegenerate():
            out.append(chi)
    return out


# ---------------------------------------------------------------------------
# isomorphisms
# ---------------------------------------------------------------------------

def _hom_from_generator_images(G, gens, images, H):
    """Extend generator images to a full map by brute closure; None if the
    assignment is inconsistent."""
    fmap = {G.one: H.one}
    frontier = [G.one]
    gen_img = dict(zip(gens, images))
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in gen_img.items():
                y = G.mul(x, g)
                fy = H.mul(fmap[x], img)
                if y in fmap:
                    if fmap[y] != fy:
                        return None
                else:
                    fmap[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(fmap) != len(G.elements()):
        return None
    return fmap


def enumerate_isomorphisms(G, H) -> list:
    """All group isomorphisms G -> H as dicts; for degree-graded groups only
    maps commuting with the degree map are returned."""
    if G.order() != H.order():
        return []
    graded = isinstance(G, (GenDihedralGroup, RawGradedGroup))
    if graded != isinstance(H, (GenDihedralGroup, RawGradedGroup)):
        return []
    gens = G.generators()
    els_H = H.elements()

    def elt_order(K, x):
        n, y = 1, x
        while y != K.one:
            y = K.mul(y, x)
            n += 1
        return n

    orders_G = {g: elt_order(G, g) for g in gens}
    candidates = []
    for g in gens:
        cands = [h for h in els_H if elt_order(H, h) == orders_G[g]]
        if graded:
            cands = [h for h in cands if H.degree(h) == G.degree(g)]
        candidates.append(cands)

    out = []
    seen = set()
    for images in itertools.product(*candidates):
        fmap = _hom_from_generator_images(G, gens, images, H)
        if fmap is None:
            continue
        if len(set(fmap.values())) != len(fmap):
            continue
        if graded and any(H.degree(fmap[x]) != G.degree(x) for x in fmap):
            continue
        key = tuple(sorted(fmap.items()))
        if key not in seen:
            seen.add(key)
            out.append(fmap)
    return out


def automorphisms(G) -> list:
    return enumerate_isomorphisms(G, G)


# ---------------------------------------------------------------------------
# bicocycle extension search
# ---------------------------------------------------------------------------

def default_order_bound(A: FinAbGroup) -> int:
    return lcm(A.exponent(), 4)


def extend_to_bicocycle(A: FinAbGroup, chi_A: Bicharacter, g: str,
                        order_bound: int | None = None) -> list:
    """All bicocycles on G = A x| Z/2 restricting to chi_A on A x A.

    The table is generated from values on generator pairs via the twisted
    multiplicativity laws and then verified in full; values range over roots
    of unity of order dividing ``order_bound``.  Search, not formula: the
    classification data does not parametrize these extensions.
    """
    if order_bound is None:
        order_bound = default_order_bound(A)
    G = GenDihedralGroup(A)
    if G.order() > 16 or order_bound > 16:
        raise ValueError("desk scale exceeded")
    gens = G.generators()
    w = (A.one, 1)
    agens = [x for x in gens if x != w]

    fixed = {}
    for x in agens:
        for y in agens:
            fixed[(x, y)] = chi_A.table[(x[0], y[0])]
    unknown_pairs = ([(x, w) for x in agens] + [(w, y) for y in agens] + [(w, w)])
    roots = [CycloScalar.root_of_unity(order_bound, k) for k in range(order_bound)]
    deg = G.degree
    k = len(A.orders)

    def peel(x):
        """x = gen * rest with the canonical-word prefix stripped."""
        a, e = x
        for i in range(k):
            if a[i]:
                gen = (tuple(1 if j == i else 0 for j in range(k)), 0)
                rest = (tuple(a[j] - (1 if j == i else 0) for j in range(k)), e)
                return gen, rest
        return None  # x is 1 or w

    def build_table(genvals):
        cache = dict(genvals)
        one = CycloScalar.one()

        def chi(x, y):
            if x == G.one or y == G.one:
                return one
            if (x, y) in cache:
                return cache[(x, y)]
            px = peel(x)
            if px is not None and x not in gens:
                u, rest = px
                val = _conj_word(chi(u, y), deg(rest)) * chi(rest, y)
            else:
                # x is a generator; peel y
                v, rest = peel(y) if peel(y) is not None else (y, G.one)
                val = chi(x, v) * _conj_word(chi(x, rest), deg(v))
            cache[(x, y)] = val
            return val

        els = G.elements()
        return {(x, y): chi(x, y) for x in els for y in els}

    out = []
    for choice in itertools.product(roots, repeat=len(unknown_pairs)):
        genvals = dict(fixed)
        for p, v in zip(unknown_pairs, choice):
            genvals[p] = v
        table = build_table(genvals)
        cand = Bicocycle(G, g, table)
        if not cand.check().ok:
            continue
        if any(cand.table[(x, y)] != chi_A.table[(x[0], y[0])]
               for x in G.kernel_elements() for y in G.kernel_elements()):
            continue
        if not cand.restriction_nondegenerate():
            continue
        out.append(cand)
    return out


def search_raw_bicocycles(group, g: str, order_bound: int = 8) -> list:
    """Brute force admissible bicocycle tables with nondegenerate restriction
    on an arbitrary small graded group (generator-value search)."""
    gens = [x for x in group.generators() if x != group.one]
    roots = [CycloScalar.root_of_unity(order_bound, k) for k in range(order_bound)]
    els = group.elements()
    deg = group.degree
    out = []
    pairs = [(x, y) for x in gens for y in gens]
    for choice in itertools.product(roots, repeat=len(pairs)):
        genvals = dict(zip(pairs, choice))

        # close the table by repeated application of the laws; reject clashes
        table = {}
        for x in els:
            table[(group.one, x)] = CycloScalar.one()
            table[(x, group.one)] = CycloScalar.one()
        table.update({p: v for p, v in genvals.items()})
        changed = True
        ok = True
        while changed and ok:
            changed = False
            for a in els:
                for b in els:
                    for c in els:
                        bc = group.mul(b, c)
                        if (a, b) in table and (a, c) in table:
                            v = table[(a, b)] * _conj_word(table[(a, c)], deg(b))
                            if (a, bc) in table:
                                if table[(a, bc)] != v:
                                    ok = False
                            else:
                                table[(a, bc)] = v
                                changed = True
                        ab = group.mul(a, b)
                        if (a, c) in table and (b, c) in table:
                            v = _conj_word(table[(a, c)], deg(b)) * table[(b, c)]
                            if (ab, c) in table:
                                if table[(ab, c)] != v:
                                    ok = False
                            else:
                                table[(ab, c)] = v
                                changed = True
        if not ok or len(table) < len(els) ** 2:
            continue
        cand = Bicocycle.__new__(Bicocycle)
        cand.group = group
        cand.g = g
        cand.table = table
        if not cand.check().ok:
            continue
        if not cand.restriction_nondegenerate():
            continue
        out.append(cand)
    return out
