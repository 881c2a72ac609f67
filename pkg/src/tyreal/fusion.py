"""Tambara-Yamagami fusion rings, split and non-split.

Basis elements are ``("g", elt)`` for invertibles and ``("m",)`` for the
non-invertible generator.  ``m * m`` contains each invertible with
multiplicity k, the real dimension of End(m) over End(1).
"""

from __future__ import annotations

from collections import Counter

from .scalars import CycloScalar, sqrt_int

M = ("m",)

CASE_MULTIPLICITY = {
    "Split": 1,
    "Quaternionic": 4,
    "RealComplex": 2,
    "ComplexGalois": 1,
}


def g_elt(e):
    return ("g", e)


class TYRing:
    """Fusion ring with invertible basis A (or G) and one self-dual m."""

    def __init__(self, group, k: int, case: str | None = None):
        if k not in (1, 2, 4):
            raise ValueError("multiplicity k must be 1, 2 or 4")
        if case is not None and CASE_MULTIPLICITY[case] != k:
            raise ValueError(f"case {case} requires k = {CASE_MULTIPLICITY[case]}")
        self.group = group
        self.k = k
        self.case = case

    def basis(self) -> list:
        return [g_elt(e) for e in self.group.elements()] + [M]

    def dual(self, x):
        if x == M:
            return M
        return g_elt(self.group.inv(x[1]))

    def fuse(self, x, y) -> Counter:
        if x == M and y == M:
            return Counter({g_elt(e): self.k for e in self.group.elements()})
        if x == M:
            return Counter({M: 1})
        if y == M:
            return Counter({M: 1})
        return Counter({g_elt(self.group.mul(x[1], y[1])): 1})

    def fuse_many(self, mset: Counter, y) -> Counter:
        out: Counter = Counter()
        for x, n in mset.items():
            for z, m in self.fuse(x, y).items():
                out[z] += n * m
        return out

    def fpdim(self, x) -> CycloScalar:
        """Frobenius-Perron dimension, exact: dim(a) = 1 and dim(m) is the
        positive root of d^2 = k * |A|."""
        if x != M:
            return CycloScalar.one()
        d = self.k * self.group.order()
        r = int(d**0.5)
        if r * r == d:
            return CycloScalar.from_rational(r)
        return sqrt_int(d, 4 * d)

    def verify(self) -> list:
        return verify_ring(self)


def fuse(ring: TYRing, x, y) -> Counter:
    return ring.fuse(x, y)


def fpdim(ring: TYRing, x) -> CycloScalar:
    return ring.fpdim(x)


def verify_ring(ring: TYRing) -> list:
    """Associativity of fusion coefficients and the duality pairing.

    Returns a list of violations: ("assoc", x, y, z) or ("duality", x, y).
    """
    bad = []
    basis = ring.basis()
    for x in basis:
        for y in basis:
            xy = ring.fuse(x, y)
            for z in basis:
                lhs = ring.fuse_many(xy, z)
                rhs: Counter = Counter()
                for u, n in ring.fuse(y, z).items():
                    for v, m in ring.fuse(x, u).items():
                        rhs[v] += n * m
                if lhs != rhs:
                    bad.append(("assoc", x, y, z))
    unit = g_elt(ring.group.one)
    for x in basis:
        kx = ring.k if x == M else 1
        for y in basis:
            mult = ring.fuse(x, ring.dual(y)).get(unit, 0)
            expect = kx if x == y else 0
            if mult != expect:
                bad.append(("duality", x, y))
    return bad
