"""Classification data tuples and the coefficient tables built from them.

A ``TYData`` names one category: a case tag, the group, the Galois flag for
the real-complex case, the (bi)character and the scalar tau.  ``build``
expands it into the eight coefficient functions
(alpha, alpha1..alpha3, beta1..beta3, gamma) in normalized form.  The gamma
table is case-shaped: a scalar for Split/Quaternionic/ComplexGalois and a
pair (gamma_1, gamma_i) packed as a TensorCC for RealComplex.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .groups import (Bicharacter, Bicocycle, FinAbGroup, GenDihedralGroup)
from .scalars import CycloScalar, TensorCC, sqrt_int

CASES = ("Split", "Quaternionic", "RealComplex", "ComplexGalois")
SCALAR_TABLES = ("alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3")


class TYDataError(ValueError):
    pass


def _tau_for(order: int, factor: int, sign: int = 1) -> CycloScalar:
    """tau = sign / sqrt(factor * order), exactly."""
    d = factor * order
    r = int(d**0.5)
    if r * r == d:
        root = CycloScalar.from_rational(r)
    else:
        root = sqrt_int(d, 4 * d)
    return root.inverse() * sign


def split_tau(A: FinAbGroup, sign: int = 1) -> CycloScalar:
    return _tau_for(A.order(), 1, sign)


def quaternionic_tau(A: FinAbGroup, sign: int = 1) -> CycloScalar:
    return _tau_for(A.order(), 4, sign)


def realcomplex_tau(G: GenDihedralGroup, sign: int = 1) -> CycloScalar:
    return _tau_for(G.order(), 2, sign)


def galois_tau(A: FinAbGroup, sign: int = 1) -> CycloScalar:
    return _tau_for(A.order(), 1, sign)


class TYData:
    """Case tag + group data + Galois flag + bicharacter/bicocycle + tau."""

    def __init__(self, case: str, group, chi, tau: CycloScalar | None = None,
                 g: str | None = None):
        if case not in CASES:
            raise TYDataError(f"unknown case {case!r}")
        self.case = case
        self.group = group
        self.chi = chi
        self.g = g
        if case == "ComplexGalois" and tau is None:
            tau = galois_tau(group)
        self.tau = tau

    def validate(self) -> None:
        case, group, chi, tau = self.case, self.group, self.chi, self.tau
        if case == "Split":
            if not isinstance(group, FinAbGroup):
                raise TYDataError("split case needs a finite abelian group")
            rep = chi.check_flavor()
            if chi.flavor not in ("real-symmetric", "complex-symmetric") or not rep.ok:
                raise TYDataError("chi is not a symmetric bicharacter")
            if not chi.is_nondegenerate():
                raise TYDataError("chi is degenerate")
            if tau is None or tau * tau * group.order() != CycloScalar.one():
                raise TYDataError("tau^2 * |A| != 1")
        elif case == "Quaternionic":
            if not isinstance(group, FinAbGroup):
                raise TYDataError("quaternionic case needs a finite abelian group")
            if any(n not in (1, 2) for n in group.orders):
                raise TYDataError("A is not an elementary abelian 2-group")
            rep = chi.check_flavor()
            if chi.flavor != "real-symmetric" or not rep.ok:
                raise TYDataError("chi is not a real symmetric bicharacter")
            if not chi.is_nondegenerate():
                raise TYDataError("chi is degenerate")
            if tau is None or tau * tau * (4 * group.order()) != CycloScalar.one():
                raise TYDataError("tau^2 * 4|A| != 1")
        elif case == "RealComplex":
            if not isinstance(group, GenDihedralGroup):
                raise TYDataError("real-complex case needs a generalized dihedral group")
            if self.g not in ("id", "conj"):
                raise TYDataError("g must be 'id' or 'conj'")
            if not isinstance(chi, Bicocycle) or chi.g != self.g:
                raise TYDataError("chi must be a bicocycle with matching g")
            if not chi.check().ok:
                raise TYDataError("chi is not a valid symmetric bicocycle")
            if not chi.restriction_nondegenerate():
                raise TYDataError("chi restricted to A x A is degenerate")
            if tau is None or tau * tau * (2 * group.order()) != CycloScalar.one():
                raise TYDataError("tau^2 * 2|G| != 1")
        else:  # ComplexGalois
            if not isinstance(group, FinAbGroup):
                raise TYDataError("complex Galois case needs a finite abelian group")
            rep = chi.check_flavor()
            if chi.flavor != "skew-symmetric" or not rep.ok:
                raise TYDataError("chi is not a skew-symmetric bicharacter")
            if not chi.is_nondegenerate():
                raise TYDataError("chi is degenerate")
            if tau * tau * group.order() != CycloScalar.one():
                raise TYDataError("tau^2 * |A| != 1")

    # -- serialization ------------------------------------------------------

    def to_json(self):
        grp, chi_mat = _encode_group_chi(self.group, self.chi)
        return {
            "case": self.case,
            "group": grp,
            "g": self.g,
            "chi": chi_mat,
            "tau": None if self.tau is None else self.tau.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "TYData":
        case = data["case"]
        group, chi = _decode_group_chi(case, data["group"], data.get("g"), data["chi"])
        tau = None if data.get("tau") is None else CycloScalar.from_json(data["tau"])
        return cls(case, group, chi, tau, data.get("g"))

    def __repr__(self):
        return f"TYData({self.case}, {self.group!r}, tau={self.tau!r}, g={self.g})"


def _chi_flavor_for_case(case: str) -> str:
    return {"Split": "complex-symmetric",
            "Quaternionic": "real-symmetric",
            "ComplexGalois": "skew-symmetric"}[case]


def _encode_group_chi(group, chi):
    if isinstance(group, GenDihedralGroup):
        grp = {"cyclic": list(group.base.orders), "dihedral": True}
    else:
        grp = {"cyclic": list(group.orders), "dihedral": False}
    els = group.elements()
    mat = [[chi.table[(a, b)].to_json() for b in els] for a in els]
    return grp, mat


def _decode_group_chi(case, grp, g, chi_mat):
    base = FinAbGroup(tuple(grp["cyclic"]))
    group = GenDihedralGroup(base) if grp.get("dihedral") else base
    els = group.elements()
    table = {}
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            table[(a, b)] = CycloScalar.from_json(chi_mat[i][j])
    if isinstance(group, GenDihedralGroup):
        chi = Bicocycle(group, g or "id", table)
    else:
        chi = Bicharacter(group, table, _chi_flavor_for_case(case))
    return group, chi


def encode_element(e):
    if isinstance(e, tuple) and len(e) == 2 and isinstance(e[0], tuple):
        return [list(e[0]), e[1]]
    return list(e)


def decode_element(group, data):
    if isinstance(group, GenDihedralGroup):
        return (tuple(data[0]), data[1])
    return tuple(data)


class CoeffTable:
    """The eight coefficient tables of one category, plus enough context
    (case, group, g) to verify them."""

    def __init__(self, case: str, group, g: str | None, tables: dict):
        self.case = case
        self.group = group
        self.g = g
        self.tables = tables

    @property
    def g_degree(self) -> int:
        return 1 if self.g == "conj" else 0

    def alpha(self, a, b, c):
        return self.tables["alpha"][(a, b, c)]

    def coeff(self, name, a, b):
        return self.tables[name][(a, b)]

    def gamma(self, a, b):
        return self.tables["gamma"][(a, b)]

    def copy(self) -> "CoeffTable":
        return CoeffTable(self.case, self.group, self.g,
                          {k: dict(v) for k, v in self.tables.items()})

    def perturb(self, which: str, at: tuple, factor) -> "CoeffTable":
        """Multiply one entry by a nonzero factor; everything else unchanged."""
        if isinstance(factor, (int, Fraction)):
            factor = CycloScalar.from_rational(factor)
        if factor.is_zero():
            raise ValueError("perturbation factor must be nonzero")
        out = self.copy()
        tab = out.tables[which]
        key = tuple(at)
        if key not in tab:
            raise KeyError(f"no entry {key} in table {which}")
        tab[key] = tab[key] * factor
        return out

    def scalar_modulus(self) -> int:
        out = 1
        for name, tab in self.tables.items():
            for v in tab.values():
                if isinstance(v, TensorCC):
                    out = lcm(out, v.p.M, v.q.M)
                else:
                    out = lcm(out, v.M)
        return out

    # -- serialization ------------------------------------------------------

    def to_json(self):
        if isinstance(self.group, GenDihedralGroup):
            grp = {"cyclic": list(self.group.base.orders), "dihedral": True}
        else:
            grp = {"cyclic": list(self.group.orders), "dihedral": False}
        tables = {}
        for name, tab in sorted(self.tables.items()):
            rows = []
            for key in sorted(tab.keys()):
                val = tab[key]
                enc = val.to_json()
                rows.append([*(encode_element(e) for e in key), enc])
            tables[name] = rows
        return {"case": self.case, "group": grp, "g": self.g, "tables": tables}

    @classmethod
    def from_json(cls, data) -> "CoeffTable":
        case = data["case"]
        grp = data["group"]
        base = FinAbGroup(tuple(grp["cyclic"]))
        group = GenDihedralGroup(base) if grp.get("dihedral") else base
        tables = {}
        for name, rows in data["tables"].items():
            tab = {}
            nargs = 3 if name == "alpha" else 2
            for row in rows:
                key = tuple(decode_element(group, e) for e in row[:nargs])
                enc = row[nargs]
                if case == "RealComplex" and name == "gamma":
                    tab[key] = TensorCC.from_json(enc)
                else:
                    tab[key] = CycloScalar.from_json(enc)
            tables[name] = tab
        return cls(case, group, data.get("g"), tables)

    def equal_tables(self, other: "CoeffTable") -> bool:
        if set(self.tables) != set(other.tables):
            return False
        for name in self.tables:
            a, b = self.tables[name], other.tables[name]
            if set(a) != set(b) or any(a[k] != b[k] for k in a):
                return False
        return True


def _const_tables(group, one) -> dict:
    els = group.elements()
    tables = {"alpha": {(a, b, c): one for a in els for b in els for c in els}}
    for name in SCALAR_TABLES:
        tables[name] = {(a, b): one for a in els for b in els}
    return tables


def build_split(A: FinAbGroup, chi: Bicharacter, tau: CycloScalar) -> CoeffTable:
    """alpha == 1, alpha2 = beta2 = chi, gamma(a,b) = tau/chi(a,b)."""
    data = TYData("Split", A, chi, tau)
    data.validate()
    one = CycloScalar.one()
    tables = _const_tables(A, one)
    els = A.elements()
    tables["alpha2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["beta2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["gamma"] = {(a, b): tau / chi.table[(a, b)] for a in els for b in els}
    return CoeffTable("Split", A, None, tables)


def build_quaternionic(A: FinAbGroup, chi: Bicharacter, tau: CycloScalar) -> CoeffTable:
    """Same normalized shape as the split case, with the quaternionic
    constraint tau^2 * 4|A| = 1 and real chi."""
    data = TYData("Quaternionic", A, chi, tau)
    data.validate()
    one = CycloScalar.one()
    tables = _const_tables(A, one)
    els = A.elements()
    tables["alpha2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["beta2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["gamma"] = {(a, b): tau / chi.table[(a, b)] for a in els for b in els}
    return CoeffTable("Quaternionic", A, None, tables)


def build_realcomplex(G: GenDihedralGroup, g: str, chi: Bicocycle,
                      tau: CycloScalar) -> CoeffTable:
    """alpha2 = chi, beta2(a,b) = chi(a,b)^b, gamma(a,b)_s = sbar^{ga} tau / chi(a,b)^{gb}."""
    data = TYData("RealComplex", G, chi, tau, g)
    data.validate()
    one = CycloScalar.one()
    tables = _const_tables(G, one)
    els = G.elements()
    gdeg = 1 if g == "conj" else 0
    deg = G.degree
    tables["alpha2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["beta2"] = {(a, b): chi.table[(a, b)].conj_pow(deg(b))
                       for a in els for b in els}
    i = CycloScalar.root_of_unity(4, 1)
    gamma = {}
    for a in els:
        for b in els:
            denom = chi.table[(a, b)].conj_pow(gdeg + deg(b))
            base = tau / denom
            g1 = base  # sbar = 1 for s = 1
            gi = (-i).conj_pow(gdeg + deg(a)) * base  # sbar = -i for s = i
            gamma[(a, b)] = TensorCC(g1, gi)
    tables["gamma"] = gamma
    return CoeffTable("RealComplex", G, g, tables)


def build_galois(A: FinAbGroup, chi: Bicharacter,
                 tau: CycloScalar | None = None) -> CoeffTable:
    """alpha2 = beta2 = chi and gamma(a,b) = chi(a,b) * tau.

    beta2 equals chi pointwise: the classification normalizes
    beta2(b, a) = conj(alpha2(a, b)), and for a skew-symmetric unit-valued
    bicharacter conj(chi(a, b)) = chi(b, a).
    """
    data = TYData("ComplexGalois", A, chi, tau)
    data.validate()
    tau = data.tau
    one = CycloScalar.one()
    tables = _const_tables(A, one)
    els = A.elements()
    tables["alpha2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["beta2"] = {(a, b): chi.table[(a, b)] for a in els for b in els}
    tables["gamma"] = {(a, b): chi.table[(a, b)] * tau for a in els for b in els}
    return CoeffTable("ComplexGalois", A, None, tables)


def build(data: TYData) -> CoeffTable:
    if data.case == "Split":
        return build_split(data.group, data.chi, data.tau)
    if data.case == "Quaternionic":
        return build_quaternionic(data.group, data.chi, data.tau)
    if data.case == "RealComplex":
        return build_realcomplex(data.group, data.g, data.chi, data.tau)
    return build_galois(data.group, data.chi, data.tau)
