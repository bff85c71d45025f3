"""Exact multivariate polynomial arithmetic and graded presentations.

Coefficients are arbitrary-precision integers.  Variables come in two
flavors: point variables (hyperplane classes h_i, nilpotent with a fixed
power cap, so `h_i^cap = 0` is enforced inside normalization rather than
carried as an explicit relation) and divisor variables (D_S, E, ...) with
no cap.  Every value is immutable after construction; normalization --
dropping zero coefficients and monomials that violate a cap -- is the only
place terms disappear.

Canonical text form: terms are joined by " + " / " - " in descending
order of the monomial key that ranks later variables (divisor variables)
highest, a term is `coefficient*factors` with unit coefficients omitted,
and a factor prints as `h3^2` or `D{1,3}`.  Example: `E^2 - 2*h*E + h^2`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from fmchow.errors import DegreeError, StructureError


def divisor_name(s) -> str:
    """Canonical name of the divisor variable attached to a subset."""
    return "D{%s}" % ",".join(str(i) for i in sorted(s))


@dataclass(frozen=True)
class Var:
    """One ring variable.  `cap` is the vanishing power (v**cap == 0), or
    None for no cap.  All variables used by this package have degree 1."""

    name: str
    degree: int = 1
    cap: Optional[int] = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("variable degree must be positive")
        if self.cap is not None and self.cap < 1:
            raise ValueError("variable cap must be positive")


@dataclass(frozen=True)
class VarTable:
    """An ordered tuple of distinct variables."""

    vars: tuple

    def __post_init__(self):
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise StructureError("duplicate variable names")
        object.__setattr__(self, "_index", {v.name: i for i, v in enumerate(self.vars)})

    @classmethod
    def for_points(cls, n: int, dim: int, prefix: str = "h") -> "VarTable":
        """h_1..h_n, each killed in power dim+1 (the Chow ring of (P^dim)^n)."""
        return cls(tuple(Var(f"{prefix}{i}", 1, dim + 1) for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructureError(f"unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def names(self) -> tuple:
        return tuple(v.name for v in self.vars)

    def caps(self) -> tuple:
        return tuple(v.cap for v in self.vars)

    def extended(self, var: Var) -> "VarTable":
        if var.name in self:
            raise StructureError(f"variable {var.name!r} already present")
        return VarTable(self.vars + (var,))


def _mono_key(exps):
    # Later variables (divisor variables) rank highest; descending order of
    # this key is the canonical printing order, ascending the basis order.
    return tuple(reversed(exps))


class Poly:
    """An exact-integer polynomial over a fixed VarTable.

    Internally a map from exponent tuples to nonzero coefficients; the
    constructor normalizes (caps applied, zeros dropped).  Instances are
    immutable; arithmetic returns new objects.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping):
        caps = table.caps()
        nvars = len(table)
        clean = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            if len(exps) != nvars:
                raise StructureError("exponent tuple has wrong length")
            if any(c is not None and e >= c for e, c in zip(exps, caps)):
                continue  # monomial dies on a nilpotency cap
            exps = tuple(exps)
            acc = clean.get(exps, 0) + coeff
            if acc:
                clean[exps] = acc
            elif exps in clean:
                del clean[exps]
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "Poly":
        return cls(table, {})

    @classmethod
    def constant(cls, table: VarTable, c: int) -> "Poly":
        return cls(table, {(0,) * len(table): int(c)})

    @classmethod
    def variable(cls, table: VarTable, name: str) -> "Poly":
        exps = [0] * len(table)
        exps[table.index(name)] = 1
        return cls(table, {tuple(exps): 1})

    @classmethod
    def monomial(cls, table: VarTable, exps, coeff: int = 1) -> "Poly":
        return cls(table, {tuple(exps): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_degree(self, exps) -> int:
        degs = self.table.vars
        return sum(e * degs[i].degree for i, e in enumerate(exps))

    def homogeneous_degree(self) -> Optional[int]:
        """Total degree if homogeneous (None for the zero polynomial)."""
        degrees = {self.monomial_degree(e) for e in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DegreeError(f"polynomial is inhomogeneous: {self}")
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        try:
            self.homogeneous_degree()
        except DegreeError:
            return False
        return True

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(self.monomial_degree(e) for e in self.terms)

    def _check_table(self, other: "Poly"):
        if self.table is not other.table and self.table != other.table:
            raise StructureError("polynomials live over different variable tables")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.table, other)
        self._check_table(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, 0) + coeff
            if acc:
                terms[exps] = acc
            elif exps in terms:
                del terms[exps]
        return Poly(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.table, {e: other * c for e, c in self.terms.items()})
        self._check_table(other)
        caps = self.table.caps()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(c is not None and e >= c for e, c in zip(exps, caps)):
                    continue
                acc = out.get(exps, 0) + c1 * c2
                if acc:
                    out[exps] = acc
                elif exps in out:
                    del out[exps]
        return Poly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.constant(self.table, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.table == other.table
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # -- canonical form ----------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in canonical (printing) order."""
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def canonical_key(self):
        return tuple((_mono_key(e), c) for e, c in self.sorted_terms())

    def sign_normalized(self) -> "Poly":
        """Same polynomial up to sign, with positive leading coefficient."""
        terms = self.sorted_terms()
        if terms and terms[0][1] < 0:
            return -self
        return self

    def _term_str(self, exps, coeff, leading: bool) -> str:
        factors = []
        for var, e in zip(self.table.vars, exps):
            if e == 1:
                factors.append(var.name)
            elif e > 1:
                factors.append(f"{var.name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if leading:
            return body if coeff > 0 else "-" + body
        return (" + " if coeff > 0 else " - ") + body

    def __str__(self):
        terms = self.sorted_terms()
        if not terms:
            return "0"
        return "".join(
            self._term_str(e, c, leading=(i == 0)) for i, (e, c) in enumerate(terms)
        )

    def __repr__(self):
        return f"Poly({self})"


def transport(poly: Poly, table: VarTable, rename: Optional[Mapping] = None) -> Poly:
    """Re-express a polynomial over another table, matching variables by
    name (optionally renamed first).  Every used variable must exist in the
    target; the target's caps are applied."""
    rename = rename or {}
    src_names = poly.table.names()
    pos = {}  # resolved lazily: only variables that actually occur
    nvars = len(table)
    out = {}
    for exps, coeff in poly.terms.items():
        new = [0] * nvars
        for i, e in enumerate(exps):
            if e:
                if i not in pos:
                    pos[i] = table.index(rename.get(src_names[i], src_names[i]))
                new[pos[i]] += e
        key = tuple(new)
        out[key] = out.get(key, 0) + coeff
    return Poly(table, out)


def substitute(poly: Poly, name: str, value: Poly) -> Poly:
    """Replace one variable by a polynomial (over the same table)."""
    poly._check_table(value)
    idx = poly.table.index(name)
    out = Poly.zero(poly.table)
    powers = {0: Poly.constant(poly.table, 1)}
    for exps, coeff in sorted(poly.terms.items()):
        e = exps[idx]
        if e not in powers:
            powers[e] = value**e
        rest = list(exps)
        rest[idx] = 0
        out = out + Poly.monomial(poly.table, tuple(rest), coeff) * powers[e]
    return out


def poly_sum(table: VarTable, polys: Iterable[Poly]) -> Poly:
    out = Poly.zero(table)
    for p in polys:
        out = out + p
    return out


class ChernPoly:
    """A polynomial in a formal variable t with Poly coefficients.

    Represents a Chern polynomial of a codimension-`degree` center: the
    coefficient of t^l is homogeneous of total degree (degree - l), the
    constant term is the class of the center itself.
    """

    __slots__ = ("table", "degree", "coeffs")

    def __init__(self, table: VarTable, degree: int, coeffs: Sequence[Poly]):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        coeffs = tuple(coeffs)
        if len(coeffs) != degree + 1:
            raise DegreeError("need exactly degree+1 coefficients")
        for ell, c in enumerate(coeffs):
            if c.table is not table and c.table != table:
                raise StructureError("coefficient over a different variable table")
            if not c.is_zero() and c.homogeneous_degree() != degree - ell:
                raise DegreeError(
                    f"coefficient of t^{ell} must be homogeneous of degree "
                    f"{degree - ell}, got {c}"
                )
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("ChernPoly is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ChernPoly)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __str__(self):
        parts = []
        for ell in range(self.degree, -1, -1):
            c = self.coeffs[ell]
            if c.is_zero():
                continue
            tpow = "" if ell == 0 else ("t" if ell == 1 else f"t^{ell}")
            parts.append(f"({c}){tpow}" if tpow else f"({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"ChernPoly({self})"


def chern_mul(p: ChernPoly, q: ChernPoly) -> ChernPoly:
    """Product of Chern polynomials (codimensions add)."""
    table = p.table
    degree = p.degree + q.degree
    coeffs = [Poly.zero(table) for _ in range(degree + 1)]
    for a, ca in enumerate(p.coeffs):
        if ca.is_zero():
            continue
        for b, cb in enumerate(q.coeffs):
            if cb.is_zero():
                continue
            coeffs[a + b] = coeffs[a + b] + ca * cb
    return ChernPoly(table, degree, coeffs)


def chern_eval(p: ChernPoly, s: Poly) -> Poly:
    """Evaluate at a degree-1 class: sum of coeffs[l] * s^l."""
    p.coeffs[0]._check_table(s)
    if not s.is_zero() and s.homogeneous_degree() != 1:
        raise DegreeError("evaluation argument must be homogeneous of degree 1")
    out = Poly.zero(p.table)
    power = Poly.constant(p.table, 1)
    for ell in range(p.degree + 1):
        if not p.coeffs[ell].is_zero():
            out = out + p.coeffs[ell] * power
        power = power * s
    return out


def chern_shift(p: ChernPoly, u: Poly, sign: int = 1) -> ChernPoly:
    """The Chern polynomial q with q(t) = p(sign*t + u), expanded exactly
    by the binomial theorem.  sign must be +1 or -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    p.coeffs[0]._check_table(u)
    if not u.is_zero() and u.homogeneous_degree() != 1:
        raise DegreeError("shift must be homogeneous of degree 1")
    table = p.table
    coeffs = [Poly.zero(table) for _ in range(p.degree + 1)]
    upow = [Poly.constant(table, 1)]
    for _ in range(p.degree):
        upow.append(upow[-1] * u)
    from math import comb

    for ell, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        for j in range(ell + 1):
            contrib = c * (comb(ell, j) * (sign**j))
            coeffs[j] = coeffs[j] + contrib * upow[ell - j]
    return ChernPoly(table, p.degree, coeffs)


class Presentation:
    """A graded ring presentation: variables, homogeneous relations, and a
    top degree above which the ring is regarded as zero.

    Point-variable caps act as implicit relations (they are enforced in
    normalization), so e.g. Z[h,E]/<h^4, h^2*E, E^2-2hE+h^2> is encoded
    with h capped at power 4 and the two explicit relations.  Relations
    are stored sign-normalized, deduplicated and canonically sorted.
    """

    __slots__ = ("table", "relations", "top_degree")

    def __init__(self, table: VarTable, relations: Iterable[Poly], top_degree: int):
        if top_degree < 0:
            raise ValueError("top degree must be nonnegative")
        seen = {}
        for rel in relations:
            if rel.table is not table and rel.table != table:
                raise StructureError("relation over a different variable table")
            if rel.is_zero():
                continue
            rel.homogeneous_degree()  # raises DegreeError if inhomogeneous
            rel = rel.sign_normalized()
            seen[rel.canonical_key()] = rel
        ordered = sorted(
            seen.values(), key=lambda r: (r.homogeneous_degree(), r.canonical_key())
        )
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "relations", tuple(ordered))
        object.__setattr__(self, "top_degree", top_degree)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.table == other.table
            and self.relations == other.relations
            and self.top_degree == other.top_degree
        )

    def canonical_var_order(self) -> "Presentation":
        """Same presentation with the variables reordered canonically:
        capped (point) variables first in name order, then divisor
        variables sorted by (subset size, elements), then anything else."""

        def var_key(v: Var):
            if v.name.startswith("D{") and v.name.endswith("}"):
                elems = tuple(int(x) for x in v.name[2:-1].split(","))
                return (1, len(elems), elems, v.name)
            if v.cap is not None:
                num = "".join(ch for ch in v.name if ch.isdigit())
                return (0, 0, (int(num) if num else 0,), v.name)
            return (2, 0, (), v.name)

        new_table = VarTable(tuple(sorted(self.table.vars, key=var_key)))
        rels = [transport(r, new_table) for r in self.relations]
        return Presentation(new_table, rels, self.top_degree)

    def dump(self) -> str:
        """Canonical plain-text form (identical bytes across runs)."""
        p = self.canonical_var_order()
        lines = ["vars:"]
        for v in p.table.vars:
            cap = f" cap {v.cap}" if v.cap is not None else ""
            lines.append(f"{v.name} deg {v.degree}{cap}")
        lines.append(f"top-degree: {p.top_degree}")
        lines.append("rel:")
        for r in p.relations:
            lines.append(str(r))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        p = self.canonical_var_order()
        return {
            "vars": [
                {"name": v.name, "degree": v.degree, "cap": v.cap}
                for v in p.table.vars
            ],
            "relations": [str(r) for r in p.relations],
            "top_degree": p.top_degree,
        }

    def __repr__(self):
        return (
            f"Presentation({len(self.table)} vars, "
            f"{len(self.relations)} relations, top degree {self.top_degree})"
        )
