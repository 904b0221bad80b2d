"""Explicit module maps, intertwining checks and the intertwiner search.

Builtin maps (``rule``):

``SmallPhi``    Xi -> Pi(Omega_R(lambda, 1/2)):  x^2 f(x^2) -> x f(x^2),
                x f(x^2) -> f(x^2)
``Psi``         Gamma -> Pi(Omega_NS(lambda, 1/2)):  x f(x) -> f(y)/sqrt(2 lambda),
                g(y) -> sqrt(lambda/2) g(x)
``Phi``         Omega_NS(lambda, a) -> Omega_R(sqrt(lambda), a) restricted to NS:
                f(x) -> f(x^2/2),  g(y) -> sqrt(lambda/2) x g(x^2/2)
``Identity``    same data, possibly different parameters

plus the inverses ``SmallPhiInverse``, ``PsiInverse`` and ``PhiInverse``,
and ``Matrix`` maps produced by the search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Family, basis
from .errors import DegreeOverflow, FamilyMismatch, NotInSubmodule
from .linalg import Echelon, rank
from .modules import (
    ModuleSpec,
    ModuleVector,
    NSVector,
    RamondVector,
    act,
    monomial_basis,
    vector_class,
)
from .poly import VarPoly, VarTag, rescale
from .report import VerificationReport, timed
from .scalar import ONE, W, ZERO, QuadRat, Scalar, as_scalar

__all__ = [
    "LinearMap",
    "small_phi",
    "small_phi_inverse",
    "psi",
    "psi_inverse",
    "big_phi",
    "big_phi_inverse",
    "identity_map",
    "apply_map",
    "verify_intertwiner",
    "intertwiner_search",
    "matrix_of",
    "proportional",
]

_HALF = Scalar.const(Fraction(1, 2))
BUILTINS = (
    "SmallPhi",
    "SmallPhiInverse",
    "Psi",
    "PsiInverse",
    "Phi",
    "PhiInverse",
    "Identity",
)


@dataclass(frozen=True)
class LinearMap:
    """A linear map between two module carriers.

    ``matrix`` (for ``rule == "Matrix"``) maps a domain basis monomial
    ``(component, degree)`` to its image vector; monomials outside the
    stored range are rejected.  ``submodule`` names the domain subspace the
    map is defined on (``"Xi"``, ``"Gamma"`` or ``"FullSpace"``) and
    ``image_submodule`` the codomain subspace it is onto.
    """

    domain: ModuleSpec
    codomain: ModuleSpec
    rule: str
    matrix: dict | None = field(default=None, compare=False)
    parity: int = 0
    submodule: str = "FullSpace"
    max_deg: int | None = None
    image_submodule: str = "FullSpace"

    def __call__(self, v):
        return apply_map(self, v)

    def describe(self) -> dict:
        out = {
            "rule": self.rule,
            "domain": str(self.domain),
            "codomain": str(self.codomain),
            "parity": self.parity,
        }
        if self.matrix is not None:
            # one row per domain monomial (even degrees first), one column
            # per codomain monomial in the same order
            cols = [(i, k) for i in (0, 1) for k in range(self.max_deg + 1)]
            out["matrix"] = [
                [str(self.matrix[key].component(i).coeff(k)) for i, k in cols]
                for key in sorted(self.matrix)
            ]
        return out


def _root(spec: ModuleSpec) -> Scalar:
    if spec.lam_root is None:
        raise ValueError(f"sqrt(lambda) is not available for {spec}")
    return spec.lam_root


def small_phi(domain: ModuleSpec) -> LinearMap:
    """Xi in Omega_R(lambda, 0) onto Pi(Omega_R(lambda, 1/2))."""
    if domain.family is not Family.RAMOND or domain.alpha:
        raise ValueError("SmallPhi is defined on Omega_R(lambda, 0)")
    codomain = domain.with_alpha(Fraction(1, 2)).parity_flipped()
    return LinearMap(domain, codomain, "SmallPhi", submodule="Xi")


def small_phi_inverse(domain: ModuleSpec) -> LinearMap:
    """Inverse of ``small_phi``; ``domain`` is Pi(Omega_R(lambda, 1/2))."""
    codomain = domain.with_alpha(0).parity_flipped()
    return LinearMap(domain, codomain, "SmallPhiInverse", image_submodule="Xi")


def psi(domain: ModuleSpec) -> LinearMap:
    """Gamma in Omega_NS(lambda, 0) onto Pi(Omega_NS(lambda, 1/2))."""
    if domain.family is not Family.NS or domain.alpha:
        raise ValueError("Psi is defined on Omega_NS(lambda, 0)")
    _root(domain)
    codomain = domain.with_alpha(Fraction(1, 2)).parity_flipped()
    return LinearMap(domain, codomain, "Psi", submodule="Gamma")


def psi_inverse(domain: ModuleSpec) -> LinearMap:
    codomain = domain.with_alpha(0).parity_flipped()
    return LinearMap(domain, codomain, "PsiInverse", image_submodule="Gamma")


def big_phi(domain: ModuleSpec) -> LinearMap:
    """Omega_NS(lambda, a) onto Omega_R(sqrt(lambda), a) with the NS action."""
    if domain.family is not Family.NS or domain.variant != "plain":
        raise ValueError("Phi is defined on a plain Neveu-Schwarz module")
    return LinearMap(domain, ModuleSpec.ramond_at_root(domain), "Phi")


def big_phi_inverse(domain: ModuleSpec) -> LinearMap:
    if domain.family is not Family.RAMOND or domain.variant != "restricted":
        raise ValueError("PhiInverse is defined on a restricted Ramond module")
    root = domain.lam
    codomain = ModuleSpec(
        Family.NS, root * root, domain.alpha, lam_root=root, point=domain.point
    )
    return LinearMap(domain, codomain, "PhiInverse")


def identity_map(domain: ModuleSpec, codomain: ModuleSpec) -> LinearMap:
    if domain.family is not codomain.family:
        raise FamilyMismatch("identity needs the same carrier on both sides")
    return LinearMap(domain, codomain, "Identity")


def _drop_constant(p: VarPoly) -> VarPoly:
    """``p / var`` for ``p`` without constant term."""
    return VarPoly(p.var, p.coeffs[1:])


def _times_var(p: VarPoly) -> VarPoly:
    return VarPoly(p.var, (ZERO,) + p.coeffs) if p.coeffs else p


def in_submodule(name: str, v: ModuleVector) -> bool:
    if name == "FullSpace":
        return True
    return not v.even.coeff(0)


def apply_map(m: LinearMap, v: ModuleVector) -> ModuleVector:
    if v.family is not m.domain.family:
        raise FamilyMismatch(f"{v.family} vector given to a map on {m.domain}")
    if not in_submodule(m.submodule, v):
        raise NotInSubmodule(f"{v} is not in {m.submodule}")
    rule = m.rule
    flip = not v.flipped
    if rule == "SmallPhi":
        return RamondVector(v.odd, _drop_constant(v.even), flip)
    if rule == "SmallPhiInverse":
        return RamondVector(_times_var(v.odd), v.even, flip)
    if rule == "Psi":
        root = _root(m.domain)
        odd = rescale(_drop_constant(v.even), ONE, VarTag.Y).scale(W * _HALF * root.inverse())
        even = rescale(v.odd, ONE, VarTag.X).scale(W * _HALF * root)
        return NSVector(even, odd, flip)
    if rule == "PsiInverse":
        root = _root(m.codomain)
        even = _times_var(rescale(v.odd, ONE, VarTag.X)).scale(W * root)
        odd = rescale(v.even, ONE, VarTag.Y).scale(W * root.inverse())
        return NSVector(even, odd, flip)
    if rule == "Phi":
        root = _root(m.domain)
        even = rescale(v.even, _HALF, VarTag.T)
        odd = rescale(v.odd, _HALF, VarTag.T).scale(root * W * _HALF)
        return RamondVector(even, odd, v.flipped)
    if rule == "PhiInverse":
        root = m.domain.lam
        even = rescale(v.even, 2, VarTag.X)
        odd = rescale(v.odd, 2, VarTag.Y).scale(W * root.inverse())
        return NSVector(even, odd, v.flipped)
    if rule == "Identity":
        return type(v)(v.even, v.odd, v.flipped)
    if rule == "Matrix":
        return _apply_matrix(m, v)
    raise ValueError(f"unknown map rule {rule!r}")


def _apply_matrix(m: LinearMap, v: ModuleVector) -> ModuleVector:
    cls = vector_class(m.codomain.family)
    out = cls(None, None, m.codomain.flipped)
    for i in (0, 1):
        for k, c in enumerate(v.component(i).coeffs):
            if not c:
                continue
            image = m.matrix.get((i, k))
            if image is None:
                raise DegreeOverflow(f"map is only known up to degree {m.max_deg}")
            out = out + image.scale(c)
    return out


def _images_bijective(m: LinearMap, domain_basis) -> tuple:
    """Rank test of the images of ``domain_basis`` against the codomain
    monomials they reach (degree-wise bijectivity)."""
    images = [apply_map(m, v) for v in domain_basis]
    top = [-1, -1]
    for img in images:
        for i in (0, 1):
            top[i] = max(top[i], int(max(img.component(i).degree, -1)))
    keys = [(i, k) for i in (0, 1) for k in range(top[i] + 1)]
    if m.image_submodule != "FullSpace":
        keys.remove((0, 0))
    matrix = [[img.component(i).coeff(k) for i, k in keys] for img in images]
    r = rank(matrix)
    return r == len(images) == len(keys), r, len(images), len(keys)


def verify_intertwiner(m: LinearMap, window: int, max_deg: int) -> VerificationReport:
    """Check ``m(g.v) = (+-) g.m(v)`` for generators and monomials in range,
    and that ``m`` is bijective degree-wise on the sampled range."""
    report = VerificationReport(
        "intertwiner",
        parameters=m.describe() | {"domain_params": m.domain.describe(), "codomain_params": m.codomain.describe()},
        bounds={"window": window, "max_deg": max_deg},
    )
    if m.rule == "Matrix":
        report.parameters.pop("matrix", None)
    fam = m.domain.acting_family
    if fam is not m.codomain.acting_family:
        raise FamilyMismatch("domain and codomain are modules over different algebras")
    gens = basis(fam, window)
    dom = [v for v in monomial_basis(m.domain.family, max_deg) if in_submodule(m.submodule, v)]
    if m.domain.flipped:
        dom = [type(v)(v.even, v.odd, True) for v in dom]
    with timed(report):
        for v in dom:
            mv = apply_map(m, v)
            for g in gens:
                gv = act(g, v, m.domain)
                if m.rule == "Matrix" and gv.degree > m.max_deg:
                    continue
                lhs = apply_map(m, gv)
                rhs = act(g, mv, m.codomain)
                if m.parity and g.parity:
                    rhs = -rhs
                report.record(
                    lhs == rhs,
                    {"inputs": {"g": str(g), "v": str(v)}, "lhs": str(lhs), "rhs": str(rhs)},
                )
        if m.rule != "Matrix":
            ok, r, n_dom, n_cod = _images_bijective(m, dom)
            report.details["bijective"] = ok
            report.details["rank"] = r
            report.details["domain_monomials"] = n_dom
            report.details["codomain_monomials"] = n_cod
            report.record(ok, {"inputs": {"check": "degree-wise bijectivity"}, "lhs": f"rank {r}", "rhs": f"{n_dom} x {n_cod}"})
    return report


def _coords(v: ModuleVector) -> dict:
    return {
        (i, k): c
        for i in (0, 1)
        for k, c in enumerate(v.component(i).coeffs)
        if c
    }


def _to_field(s: Scalar) -> QuadRat:
    return s.constant_value()


def intertwiner_search(
    A: ModuleSpec, B: ModuleSpec, window: int, max_deg: int, parities=(0, 1)
) -> list:
    """Basis of the degree-bounded parity-homogeneous maps A -> B that
    (super-)commute with every generator of ``|index| <= window``.

    Unknowns are the matrix entries from domain monomials of degree
    <= max_deg to codomain monomials of degree <= max_deg.  A constraint
    ``M(g.v) = (+-) g.M(v)`` is imposed whenever ``g.v`` stays inside the
    degree range.  Both modules must be specialized (constant scalars).
    """
    if A.acting_family is not B.acting_family:
        raise FamilyMismatch("A and B are modules over different algebras")
    if A.is_symbolic or B.is_symbolic:
        return _search_symbolic(A, B, window, max_deg, parities)
    return _search(A, B, window, max_deg, parities, field=True)


def _search_symbolic(A, B, window, max_deg, parities):
    return _search(A, B, window, max_deg, parities, field=False)


def _search(A, B, window, max_deg, parities, field: bool):
    from .linalg import nullspace

    if 4 * (max_deg + 1) ** 2 > 2000:
        raise DegreeOverflow("intertwiner system too large; lower max_deg")
    gens = basis(A.acting_family, window)
    dom = monomial_basis(A.family, max_deg)
    cod = monomial_basis(B.family, max_deg)
    if A.flipped:
        dom = [type(v)(v.even, v.odd, True) for v in dom]
    if B.flipped:
        cod = [type(v)(v.even, v.odd, True) for v in cod]
    dom_keys = [next(iter(_coords(v))) for v in dom]
    cod_keys = [next(iter(_coords(v))) for v in cod]
    dom_index = {k: n for n, k in enumerate(dom_keys)}
    cod_act = {(g, n): act(g, w, B) for g in gens for n, w in enumerate(cod)}
    maps = []
    for parity in parities:
        unknowns = [
            (a, b)
            for a, dv in enumerate(dom)
            for b, cw in enumerate(cod)
            if dv.parity ^ cw.parity == parity
        ]
        col = {u: n for n, u in enumerate(unknowns)}
        rows = []
        for a, v in enumerate(dom):
            for g in gens:
                gv = act(g, v, A)
                if gv.degree > max_deg:
                    continue
                sign = -1 if (parity and g.parity) else 1
                eqs = {}
                # M(g.v)
                for key, c in _coords(gv).items():
                    src = dom_index[key]
                    for b in range(len(cod)):
                        u = col.get((src, b))
                        if u is None:
                            continue
                        ck = cod_keys[b]
                        eqs.setdefault(ck, {})
                        eqs[ck][u] = eqs[ck].get(u, ZERO) + c
                # -(+-) g.M(v)
                for b in range(len(cod)):
                    u = col.get((a, b))
                    if u is None:
                        continue
                    for key, c in _coords(cod_act[(g, b)]).items():
                        eqs.setdefault(key, {})
                        eqs[key][u] = eqs[key].get(u, ZERO) - c * sign
                rows.extend(r for r in eqs.values() if any(r.values()))
        if field:
            ech = Echelon()
            for r in rows:
                ech.insert({u: _to_field(c) for u, c in r.items() if c})
            sols = [[Scalar.const(x) for x in s] for s in ech.nullspace(len(unknowns))]
        else:
            dense = [[r.get(u, ZERO) for u in range(len(unknowns))] for r in rows]
            sols = nullspace(dense, len(unknowns)) if dense else [
                [ONE if j == f else ZERO for j in range(len(unknowns))] for f in range(len(unknowns))
            ]
        cls = vector_class(B.family)
        for sol in sols:
            matrix = {}
            for a, key in enumerate(dom_keys):
                img = cls(None, None, B.flipped)
                for b, w in enumerate(cod):
                    u = col.get((a, b))
                    if u is not None and sol[u]:
                        img = img + w.scale(sol[u])
                matrix[key] = img
            maps.append(
                LinearMap(A, B, "Matrix", matrix=matrix, parity=parity, max_deg=max_deg)
            )
    return maps


def matrix_of(m: LinearMap, max_deg: int) -> LinearMap:
    """Tabulate any map on domain monomials of degree <= max_deg."""
    dom = monomial_basis(m.domain.family, max_deg)
    if m.domain.flipped:
        dom = [type(v)(v.even, v.odd, True) for v in dom]
    matrix = {}
    for v in dom:
        if in_submodule(m.submodule, v):
            matrix[next(iter(_coords(v)))] = apply_map(m, v)
    return LinearMap(m.domain, m.codomain, "Matrix", matrix=matrix, parity=m.parity, submodule=m.submodule, max_deg=max_deg)


def proportional(m1: LinearMap, m2: LinearMap, max_deg: int) -> bool:
    """True if the two maps agree up to a nonzero scalar on monomials of
    degree <= max_deg."""
    a = matrix_of(m1, max_deg).matrix if m1.rule != "Matrix" else m1.matrix
    b = matrix_of(m2, max_deg).matrix if m2.rule != "Matrix" else m2.matrix
    ratio = None
    for key in sorted(set(a) | set(b)):
        va, vb = _coords(a.get(key, RamondVector())), _coords(b.get(key, RamondVector()))
        if set(va) != set(vb):
            return False
        for k in va:
            x, y = va[k], vb[k]
            if ratio is None:
                ratio = (x, y)
            elif x * ratio[1] != y * ratio[0]:
                return False
    return ratio is not None
