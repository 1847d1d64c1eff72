"""Map germs (C^2,0) -> (C^3,0): corank, cross-cap number, multiple-point
spaces via divided differences, the double-point curve, and the triple-point
number."""

from __future__ import annotations

from .arith import poly_gcd, resultant, squarefree_part, try_divide
from .factor import FactorizationIncomplete, factor_components
from .localring import INFINITE, LocalIdeal, quotient_dim
from .poly import LOCAL_ORDER, Poly, PolyError, divided_difference

UV = ("u", "v")


class AnalysisError(ValueError):
    """A computation failed in a way no override can fix."""


class OverrideRequired(ValueError):
    """The automatic route does not apply; the germ file must supply data."""


class OverrideSet:
    def __init__(self, double_curve=None, components=None, twist=None,
                 vertical_indices=None, T=None):
        self.double_curve = double_curve
        self.components = components
        self.twist = twist                      # list of ("twisted", i) / ("untwisted", i, j)
        self.vertical_indices = vertical_indices or {}
        self.T = T


class Germ:
    def __init__(self, components, field, name="", overrides=None):
        f1, f2, f3 = components
        for f in (f1, f2, f3):
            if f.vars != UV:
                raise PolyError("germ components must be polynomials in (u, v)")
            if not f.is_zero() and f.is_unit_local():
                raise PolyError("germ components must vanish at the origin")
        self.components = (f1, f2, f3)
        self.field = field
        self.name = name
        self.overrides = overrides or OverrideSet()

    def __repr__(self):
        return f"Germ({self.name or ', '.join(map(str, self.components))})"


class MultiPointData:
    """Divided-difference presentation of the double and triple point spaces."""

    def __init__(self, P, Q, D3_ideal):
        self.P = P
        self.Q = Q
        self.D3_ideal = D3_ideal


def _linear_part_matrix(f: Germ):
    rows = []
    for comp in f.components:
        row = []
        for i in range(2):
            e = (1, 0) if i == 0 else (0, 1)
            row.append(comp.terms.get(e, f.field.zero()))
        rows.append(row)
    return rows


def corank(f: Germ) -> int:
    m = _linear_part_matrix(f)
    cols = list(zip(*m))
    nonzero = [c for c in cols if any(not x.is_zero() for x in c)]
    if not nonzero:
        return 2
    if len(nonzero) == 1:
        return 1
    a, b = nonzero
    # rank 1 iff the two columns are proportional: all 2x2 minors vanish
    for i in range(3):
        for j in range(i + 1, 3):
            if not (a[i] * b[j] - a[j] * b[i]).is_zero():
                return 0
    return 1


def crosscap_number(f: Germ) -> int:
    du = [c.derivative("u") for c in f.components]
    dv = [c.derivative("v") for c in f.components]
    minors = []
    for i in range(3):
        for j in range(i + 1, 3):
            minors.append(du[i] * dv[j] - du[j] * dv[i])
    minors = [m for m in minors if not m.is_zero()]
    if not minors:
        raise AnalysisError("all Jacobian minors vanish identically")
    d = quotient_dim(LocalIdeal(minors))
    if d == INFINITE:
        raise AnalysisError("not finitely determined along the cross-cap criterion")
    return d


def fold_normal_data(f: Germ) -> Poly | None:
    """p(u, y) with f = (u, v^2, v*p(u, v^2)), or None if f is not literally
    in the fold normal form."""
    f1, f2, f3 = f.components
    u = Poly.variable("u", UV, f.field)
    v = Poly.variable("v", UV, f.field)
    if f1 != u or f2 != v * v:
        return None
    terms = {}
    for e, c in f3.terms.items():
        if e[1] % 2 == 0:
            return None
        terms[(e[0], (e[1] - 1) // 2)] = c
    if not terms:
        return None
    return Poly(("u", "y"), terms, f.field)


def multipoint_data(f: Germ) -> MultiPointData:
    if corank(f) != 1:
        raise OverrideRequired("multiple-point spaces need a corank-1 germ; "
                               "supply double_curve/T overrides instead")
    f1, f2, f3 = f.components
    if f1 != Poly.variable("u", UV, f.field):
        raise OverrideRequired("corank-1 route needs coordinates with f1 = u; "
                               "re-enter the germ or supply overrides")
    P = divided_difference(f2, "v", ("v1", "v2"))
    Q = divided_difference(f3, "v", ("v1", "v2"))
    vars4 = ("u", "v1", "v2", "v3")
    P3 = P.rename({}, vars4)
    Q3 = Q.rename({}, vars4)
    ddP = divided_difference(P, "v2", ("v2x", "v3")).rename({"v2x": "v2"}, vars4)
    ddQ = divided_difference(Q, "v2", ("v2x", "v3")).rename({"v2x": "v2"}, vars4)
    gens = [g for g in (P3, Q3, ddP, ddQ) if not g.is_zero()]
    return MultiPointData(P, Q, LocalIdeal(gens))


def _resultant_curve(mp: MultiPointData, eliminate: str, keep: str) -> Poly:
    if mp.P.degree_in(eliminate) <= 0 and mp.Q.degree_in(eliminate) <= 0:
        r = poly_gcd(mp.P, mp.Q)
    else:
        r = resultant(mp.P, mp.Q, eliminate)
    if r.is_zero():
        raise AnalysisError("divided-difference resultant vanishes identically; "
                            "the germ is not finitely determined")
    return squarefree_part(r).rename({keep: "v"}, UV)


def double_curve_equation(f: Germ) -> Poly:
    ov = f.overrides
    if ov.double_curve is not None:
        d = ov.double_curve
        if squarefree_part(d) != d.normalized(LOCAL_ORDER):
            raise AnalysisError("double_curve override is not squarefree")
        if corank(f) == 1 and f.components[0] == Poly.variable("u", UV, f.field):
            mp = multipoint_data(f)
            r = _resultant_curve(mp, "v2", "v1")
            if squarefree_part(r * d) != r:
                raise AnalysisError("double_curve override has a factor outside "
                                    "the divided-difference resultant")
        return d.normalized(LOCAL_ORDER)
    p = fold_normal_data(f)
    if p is not None:
        v = Poly.variable("v", UV, f.field)
        return squarefree_part(p.substitute(
            {"u": Poly.variable("u", UV, f.field), "y": v * v}))
    if corank(f) != 1:
        raise OverrideRequired("corank >= 2: supply the double_curve override")
    mp = multipoint_data(f)
    r12 = _resultant_curve(mp, "v2", "v1")
    r21 = _resultant_curve(mp, "v1", "v2")
    try:
        factors = factor_components(r12)
    except FactorizationIncomplete as exc:
        raise OverrideRequired(str(exc)) from exc
    kept = []
    for h, _ in factors:
        if h.is_unit_local():
            continue  # unit of the local ring: no branch through the origin
        if try_divide(r21, h) is None:
            continue  # survives only one elimination: spurious
        kept.append(h)
    if not kept:
        raise AnalysisError("no double-curve component survives both eliminations")
    out = Poly.constant(1, UV, f.field)
    for h in kept:
        out = out * h
    return out.normalized(LOCAL_ORDER)


def triple_point_number(f: Germ) -> int:
    if f.overrides.T is not None:
        return f.overrides.T
    mp = multipoint_data(f)
    d = quotient_dim(mp.D3_ideal)
    if d == INFINITE:
        raise AnalysisError("triple-point space is not zero-dimensional")
    if d % 6:
        raise AnalysisError(f"triple-point space dimension {d} is not divisible by 6")
    return d // 6


def image_equation_fold(f: Germ) -> Poly:
    p = fold_normal_data(f)
    if p is None:
        raise AnalysisError("image equation implemented for fold germs only")
    xyz = ("x", "y", "z")
    px = p.rename({"u": "x"}, xyz)
    y = Poly.variable("y", xyz, f.field)
    z = Poly.variable("z", xyz, f.field)
    return y * px * px - z * z
