"""Local ring computations at the origin: Mora normal form, standard bases,
and dimensions of zero-dimensional quotients.

The monomial order is local (1 is the largest monomial), so leading-term
reduction implicitly works modulo units of the local ring; termination of the
normal form follows from the ecart bound.
"""

from __future__ import annotations

from .arith import squarefree_part
from .poly import LOCAL_ORDER, MonomialOrder, Poly, PolyError

INFINITE = float("inf")

DEFAULT_STEP_CAP = 10 ** 6


class ResourceExceeded(RuntimeError):
    pass


class LocalIdeal:
    def __init__(self, generators, order: MonomialOrder = LOCAL_ORDER):
        gens = [g for g in generators if not g.is_zero()]
        if not gens:
            raise PolyError("ideal needs at least one nonzero generator")
        vars, field = gens[0].vars, gens[0].field
        for g in gens:
            if g.vars != vars or g.field != field:
                raise PolyError("generators disagree on variables or field")
        self.generators = gens
        self.order = order
        self.vars = vars
        self.field = field

    def __repr__(self):
        return f"LocalIdeal({', '.join(map(str, self.generators))})"


class StandardBasis:
    def __init__(self, ideal: LocalIdeal, basis, leading_ideal):
        self.ideal = ideal
        self.basis = basis
        self.leading_ideal = leading_ideal  # minimal generating exponents


def _ecart(p: Poly, order: MonomialOrder) -> int:
    e, _ = p.leading(order)
    return p.total_degree() - sum(e)


def _divides(e1, e2) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def mora_normal_form(f: Poly, basis, order: MonomialOrder = LOCAL_ORDER,
                     step_cap: int = DEFAULT_STEP_CAP) -> Poly:
    """Weak normal form: u*f = sum a_i g_i + result for some local unit u."""
    reducers = [g for g in basis if not g.is_zero()]
    h = f
    steps = 0
    while not h.is_zero():
        lh, ch = h.leading(order)
        usable = [g for g in reducers if _divides(g.leading(order)[0], lh)]
        if not usable:
            return h
        g = min(usable, key=lambda g: _ecart(g, order))
        if _ecart(g, order) > _ecart(h, order):
            reducers.append(h)
        lg, cg = g.leading(order)
        mono = tuple(a - b for a, b in zip(lh, lg))
        factor = Poly(h.vars, {mono: ch * cg.inverse()}, h.field)
        h = h - factor * g
        steps += 1
        if steps > step_cap:
            raise ResourceExceeded("normal form exceeded the reduction budget")
    return h


def _spoly(a: Poly, b: Poly, order: MonomialOrder) -> Poly:
    la, ca = a.leading(order)
    lb, cb = b.leading(order)
    lcm = tuple(max(x, y) for x, y in zip(la, lb))
    ma = Poly(a.vars, {tuple(x - y for x, y in zip(lcm, la)): ca.inverse()}, a.field)
    mb = Poly(a.vars, {tuple(x - y for x, y in zip(lcm, lb)): cb.inverse()}, a.field)
    return ma * a - mb * b


def standard_basis(I: LocalIdeal, step_cap: int = DEFAULT_STEP_CAP) -> StandardBasis:
    order = I.order
    G = [g.normalized(order) for g in I.generators]
    pairs = [(i, j) for i in range(len(G)) for j in range(i)]
    steps = 0
    while pairs:
        pairs.sort(key=lambda p: sum(max(x, y) for x, y in zip(
            G[p[0]].leading(order)[0], G[p[1]].leading(order)[0])), reverse=True)
        i, j = pairs.pop()
        li, lj = G[i].leading(order)[0], G[j].leading(order)[0]
        lcm = tuple(max(x, y) for x, y in zip(li, lj))
        if lcm == tuple(x + y for x, y in zip(li, lj)):
            continue  # product criterion
        r = mora_normal_form(_spoly(G[i], G[j], order), G, order, step_cap)
        steps += 1
        if steps > step_cap:
            raise ResourceExceeded("standard basis exceeded the step budget")
        if not r.is_zero():
            G.append(r.normalized(order))
            k = len(G) - 1
            pairs.extend((k, t) for t in range(k))
    leads = [g.leading(order)[0] for g in G]
    minimal = [e for e in leads
               if not any(f != e and _divides(f, e) for f in leads)]
    # deduplicate
    lead_set = []
    for e in minimal:
        if e not in lead_set:
            lead_set.append(e)
    return StandardBasis(I, G, lead_set)


def _staircase_count(leading, nvars):
    """Number of monomials outside the monomial ideal, or INFINITE."""
    if any(all(x == 0 for x in e) for e in leading):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leading if sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    stack = [(0, ())]
    while stack:
        i, prefix = stack.pop()
        if i == nvars:
            if not any(_divides(e, prefix) for e in leading):
                count += 1
            continue
        for k in range(bounds[i]):
            stack.append((i + 1, prefix + (k,)))
    return count


def quotient_dim(I: LocalIdeal, step_cap: int = DEFAULT_STEP_CAP):
    sb = standard_basis(I, step_cap)
    return _staircase_count(sb.leading_ideal, len(I.vars))


def intersection_multiplicity(h1: Poly, h2: Poly):
    """Local intersection number dim O/(h1, h2); INFINITE for a shared branch."""
    return quotient_dim(LocalIdeal([h1, h2]))


def milnor_number(h: Poly):
    """Milnor number of the reduced curve defined by h at the origin."""
    s = squarefree_part(h)
    jac = [s.derivative(v) for v in s.vars]
    jac = [p for p in jac if not p.is_zero()]
    if not jac:
        raise PolyError("constant polynomial has no Milnor number")
    return quotient_dim(LocalIdeal(jac))
