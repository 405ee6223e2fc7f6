"""Multivariate division, Buchberger's algorithm with cofactor tracking,
and the ideal-level queries built on top of them.

Every Groebner basis carries an exact cofactor matrix expressing each basis
element as a polynomial combination of the original generators; this is what
makes Bezout lifts and splittings exact rather than merely decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DimensionOfZeroRing,
    InvalidDivisor,
    NotInIdeal,
    RingMismatch,
)
from .poly import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by an ordered list of generators."""

    ring: PolyRing
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch("generator outside the ambient ring")

    @staticmethod
    def of(ring: PolyRing, generators) -> "Ideal":
        return Ideal(ring, tuple(generators))


def divide_with_remainder(f: Polynomial, divisors, order: MonomialOrder | None = None):
    """Multivariate division: f = sum(q_i * d_i) + r with no term of r
    divisible by any divisor's leading term.  Divisor choice is first match
    in list order, which pins the output deterministically."""
    ring = f.ring
    order = order or ring.order
    divisors = list(divisors)
    for d in divisors:
        if d.ring != ring:
            raise RingMismatch("divisor outside the dividend's ring")
        if d.is_zero():
            raise InvalidDivisor("zero divisor")
    quots, rem = _reduce(f, divisors, order)
    return quots, rem


def _reduce(f: Polynomial, divisors, order: MonomialOrder):
    """Core reduction loop shared by division, Buchberger and normal forms."""
    ring = f.ring
    field = ring.field
    key = order.key
    sub, mul, div = field.sub, field.mul, field.div

    leads = []
    for d in divisors:
        lm, lc = d.lead(order)
        leads.append((lm, lc, d.terms))

    p = dict(f.terms)
    rem: dict = {}
    quots = [dict() for _ in divisors]
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, (dm, dc, dterms) in enumerate(leads):
            if mono_divides(dm, m):
                t = mono_div(m, dm)
                q = div(c, dc)
                qd = quots[idx]
                qd[t] = field.add(qd[t], q) if t in qd else q
                for m2, c2 in dterms.items():
                    mm = mono_mul(m2, t)
                    v = sub(p[mm], mul(q, c2)) if mm in p else field.neg(mul(q, c2))
                    if v:
                        p[mm] = v
                    elif mm in p:
                        del p[mm]
                break
        else:
            rem[m] = c
            del p[m]
    return (
        [ring.from_terms(q) for q in quots],
        ring.from_terms(rem),
    )


class GroebnerBasis:
    """A reduced Groebner basis together with its cofactor matrix.

    ``cofactors[k][i]`` is the coefficient of ``generators[i]`` in the exact
    expansion of ``basis[k]``.
    """

    def __init__(self, ring, order, generators, basis, cofactors):
        self.ring = ring
        self.order = order
        self.generators = tuple(generators)
        self.basis = tuple(basis)
        self.cofactors = tuple(tuple(row) for row in cofactors)

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].constant_value() is not None

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("element outside the basis ring")
        if not self.basis:
            return f
        _, rem = _reduce(f, self.basis, self.order)
        return rem

    def normal_form_with_quotients(self, f: Polynomial):
        if f.ring != self.ring:
            raise RingMismatch("element outside the basis ring")
        if not self.basis:
            return [], f
        return _reduce(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def lift(self, f: Polynomial):
        """Coefficients c with f = sum(c_i * generators[i]), exactly."""
        quots, rem = self.normal_form_with_quotients(f)
        if not rem.is_zero():
            raise NotInIdeal(f"{f} is not in the ideal")
        coeffs = []
        for i in range(len(self.generators)):
            acc = self.ring.zero()
            for k, q in enumerate(quots):
                if not q.is_zero():
                    acc = acc + q * self.cofactors[k][i]
            coeffs.append(acc)
        check = self.ring.zero()
        for c, g in zip(coeffs, self.generators):
            check = check + c * g
        if check != f:
            raise AssertionError("cofactor expansion failed to reproduce the element")
        return coeffs


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Buchberger's algorithm with both pruning criteria and full cofactor
    tracking.  Pair selection is by (lcm degree, i, j), so the output is
    deterministic for a fixed input and order.

    As soon as a constant enters the basis the unit ideal is recognized and
    {1} is returned immediately; {1} is the reduced basis in that case and
    its cofactor row is an exact Bezout certificate for 1."""
    ring = ideal.ring
    order = order or ring.order
    field = ring.field
    gens = ideal.generators
    ngen = len(gens)

    def unit_row(i, raw):
        row = [ring.zero()] * ngen
        row[i] = ring.from_terms({(0,) * ring.nvars: raw})
        return row

    basis: list[Polynomial] = []
    cofs: list[list[Polynomial]] = []

    def finish_unit(poly, cof):
        lc = poly.constant_value()
        inv = field.inv(lc)
        return GroebnerBasis(
            ring, order, gens, [poly.scale(inv)], [[c.scale(inv) for c in cof]]
        )

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        lc = g.lead(order)[1]
        inv = field.inv(lc)
        poly = g.scale(inv)
        cof = unit_row(i, inv)
        if poly.constant_value() is not None:
            return finish_unit(poly, cof)
        basis.append(poly)
        cofs.append(cof)

    lead_monos = [p.lead(order)[0] for p in basis]
    pairs: dict = {}

    def add_pairs(j):
        for i in range(j):
            lcm = mono_lcm(lead_monos[i], lead_monos[j])
            pairs[(i, j)] = sum(lcm)

    for j in range(len(basis)):
        add_pairs(j)

    while pairs:
        (i, j) = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[(i, j)]
        lmi, lmj = lead_monos[i], lead_monos[j]
        lcm = mono_lcm(lmi, lmj)
        if lcm == mono_mul(lmi, lmj):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                mono_divides(lead_monos[k], lcm)
                and (min(i, k), max(i, k)) not in pairs
                and (min(j, k), max(j, k)) not in pairs
            ):
                skip = True  # chain criterion
                break
        if skip:
            continue
        ti = mono_div(lcm, lmi)
        tj = mono_div(lcm, lmj)
        one = field.one()
        s = basis[i].mul_term(ti, one) - basis[j].mul_term(tj, one)
        cof_s = [
            cofs[i][k].mul_term(ti, one) - cofs[j][k].mul_term(tj, one)
            for k in range(ngen)
        ]
        quots, rem = _reduce(s, basis, order) if basis else ([], s)
        if rem.is_zero():
            continue
        for t, q in enumerate(quots):
            if not q.is_zero():
                for k in range(ngen):
                    if not cofs[t][k].is_zero():
                        cof_s[k] = cof_s[k] - q * cofs[t][k]
        lc = rem.lead(order)[1]
        inv = field.inv(lc)
        rem = rem.scale(inv)
        cof_s = [c.scale(inv) for c in cof_s]
        if rem.constant_value() is not None:
            return finish_unit(rem, cof_s)
        basis.append(rem)
        cofs.append(cof_s)
        lead_monos.append(rem.lead(order)[0])
        add_pairs(len(basis) - 1)

    # Minimalize: keep only elements whose leading monomial no kept element
    # divides; ascending processing makes the kept set deterministic.
    order_asc = sorted(range(len(basis)), key=lambda t: order.key(lead_monos[t]))
    kept: list[int] = []
    for idx in order_asc:
        if not any(mono_divides(lead_monos[k], lead_monos[idx]) for k in kept):
            kept.append(idx)

    final_polys = [basis[t] for t in kept]
    final_cofs = [list(cofs[t]) for t in kept]

    # Tail-reduce each element against the others; leading terms are fixed.
    for pos in range(len(final_polys)):
        others = [final_polys[s] for s in range(len(final_polys)) if s != pos]
        if not others:
            continue
        quots, rem = _reduce(final_polys[pos], others, order)
        qi = 0
        for s in range(len(final_polys)):
            if s == pos:
                continue
            q = quots[qi]
            qi += 1
            if not q.is_zero():
                for k in range(ngen):
                    if not final_cofs[s][k].is_zero():
                        final_cofs[pos][k] = final_cofs[pos][k] - q * final_cofs[s][k]
        final_polys[pos] = rem

    ranked = sorted(
        range(len(final_polys)),
        key=lambda t: order.key(final_polys[t].lead(order)[0]),
        reverse=True,
    )
    return GroebnerBasis(
        ring,
        order,
        gens,
        [final_polys[t] for t in ranked],
        [final_cofs[t] for t in ranked],
    )


@lru_cache(maxsize=None)
def _cached_basis(ideal: Ideal, order: MonomialOrder) -> GroebnerBasis:
    return buchberger(ideal, order)


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Cached entry point; ideals and orders are immutable."""
    return _cached_basis(ideal, order or ideal.ring.order)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def ideal_membership(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    return groebner_basis(ideal, order).contains(f)


def bezout_lift(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None):
    return groebner_basis(ideal, order).lift(f)


def ideal_equal(a: Ideal, b: Ideal, order: MonomialOrder | None = None) -> bool:
    if a.ring != b.ring:
        raise RingMismatch("ideals live in different rings")
    gb_a = groebner_basis(a, order)
    gb_b = groebner_basis(b, order)
    return all(gb_b.contains(g) for g in a.generators) and all(
        gb_a.contains(g) for g in b.generators
    )


def krull_dimension(ideal: Ideal, order: MonomialOrder | None = None) -> int:
    """Krull dimension of ring/ideal via the leading-term ideal: the largest
    set of variables meeting no leading-monomial support is independent."""
    gb = groebner_basis(ideal, order)
    if gb.is_unit_ideal():
        raise DimensionOfZeroRing("the quotient is the zero ring")
    nvars = ideal.ring.nvars
    ord_ = order or ideal.ring.order
    supports = set()
    for g in gb.basis:
        lm = g.lead(ord_)[0]
        supports.add(frozenset(i for i, e in enumerate(lm) if e))
    # Drop supersets; they are hit whenever the smaller support is hit.
    minimal = {
        s for s in supports if not any(t < s for t in supports)
    }
    memo: dict = {}

    def min_hitting(supps: frozenset) -> int:
        if not supps:
            return 0
        if supps in memo:
            return memo[supps]
        pick = min(supps, key=lambda s: (len(s), sorted(s)))
        best = None
        for v in sorted(pick):
            rest = frozenset(t for t in supps if v not in t)
            cand = 1 + min_hitting(rest)
            if best is None or cand < best:
                best = cand
        memo[supps] = best
        return best

    return nvars - min_hitting(frozenset(minimal))
