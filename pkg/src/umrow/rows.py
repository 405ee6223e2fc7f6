"""Unimodular rows, splittings, elementary words, the Mennicke-Newman
procedure and van der Kallen's addition, all with exact certificate
verification.

Action convention, fixed once for the whole package: words act on the right
of row vectors and the generator e(i, j, lam) adds lam * (entry i) to entry j.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field

from .algebra import Algebra, AlgebraElement
from .errors import NotUnimodular, RingMismatch, ShapeError, ShrinkFailed
from .groebner import groebner_basis


@dataclass(frozen=True)
class UnimodularRow:
    """A row over an algebra; ``verified`` records a passed unimodularity
    check (1 lies in the ideal generated by the entries)."""

    parent: Algebra
    entries: tuple
    verified: bool = False

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ShapeError("rows must have length at least 2")
        for e in self.entries:
            if e.parent != self.parent:
                raise RingMismatch("row entry outside the parent algebra")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class SplittingRow:
    """Coefficients witnessing unimodularity: sum(row_i * entry_i) = 1."""

    row: UnimodularRow
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.row.entries):
            raise ShapeError("splitting length differs from row length")
        total = self.row.parent.zero()
        for a, b in zip(self.row.entries, self.entries):
            total = total + a * b
        if total != self.row.parent.one():
            raise NotUnimodular("proposed splitting does not sum to 1")


def check_unimodular(parent: Algebra, entries) -> UnimodularRow:
    """Verify 1 in <entries> (modulo the relations) and return the row."""
    elts = tuple(parent.element(e) for e in entries)
    if len(elts) < 2:
        raise ShapeError("rows must have length at least 2")
    gb = groebner_basis(parent.ideal_with(elts))
    if not gb.is_unit_ideal():
        raise NotUnimodular(f"1 is not in the ideal generated by {[str(e) for e in elts]}")
    return UnimodularRow(parent, elts, verified=True)


def row_from_witness(parent: Algebra, entries, witness):
    """Build a verified row from an explicit splitting; cheaper than a
    Groebner computation when the witness is already known."""
    elts = tuple(parent.element(e) for e in entries)
    wits = tuple(parent.element(w) for w in witness)
    row = UnimodularRow(parent, elts, verified=True)
    return row, SplittingRow(row, wits)


def compute_splitting(row: UnimodularRow) -> SplittingRow:
    """Deterministic splitting extracted from the Bezout certificate for 1.

    The lift runs over the entry representatives first and the relations
    after, so coefficients on the relations are discarded in the quotient.
    """
    parent = row.parent
    gb = groebner_basis(parent.ideal_with(row.entries))
    if not gb.is_unit_ideal():
        raise NotUnimodular("row is not unimodular")
    coeffs = gb.lift(parent.ring.one())
    entries = tuple(parent.element(coeffs[i]) for i in range(len(row.entries)))
    return SplittingRow(row, entries)


@dataclass(frozen=True)
class ElementaryGen:
    """e_{ij}(lam) = I + lam * E_{ij}; adds lam * (entry i) to entry j."""

    i: int
    j: int
    lam: AlgebraElement

    def __post_init__(self):
        if self.i == self.j or self.i < 0 or self.j < 0:
            raise ShapeError(f"bad elementary indices ({self.i}, {self.j})")


@dataclass(frozen=True)
class ElementaryWord:
    """An ordered product of elementary generators acting on rows of a
    fixed length."""

    n: int
    gens: tuple = field(default_factory=tuple)

    def __post_init__(self):
        for g in self.gens:
            if g.i >= self.n or g.j >= self.n:
                raise ShapeError(f"generator indices exceed row length {self.n}")

    def __len__(self):
        return len(self.gens)

    def concat(self, other: "ElementaryWord") -> "ElementaryWord":
        if other.n != self.n:
            raise ShapeError("cannot concatenate words of different widths")
        return ElementaryWord(self.n, self.gens + other.gens)

    def inverse(self) -> "ElementaryWord":
        return ElementaryWord(
            self.n, tuple(ElementaryGen(g.i, g.j, -g.lam) for g in reversed(self.gens))
        )

    def matrix(self, parent: Algebra):
        """The product matrix, built by column operations on the identity."""
        n = self.n
        cols = [[parent.one() if r == c else parent.zero() for r in range(n)] for c in range(n)]
        for g in self.gens:
            ci, cj = cols[g.i], cols[g.j]
            cols[g.j] = [cj[r] + g.lam * ci[r] for r in range(n)]
        return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))

    def determinant(self, parent: Algebra) -> AlgebraElement:
        return _determinant(self.matrix(parent), parent)


def _determinant(matrix, parent: Algebra) -> AlgebraElement:
    """Cofactor expansion with memoization on the live column set."""
    n = len(matrix)
    memo: dict = {}

    def det(row: int, cols: tuple) -> AlgebraElement:
        if row == n:
            return parent.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = parent.zero()
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = det(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return det(0, tuple(range(n)))


def apply_word_entries(entries, word: ElementaryWord):
    out = list(entries)
    for g in word.gens:
        out[g.j] = out[g.j] + g.lam * out[g.i]
    return out


def apply_word(row: UnimodularRow, word: ElementaryWord) -> UnimodularRow:
    """Right action of the word's matrix; unimodularity is preserved by
    elementary moves, so the verified flag carries over."""
    if word.n != len(row.entries):
        raise ShapeError(f"word width {word.n} != row length {len(row.entries)}")
    return UnimodularRow(row.parent, tuple(apply_word_entries(row.entries, word)), row.verified)


@dataclass(frozen=True)
class OrbitCertificate:
    """A claim that source * matrix(word) = target, checkable by replay."""

    source: UnimodularRow
    target: UnimodularRow
    word: ElementaryWord


def verify_certificate(cert: OrbitCertificate) -> bool:
    """Replay the raw generators on the source row and compare entrywise.
    No macro-level knowledge is used here."""
    if cert.word.n != len(cert.source.entries) or len(cert.source.entries) != len(
        cert.target.entries
    ):
        return False
    if cert.source.parent != cert.target.parent:
        return False
    result = apply_word_entries(cert.source.entries, cert.word)
    return all(a == b for a, b in zip(result, cert.target.entries))


# -- Mennicke-Newman ---------------------------------------------------------


@dataclass(frozen=True)
class MNResult:
    """Outcome of the Mennicke-Newman procedure.

    ``word_u`` moves u to (x, tail) and ``word_v`` moves v to (1-x, tail);
    ``u_mid``/``v_mid`` are the rows right after the first-coordinate
    adjustment, before the tails are merged.
    """

    x: AlgebraElement
    tail: tuple
    word_u: ElementaryWord
    word_v: ElementaryWord
    u_final: UnimodularRow
    v_final: UnimodularRow
    u_mid: tuple
    v_mid: tuple


def _tail_is_unimodular(parent: Algebra, tail) -> bool:
    gb = groebner_basis(parent.ideal_with(tail))
    return gb.is_unit_ideal()


def _shrink_pool(parent: Algebra, seed: int, budget: int):
    """Deterministic candidate coefficients: 1, -1, the algebra generators,
    then seeded random polynomials of degree at most 2."""
    pool = [parent.one(), -parent.one()]
    pool.extend(parent.gens())
    rng = random.Random(seed)
    nvars = parent.ring.nvars
    while len(pool) < budget:
        terms = {}
        for _ in range(rng.randint(1, 3)):
            mono = [0] * nvars
            for _ in range(rng.randint(0, 2)):
                if nvars:
                    mono[rng.randrange(nvars)] += 1
            coeff = rng.choice([-2, -1, 1, 2])
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + coeff
        raw = {m: parent.field.from_int(c) for m, c in terms.items() if c}
        poly = parent.ring.from_terms(raw)
        pool.append(parent.element(poly))
    return pool[:budget]


def _shrink_assignments(parent: Algebra, slots: int, seed: int, budget: int):
    """All-equal assignments first, then single-slot ones, per candidate."""
    zero = parent.zero()
    for cand in _shrink_pool(parent, seed, budget):
        yield [cand] * slots
        for s in range(slots):
            assignment = [zero] * slots
            assignment[s] = cand
            yield assignment


def mennicke_newman(
    u: UnimodularRow,
    v: UnimodularRow,
    shrink_hints=None,
    *,
    seed: int = 0,
    shrink_budget: int = 200,
) -> MNResult:
    """Move u and v by explicit elementary words to the shapes (x, a) and
    (1-x, a) with a common tail a.

    Step one adds multiples of u1*v1 to the tails until the combined tail is
    unimodular (skipped when it already is; the search is a seeded,
    deterministic semidecision and ``shrink_hints`` short-circuits it).
    Step two subtracts a Bezout combination of u1+v1-1 from the first
    coordinates.  The final cross-adjustment produces the common tail.
    """
    parent = u.parent
    if v.parent != parent:
        raise RingMismatch("rows belong to different algebras")
    n = len(u.entries)
    if len(v.entries) != n:
        raise ShapeError("rows have different lengths")
    if not (u.verified and v.verified):
        raise NotUnimodular("both rows must be verified before addition")

    ue = list(u.entries)
    ve = list(v.entries)
    gens_u: list[ElementaryGen] = []
    gens_v: list[ElementaryGen] = []

    # Step 1: make (u_2..u_n, v_2..v_n) unimodular by adding multiples of
    # u1*v1, which is an elementary move on each row separately.
    if not _tail_is_unimodular(parent, ue[1:] + ve[1:]):
        slots = 2 * (n - 1)
        found = False
        candidates = []
        if shrink_hints is not None:
            hint = [parent.element(h) for h in shrink_hints]
            if len(hint) != slots:
                raise ShapeError(f"expected {slots} hint coefficients, got {len(hint)}")
            candidates.append(hint)

        def assignments():
            yield from candidates
            if shrink_hints is None:
                yield from _shrink_assignments(parent, slots, seed, shrink_budget)

        p = ue[0] * ve[0]
        for assignment in assignments():
            lams = assignment[: n - 1]
            mus = assignment[n - 1 :]
            new_u_tail = [ue[i] + lams[i - 1] * p for i in range(1, n)]
            new_v_tail = [ve[i] + mus[i - 1] * p for i in range(1, n)]
            if _tail_is_unimodular(parent, new_u_tail + new_v_tail):
                for i in range(1, n):
                    if not lams[i - 1].is_zero():
                        gens_u.append(ElementaryGen(0, i, lams[i - 1] * ve[0]))
                    if not mus[i - 1].is_zero():
                        gens_v.append(ElementaryGen(0, i, mus[i - 1] * ue[0]))
                ue[1:] = new_u_tail
                ve[1:] = new_v_tail
                found = True
                break
        if not found:
            raise ShrinkFailed(
                f"no shrink coefficients found within budget {shrink_budget}; "
                "supply shrink_hints"
            )

    # Step 2: write u1 + v1 - 1 over the combined tail and subtract.
    tail_ideal = parent.ideal_with(ue[1:] + ve[1:])
    gb = groebner_basis(tail_ideal)
    f = ue[0] + ve[0] - parent.one()
    coeffs = gb.lift(f.rep)
    alphas = [parent.element(coeffs[i]) for i in range(n - 1)]
    betas = [parent.element(coeffs[n - 1 + i]) for i in range(n - 1)]
    for i in range(1, n):
        a = alphas[i - 1]
        if not a.is_zero():
            gens_u.append(ElementaryGen(i, 0, -a))
            ue[0] = ue[0] - a * ue[i]
        b = betas[i - 1]
        if not b.is_zero():
            gens_v.append(ElementaryGen(i, 0, -b))
            ve[0] = ve[0] - b * ve[i]
    if ue[0] + ve[0] != parent.one():
        raise AssertionError("first coordinates do not sum to 1 after adjustment")

    u_mid = tuple(ue)
    v_mid = tuple(ve)

    # Step 3: merge the tails around the pivot first coordinates.
    x = ue[0]
    diffs = [ue[i] - ve[i] for i in range(1, n)]
    tail = []
    for i in range(1, n):
        d = diffs[i - 1]
        a_from_u = ue[i] - x * d
        a_from_v = ve[i] + ve[0] * d
        if a_from_u != a_from_v:
            raise AssertionError("the two tail expressions disagree")
        if not d.is_zero():
            gens_u.append(ElementaryGen(0, i, -d))
            gens_v.append(ElementaryGen(0, i, d))
        ue[i] = a_from_u
        ve[i] = a_from_v
        tail.append(a_from_u)

    word_u = ElementaryWord(n, tuple(gens_u))
    word_v = ElementaryWord(n, tuple(gens_v))
    u_final = UnimodularRow(parent, tuple(ue), verified=True)
    v_final = UnimodularRow(parent, tuple(ve), verified=True)

    if apply_word(u, word_u).entries != u_final.entries:
        raise AssertionError("word_u does not replay to the reduced u")
    if apply_word(v, word_v).entries != v_final.entries:
        raise AssertionError("word_v does not replay to the reduced v")

    return MNResult(x, tuple(tail), word_u, word_v, u_final, v_final, u_mid, v_mid)


@dataclass(frozen=True)
class VdkSum:
    """Sum row (x(1-x), a_2, ..., a_n) with the words that produced it."""

    row: UnimodularRow
    splitting: SplittingRow
    word_u: ElementaryWord
    word_v: ElementaryWord
    x: AlgebraElement
    tail: tuple


def vdk_add(
    u: UnimodularRow,
    v: UnimodularRow,
    shrink_hints=None,
    *,
    seed: int = 0,
    shrink_budget: int = 200,
) -> VdkSum:
    """Orbit-level addition: [u] + [v] = [x(1-x), a_2, ..., a_n].

    The sum's unimodularity witness is assembled by multiplying Bezout
    certificates for (x, a) and (1-x, a), so no fresh basis computation on
    the product row is needed.
    """
    parent = u.parent
    n = len(u.entries)
    dim = None
    try:
        dim = parent.dimension
    except Exception:  # pragma: no cover - advisory only
        pass
    if dim is None:
        warnings.warn("could not evaluate the dimension hypothesis d <= 2n-4")
    elif dim > 2 * n - 4:
        warnings.warn(
            f"dimension hypothesis violated: dim {dim} > 2n-4 = {2 * n - 4}; "
            "the procedure may still succeed"
        )

    mn = mennicke_newman(u, v, shrink_hints, seed=seed, shrink_budget=shrink_budget)
    x = mn.x
    one = parent.one()
    sum_entries = (x * (one - x),) + mn.tail

    su = compute_splitting(mn.u_final)
    sv = compute_splitting(mn.v_final)
    c0, cs = su.entries[0], su.entries[1:]
    d0, ds = sv.entries[0], sv.entries[1:]
    s_cross = parent.zero()
    for a_i, d_i in zip(mn.tail, ds):
        s_cross = s_cross + a_i * d_i
    witness = [c0 * d0]
    for c_i, d_i in zip(cs, ds):
        witness.append(x * c0 * d_i + (one - x) * d0 * c_i + c_i * s_cross)
    row, split = row_from_witness(parent, sum_entries, witness)
    return VdkSum(row, split, mn.word_u, mn.word_v, x, mn.tail)
