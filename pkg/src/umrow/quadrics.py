"""Coordinate rings of the affine quadrics, their distinguished points, and
the explicit morphisms between them.

The odd quadric of dimension 2n+1 is cut out by sum(x_i y_i) = 1 in 2n+2
variables; the even quadric of dimension 2n by sum(x_i y_i) = z(1-z).  All
morphisms X -> Y are stored as algebra maps k[Y] -> k[X] and every claimed
identity is verified as an exact polynomial identity at construction time.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Algebra, AlgebraElement, RingHom, adjoin_unit_variable, hom_compose
from .errors import (
    CertificateAssemblyFailed,
    CharacteristicTwoUnsupported,
    HeightMismatch,
    InvalidUnit,
    ShapeError,
)
from .fields import FieldConfig
from .groebner import Ideal, groebner_basis, ideal_equal, krull_dimension
from .macros import add_move, congruent_unit_scale, macro_expand, whitehead_mod_coordinate
from .rows import (
    ElementaryWord,
    OrbitCertificate,
    SplittingRow,
    UnimodularRow,
    apply_word_entries,
    compute_splitting,
    row_from_witness,
    vdk_add,
    verify_certificate,
)

# -- coordinate rings ---------------------------------------------------------


@dataclass(frozen=True)
class OddQuadric:
    """k[Q_{2n+1}] with variables x1..x{n+1}, y1..y{n+1}."""

    n: int
    algebra: Algebra

    def x(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"x{i}")

    def y(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"y{i}")

    def base_point(self):
        """(0, ..., 0, 1, 0, ..., 0, 1): last x and last y equal 1."""
        field = self.algebra.field
        zero, one = field.scalar(0), field.scalar(1)
        coords = [zero] * (self.n + 1) + [zero] * (self.n + 1)
        coords[self.n] = one
        coords[2 * self.n + 1] = one
        return tuple(coords)


@dataclass(frozen=True)
class EvenQuadric:
    """k[Q_{2n}] with variables x1..xn, y1..yn, z."""

    n: int
    algebra: Algebra

    def x(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"x{i}")

    def y(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"y{i}")

    def z(self) -> AlgebraElement:
        return self.algebra.var("z")

    def base_point(self):
        field = self.algebra.field
        return tuple([field.scalar(0)] * (2 * self.n + 1))


@lru_cache(maxsize=None)
def build_q_odd(n: int, field: FieldConfig) -> OddQuadric:
    if n < 0:
        raise ShapeError("odd quadrics need n >= 0")
    names = [f"x{i}" for i in range(1, n + 2)] + [f"y{i}" for i in range(1, n + 2)]
    ring_terms = " + ".join(f"x{i}*y{i}" for i in range(1, n + 2))
    return OddQuadric(n, Algebra(field, names, [f"{ring_terms} - 1"]))


@lru_cache(maxsize=None)
def build_q_even(n: int, field: FieldConfig) -> EvenQuadric:
    if n < 1:
        raise ShapeError("even quadrics need n >= 1")
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)] + ["z"]
    ring_terms = " + ".join(f"x{i}*y{i}" for i in range(1, n + 1))
    return EvenQuadric(n, Algebra(field, names, [f"{ring_terms} - z + z^2"]))


@dataclass(frozen=True)
class GmQuadric:
    """k[Gm x Q_{2n}]: the even quadric ring with an adjoined unit t."""

    n: int
    algebra: Algebra

    def x(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"x{i}")

    def y(self, i: int) -> AlgebraElement:
        return self.algebra.var(f"y{i}")

    def z(self) -> AlgebraElement:
        return self.algebra.var("z")

    def t(self) -> AlgebraElement:
        return self.algebra.var("t")

    def t_inv(self) -> AlgebraElement:
        return self.algebra.var("t_inv")


@lru_cache(maxsize=None)
def gm_quadric(n: int, field: FieldConfig) -> GmQuadric:
    even = build_q_even(n, field)
    return GmQuadric(n, adjoin_unit_variable(even.algebra, "t"))


@lru_cache(maxsize=None)
def scalar_algebra(field: FieldConfig) -> Algebra:
    """The base field presented as an algebra with no variables."""
    return Algebra(field, (), ())


@lru_cache(maxsize=None)
def gm_algebra(field: FieldConfig) -> Algebra:
    """k[Gm] = k[t, t_inv] / (t*t_inv - 1)."""
    return adjoin_unit_variable(scalar_algebra(field), "t")


# -- points -------------------------------------------------------------------


@dataclass(frozen=True)
class QuadricOddPoint:
    """An A-point of an odd quadric: rows x, y with sum(x_i y_i) = 1."""

    parent: Algebra
    x: tuple
    y: tuple

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ShapeError("x and y have different lengths")
        total = self.parent.zero()
        for a, b in zip(self.x, self.y):
            total = total + a * b
        if total != self.parent.one():
            raise ShapeError("point violates the odd quadric relation")


@dataclass(frozen=True)
class QuadricEvenPoint:
    """An A-point of an even quadric: sum(x_i y_i) = z(1-z)."""

    parent: Algebra
    x: tuple
    y: tuple
    z: AlgebraElement

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ShapeError("x and y have different lengths")
        total = self.parent.zero()
        for a, b in zip(self.x, self.y):
            total = total + a * b
        if total != self.z * (self.parent.one() - self.z):
            raise ShapeError("point violates the even quadric relation")


def jouanolou_lift(row: UnimodularRow) -> QuadricOddPoint:
    """Lift a unimodular row of length n to a point of the quadric of
    dimension 2n-1, pairing it with its computed splitting.  Projection to
    the first n coordinates recovers the row."""
    splitting = compute_splitting(row)
    return QuadricOddPoint(row.parent, tuple(row.entries), tuple(splitting.entries))


def segre_point(row: UnimodularRow, splitting: SplittingRow) -> QuadricEvenPoint:
    """The even-quadric point attached to a unimodular row of length n+1.

    With entries a and splitting b, the point is
    x = (a_1, ..., a_{n-1}, a_n a_{n+1}),
    y = (b_1 a_{n+1} b_{n+1}, ..., b_{n-1} a_{n+1} b_{n+1}, b_n b_{n+1}),
    z = sum(a_i b_i, i <= n);
    the construction also checks <a_1, ..., a_n> = <x_1, ..., x_n, z>.
    """
    if splitting.row is not row and splitting.row.entries != row.entries:
        raise ShapeError("splitting does not belong to the given row")
    parent = row.parent
    a = row.entries
    b = splitting.entries
    n = len(a) - 1
    if n < 1:
        raise ShapeError("need a row of length at least 2")
    xs = list(a[: n - 1]) + [a[n - 1] * a[n]]
    last = a[n] * b[n]
    ys = [b[i] * last for i in range(n - 1)] + [b[n - 1] * b[n]]
    z = parent.zero()
    for i in range(n):
        z = z + a[i] * b[i]
    point = QuadricEvenPoint(parent, tuple(xs), tuple(ys), z)
    lhs = parent.ideal_with(a[:n])
    rhs = parent.ideal_with(list(xs) + [z])
    if not ideal_equal(lhs, rhs):
        raise ShapeError("the point's vanishing ideal differs from <a_1..a_n>")
    return point


# -- the explicit morphisms ----------------------------------------------------


@lru_cache(maxsize=None)
def eta_hom(n: int, field: FieldConfig) -> RingHom:
    """The comparison map from the odd quadric of dimension 2n+1 to the even
    quadric of dimension 2n, as the algebra map k[Q_{2n}] -> k[Q_{2n+1}]:

    x_i -> x_i (i < n),  x_n -> x_n x_{n+1},
    y_i -> y_i x_{n+1} y_{n+1} (i < n),  y_n -> y_n y_{n+1},
    z -> x_1 y_1 + ... + x_n y_n.
    """
    if n < 2:
        raise ShapeError("eta needs n >= 2")
    odd = build_q_odd(n, field)
    even = build_q_even(n, field)
    unit_factor = odd.x(n + 1) * odd.y(n + 1)
    images = []
    for i in range(1, n):
        images.append(odd.x(i))
    images.append(odd.x(n) * odd.x(n + 1))
    for i in range(1, n):
        images.append(odd.y(i) * unit_factor)
    images.append(odd.y(n) * odd.y(n + 1))
    z = odd.algebra.zero()
    for i in range(1, n + 1):
        z = z + odd.x(i) * odd.y(i)
    images.append(z)
    return RingHom(even.algebra, odd.algebra, images)


def a_of(point_z: AlgebraElement, unit: AlgebraElement) -> AlgebraElement:
    """a(mu, z) = (1 - z) + mu z."""
    one = point_z.parent.one()
    return (one - point_z) + unit * point_z


def b_of(t: AlgebraElement, t_inv: AlgebraElement) -> AlgebraElement:
    """b(lambda) = 2 - lambda - lambda^{-1}."""
    return t.parent.element(2) - t - t_inv


@lru_cache(maxsize=None)
def mu_hom(n: int, field: FieldConfig) -> RingHom:
    """The map Gm x Q_{2n} -> Q_{2n+1}, stored as
    k[Q_{2n+1}] -> k[Gm x Q_{2n}]:

    x_i -> x_i,  x_{n+1} -> a(t, z) = 1 - z + t z,
    y_i -> b(t) y_i,  y_{n+1} -> a(t^{-1}, z),
    where b(t) = 2 - t - t^{-1}; the splitting identity
    a(t,z) a(t^{-1},z) = 1 - b(t) sum(x_i y_i) makes the images a point of
    the odd quadric.
    """
    if n < 1:
        raise ShapeError("mu needs n >= 1")
    odd = build_q_odd(n, field)
    gm = gm_quadric(n, field)
    b = b_of(gm.t(), gm.t_inv())
    images = [gm.x(i) for i in range(1, n + 1)]
    images.append(a_of(gm.z(), gm.t()))
    images.extend(b * gm.y(i) for i in range(1, n + 1))
    images.append(a_of(gm.z(), gm.t_inv()))
    return RingHom(odd.algebra, gm.algebra, images)


@lru_cache(maxsize=None)
def e_endo(n: int, field: FieldConfig) -> RingHom:
    """The elementary endomorphism of the odd quadric fixing the base point:

    (x_1, ..., x_n, z, y_1, ..., y_n, v)
      -> (x_1(1-z), ..., x_n(1-z), z, y_1, ..., y_n, v + 1 - z v)

    in the coordinate naming with z = x_{n+1}, v = y_{n+1}.
    """
    if n < 1:
        raise ShapeError("the endomorphism needs n >= 1")
    odd = build_q_odd(n, field)
    one = odd.algebra.one()
    z = odd.x(n + 1)
    v = odd.y(n + 1)
    images = [odd.x(i) * (one - z) for i in range(1, n + 1)]
    images.append(z)
    images.extend(odd.y(i) for i in range(1, n + 1))
    images.append(v + one - z * v)
    return RingHom(odd.algebra, odd.algebra, images)


@lru_cache(maxsize=None)
def mu_prime_hom(n: int, field: FieldConfig) -> RingHom:
    """The base-point-preserving modification of mu: the composite of mu with
    the elementary endomorphism."""
    return hom_compose(mu_hom(n, field), e_endo(n, field))


@lru_cache(maxsize=None)
def mu_prime_explicit(n: int, field: FieldConfig) -> RingHom:
    """The closed-form images of the modified map, built directly:

    (lambda, (x, y, z)) -> (x_1 z (1-lambda), ..., x_n z (1-lambda),
    a(lambda, z), b(lambda) y_1, ..., b(lambda) y_n,
    a(lambda^{-1}, z) z (1-lambda) + 1).
    """
    odd = build_q_odd(n, field)
    gm = gm_quadric(n, field)
    one = gm.algebra.one()
    z = gm.z()
    shear = z * (one - gm.t())
    b = b_of(gm.t(), gm.t_inv())
    images = [gm.x(i) * shear for i in range(1, n + 1)]
    images.append(a_of(z, gm.t()))
    images.extend(b * gm.y(i) for i in range(1, n + 1))
    images.append(a_of(z, gm.t_inv()) * shear + one)
    return RingHom(odd.algebra, gm.algebra, images)


def gm_point_eval(n: int, field: FieldConfig, value: int) -> RingHom:
    """Evaluation k[Gm x Q_{2n}] -> k[Q_{2n}] at a fixed unit lambda."""
    gm = gm_quadric(n, field)
    even = build_q_even(n, field)
    lam = field.scalar(value)
    if lam.is_zero():
        raise InvalidUnit("lambda must be a unit")
    images = [even.algebra.var(v) for v in even.algebra.variables]
    images.append(even.algebra.element(lam))
    images.append(even.algebra.element(lam.inverse()))
    return RingHom(gm.algebra, even.algebra, images)


def mu_at_unit(n: int, field: FieldConfig, value: int) -> RingHom:
    """mu specialized at a scalar unit lambda: a map k[Q_{2n+1}] -> k[Q_{2n}]."""
    return hom_compose(gm_point_eval(n, field, value), mu_hom(n, field))


def mu_minus_one(n: int, field: FieldConfig) -> RingHom:
    """mu at lambda = -1; sends (a, b, s) to (a, 1-2s, 4b, 1-2s)."""
    return mu_at_unit(n, field, -1)


def basepoint_section(n: int, field: FieldConfig) -> RingHom:
    """k[Gm x Q_{2n}] -> k[Gm]: the even-quadric coordinates go to the base
    point while lambda stays symbolic."""
    gm = gm_quadric(n, field)
    target = gm_algebra(field)
    zero = target.zero()
    images = [zero] * (2 * n + 1)
    images.append(target.var("t"))
    images.append(target.var("t_inv"))
    return RingHom(gm.algebra, target, images)


def mu_prime_basepoint_check(n: int, field: FieldConfig) -> bool:
    """True when the modified map carries (lambda, base point) to the odd
    quadric's base point for symbolic lambda."""
    odd = build_q_odd(n, field)
    section = basepoint_section(n, field)
    composite = hom_compose(section, mu_prime_hom(n, field))
    target = section.target
    expected = [target.element(c) for c in odd.base_point()]
    return list(composite.images) == expected


@lru_cache(maxsize=None)
def degree_action(alpha_raw, n: int, field: FieldConfig) -> RingHom:
    """The degree-scaling endomorphism of the odd quadric:

    (x_1, ..., x_n, x_{n+1}, y_1, ..., y_n, y_{n+1})
      -> (a x_1, ..., a x_n, x_{n+1}, a^{-1} y_1, ..., a^{-1} y_n, y_{n+1}).
    """
    alpha = field.scalar(alpha_raw)
    if alpha.is_zero():
        raise InvalidUnit("the scaling factor must be a nonzero scalar")
    odd = build_q_odd(n, field)
    a = odd.algebra.element(alpha)
    a_inv = odd.algebra.element(alpha.inverse())
    images = [a * odd.x(i) for i in range(1, n + 1)]
    images.append(odd.x(n + 1))
    images.extend(a_inv * odd.y(i) for i in range(1, n + 1))
    images.append(odd.y(n + 1))
    return RingHom(odd.algebra, odd.algebra, images)


# -- Euler-class level maps ------------------------------------------------------


def delta_map(point: QuadricEvenPoint):
    """From an even-quadric point (a, b, s) to the unimodular row
    (2a_1, ..., 2a_d, 1-2s) with explicit splitting (2b_1, ..., 2b_d, 1-2s);
    the identity (1-2s)^2 = 1 - sum((2a_i)(2b_i)) makes the splitting exact.
    Requires characteristic different from 2."""
    parent = point.parent
    if parent.field.characteristic == 2:
        raise CharacteristicTwoUnsupported("delta needs 2 to be invertible")
    two = parent.element(2)
    one = parent.one()
    head = one - two * point.z
    entries = [two * a for a in point.x] + [head]
    witness = [two * b for b in point.y] + [head]
    return row_from_witness(parent, entries, witness)


@dataclass(frozen=True)
class OrientedIdeal:
    """An ideal together with an orientation lift: the classes of the stored
    lift present the conormal module I/I^2, i.e. the lift generates I
    modulo I^2 (verified at construction)."""

    parent: Algebra
    lift: tuple
    generators: tuple
    height_checked: bool = False

    def __post_init__(self):
        gens = self.generators
        square = [g * h for gi, g in enumerate(gens) for h in gens[gi:]]
        ambient = self.parent.ideal_with(list(self.lift) + square)
        gb = groebner_basis(ambient)
        for g in gens:
            if not gb.contains(g.rep):
                raise ShapeError("orientation lift does not generate I modulo I^2")

    @property
    def ideal(self) -> Ideal:
        return self.parent.ideal_with(self.generators)


def phi_map(row: UnimodularRow, check_height: bool = False):
    """From a unimodular row (a_1, ..., a_d, a_{d+1}) to the oriented ideal
    (J_0, class of a_{d+1} times the standard orientation) together with the
    even-quadric point realizing it.

    J_0 = <a_1, ..., a_d> carries the orientation lift
    (a_1, ..., a_{d-1}, a_d a_{d+1}); the point comes from ``segre_point``
    and its vanishing ideal <x_1, ..., x_d, z> is checked to equal J_0.
    The height check compares Krull dimensions and is advisory.
    """
    parent = row.parent
    d = len(row.entries) - 1
    if d < 1:
        raise ShapeError("need a row of length at least 2")
    splitting = compute_splitting(row)
    a = row.entries
    lift = tuple(list(a[: d - 1]) + [a[d - 1] * a[d]])
    j0 = parent.ideal_with(a[:d])
    point = segre_point(row, splitting)
    point_ideal = parent.ideal_with(list(point.x) + [point.z])
    if not ideal_equal(point_ideal, j0):
        raise ShapeError("the point's ideal differs from J_0")
    height_checked = False
    if check_height:
        ambient_dim = parent.dimension
        try:
            quotient_dim = krull_dimension(j0)
        except Exception as exc:
            raise HeightMismatch(f"could not evaluate the height of J_0: {exc}") from exc
        if ambient_dim - quotient_dim != d:
            raise HeightMismatch(
                f"J_0 has height {ambient_dim - quotient_dim}, expected {d}"
            )
        height_checked = True
    oriented = OrientedIdeal(parent, lift, tuple(a[:d]), height_checked)
    return oriented, point


# -- the universal double-row ring and the fold model ----------------------------


@dataclass(frozen=True)
class VTildeRing:
    """The universal ring carrying two split unimodular rows of length n
    whose combined tail is split as well:

    x1 y1 + x' y'^T = 1,   u1 v1 + u' v'^T = 1,   x' r'^T + u' s'^T = 1.
    """

    n: int
    algebra: Algebra

    def x_row(self) -> UnimodularRow:
        row, _ = row_from_witness(
            self.algebra,
            [self.algebra.var(f"x{i}") for i in range(1, self.n + 1)],
            [self.algebra.var(f"y{i}") for i in range(1, self.n + 1)],
        )
        return row

    def u_row(self) -> UnimodularRow:
        row, _ = row_from_witness(
            self.algebra,
            [self.algebra.var(f"u{i}") for i in range(1, self.n + 1)],
            [self.algebra.var(f"v{i}") for i in range(1, self.n + 1)],
        )
        return row

    def tail_row(self) -> UnimodularRow:
        names = [f"x{i}" for i in range(2, self.n + 1)] + [f"u{i}" for i in range(2, self.n + 1)]
        wits = [f"r{i}" for i in range(2, self.n + 1)] + [f"s{i}" for i in range(2, self.n + 1)]
        row, _ = row_from_witness(
            self.algebra,
            [self.algebra.var(v) for v in names],
            [self.algebra.var(w) for w in wits],
        )
        return row

    def basepoint_row(self) -> UnimodularRow:
        entries = [self.algebra.zero()] * (self.n - 1) + [self.algebra.one()]
        witness = list(entries)
        row, _ = row_from_witness(self.algebra, entries, witness)
        return row


@lru_cache(maxsize=None)
def vtilde_ring(n: int, field: FieldConfig) -> VTildeRing:
    if n < 2:
        raise ShapeError("the universal double-row ring needs n >= 2")
    names = (
        [f"x{i}" for i in range(1, n + 1)]
        + [f"y{i}" for i in range(1, n + 1)]
        + [f"u{i}" for i in range(1, n + 1)]
        + [f"v{i}" for i in range(1, n + 1)]
        + [f"r{i}" for i in range(2, n + 1)]
        + [f"s{i}" for i in range(2, n + 1)]
    )
    rel1 = " + ".join(f"x{i}*y{i}" for i in range(1, n + 1)) + " - 1"
    rel2 = " + ".join(f"u{i}*v{i}" for i in range(1, n + 1)) + " - 1"
    rel3 = (
        " + ".join(f"x{i}*r{i}" for i in range(2, n + 1))
        + " + "
        + " + ".join(f"u{i}*s{i}" for i in range(2, n + 1))
        + " - 1"
    )
    return VTildeRing(n, Algebra(field, names, [rel1, rel2, rel3]))


@dataclass(frozen=True)
class FoldModel:
    """The fold-model row over the universal ring.

    ``row`` is (x1(1-x1), ..., x_{n-1}(1-x1), xn + (1-xn) x1); ``witness``
    certifies the length-2 row (xn + (1-xn) x1, 1 - x1) via the identity
    (1-x1)(1-xn) + xn + (1-xn) x1 = 1.
    """

    row: UnimodularRow
    splitting: SplittingRow
    witness: SplittingRow
    word_u: ElementaryWord
    word_v: ElementaryWord


@lru_cache(maxsize=None)
def fold_model_row(vt: VTildeRing) -> FoldModel:
    """Run the addition of the universal row with the base-point row; the
    outcome is pinned to its closed form."""
    alg = vt.algebra
    n = vt.n
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = vdk_add(vt.x_row(), vt.basepoint_row())
    one = alg.one()
    x1 = alg.var("x1")
    xn = alg.var(f"x{n}")
    expected = [alg.var(f"x{i}") * (one - x1) for i in range(1, n)]
    expected.append(xn + (one - xn) * x1)
    if list(result.row.entries) != expected:
        raise AssertionError("fold-model row differs from its closed form")
    pair_row, pair_split = row_from_witness(
        alg,
        [xn + (one - xn) * x1, one - x1],
        [one, one - xn],
    )
    return FoldModel(result.row, result.splitting, pair_split, result.word_u, result.word_v)


def fold_model_certificate(vt: VTildeRing) -> OrbitCertificate:
    """An explicit elementary word carrying the fold-model row back to
    (x1, ..., xn), assembled from the macro toolkit and verified by raw
    replay.  The assembly is only available for n >= 4."""
    n = vt.n
    if n < 4:
        raise CertificateAssemblyFailed("certificate assembly requires n >= 4")
    alg = vt.algebra
    one = alg.one()
    x = [alg.var(f"x{i}") for i in range(1, n + 1)]
    x1 = x[0]
    xn = x[n - 1]
    r = one - x1

    fold = fold_model_row(vt)
    current = fold.row
    word = ElementaryWord(n)

    def run_stage(name: str, macro):
        nonlocal current, word
        try:
            stage_word = macro_expand(macro, current)
        except Exception as exc:
            raise CertificateAssemblyFailed(f"stage {name!r} failed: {exc}") from exc
        word = word.concat(stage_word)
        current = UnimodularRow(
            alg, tuple(apply_word_entries(current.entries, stage_word)), True
        )

    # Undo the shared (1-x1) factor on the first two slots; the witness
    # (1-x1)(1-xn) = 1 - pivot makes 1-xn an inverse of 1-x1 modulo the pivot.
    run_stage(
        "whitehead",
        whitehead_mod_coordinate(0, 1, n - 1, unit=r, witness=one - xn, cofactor=-one),
    )
    # Slot 0 is now x1 (1 - pivot); one addition from the pivot restores x1.
    run_stage("pivot-cleanup", add_move(n - 1, 0, x1))
    if current.entries[0] != x1:
        raise CertificateAssemblyFailed("stage 'pivot-cleanup' left slot 0 wrong")
    # Slot 1 carries two factors of (1-x1); peel them one at a time through
    # slot 0, whose congruence certificate is 1 - x1 = 1 + (-1) x1.
    run_stage(
        "strip-slot-1-outer",
        congruent_unit_scale(1, {0: -one}, invert=True, base=x[1] * r),
    )
    run_stage(
        "strip-slot-1-inner",
        congruent_unit_scale(1, {0: -one}, invert=True, base=x[1]),
    )
    for idx in range(2, n - 1):
        run_stage(
            f"strip-slot-{idx}",
            congruent_unit_scale(idx, {0: -one}, invert=True, base=x[idx]),
        )
    # The pivot slot holds xn + (1-xn) x1; subtract x1 and strip the factor.
    run_stage("pivot-shift", add_move(0, n - 1, -one))
    run_stage(
        "pivot-strip",
        congruent_unit_scale(n - 1, {0: -one}, invert=True, base=xn),
    )

    target = UnimodularRow(alg, tuple(x), verified=True)
    if current.entries != target.entries:
        raise CertificateAssemblyFailed("assembled word does not reach (x1, ..., xn)")
    cert = OrbitCertificate(fold.row, target, word)
    if not verify_certificate(cert):
        raise CertificateAssemblyFailed("raw replay of the assembled word failed")
    return cert
