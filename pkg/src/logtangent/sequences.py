"""Pairs of homogeneous polynomials in four variables and their Jacobian data.

A sequence is a pair (f, g) of nonzero homogeneous polynomials in
x0..x3 with deg f = d_f + 1 <= deg g = d_g + 1 (the constructor swaps to
enforce this).  The associated Jacobian matrix maps R^4 to R(d_f)+R(d_g);
its kernel is the syzygy module whose sheaf is the logarithmic tangent
sheaf of the pair, its cokernel the torsion sheaf carrying the m-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .groebner import Submodule, module_gb_and_syzygies
from .hilbert import dimension_degree
from .linalg import matrix_rank
from .modules import FreeModule, Vector, apply_columns
from .poly import Polynomial, PolyRing

NVARS = 4


class DependentSequenceError(ValueError):
    """The two polynomials are algebraically dependent (all Jacobian minors vanish)."""


class NonNormalSequenceError(ValueError):
    """The Jacobian scheme has a divisor component, so the pair is not normal.

    Carries the degree of that codimension-one component for diagnosis.
    """

    def __init__(self, divisor_degree: int):
        super().__init__(
            "sequence is not normal: the Jacobian minors share a divisor "
            f"of degree {divisor_degree}"
        )
        self.divisor_degree = divisor_degree


@dataclass(frozen=True)
class Sequence:
    """Normalized pair (f, g) with deg f <= deg g."""

    f: Polynomial
    g: Polynomial

    def __post_init__(self):
        ring = self.f.ring
        if ring.nvars != NVARS:
            raise ValueError("sequences are defined in exactly four variables")
        if self.g.ring != ring:
            raise ValueError("f and g live in different rings")
        for p in (self.f, self.g):
            if p.is_zero() or not p.is_homogeneous():
                raise ValueError("sequence entries must be nonzero homogeneous")
            if p.degree < 1:
                raise ValueError("sequence entries must have positive degree")
        if self.f.degree > self.g.degree:
            low, high = self.g, self.f
            object.__setattr__(self, "f", low)
            object.__setattr__(self, "g", high)

    @classmethod
    def of(cls, f: Polynomial, g: Polynomial) -> "Sequence":
        if f.degree is not None and g.degree is not None and f.degree > g.degree:
            f, g = g, f
        return cls(f, g)

    @classmethod
    def parse(cls, ring: PolyRing, f_text: str, g_text: str) -> "Sequence":
        return cls.of(ring.parse(f_text), ring.parse(g_text))

    @property
    def ring(self) -> PolyRing:
        return self.f.ring

    @property
    def df(self) -> int:
        return self.f.degree - 1

    @property
    def dg(self) -> int:
        return self.g.degree - 1

    @property
    def d(self) -> int:
        return self.df + self.dg

    @property
    def m0(self) -> int:
        return self.df**2 + self.dg**2 + self.df * self.dg

    def gradient_rows(self) -> list[list[Polynomial]]:
        return [
            [self.f.partial(j) for j in range(NVARS)],
            [self.g.partial(j) for j in range(NVARS)],
        ]

    def jacobian_target(self) -> FreeModule:
        return FreeModule(self.ring, (-self.df, -self.dg))

    def jacobian_columns(self) -> list[Vector]:
        target = self.jacobian_target()
        return [
            Vector(target, (self.f.partial(j), self.g.partial(j)))
            for j in range(NVARS)
        ]

    def source_module(self) -> FreeModule:
        return FreeModule(self.ring, (0,) * NVARS)


def jacobian_minors(seq: Sequence) -> dict[tuple[int, int], Polynomial]:
    """The six 2x2 minors m[i,j] = df_i * dg_j - df_j * dg_i."""
    rows = seq.gradient_rows()
    out = {}
    for i, j in combinations(range(NVARS), 2):
        out[(i, j)] = rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]
    return out


def is_dependent(seq: Sequence) -> bool:
    return all(m.is_zero() for m in jacobian_minors(seq).values())


def canonical_syzygies(seq: Sequence) -> list[Vector]:
    """Four syzygies of degree d built from the 2x2 minors of the Jacobian.

    Vector i has a zero in slot i and signed minors elsewhere, arranged so
    that pairing with either gradient row is a 3x3 determinant with a
    repeated row.  For an independent pair at least one of the four is
    nonzero, which bounds the initial degree of the syzygy module by d.
    """
    if is_dependent(seq):
        raise DependentSequenceError("all Jacobian minors vanish")
    minors = jacobian_minors(seq)
    zero = seq.ring.zero()
    source = seq.source_module()

    def m(i, j):
        return minors[(i, j)]

    vectors = [
        Vector(source, (zero, m(2, 3), -m(1, 3), m(1, 2))),
        Vector(source, (m(2, 3), zero, -m(0, 3), m(0, 2))),
        Vector(source, (m(1, 3), -m(0, 3), zero, m(0, 1))),
        Vector(source, (m(1, 2), -m(0, 2), m(0, 1), zero)),
    ]
    columns = seq.jacobian_columns()
    for v in vectors:
        if not v.is_zero():
            image = apply_columns(columns, v.entries)
            assert image.is_zero(), "wedge syzygy failed to annihilate the Jacobian"
    assert any(not v.is_zero() for v in vectors)
    return vectors


def constant_kernel_dimension(seq: Sequence) -> int:
    """Dimension of {v in k^4 : (grad f) . v = (grad g) . v = 0}.

    Linear algebra on the coefficients; counts the trivial directions of the
    pair, independently of any Groebner computation.
    """
    field = seq.ring.field
    rows = []
    for grad in seq.gradient_rows():
        monomials = sorted({e for p in grad for e, _ in p.terms})
        for mono in monomials:
            rows.append([p.coefficient(mono) for p in grad])
    if not rows:
        return NVARS
    return NVARS - matrix_rank(rows, field)


@dataclass
class JacobianAnalysis:
    """Shared Groebner data of one sequence: image basis and kernel generators."""

    seq: Sequence
    target: FreeModule
    columns: list[Vector]
    image_gb: list[Vector]
    kernel: Submodule


def jacobian_analysis(seq: Sequence) -> JacobianAnalysis:
    if is_dependent(seq):
        raise DependentSequenceError("all Jacobian minors vanish")
    columns = seq.jacobian_columns()
    source = seq.source_module()
    image_gb, syz_module, syz = module_gb_and_syzygies(
        columns, degrees=source.twists
    )
    kernel = Submodule(source, [Vector(source, v.entries) for v in syz])
    return JacobianAnalysis(
        seq=seq,
        target=seq.jacobian_target(),
        columns=columns,
        image_gb=image_gb,
        kernel=kernel,
    )


def tangent_module(seq: Sequence) -> Submodule:
    """The syzygy module of the Jacobian matrix as a submodule of R^4."""
    return jacobian_analysis(seq).kernel


def check_normal(seq: Sequence) -> bool:
    """True when the Jacobian scheme has projective dimension at most one."""
    if is_dependent(seq):
        return False
    minors = [m for m in jacobian_minors(seq).values() if not m.is_zero()]
    dim, _ = dimension_degree(seq.ring, minors)
    return dim <= 1
