"""The known betweenness-uniform blow-up families, and the size-tuple
arithmetic showing no blow-up of the 4-vertex path can be uniform.

Families (all verifiable with ``is_betweenness_uniform``):

* two cliques of equal size joined completely (an edge blown up),
* a path of three independent sets with the middle as big as the two
  ends together,
* a star of independent sets whose center matches the leaf total.

The infeasibility check works on a tuple (a, b, c, d) of part sizes
for a blow-up of the 4-vertex path.  Uniformity would force two
betweenness inequalities whose sum simplifies to

    0 >= a*c*(c+d) + b*d*(a+b),

impossible for positive sizes.  Everything here is integer arithmetic;
the rational inequalities are compared after clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .blowup import BlowupSpec, PartDescriptor
from .graphs import generate

__all__ = [
    "P4InfeasibilityReport",
    "P4SizeTuple",
    "p2_clique_spec",
    "p3_independent_spec",
    "p4_infeasibility_check",
    "p4_mixed_spec",
    "star_spec",
]


def p2_clique_spec(m: int) -> BlowupSpec:
    """An edge blown up into two m-cliques; the result is K_{2m}."""
    if m < 1:
        raise ValueError("clique size must be positive")
    return BlowupSpec(
        base=generate("path", 2),
        parts=(PartDescriptor.clique(m), PartDescriptor.clique(m)),
    )


def p3_independent_spec(a: int, b: int) -> BlowupSpec:
    """Three independent sets I_a, I_{a+b}, I_b along a path."""
    if a < 1 or b < 1:
        raise ValueError("end sizes must be positive")
    return BlowupSpec(
        base=generate("path", 3),
        parts=(
            PartDescriptor.independent(a),
            PartDescriptor.independent(a + b),
            PartDescriptor.independent(b),
        ),
    )


def star_spec(sizes) -> BlowupSpec:
    """Independent sets I_{s_1}..I_{s_k} on the leaves of a star, with
    the center part of size sum(s_i).  The center is the last base
    vertex, matching the star generator."""
    sizes = tuple(int(s) for s in sizes)
    if not sizes:
        raise ValueError("need at least one leaf part")
    if any(s < 1 for s in sizes):
        raise ValueError("leaf sizes must be positive")
    parts = tuple(PartDescriptor.independent(s) for s in sizes) + (
        PartDescriptor.independent(sum(sizes)),
    )
    return BlowupSpec(base=generate("star", len(sizes)), parts=parts)


def p4_mixed_spec(a: int, b: int, c: int, d: int) -> BlowupSpec:
    """The natural uniformity candidate on the 4-path: K_a, I_b, I_c, K_d."""
    if min(a, b, c, d) < 1:
        raise ValueError("part sizes must be positive")
    return BlowupSpec(
        base=generate("path", 4),
        parts=(
            PartDescriptor.clique(a),
            PartDescriptor.independent(b),
            PartDescriptor.independent(c),
            PartDescriptor.clique(d),
        ),
    )


@dataclass(frozen=True)
class P4SizeTuple:
    """Part sizes (a, b, c, d) for a blow-up of the 4-vertex path."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 1:
            raise ValueError("all four sizes must be positive integers")


@dataclass(frozen=True)
class P4InfeasibilityReport:
    """Outcome of the two uniformity inequalities for one size tuple.

    ``ineq1_holds``: C(b,2)/(a+c) >= a(c+d)/b + C(c,2)/(b+d)
    ``ineq2_holds``: C(c,2)/(b+d) >= d(a+b)/c + C(b,2)/(a+c)
    ``combined_violated``: a*c*(c+d) + b*d*(a+b) > 0, the contradiction
    obtained by adding the two, so uniformity is impossible.
    """

    tuple: P4SizeTuple
    ineq1_holds: bool
    ineq2_holds: bool
    combined_violated: bool


def p4_infeasibility_check(t: P4SizeTuple) -> P4InfeasibilityReport:
    """Evaluate both uniformity inequalities exactly.

    Denominators are cleared against the positive quantities (a+c), b,
    (b+d), c so only integer comparisons remain.  The two inequalities
    can never hold together (their sum reads 0 >= positive), which is
    asserted on every call.
    """
    a, b, c, d = t.a, t.b, t.c, t.d
    # C(b,2)/(a+c) >= a(c+d)/b + C(c,2)/(b+d), times (a+c)*b*(b+d):
    ineq1 = comb(b, 2) * b * (b + d) >= (
        a * (c + d) * (a + c) * (b + d) + comb(c, 2) * b * (a + c)
    )
    # C(c,2)/(b+d) >= d(a+b)/c + C(b,2)/(a+c), times (b+d)*c*(a+c):
    ineq2 = comb(c, 2) * c * (a + c) >= (
        d * (a + b) * (b + d) * (a + c) + comb(b, 2) * c * (b + d)
    )
    combined = a * c * (c + d) + b * d * (a + b) > 0
    if ineq1 and ineq2:
        raise AssertionError(
            f"both uniformity inequalities held for {t}; they are mutually exclusive"
        )
    return P4InfeasibilityReport(
        tuple=t, ineq1_holds=ineq1, ineq2_holds=ineq2, combined_violated=combined
    )
