"""Symbolic verification of the pivot-localization machinery at desk scale.

For a permutation w whose essential set has a positive-rank cell, there is a
distinguished pivot entry c = x[i0, w(i0)], where i0 is the smallest row such
that some positive-rank essential cell lies strictly southeast of (i0, w(i0)).
This module verifies, by exact computation, the chain of facts that make the
pivot useful:

* the window fact: every cell northwest of the pivot is a rank-0 diagram
  cell, and the pivot is the only nonzero entry of w in its window;
* minor membership: any minor of the full generic matrix whose leading
  (antidiagonal) term is divisible by c lies in <c> + J_w, J_w the
  antidiagonal ideal;
* the initial-ideal identity in(<c> + I_w) = <c> + J_w, checked by Buchberger;
* c is a nonzerodivisor on the quotient by J_w;
* the localization identity: inverting c identifies the extended ideal of
  I_w with the ideal I' built from the smaller permutation w' (w with the
  pivot's row and column deleted) after the change of variables
  x'[p,q] = x[p,q] - c^{-1} x[p,q0] x[p0,q], together with the variables in
  the pivot's row/column that precede it.  Membership in the localized ideal
  is decided through saturation at c, so the identity becomes two normal-form
  passes against saturation Groebner bases.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .perm import (Cell, PartialPermutation, all_permutations, coxeter_length,
                   delete_row_col, diagram, essential_set, render_one_line)
from .poly import (IdealPresentation, Polynomial, PolyRing, buchberger, minor,
                   antidiagonal_monomial, monomial_divides, normal_form, saturate,
                   transplant)
from .detideal import (MonomialIdeal, antidiagonal_ideal, fulton_generators,
                       is_nonzerodivisor_on_monomial_quotient,
                       monomial_quotient_membership)


def find_pivot(w: PartialPermutation) -> Optional[Cell]:
    """The pivot cell (i0, w(i0)) for the smallest i0 with a positive-rank
    essential cell strictly southeast of it; None iff every essential cell
    has rank 0 (the coordinate ring is then a polynomial ring).

    >>> find_pivot(PartialPermutation.from_one_line("35142"))
    Cell(p=1, q=3)
    """
    positive = [cell for cell, r in essential_set(w) if r > 0]
    if not positive:
        return None
    for i0 in range(1, w.size + 1):
        q0 = w(i0)
        if any(cell.p > i0 and cell.q > q0 for cell in positive):
            return Cell(i0, q0)
    raise AssertionError("unreachable: a positive essential cell admits a pivot")


def verify_pivot_window(w: PartialPermutation, pivot: Optional[Cell] = None) -> bool:
    """The window fact at the pivot: every cell strictly northwest-or-beside
    the pivot belongs to the diagram, every diagram cell in rows <= i0 has
    rank 0, and the pivot is the only nonzero entry of the upper-left
    i0 x w(i0) window of w."""
    if pivot is None:
        pivot = find_pivot(w)
        if pivot is None:
            raise ValueError("no pivot: every essential cell has rank 0")
    p0, q0 = pivot
    d = diagram(w)
    for p in range(1, p0 + 1):
        for q in range(1, q0 + 1):
            if (p, q) != (p0, q0) and Cell(p, q) not in d.ranks:
                return False
    for cell, rank in d.ranks.items():
        if cell.p <= p0 and rank != 0:
            return False
    for i in range(1, p0 + 1):
        j = w(i)
        if j is not None and j <= q0 and (i, j) != (p0, q0):
            return False
    return True


def _all_minor_sites(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for t in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), t):
            for cols in itertools.combinations(range(1, n + 1), t):
                yield rows, cols


@dataclass(frozen=True)
class MinorMembershipReport:
    ok: bool
    checked: int
    failures: tuple  # (rows, cols) of minors outside <c> + J_w


def verify_pivot_minors(w: PartialPermutation,
                        ring: Optional[PolyRing] = None) -> MinorMembershipReport:
    """Every minor of the full generic matrix whose antidiagonal term is
    divisible by the pivot variable must lie in the monomial ideal
    <c> + J_w.  Exhaustive over all minors, so intended for n <= 5."""
    pivot = find_pivot(w)
    if pivot is None:
        raise ValueError("no pivot: every essential cell has rank 0")
    if ring is None:
        ring = PolyRing(w.rows, w.cols)
    c_mono = ring.monomial({pivot: 1})
    gens = (c_mono,) + antidiagonal_ideal(w, ring).gens
    checked = 0
    failures = []
    for rows, cols in _all_minor_sites(w.size):
        if not monomial_divides(c_mono, antidiagonal_monomial(ring, rows, cols)):
            continue
        checked += 1
        if not monomial_quotient_membership(minor(ring, rows, cols), gens):
            failures.append((rows, cols))
    return MinorMembershipReport(not failures, checked, tuple(failures))


@dataclass(frozen=True)
class InitialIdealReport:
    ok: bool
    contains_expected: bool  # in(<c> + I_w) >= <c> + J_w, the easy containment
    lead: MonomialIdeal
    expected: MonomialIdeal


def verify_pivot_initial_ideal(w: PartialPermutation,
                               ring: Optional[PolyRing] = None) -> InitialIdealReport:
    """Check in(<c> + I_w) = <c> + J_w by running Buchberger on the pivot
    variable together with the Fulton generators."""
    pivot = find_pivot(w)
    if pivot is None:
        raise ValueError("no pivot: every essential cell has rank 0")
    schubert = fulton_generators(w, ring)
    ring = schubert.ring
    c_poly = ring.variable(*pivot)
    basis = buchberger((c_poly,) + schubert.generators)
    lead = MonomialIdeal.from_monomials(ring, (g.leading_monomial() for g in basis))
    expected = MonomialIdeal.from_monomials(
        ring, (ring.monomial({pivot: 1}),) + antidiagonal_ideal(w, ring).gens)
    contains = all(lead.contains_monomial(m) for m in expected.gens)
    return InitialIdealReport(lead.gens == expected.gens, contains, lead, expected)


def verify_pivot_nonzerodivisor(w: PartialPermutation) -> bool:
    """The pivot variable is a nonzerodivisor on the quotient by J_w."""
    pivot = find_pivot(w)
    if pivot is None:
        raise ValueError("no pivot: every essential cell has rank 0")
    J = antidiagonal_ideal(w)
    return is_nonzerodivisor_on_monomial_quotient(J.ring.monomial({pivot: 1}), J)


# ---------------------------------------------------------------------------
# The localization setup and the identity I = I'
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalizationSetup:
    """Data of the change of variables at the pivot.

    ``w_prime`` is w with the pivot's row and column deleted;
    ``row_labels``/``col_labels`` send its contiguous indices back to the
    original grid.  ``cleared_generators`` are the Fulton generators of w'
    rewritten in the original variables through
    x'[p,q] = x[p,q] - c^{-1} x[p,q0] x[p0,q] and cleared of denominators by
    pivot powers (with any overall pivot factor removed);
    ``generator_sites`` records each one's origin as (rows, cols) in original
    labels, so size-1 sites are the primed variables.  ``gamma`` is the
    pivot's row and column; ``gamma_generators`` are the variables there that
    precede the pivot."""

    w: PartialPermutation
    c_cell: Cell
    w_prime: PartialPermutation
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    gamma: tuple[Cell, ...]
    gamma_generators: tuple
    cleared_generators: tuple
    generator_sites: tuple
    ring: PolyRing


def _clear_pivot_substitution(f: Polynomial, ring: PolyRing, p0: int, q0: int) -> Polynomial:
    """Apply x[p,q] -> x[p,q] - c^{-1} x[p,q0] x[p0,q] to every variable of a
    homogeneous ``f`` (none of which may sit in the pivot's row or column) and
    clear denominators by c^deg(f); then strip any overall pivot factor."""
    c = ring.variable(p0, q0)
    degree = f.total_degree()
    total = ring.zero()
    for m, coeff in f.terms():
        term = ring.const(coeff)
        used = 0
        for i, j, e in ring.grid_support(m):
            if i == p0 or j == q0:
                raise ValueError("substitution applies only off the pivot row/column")
            factor = c * ring.variable(i, j) - ring.variable(i, q0) * ring.variable(p0, j)
            for _ in range(e):
                term = term * factor
                used += 1
        if used < degree:
            term = term.mul_term(ring.monomial({(p0, q0): degree - used}))
        total = total + term
    c_pos = ring.monomial({(p0, q0): 1}).index(1)
    excess = min(m[c_pos] for m in total.monomials())
    if excess:
        total = Polynomial(ring, {
            tuple(e - excess if k == c_pos else e for k, e in enumerate(m)): co
            for m, co in total._d.items()})
    return total


def build_localization(w: PartialPermutation, ring: Optional[PolyRing] = None) -> LocalizationSetup:
    """Construct the deleted permutation w', the label maps, and the cleared
    generators of the localized ideal I'."""
    pivot = find_pivot(w)
    if pivot is None:
        raise ValueError("no pivot: the defining ideal is generated by variables")
    p0, q0 = pivot
    n = w.size
    if ring is None:
        ring = PolyRing(n, n)
    w_prime = delete_row_col(w, p0, q0)
    row_labels = tuple(i for i in range(1, n + 1) if i != p0)
    col_labels = tuple(j for j in range(1, n + 1) if j != q0)
    cell_map = {(i, j): (row_labels[i - 1], col_labels[j - 1])
                for i in range(1, n) for j in range(1, n)}
    schubert_prime = fulton_generators(w_prime)
    cleared = []
    sites = []
    for g, site in zip(schubert_prime.generators, schubert_prime.sites):
        primed = transplant(g, ring, cell_map)
        cleared_poly = _clear_pivot_substitution(primed, ring, p0, q0)
        if cleared_poly.total_degree() > 2 * g.total_degree():
            raise AssertionError("cleared generator exceeds twice the original degree")
        cleared.append(cleared_poly)
        sites.append((tuple(row_labels[i - 1] for i in site.rows),
                      tuple(col_labels[j - 1] for j in site.cols)))
    gamma = tuple(sorted(
        {Cell(p0, q) for q in range(1, n + 1)} | {Cell(p, q0) for p in range(1, n + 1)}))
    gamma_generators = tuple(ring.variable(*cell) for cell in gamma
                             if cell.p < p0 or cell.q < q0)
    return LocalizationSetup(
        w=w, c_cell=pivot, w_prime=w_prime, row_labels=row_labels,
        col_labels=col_labels, gamma=gamma, gamma_generators=gamma_generators,
        cleared_generators=tuple(cleared), generator_sites=tuple(sites), ring=ring)


@dataclass(frozen=True)
class LocalizationReport:
    ok: bool
    proper: bool  # 1 does not reduce to 0: the localized ring is nonzero
    forward_failures: tuple   # Fulton generators of I_w not in the saturation of I'
    backward_failures: tuple  # I' generators not in the saturation of I_w
    setup: LocalizationSetup


def verify_localization_identity(w: PartialPermutation,
                                 setup: Optional[LocalizationSetup] = None) -> LocalizationReport:
    """Verify that inverting the pivot identifies the extended ideal of I_w
    with I': both generator families reduce to zero against the other side's
    saturation Groebner basis."""
    if setup is None:
        setup = build_localization(w)
    ring = setup.ring
    c = ring.variable(*setup.c_cell)
    fulton = fulton_generators(w, ring)
    sat_w = saturate(IdealPresentation(ring, fulton.generators), c).generators
    prime_gens = setup.cleared_generators + setup.gamma_generators
    sat_prime = saturate(IdealPresentation(ring, prime_gens), c).generators
    forward = tuple(g for g in fulton.generators
                    if not normal_form(g, sat_prime).is_zero)
    backward = tuple(g for g in prime_gens if not normal_form(g, sat_w).is_zero)
    proper = not normal_form(ring.one(), sat_w).is_zero
    return LocalizationReport(ok=not forward and not backward, proper=proper,
                              forward_failures=forward, backward_failures=backward,
                              setup=setup)


# ---------------------------------------------------------------------------
# Whole-permutation verification and the documented sample
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationSummary:
    """All pivot verifications for one permutation; ``skipped`` is True when
    there is no pivot (defining ideal generated by variables)."""

    w: PartialPermutation
    pivot: Optional[Cell]
    skipped: bool
    window: Optional[bool] = None
    minors_ok: Optional[bool] = None
    initial_ideal_ok: Optional[bool] = None
    nonzerodivisor_ok: Optional[bool] = None
    localization_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        if self.skipped:
            return True
        return bool(self.window and self.minors_ok and self.initial_ideal_ok
                    and self.nonzerodivisor_ok and self.localization_ok)

    def to_json(self) -> dict:
        return {
            "w": render_one_line(self.w),
            "c": list(self.pivot) if self.pivot is not None else None,
            "lemma1": self.minors_ok,
            "lemma2": self.initial_ideal_ok,
            "lemma3_nzd": self.nonzerodivisor_ok,
            "I_eq_Iprime": self.localization_ok,
            "skipped": self.skipped,
        }


def verify_all(w: PartialPermutation) -> VerificationSummary:
    """Run every pivot verification on ``w`` (skipping when no pivot exists)."""
    pivot = find_pivot(w)
    if pivot is None:
        return VerificationSummary(w=w, pivot=None, skipped=True)
    return VerificationSummary(
        w=w, pivot=pivot, skipped=False,
        window=verify_pivot_window(w, pivot),
        minors_ok=verify_pivot_minors(w).ok,
        initial_ideal_ok=verify_pivot_initial_ideal(w).ok,
        nonzerodivisor_ok=verify_pivot_nonzerodivisor(w),
        localization_ok=verify_localization_identity(w).ok,
    )


def localization_sample(n: int = 5, max_length: int = 6) -> tuple:
    """The documented localization sample: every w in S_n admitting a pivot
    whose Coxeter length is at most ``max_length`` (for n = 5 this includes
    35142).  Deterministic lexicographic order."""
    sample = []
    for w in all_permutations(n):
        if coxeter_length(w) <= max_length and find_pivot(w) is not None:
            sample.append(w)
    return tuple(sample)
