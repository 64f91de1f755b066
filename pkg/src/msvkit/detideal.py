"""Schubert determinantal ideals and their antidiagonal initial ideals.

For a (partial) permutation w, the defining ideal of its matrix Schubert
variety is generated by the minors of size r+1 in each upper-left p x q
corner, where r is the rank of w's own p x q corner and (p, q) runs over the
essential set (equivalently over the whole diagram).  These are the Fulton
generators.  Their antidiagonal terms generate the initial ideal under any
antidiagonal term order; ``verify_groebner`` checks that statement on a
concrete w by running Buchberger and comparing monomial ideals.

The module also carries the monomial-ideal utilities needed elsewhere:
codimension of a squarefree monomial ideal by exact minimum vertex cover,
membership of a polynomial in a monomial ideal, and the variable
nonzerodivisor test on a squarefree quotient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .perm import Cell, PartialPermutation, diagram, essential_set, render_one_line
from .poly import (IdealPresentation, Monomial, Polynomial, PolyRing, buchberger,
                   minor, antidiagonal_monomial, monomial_divides, monomial_quotient)


def _w_json(w: PartialPermutation):
    if w.is_permutation:
        return render_one_line(w)
    return {"rows": w.rows, "cols": w.cols, "matrix": [list(r) for r in w.matrix()]}


# ---------------------------------------------------------------------------
# Monomial ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal presented by its minimal generating set.

    Generators are stored sorted by (degree, term order); no generator divides
    another.  A monomial belongs to the ideal iff some generator divides it.
    """

    ring: PolyRing
    gens: tuple

    @classmethod
    def from_monomials(cls, ring: PolyRing, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        pool = sorted(set(monomials), key=lambda m: (sum(m), m))
        kept: list[Monomial] = []
        for m in pool:
            if not any(monomial_divides(g, m) for g in kept):
                kept.append(m)
        return cls(ring, tuple(kept))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains_monomial(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.gens)

    def contains_polynomial(self, f: Polynomial) -> bool:
        return all(self.contains_monomial(m) for m in f.monomials())

    def is_squarefree(self) -> bool:
        return all(all(e <= 1 for e in m) for m in self.gens)

    def rendered(self) -> tuple[str, ...]:
        return tuple(self.ring.render_monomial(m) for m in self.gens)

    def __contains__(self, m) -> bool:
        return self.contains_monomial(m)


def monomial_quotient_membership(f: Polynomial, gens: Sequence[Monomial]) -> bool:
    """True iff every term of f is divisible by some generator, i.e. f lies in
    the monomial ideal they generate.  The zero polynomial is a member."""
    return all(any(monomial_divides(g, m) for g in gens) for m in f.monomials())


def colon_by_variable(J: MonomialIdeal, c: Monomial) -> MonomialIdeal:
    """The colon ideal (J : c) for a single variable c."""
    _check_variable(c)
    gens = [monomial_quotient(m, c) if monomial_divides(c, m) else m for m in J.gens]
    return MonomialIdeal.from_monomials(J.ring, gens)


def _check_variable(c: Monomial):
    if sum(c) != 1:
        raise ValueError("expected a single variable")


def is_nonzerodivisor_on_monomial_quotient(c: Monomial, J: MonomialIdeal) -> bool:
    """Whether the variable c is a nonzerodivisor on the quotient by the
    squarefree monomial ideal J: every minimal generator divisible by c must
    stay in J after dividing c out (squarefree minimality makes any such
    generator a witness that c kills a nonzero class)."""
    _check_variable(c)
    if not J.is_squarefree():
        raise ValueError("nonzerodivisor test requires a squarefree ideal")
    return all(J.contains_monomial(monomial_quotient(m, c))
               for m in J.gens if monomial_divides(c, m))


def monomial_codim(J: MonomialIdeal) -> int:
    """Height of a squarefree monomial ideal: the minimum number of variables
    meeting the support of every minimal generator, found by exact
    branch-and-bound vertex cover."""
    if not J.is_squarefree():
        raise ValueError("codimension via vertex cover requires a squarefree ideal")
    if J.is_zero:
        return 0
    supports = []
    for m in J.gens:
        support = frozenset(i for i, e in enumerate(m) if e)
        if not support:
            raise ValueError("the unit ideal has no height")
        supports.append(support)

    def greedy_cover(remaining: list[frozenset]) -> int:
        count = 0
        remaining = list(remaining)
        while remaining:
            counts: dict[int, int] = {}
            for s in remaining:
                for v in s:
                    counts[v] = counts.get(v, 0) + 1
            best_v = max(sorted(counts), key=lambda v: counts[v])
            remaining = [s for s in remaining if best_v not in s]
            count += 1
        return count

    def packing_bound(remaining: list[frozenset]) -> int:
        used: set[int] = set()
        count = 0
        for s in sorted(remaining, key=len):
            if not (s & used):
                used |= s
                count += 1
        return count

    best = greedy_cover(supports)

    def search(remaining: list[frozenset], chosen: int):
        nonlocal best
        if not remaining:
            best = min(best, chosen)
            return
        if chosen + packing_bound(remaining) >= best:
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            search([s for s in remaining if v not in s], chosen + 1)

    search(supports, 0)
    return best


# ---------------------------------------------------------------------------
# Fulton generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorSite:
    """Where a Fulton generator comes from: the essential/diagram cell and the
    row/column index sets of the minor."""

    cell: Cell
    rows: tuple[int, ...]
    cols: tuple[int, ...]


@dataclass(frozen=True)
class SchubertIdeal:
    """The Schubert determinantal ideal of a (partial) permutation.

    ``raw_generators`` lists every minor of size r+1 over the chosen cells in
    canonical order (cells row-major; within a cell, row subsets then column
    subsets lexicographic); ``generators`` is the minimal generating subset
    selected by graded Nakayama, with ``sites``/``raw_sites`` recording where
    each generator comes from.  ``minimal_count`` is the minimal number of
    generators of the ideal.
    """

    source: PartialPermutation
    ring: PolyRing
    cells_mode: str
    cells: tuple
    generators: tuple
    sites: tuple
    raw_generators: tuple
    raw_sites: tuple
    minimal_count: int

    def presentation(self) -> IdealPresentation:
        return IdealPresentation(self.ring, self.generators)

    def raw_presentation(self) -> IdealPresentation:
        return IdealPresentation(self.ring, self.raw_generators)


def fulton_generators(w: PartialPermutation, ring: Optional[PolyRing] = None, *,
                      cells: str = "essential", char: int = 0) -> SchubertIdeal:
    """All defining minors of the matrix Schubert variety of ``w``.

    ``cells`` selects whether minors are taken over the essential set (the
    default) or over the whole diagram; both generate the same ideal.
    """
    if cells not in ("essential", "diagram"):
        raise ValueError("cells must be 'essential' or 'diagram'")
    if ring is None:
        ring = PolyRing(w.rows, w.cols, char=char)
    elif ring.rows < w.rows or ring.cols < w.cols:
        raise ValueError("ring grid too small for this permutation")
    if cells == "essential":
        cell_ranks = essential_set(w)
    else:
        d = diagram(w)
        cell_ranks = tuple((c, d.ranks[c]) for c in d.sorted_cells())
    raw: list[Polynomial] = []
    sites: list[MinorSite] = []
    for cell, r in cell_ranks:
        for rows in itertools.combinations(range(1, cell.p + 1), r + 1):
            for cols in itertools.combinations(range(1, cell.q + 1), r + 1):
                raw.append(minor(ring, rows, cols))
                sites.append(MinorSite(cell, rows, cols))
    kept_indices, mu = graded_minimal_generators(ring, raw)
    return SchubertIdeal(
        source=w, ring=ring, cells_mode=cells, cells=cell_ranks,
        generators=tuple(raw[i] for i in kept_indices),
        sites=tuple(sites[i] for i in kept_indices),
        raw_generators=tuple(raw), raw_sites=tuple(sites),
        minimal_count=mu)


def antidiagonal_ideal(w: PartialPermutation, ring: Optional[PolyRing] = None) -> MonomialIdeal:
    """The monomial ideal generated by the antidiagonal terms of all Fulton
    minors over the essential set, minimalized.  Its generators are squarefree
    by construction (an antidiagonal multiplies distinct variables)."""
    if ring is None:
        ring = PolyRing(w.rows, w.cols)
    monomials = []
    for cell, r in essential_set(w):
        for rows in itertools.combinations(range(1, cell.p + 1), r + 1):
            for cols in itertools.combinations(range(1, cell.q + 1), r + 1):
                monomials.append(antidiagonal_monomial(ring, rows, cols))
    return MonomialIdeal.from_monomials(ring, monomials)


# ---------------------------------------------------------------------------
# Graded Nakayama: minimal generators of a homogeneous ideal
# ---------------------------------------------------------------------------

def graded_minimal_generators(ring: PolyRing, gens: Sequence[Polynomial]
                              ) -> tuple[tuple[int, ...], int]:
    """Select a minimal generating subset of homogeneous ``gens`` and return
    (kept indices, minimal number of generators).

    Degree by degree, a generator is kept iff its image is linearly
    independent in I/mI from the lower-degree part and the generators already
    kept, so the count is the vector-space dimension of I/mI (graded
    Nakayama).  Ranks are exact: rationals in characteristic 0, the prime
    field otherwise.
    """
    degrees: list[int] = []
    for g in gens:
        if g.is_zero or g.ring != ring:
            raise ValueError("generators must be nonzero elements of the ring")
        if not g.is_homogeneous():
            raise ValueError("graded selection requires homogeneous generators")
        degrees.append(g.total_degree())
    # single-variable generators act by erasing every multiple of theirs
    kill: set[int] = set()
    poly_gens: list[int] = []
    for idx, g in enumerate(gens):
        terms = g.terms()
        if degrees[idx] == 1 and len(terms) == 1:
            kill.add(terms[0][0].index(1))
        else:
            poly_gens.append(idx)

    def killed(d: dict) -> dict:
        return {m: c for m, c in d.items() if not any(m[v] for v in kill)}

    kept: list[int] = []
    for d in sorted(set(degrees)):
        echelon: dict[Monomial, dict] = {}

        def insert(row: dict):
            while row:
                lead = max(row)
                pivot = echelon.get(lead)
                if pivot is None:
                    lc = row[lead]
                    if lc != 1:
                        div = ring.coeff_div
                        row = {m: div(c, lc) for m, c in row.items()}
                    echelon[lead] = row
                    return
                _row_axpy(row, pivot, row[lead], ring.char)

        if d > 1:
            for idx in poly_gens:
                e = degrees[idx]
                if e >= d:
                    continue
                gd = gens[idx]._d
                for u in _monomials_of_degree(ring.nvars, d - e):
                    prod: dict = {}
                    for m, c in gd.items():
                        key = tuple(x + y for x, y in zip(m, u))
                        if not any(key[v] for v in kill):
                            prod[key] = c
                    if prod:
                        insert(prod)
        for idx, g in ((i, gens[i]) for i in range(len(gens)) if degrees[i] == d):
            row = dict(g._d) if d == 1 else killed(g._d)
            while row:
                lead = max(row)
                pivot = echelon.get(lead)
                if pivot is None:
                    break
                _row_axpy(row, pivot, row[lead], ring.char)
            if row:
                kept.append(idx)
                insert(row)
    return tuple(kept), len(kept)


def _row_axpy(row: dict, pivot: dict, factor, char: int):
    """row -= factor * pivot (pivot is monic at its leading monomial)."""
    if char:
        for m, c in pivot.items():
            v = (row.get(m, 0) - factor * c) % char
            if v:
                row[m] = v
            else:
                row.pop(m, None)
    else:
        for m, c in pivot.items():
            v = row.get(m, 0) - factor * c
            if v:
                row[m] = v
            else:
                row.pop(m, None)


def _monomials_of_degree(nvars: int, k: int):
    """All exponent tuples of total degree k (k >= 1)."""
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield tuple(exps)


# ---------------------------------------------------------------------------
# Groebner verification of the antidiagonal initial ideal
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerReport:
    """Outcome of comparing in(I_w) with the antidiagonal ideal."""

    w: PartialPermutation
    match: bool
    gb_leading: MonomialIdeal
    antidiagonal: MonomialIdeal
    basis: tuple

    def to_json(self) -> dict:
        return {
            "w": _w_json(self.w),
            "match": self.match,
            "gb_leading": list(self.gb_leading.rendered()),
            "antidiagonal": list(self.antidiagonal.rendered()),
        }


def verify_groebner(w: PartialPermutation, ring: Optional[PolyRing] = None) -> GroebnerReport:
    """Check that the Fulton generators are a Groebner basis: the leading
    monomials of a reduced Groebner basis of the ideal must generate exactly
    the antidiagonal ideal."""
    schubert = fulton_generators(w, ring)
    ring = schubert.ring
    basis = buchberger(schubert.generators)
    lead = MonomialIdeal.from_monomials(ring, (g.leading_monomial() for g in basis))
    anti = antidiagonal_ideal(w, ring)
    return GroebnerReport(w=w, match=lead.gens == anti.gens,
                          gb_leading=lead, antidiagonal=anti, basis=basis)
