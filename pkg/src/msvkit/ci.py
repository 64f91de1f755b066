"""Complete intersection classification of matrix Schubert varieties.

The classifier is recursive: the variety of a permutation w is a complete
intersection iff, for every diagram cell (p, q) of positive rank r, the r x r
block of w just northwest of the cell is itself a permutation matrix whose
matrix Schubert variety is again a complete intersection.  When the verdict
is positive, the defining ideal is generated by the codimension-many
polynomials {x[p,q] at rank-0 diagram cells} plus {det of the (r+1) x (r+1)
block with southeast corner (p, q) at positive-rank cells}.

A necessary condition checked separately: every positive-rank diagram cell
must be essential (no diagram cell due east or due south of it).  It is not
sufficient: 352614 satisfies it and still fails the block test at (4, 4).

``minimal_generator_count`` is the independent brute-force oracle: the
minimal number of generators of the defining ideal, computed degree by degree
as the dimension of I/mI by exact linear algebra (graded Nakayama).  A
complete intersection is exactly the case where this count equals the
codimension |D(w)|.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .perm import (Cell, PartialPermutation, block_one_line, diagram,
                   extend_to_permutation, render_one_line, submatrix_w)
from .poly import Polynomial, PolyRing, minor
from .detideal import fulton_generators


class NecessaryViolation(NamedTuple):
    """A positive-rank diagram cell that is not essential, together with the
    diagram cell due east or due south of it that blocks essentialness."""

    cell: Cell
    neighbor: Cell


class NecessaryConditionReport(NamedTuple):
    ok: bool
    violations: tuple


def necessary_condition(w: PartialPermutation) -> NecessaryConditionReport:
    """Check that every positive-rank diagram cell is essential.  A failure
    rules out the complete intersection property; passing does not establish
    it (352614 passes and is still not a complete intersection).

    >>> necessary_condition(PartialPermutation.from_one_line("462153")).ok
    True
    >>> necessary_condition(PartialPermutation.from_one_line("361452")).violations[0]
    NecessaryViolation(cell=Cell(p=2, q=4), neighbor=Cell(p=2, q=5))
    """
    d = diagram(w)
    violations = []
    for cell in d.positive_cells():
        for neighbor in (Cell(cell.p, cell.q + 1), Cell(cell.p + 1, cell.q)):
            if neighbor in d.ranks:
                violations.append(NecessaryViolation(cell, neighbor))
    violations.sort()
    return NecessaryConditionReport(not violations, tuple(violations))


@dataclass(frozen=True)
class Witness:
    """Why a permutation fails the classification, anchored at a cell."""

    cell: Cell
    kind: str  # "necessary-condition" | "block-not-permutation" | "block-not-complete-intersection"
    detail: str

    def to_json(self) -> dict:
        return {"cell": list(self.cell), "kind": self.kind, "detail": self.detail}


@dataclass(frozen=True)
class CertificateNode:
    """One positive-rank diagram cell of the recursion certificate."""

    cell: Cell
    rank: int
    is_permutation: bool
    child: Optional["CIReport"]

    def to_json(self) -> dict:
        return {
            "cell": list(self.cell),
            "rank": self.rank,
            "is_permutation": self.is_permutation,
            "child": self.child.to_json() if self.child is not None else None,
        }


@dataclass(frozen=True)
class CIReport:
    """Verdict, codimension, recursion certificate, and (for a positive
    verdict) the explicit codimension-many generator list."""

    w: tuple[int, ...]
    verdict: bool
    codim: int
    certificate: tuple
    generators: Optional[tuple]
    failure_witness: Optional[Witness]
    mu: Optional[int] = None

    def to_json(self) -> dict:
        word = PartialPermutation.from_one_line(self.w)
        return {
            "w": render_one_line(word),
            "verdict": self.verdict,
            "codim": self.codim,
            "mu": self.mu,
            "generators": ([str(g) for g in self.generators]
                           if self.generators is not None else None),
            "witness": (self.failure_witness.to_json()
                        if self.failure_witness is not None else None),
            "certificate": [node.to_json() for node in self.certificate],
        }


_CLASSIFY_CACHE: dict[tuple[int, ...], CIReport] = {}


def is_complete_intersection(w: PartialPermutation, *, with_oracle: bool = False,
                             char: int = 0) -> CIReport:
    """Classify the matrix Schubert variety of ``w``.

    Partial permutations are first extended to a full permutation (the two
    varieties differ by a product with an affine space, which preserves the
    property).  ``with_oracle`` additionally runs the independent minimal
    generator count and stores it in ``mu``.

    >>> is_complete_intersection(PartialPermutation.from_one_line("462153")).verdict
    True
    >>> is_complete_intersection(PartialPermutation.from_one_line("361452")).failure_witness.cell
    Cell(p=2, q=5)
    """
    if not w.is_permutation:
        w = extend_to_permutation(w)
    report = _classify(w.one_line())
    if with_oracle:
        report = replace(report, mu=minimal_generator_count(w, char=char))
    return report


def _classify(word: tuple[int, ...]) -> CIReport:
    cached = _CLASSIFY_CACHE.get(word)
    if cached is not None:
        return cached
    w = PartialPermutation(len(word), len(word), word)
    d = diagram(w)
    nodes = []
    verdict = True
    witness: Optional[Witness] = None
    for cell in d.positive_cells():
        r = d.ranks[cell]
        sub = submatrix_w(w, cell)
        child = None
        if sub.is_permutation:
            child = _classify(block_one_line(sub.block))
            ok = child.verdict
            if not ok and witness is None:
                witness = Witness(
                    cell, "block-not-complete-intersection",
                    f"the {r}x{r} block northwest of ({cell.p},{cell.q}) is the "
                    f"permutation {render_one_line(PartialPermutation.from_one_line(child.w))}, "
                    "whose matrix Schubert variety is not a complete intersection")
        else:
            ok = False
            if witness is None:
                witness = Witness(
                    cell, "block-not-permutation",
                    f"the {r}x{r} block on rows {cell.p - r}..{cell.p - 1} and columns "
                    f"{cell.q - r}..{cell.q - 1} is not a permutation matrix")
        verdict = verdict and ok
        nodes.append(CertificateNode(cell, r, sub.is_permutation, child))
    generators = _ci_generator_tuple(w) if verdict else None
    report = CIReport(
        w=word, verdict=verdict, codim=len(d), certificate=tuple(nodes),
        generators=generators, failure_witness=witness)
    _CLASSIFY_CACHE[word] = report
    return report


def _ci_generator_tuple(w: PartialPermutation, ring: Optional[PolyRing] = None) -> tuple:
    if ring is None:
        ring = PolyRing(w.rows, w.cols)
    d = diagram(w)
    gens: list[Polynomial] = []
    for cell in d.sorted_cells():
        r = d.ranks[cell]
        if r == 0:
            gens.append(ring.variable(cell.p, cell.q))
        else:
            gens.append(minor(ring, range(cell.p - r, cell.p + 1),
                              range(cell.q - r, cell.q + 1)))
    return tuple(gens)


def ci_generators(w: PartialPermutation, ring: Optional[PolyRing] = None) -> tuple:
    """The codimension-many generators of the defining ideal of a complete
    intersection: variables at rank-0 diagram cells and block determinants at
    positive-rank cells, in row-major cell order.  Raises for non-complete
    intersections."""
    if not w.is_permutation:
        w = extend_to_permutation(w)
    report = is_complete_intersection(w)
    if not report.verdict:
        raise ValueError(f"{render_one_line(w)} is not a complete intersection")
    return _ci_generator_tuple(w, ring)


def minimal_generator_count(w: PartialPermutation, *, char: int = 0) -> int:
    """Minimal number of generators of the Schubert determinantal ideal,
    computed by exact rank counts of I/mI degree by degree.  Defaults to
    exact rational arithmetic; a prime ``char`` selects the prime-field fast
    path."""
    return fulton_generators(w, char=char).minimal_count
