"""Orbit ideals and their membership machinery.

An orbit ideal is generated by all images of finitely many seed
polynomials under a permutation group.  Membership of a homogeneous
polynomial in a fixed degree is a linear-algebra question: its
coefficient vector must lie in the span of monomial multiples of the
expanded generators.  This route is independent of the Groebner route in
:mod:`symorbits.groebner` and the two are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import DEFAULT_MAX_PAIRS, GroebnerBasis, buchberger
from .linalg import ExactMatrix, in_span, rank
from .permutations import PermGroup, orbit
from .polynomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_type,
    monomials_of_degree,
    monomials_of_type,
)
from .reports import VerdictReport


@dataclass(frozen=True)
class OrbitIdeal:
    """Seeds together with their fully expanded, deduplicated orbit."""

    group: PermGroup
    seeds: tuple[Polynomial, ...]
    expanded: tuple[Polynomial, ...]

    @property
    def field(self):
        return self.seeds[0].field

    @property
    def nvars(self) -> int:
        return self.seeds[0].nvars

    def groebner_basis(
        self,
        order: MonomialOrder = GREVLEX,
        *,
        max_pairs: int = DEFAULT_MAX_PAIRS,
        deadline: float | None = None,
    ) -> GroebnerBasis:
        return buchberger(list(self.expanded), order, max_pairs=max_pairs, deadline=deadline)


def orbit_ideal(seeds: Sequence[Polynomial], group: PermGroup) -> OrbitIdeal:
    if not seeds:
        raise ValueError("need at least one seed polynomial")
    field = seeds[0].field
    for f in seeds:
        if f.field != field:
            raise ValueError("seeds must share a field")
        if f.nvars != group.degree:
            raise ValueError(f"seed nvars {f.nvars} != group degree {group.degree}")
        if f.is_zero:
            raise ValueError("zero polynomial cannot seed an orbit ideal")
    expanded: list[Polynomial] = []
    seen = set()
    for f in seeds:
        for g in orbit(f, group):
            if g not in seen:
                seen.add(g)
                expanded.append(g)
    expanded.sort(key=Polynomial.sort_key)
    return OrbitIdeal(group, tuple(seeds), tuple(expanded))


@dataclass
class GradedPiece:
    """Column space of one degree slice of an orbit ideal.

    Rows are indexed by ``monomial_index``; column j is the coefficient
    vector of ``multiplier * generator`` recorded in ``column_meta[j]``.
    """

    degree: int
    monomial_index: tuple[Monomial, ...]
    matrix: ExactMatrix
    column_meta: tuple[tuple[int, Monomial], ...]


def graded_piece(ideal: OrbitIdeal, degree: int) -> GradedPiece:
    """The degree slice spanned by {u * g} with deg(u) + deg(g) = degree."""
    field = ideal.field
    nvars = ideal.nvars
    index = sorted(monomials_of_degree(nvars, degree), key=GREVLEX.key, reverse=True)
    index_pos = {m: i for i, m in enumerate(index)}
    columns = []
    meta = []
    for gi, g in enumerate(ideal.expanded):
        if not g.is_homogeneous():
            raise ValueError("graded piece requires homogeneous generators")
        mult_degree = degree - g.total_degree()
        if mult_degree < 0:
            continue
        for u in monomials_of_degree(nvars, mult_degree):
            col = [field.zero] * len(index)
            for m, c in g.terms.items():
                shifted = tuple(a + b for a, b in zip(m, u))
                col[index_pos[shifted]] = c
            columns.append(col)
            meta.append((gi, u))
    return GradedPiece(
        degree=degree,
        monomial_index=tuple(index),
        matrix=ExactMatrix.from_columns(field, columns),
        column_meta=tuple(meta),
    )


def _combination_columns(ideal: OrbitIdeal, target: Polynomial):
    """Columns for membership of an inhomogeneous target: multipliers of
    degree at most deg(target) - mindeg(generator)."""
    field = ideal.field
    nvars = ideal.nvars
    bound = target.total_degree()
    columns = []
    meta = []
    monos: set[Monomial] = set(target.terms)
    products = []
    for gi, g in enumerate(ideal.expanded):
        max_mult = bound - g.min_degree()
        if max_mult < 0:
            continue
        for mult_degree in range(max_mult + 1):
            for u in monomials_of_degree(nvars, mult_degree):
                prod = {}
                for m, c in g.terms.items():
                    prod[tuple(a + b for a, b in zip(m, u))] = c
                products.append(prod)
                meta.append((gi, u))
                monos.update(prod)
    index = sorted(monos, key=GREVLEX.key, reverse=True)
    index_pos = {m: i for i, m in enumerate(index)}
    for prod in products:
        col = [field.zero] * len(index)
        for m, c in prod.items():
            col[index_pos[m]] = c
        columns.append(col)
    return index, index_pos, ExactMatrix.from_columns(field, columns), tuple(meta)


def graded_member(target: Polynomial, ideal: OrbitIdeal) -> VerdictReport:
    """Membership of a bounded-degree combination, by exact linear algebra.

    With homogeneous seeds and a homogeneous target this decides ideal
    membership outright (a homogeneous ideal is the direct sum of its
    degree slices).  With inhomogeneous seeds the combination search is
    truncated at multiplier degree deg(target) - mindeg(seed).
    """
    if target.field != ideal.field or target.nvars != ideal.nvars:
        raise ValueError("target incompatible with ideal")
    if target.is_zero:
        return VerdictReport(
            claim_id="graded-membership",
            parameters={"target": str(target)},
            verdict=True,
            certificate={"combination": []},
            notes="zero polynomial lies in every ideal",
        )
    homogeneous_setting = all(g.is_homogeneous() for g in ideal.expanded)
    if homogeneous_setting:
        if not target.is_homogeneous():
            raise ValueError("target must be homogeneous when the seeds are homogeneous")
        piece = graded_piece(ideal, target.total_degree())
        index_pos = {m: i for i, m in enumerate(piece.monomial_index)}
        vector = [target.field.zero] * len(piece.monomial_index)
        for m, c in target.terms.items():
            vector[index_pos[m]] = c
        matrix, meta = piece.matrix, piece.column_meta
    else:
        index, index_pos, matrix, meta = _combination_columns(ideal, target)
        vector = [target.field.zero] * len(index)
        for m, c in target.terms.items():
            vector[index_pos[m]] = c

    member, coeffs = in_span(vector, matrix)
    parameters = {
        "target": str(target),
        "group": ideal.group.descriptor,
        "generators": len(ideal.expanded),
        "columns": matrix.ncols,
        "mode": "graded" if homogeneous_setting else "bounded-multiplier",
    }
    if not member:
        return VerdictReport("graded-membership", parameters, False)

    combination = []
    total = Polynomial.zero(target.field, target.nvars)
    for (gi, u), c in zip(meta, coeffs):
        if c.is_zero:
            continue
        term = Polynomial.from_monomial(target.field, u, c.value) * ideal.expanded[gi]
        total = total + term
        combination.append(
            {"generator": str(ideal.expanded[gi]), "multiplier": str(
                Polynomial.from_monomial(target.field, u)
            ), "coefficient": str(c)}
        )
    if total != target:
        raise AssertionError("membership certificate failed polynomial re-verification")
    return VerdictReport(
        "graded-membership",
        parameters,
        True,
        certificate={"combination": combination},
        notes="certificate re-verified by polynomial arithmetic",
    )


def ideal_equal(
    left: OrbitIdeal | Sequence[Polynomial],
    right: OrbitIdeal | Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    deadline: float | None = None,
) -> VerdictReport:
    """Equality of two ideals via mutual normal forms."""
    gens_left = list(left.expanded) if isinstance(left, OrbitIdeal) else list(left)
    gens_right = list(right.expanded) if isinstance(right, OrbitIdeal) else list(right)
    if not gens_left or not gens_right:
        raise ValueError("both generator lists must be nonempty")
    if gens_left[0].field != gens_right[0].field or gens_left[0].nvars != gens_right[0].nvars:
        raise ValueError("ideals must share field and variable count")
    gb_left = buchberger(gens_left, order, max_pairs=max_pairs, deadline=deadline)
    gb_right = buchberger(gens_right, order, max_pairs=max_pairs, deadline=deadline)
    failures = []
    for g in gens_left:
        if not gb_right.contains(g):
            failures.append(("left-generator-not-in-right", str(g)))
    for g in gens_right:
        if not gb_left.contains(g):
            failures.append(("right-generator-not-in-left", str(g)))
    parameters = {
        "field": str(gens_left[0].field),
        "nvars": gens_left[0].nvars,
        "left_generators": len(gens_left),
        "right_generators": len(gens_right),
        "order": str(order),
    }
    if failures:
        return VerdictReport(
            "ideal-equality",
            parameters,
            False,
            certificate={"failures": [f"{kind}: {g}" for kind, g in failures]},
        )
    return VerdictReport(
        "ideal-equality",
        parameters,
        True,
        certificate={"checked_normal_forms": len(gens_left) + len(gens_right)},
    )


def rank_condition(f: Polynomial, group: PermGroup) -> VerdictReport:
    """Full-rank test deciding whether the orbit ideal of a single-type
    polynomial is the monomial ideal generated by the orbit of its terms.

    Columns are the coefficient vectors of the orbit of f inside the space
    spanned by all monomials of the shared type; the verdict is true iff
    their span is the whole space.
    """
    if f.is_zero:
        raise ValueError("zero polynomial has no type")
    if f.nvars != group.degree:
        raise ValueError("variable count mismatch")
    types = {monomial_type(m) for m in f.terms}
    if len(types) != 1:
        raise ValueError(f"support mixes types {sorted(types)}")
    mono_type = next(iter(types))
    if not group.transitive_on_type(mono_type):
        raise ValueError(
            f"group {group.descriptor} is not transitive on monomials of type {mono_type}"
        )
    row_index = sorted(
        monomials_of_type(mono_type, f.nvars), key=GREVLEX.key, reverse=True
    )
    index_pos = {m: i for i, m in enumerate(row_index)}
    field = f.field
    columns = set()
    for g in group.elements:
        image = g.act(f)
        col = [field.zero] * len(row_index)
        for m, c in image.terms.items():
            col[index_pos[m]] = c
        columns.add(tuple(col))
    matrix = ExactMatrix.from_columns(field, sorted(columns))
    got = rank(matrix)
    verdict = got == len(row_index)
    return VerdictReport(
        "monomial-ideal-rank",
        {
            "type": mono_type,
            "group": group.descriptor,
            "field": str(field),
            "monomials_of_type": len(row_index),
            "distinct_orbit_vectors": matrix.ncols,
            "rank": got,
        },
        verdict,
        certificate={"full_rank": verdict},
        notes=(
            "orbit ideal is monomial, generated by the orbit of any term"
            if verdict
            else "orbit coefficient matrix is rank-deficient"
        ),
    )


def symmetrize(f: Polynomial, group: PermGroup) -> Polynomial:
    """Sum of sigma.f over every group element, with multiplicity."""
    if f.nvars != group.degree:
        raise ValueError("variable count mismatch")
    total = Polynomial.zero(f.field, f.nvars)
    for g in group.elements:
        total = total + g.act(f)
    return total
