"""Permutations of variable indices, finite permutation groups, and their
action on monomials and polynomials.

The action follows the convention that a permutation sends the variable
x_i to x_{sigma(i)}; groups are fully enumerated at construction so that
verifiers can iterate over every element.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Sequence

from .polynomials import Monomial, Polynomial, monomials_of_type

DEFAULT_GROUP_BOUND = 50_000


class Permutation:
    """A bijection of {1..N}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"images {images} are not a bijection of 0..{len(images) - 1}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse 1-based cycle notation, e.g. ``(1 2)(3 4)``; ``()`` is the identity."""
        images = list(range(n))
        body = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", body):
            raise ValueError(f"malformed cycle notation {text!r}")
        seen: set[int] = set()
        for cycle_text in re.findall(r"\(([^)]*)\)", body):
            entries = [int(t) for t in re.split(r"[\s,]+", cycle_text.strip()) if t]
            if not entries:
                continue
            if any(not 1 <= e <= n for e in entries):
                raise ValueError(f"cycle entry out of range 1..{n} in {text!r}")
            if len(set(entries)) != len(entries) or seen & set(entries):
                raise ValueError(f"repeated entry in cycle notation {text!r}")
            seen.update(entries)
            for a, b in zip(entries, entries[1:] + entries[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """Swap the 1-based indices i and j."""
        images = list(range(n))
        images[i - 1], images[j - 1] = j - 1, i - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the 1-based index i."""
        return self.images[i - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch in composition")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def act_monomial(self, m: Monomial) -> Monomial:
        """Move the exponent at position i to position sigma(i)."""
        out = [0] * len(m)
        for i, e in enumerate(m):
            out[self.images[i]] = e
        return tuple(out)

    def act(self, f: Polynomial) -> Polynomial:
        """Apply the variable substitution x_i -> x_{sigma(i)} to f."""
        if f.nvars != self.degree:
            raise ValueError(f"permutation degree {self.degree} != nvars {f.nvars}")
        images = self.images
        terms = {}
        for m, c in f.terms.items():
            out = [0] * len(m)
            for i, e in enumerate(m):
                out[images[i]] = e
            terms[tuple(out)] = c
        return Polynomial(f.field, f.nvars, terms)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles on 1-based indices, each starting at its minimum."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(i + 1 for i in cycle))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


class PermGroup:
    """A finite permutation group with fully enumerated elements."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        descriptor: str,
        is_full_symmetric: bool = False,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.descriptor = descriptor
        self.is_full_symmetric = is_full_symmetric

    @classmethod
    def symmetric(cls, n: int, bound: int = DEFAULT_GROUP_BOUND) -> "PermGroup":
        if n < 1:
            raise ValueError("degree must be >= 1")
        if math.factorial(n) > bound:
            raise ValueError(f"group order {math.factorial(n)} exceeds enumeration bound {bound}")
        elements = [Permutation(p) for p in itertools.permutations(range(n))]
        gens = []
        if n >= 2:
            gens.append(Permutation.transposition(n, 1, 2))
        if n >= 3:
            gens.append(Permutation(tuple(range(1, n)) + (0,)))
        return cls(n, gens or [Permutation.identity(n)], elements, f"S{n}", True)

    @classmethod
    def cyclic(cls, n: int, bound: int = DEFAULT_GROUP_BOUND) -> "PermGroup":
        if n < 1:
            raise ValueError("degree must be >= 1")
        if n > bound:
            raise ValueError(f"group order {n} exceeds enumeration bound {bound}")
        gen = Permutation(tuple(range(1, n)) + (0,))
        elements = []
        g = Permutation.identity(n)
        for _ in range(n):
            elements.append(g)
            g = gen * g
        return cls(n, [gen], elements, f"C{n}", is_full_symmetric=(n <= 2))

    @classmethod
    def generated(
        cls, n: int, generators: Iterable[Permutation | str], bound: int = DEFAULT_GROUP_BOUND
    ) -> "PermGroup":
        gens = [
            g if isinstance(g, Permutation) else Permutation.from_cycles(g, n)
            for g in generators
        ]
        if any(g.degree != n for g in gens):
            raise ValueError("generator degree mismatch")
        identity = Permutation.identity(n)
        seen = {identity.images: identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for h in gens:
                    prod = h * g
                    if prod.images not in seen:
                        if len(seen) >= bound:
                            raise ValueError(f"group enumeration exceeds bound {bound}")
                        seen[prod.images] = prod
                        nxt.append(prod)
            frontier = nxt
        elements = [seen[key] for key in sorted(seen)]
        descriptor = "gens:" + "".join(repr(g) for g in gens)
        full = len(elements) == math.factorial(n)
        return cls(n, gens, elements, descriptor, full)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma: Permutation) -> bool:
        return any(sigma == g for g in self.elements)

    def __repr__(self) -> str:
        return f"PermGroup({self.descriptor}, order={self.order})"

    def transitive_on_variables(self) -> bool:
        """True iff the index action {1..N} has a single orbit."""
        reach = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for g in self.generators:
                    j = g.images[i]
                    if j not in reach:
                        reach.add(j)
                        nxt.append(j)
            frontier = nxt
        return len(reach) == self.degree

    def transitive_on_type(self, partition: Sequence[int]) -> bool:
        """True iff all monomials of the given type form a single orbit."""
        all_monos = monomials_of_type(partition, self.degree)
        if not all_monos:
            return False
        start = all_monos[0]
        reach = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for m in frontier:
                for g in self.generators:
                    image = g.act_monomial(m)
                    if image not in reach:
                        reach.add(image)
                        nxt.append(image)
            frontier = nxt
        return len(reach) == len(all_monos)

    def index_set_orbit(self, indices: Iterable[int]) -> set[frozenset[int]]:
        """Orbit of a set of 1-based indices under the group."""
        base = frozenset(indices)
        return {frozenset(g(i) for i in base) for g in self.elements}


def orbit(f: Polynomial, group: PermGroup) -> tuple[Polynomial, ...]:
    """The deduplicated orbit {sigma.f}, canonically ordered.

    For the full symmetric group only the injective images of f's active
    variable set are enumerated, which avoids walking all N! elements.
    """
    if f.nvars != group.degree:
        raise ValueError(f"polynomial nvars {f.nvars} != group degree {group.degree}")
    seen: set[Polynomial] = set()
    if group.is_full_symmetric:
        active = sorted({i for m in f.terms for i, e in enumerate(m) if e > 0})
        for targets in itertools.permutations(range(group.degree), len(active)):
            mapping = dict(zip(active, targets))
            terms = {}
            for m, c in f.terms.items():
                out = [0] * len(m)
                for i, e in enumerate(m):
                    if e:
                        out[mapping[i]] = e
                terms[tuple(out)] = c
            seen.add(Polynomial(f.field, f.nvars, terms))
    else:
        for g in group.elements:
            seen.add(g.act(f))
    return tuple(sorted(seen, key=Polynomial.sort_key))


def stabilizer(f: Polynomial, group: PermGroup) -> list[Permutation]:
    """All group elements fixing f; computed by full enumeration."""
    return [g for g in group.elements if g.act(f) == f]
