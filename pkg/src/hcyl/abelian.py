"""Finitely generated Abelian groups from generators and relations.

A group is ``Z^n / colspan(R)``.  Its Smith data is computed once at
construction and reused for every normalization.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from . import linalg


class GroupError(ValueError):
    pass


class FGGroup:
    """Abelian group on ``gen_count`` generators modulo integer relators."""

    def __init__(self, gen_count: int, relators: Iterable[Sequence[int]] = (), name: str = ""):
        self.gen_count = gen_count
        self.name = name
        rels = []
        for r in relators:
            r = [int(x) for x in r]
            if len(r) != gen_count:
                raise GroupError(f"relator of length {len(r)} for {gen_count} generators")
            if any(r):
                rels.append(r)
        self.relators = rels
        self.relation_matrix = linalg.from_columns(rels, gen_count)
        snf = linalg.smith(self.relation_matrix, len(rels), right=False, left_inverse=True)
        self._U = snf.U
        self._U_inv = snf.U_inv
        diag = snf.diagonal + [0] * (gen_count - len(snf.diagonal))
        self._moduli = diag[:gen_count]
        nonzero = [d for d in self._moduli if d]
        self.free_rank = gen_count - len(nonzero)
        self.torsion = [d for d in nonzero if d > 1]

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<FGGroup {label}Z^{self.free_rank} + {self.torsion}>"

    @property
    def invariants(self) -> tuple[int, list[int]]:
        return self.free_rank, list(self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def invariant_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Coordinates in the Smith basis, reduced modulo each invariant factor."""
        if len(coords) != self.gen_count:
            raise GroupError(f"vector of length {len(coords)} for {self.gen_count} generators")
        y = linalg.matvec(self._U, coords) if self.gen_count else []
        out = []
        for yi, d in zip(y, self._moduli):
            out.append(yi % d if d else yi)
        return tuple(out)

    def canonical(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative in generator coordinates."""
        y = self.invariant_coords(coords)
        if not self.gen_count:
            return ()
        return tuple(linalg.matvec(self._U_inv, y))

    def element(self, coords: Sequence[int]) -> "GroupElem":
        return GroupElem(self, coords)

    def zero(self) -> "GroupElem":
        return GroupElem(self, [0] * self.gen_count)

    def generator(self, i: int) -> "GroupElem":
        v = [0] * self.gen_count
        v[i] = 1
        return GroupElem(self, v)

    def is_zero_vector(self, coords: Sequence[int]) -> bool:
        return not any(self.invariant_coords(coords))


class GroupElem:
    """An element of a specific FGGroup, held by raw coordinates."""

    __slots__ = ("group", "coords")

    def __init__(self, group: FGGroup, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != group.gen_count:
            raise GroupError(f"vector of length {len(coords)} for {group.gen_count} generators")
        self.group = group
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, GroupElem) or other.group is not self.group:
            raise GroupError("elements belong to different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElem(self.group, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return GroupElem(self.group, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return GroupElem(self.group, [-a for a in self.coords])

    def __mul__(self, n: int):
        return GroupElem(self.group, [n * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupElem):
            return NotImplemented
        self._check(other)
        return self.group.invariant_coords(self.coords) == self.group.invariant_coords(other.coords)

    def __hash__(self):
        return hash((id(self.group), self.group.invariant_coords(self.coords)))

    def is_zero(self) -> bool:
        return self.group.is_zero_vector(self.coords)

    def normalized(self) -> "GroupElem":
        return GroupElem(self.group, self.group.canonical(self.coords))

    def __repr__(self):
        return f"GroupElem({list(self.coords)})"


class Hom:
    """Homomorphism given by generator images (``matrix`` has one column per source generator)."""

    def __init__(self, source: FGGroup, target: FGGroup, matrix: Sequence[Sequence[int]]):
        matrix = [list(r) for r in matrix]
        if len(matrix) != target.gen_count or any(len(r) != source.gen_count for r in matrix):
            raise GroupError(
                f"matrix shape does not match {source.gen_count} -> {target.gen_count} generators"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        for r in source.relators:
            if not target.is_zero_vector(self._apply(r)):
                raise GroupError("map does not send every relator to zero")

    def _apply(self, coords: Sequence[int]) -> list[int]:
        if not self.target.gen_count:
            return []
        return linalg.matvec(self.matrix, coords)

    def __call__(self, x) -> GroupElem:
        if isinstance(x, GroupElem):
            if x.group is not self.source:
                raise GroupError("element is not in the source group")
            x = x.coords
        return GroupElem(self.target, self._apply(x))

    def compose(self, first: "Hom") -> "Hom":
        """``self o first``."""
        if first.target is not self.source:
            raise GroupError("maps are not composable")
        cols = [self._apply([first.matrix[i][j] for i in range(first.target.gen_count)])
                for j in range(first.source.gen_count)]
        return Hom(first.source, self.target, linalg.from_columns(cols, self.target.gen_count))


def group_from_presentation(gen_count: int, relators: Iterable[Sequence[int]] = (), name: str = "") -> FGGroup:
    return FGGroup(gen_count, relators, name=name)


def free_group(rank: int, name: str = "") -> FGGroup:
    return FGGroup(rank, (), name=name)


def elementary_2_group(rank: int, name: str = "") -> FGGroup:
    """(Z/2)^rank on the standard generators."""
    rels = []
    for i in range(rank):
        r = [0] * rank
        r[i] = 2
        rels.append(r)
    return FGGroup(rank, rels, name=name)


def quotient(G: FGGroup, subgen: Iterable, name: str = "") -> tuple[FGGroup, Hom]:
    """G modulo the subgroup generated by ``subgen``; returns the group and the projection."""
    extra = []
    for s in subgen:
        if isinstance(s, GroupElem):
            if s.group is not G:
                raise GroupError("subgroup generator lies in another group")
            s = s.coords
        extra.append(list(s))
    Q = FGGroup(G.gen_count, list(G.relators) + extra, name=name)
    return Q, Hom(G, Q, linalg.identity(G.gen_count))


class PullbackGroup(FGGroup):
    """Subgroup of ``G1 x G2`` cut out by ``f1(a) == f2(b)``.

    Generators are a lattice basis of the admissible coordinate vectors;
    ``basis`` holds them as columns over the ``G1 (+) G2`` coordinates.
    """

    def __init__(self, f1: Hom, f2: Hom, name: str = ""):
        if f1.target is not f2.target:
            raise GroupError("pullback needs maps into the same group")
        G1, G2, G0 = f1.source, f2.source, f1.target
        n1, n2, m = G1.gen_count, G2.gen_count, G0.gen_count
        n = n1 + n2
        # x = (a, b) is admissible iff f1(a) - f2(b) lies in colspan(R0)
        big = []
        for i in range(m):
            row = list(f1.matrix[i]) + [-c for c in f2.matrix[i]]
            row += [r[i] for r in G0.relators]
            big.append(row)
        width = n + len(G0.relators)
        kernel = linalg.kernel_basis(big, width) if m else [
            [1 if i == j else 0 for i in range(width)] for j in range(width)
        ]
        projected = [v[:n] for v in kernel]
        basis = linalg.column_span_basis(linalg.from_columns(projected, n), len(projected))
        self.basis = basis
        self.f1, self.f2 = f1, f2
        self._ambient = (n1, n2)
        self._solver = linalg.IntegerSolver(linalg.from_columns(basis, n), len(basis))
        rels = []
        for r in G1.relators:
            rels.append(self._solve(list(r) + [0] * n2))
        for r in G2.relators:
            rels.append(self._solve([0] * n1 + list(r)))
        super().__init__(len(basis), rels, name=name)

    def _solve(self, vec):
        y = self._solver.solve(vec)
        if y is None:
            raise GroupError("pair does not lie in the pullback")
        return y

    def lift(self, a: Sequence[int], b: Sequence[int]) -> GroupElem:
        """The pullback element with components ``a`` in G1 and ``b`` in G2."""
        return GroupElem(self, self._solve(list(a) + list(b)))

    def components(self, coords: Sequence[int]) -> tuple[list[int], list[int]]:
        n1, n2 = self._ambient
        full = [0] * (n1 + n2)
        for c, v in zip(coords, self.basis):
            if c:
                for i, x in enumerate(v):
                    full[i] += c * x
        return full[:n1], full[n1:]


def pullback(f1: Hom, f2: Hom, name: str = "") -> tuple[PullbackGroup, Hom, Hom]:
    """Fibre product of ``f1: G1 -> G0`` and ``f2: G2 -> G0`` with its two projections."""
    PB = PullbackGroup(f1, f2, name=name)
    n1, _ = PB._ambient
    cols = PB.basis
    pr1 = Hom(PB, f1.source, linalg.from_columns([v[:n1] for v in cols], n1))
    pr2 = Hom(PB, f2.source, linalg.from_columns([v[n1:] for v in cols], f2.source.gen_count))
    return PB, pr1, pr2


def direct_sum_invariants(*parts: tuple[int, list[int]]) -> tuple[int, list[int]]:
    """Invariant factors of a direct sum, recomputed through a diagonal presentation."""
    free = 0
    mods = []
    for r, tors in parts:
        free += r
        mods.extend(tors)
    G = FGGroup(len(mods), [[m if i == j else 0 for i in range(len(mods))] for j, m in enumerate(mods)])
    return free + G.free_rank, G.torsion
