"""Homomorphisms between structures, preimages, and subhyperring inclusions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .core import HyperringTable
from .errors import PreconditionError

_key = lambda args: tuple(sorted(args))


@dataclass(frozen=True)
class Homomorphism:
    source: HyperringTable
    target: HyperringTable
    mapping: tuple[int, ...]
    injective: bool

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self, xs) -> frozenset[int]:
        return frozenset(self.mapping[x] for x in xs)


def check_homomorphism(source: HyperringTable, target: HyperringTable,
                       mapping) -> tuple[bool, str | None]:
    """Verify the structure-map conditions exhaustively.

    Requires a total map, setwise compatibility with hyperaddition,
    compatibility with multiplication, and preservation of the scalar
    identity.  Zero preservation follows but is checked anyway.
    """
    mapping = tuple(mapping)
    if len(mapping) != source.size:
        return False, "map must be total on the source carrier"
    if any(not 0 <= y < target.size for y in mapping):
        return False, "map leaves the target carrier"
    if source.m != target.m or source.n != target.n:
        return False, "arity mismatch between source and target"
    if mapping[source.one] != target.one:
        return False, "scalar identity not preserved"
    if mapping[source.zero] != target.zero:
        return False, "zero not preserved"
    for t in combinations_with_replacement(range(source.size), source.m):
        lhs = frozenset(mapping[y] for y in source.f(*t))
        rhs = target.f(*[mapping[x] for x in t])
        if lhs != rhs:
            return False, (
                f"hyperaddition image mismatch at {tuple(source.labels[x] for x in t)}"
            )
    for t in combinations_with_replacement(range(source.size), source.n):
        if mapping[source.g(*t)] != target.g(*[mapping[x] for x in t]):
            return False, (
                f"product image mismatch at {tuple(source.labels[x] for x in t)}"
            )
    return True, None


def homomorphism(source: HyperringTable, target: HyperringTable,
                 mapping) -> Homomorphism:
    ok, detail = check_homomorphism(source, target, mapping)
    if not ok:
        raise PreconditionError(f"not a homomorphism: {detail}")
    mapping = tuple(mapping)
    return Homomorphism(
        source=source, target=target, mapping=mapping,
        injective=len(set(mapping)) == source.size,
    )


def preimage(h: Homomorphism, Q2) -> frozenset[int]:
    Q2 = frozenset(Q2)
    return frozenset(x for x in h.source.elements if h.mapping[x] in Q2)


def identity_homomorphism(A: HyperringTable) -> Homomorphism:
    return Homomorphism(A, A, tuple(range(A.size)), True)


def subhyperring(A: HyperringTable, subset) -> tuple[HyperringTable, Homomorphism]:
    """Restrict A to a carrier subset closed under all operations.

    The subset must contain zero and one, be closed under negation and
    multiplication, and every hyperaddition value over it must stay inside.
    Returns the restricted structure with its inclusion homomorphism.
    """
    sub = sorted(frozenset(subset))
    position = {x: i for i, x in enumerate(sub)}
    for needed in (A.zero, A.one):
        if needed not in position:
            raise PreconditionError(
                f"subhyperring must contain {A.label(needed)}"
            )
    for x in sub:
        if A.negation[x] not in position:
            raise PreconditionError(f"subset not closed under negation at {A.label(x)}")
    f_table = {}
    for t in combinations_with_replacement(range(len(sub)), A.m):
        val = A.f(*[sub[i] for i in t])
        if not val <= frozenset(sub):
            raise PreconditionError(
                f"subset not closed under hyperaddition at "
                f"{tuple(A.labels[sub[i]] for i in t)}"
            )
        f_table[t] = frozenset(position[y] for y in val)
    g_table = {}
    for t in combinations_with_replacement(range(len(sub)), A.n):
        val = A.g(*[sub[i] for i in t])
        if val not in position:
            raise PreconditionError(
                f"subset not closed under multiplication at "
                f"{tuple(A.labels[sub[i]] for i in t)}"
            )
        g_table[t] = position[val]
    table = HyperringTable(
        f"sub({A.name},{{{','.join(A.labels[x] for x in sub)}}})",
        A.m, A.n, [A.labels[x] for x in sub], f_table, g_table,
        zero=position[A.zero], one=position[A.one],
        negation=[position[A.negation[x]] for x in sub],
    )
    inclusion = homomorphism(table, A, tuple(sub))
    return table, inclusion
