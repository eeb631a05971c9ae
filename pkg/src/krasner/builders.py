"""Constructors for the structure families used throughout the test corpus.

Three families cover the interesting behaviour at desk scale:

* ``quotient_by_units``: orbits of Z_modulus under a subgroup of its unit
  group, with setwise coset hyperaddition and representative multiplication.
  The trivial subgroup reproduces the ordinary ring Z_modulus.
* ``chain``: a totally ordered carrier with the max/initial-segment
  hyperaddition and truncated addition (Lukasiewicz) as multiplication.
* ``product``: componentwise product of two structures of equal arities.

``from_tables`` builds a structure from raw table data without judging the
axioms; callers run ``check_axioms`` explicitly.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product as iproduct
from math import gcd
from typing import Iterable, Mapping, Sequence

from .core import HyperringTable
from .errors import ArityError, TableError

_key = lambda args: tuple(sorted(args))


def quotient_by_units(modulus: int, units: Iterable[int], n: int = 2,
                      name: str | None = None) -> HyperringTable:
    """Quotient of Z_modulus by a subgroup of its unit group.

    Carrier elements are the multiplication orbits aG, labelled by their
    least representative.  Hyperaddition of two orbits is the set of orbits
    met by the elementwise sum; multiplication of n orbits is the orbit of
    the representative product, whose independence from the choice of
    representatives is verified exhaustively rather than assumed.
    """
    if modulus < 2:
        raise TableError("modulus must be at least 2")
    group = sorted({u % modulus for u in units})
    if 1 not in group:
        raise TableError("unit subgroup must contain 1")
    for u in group:
        if gcd(u, modulus) != 1:
            raise TableError(f"{u} is not a unit modulo {modulus}")
        for v in group:
            if (u * v) % modulus not in group:
                raise TableError(
                    f"unit set not closed: {u}*{v} mod {modulus} escapes"
                )

    orbit = {a: frozenset((a * u) % modulus for u in group) for a in range(modulus)}
    classes = sorted({orbit[a] for a in range(modulus)}, key=min)
    cls_index = {c: i for i, c in enumerate(classes)}
    cls_of = [cls_index[orbit[a]] for a in range(modulus)]
    labels = [str(min(c)) for c in classes]
    size = len(classes)

    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for i, j in combinations_with_replacement(range(size), 2):
        f_table[(i, j)] = frozenset(
            cls_of[(x + y) % modulus] for x in classes[i] for y in classes[j]
        )

    g_table: dict[tuple[int, ...], int] = {}
    for k in combinations_with_replacement(range(size), n):
        vals = set()
        for choice in iproduct(*[classes[i] for i in k]):
            p = 1
            for x in choice:
                p = (p * x) % modulus
            vals.add(cls_of[p])
        if len(vals) != 1:
            raise TableError(
                f"product of orbits {[labels[i] for i in k]} depends on representatives: "
                f"{sorted(labels[v] for v in vals)}"
            )
        g_table[k] = vals.pop()

    negation = [cls_of[(-min(classes[i])) % modulus] for i in range(size)]
    if name is None:
        name = f"quotient_zn({modulus},{{{','.join(map(str, group))}}},n={n})"
    return HyperringTable(name, 2, n, labels, f_table, g_table,
                          zero=cls_of[0], one=cls_of[1], negation=negation)


def chain(k: int, n: int = 2) -> HyperringTable:
    """Totally ordered carrier e0 < ... < e(k-1).

    Hyperaddition: f(p,q) = {max(p,q)} for p != q, the initial segment
    [e0..p] for p = q.  Multiplication is truncated addition of indices,
    g(x1..xn) = max(0, sum(xi) - (n-1)(k-1)), the n-ary Lukasiewicz product;
    plain minimum fails distributivity against this hyperaddition for k >= 3,
    truncated addition satisfies every axiom.
    """
    if k < 2:
        raise TableError("chain needs at least two elements")
    labels = [f"e{i}" for i in range(k)]
    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for p, q in combinations_with_replacement(range(k), 2):
        f_table[(p, q)] = frozenset(range(p + 1)) if p == q else frozenset([max(p, q)])
    g_table: dict[tuple[int, ...], int] = {}
    offset = (n - 1) * (k - 1)
    for t in combinations_with_replacement(range(k), n):
        g_table[t] = max(0, sum(t) - offset)
    return HyperringTable(f"chain({k},n={n})", 2, n, labels, f_table, g_table,
                          zero=0, one=k - 1, negation=list(range(k)))


def product(a: HyperringTable, b: HyperringTable,
            name: str | None = None) -> HyperringTable:
    """Componentwise product; requires equal hyperaddition and product arities."""
    if a.m != b.m or a.n != b.n:
        raise ArityError(
            f"arity mismatch: ({a.m},{a.n}) vs ({b.m},{b.n})"
        )
    size_b = b.size
    pair_index = lambda x, y: x * size_b + y
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]

    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for key in combinations_with_replacement(range(a.size * b.size), a.m):
        xs = tuple(p // size_b for p in key)
        ys = tuple(p % size_b for p in key)
        fa = a.f(*xs)
        fb = b.f(*ys)
        f_table[key] = frozenset(pair_index(u, v) for u in fa for v in fb)

    g_table: dict[tuple[int, ...], int] = {}
    for key in combinations_with_replacement(range(a.size * b.size), a.n):
        xs = tuple(p // size_b for p in key)
        ys = tuple(p % size_b for p in key)
        g_table[key] = pair_index(a.g(*xs), b.g(*ys))

    negation = [
        pair_index(a.negation[x], b.negation[y])
        for x in range(a.size) for y in range(b.size)
    ]
    if name is None:
        name = f"product({a.name},{b.name})"
    return HyperringTable(
        name, a.m, a.n, labels, f_table, g_table,
        zero=pair_index(a.zero, b.zero), one=pair_index(a.one, b.one),
        negation=negation,
    )


def from_tables(
    name: str,
    labels: Sequence[str],
    f_entries: Mapping[tuple[str, ...], Iterable[str]],
    g_entries: Mapping[tuple[str, ...], str],
    zero: str,
    one: str,
    negation: Mapping[str, str],
) -> HyperringTable:
    """Build a structure from label-keyed raw tables.

    Arities are inferred from the entries; completeness, value ranges and the
    negation involution are enforced, the hyperring axioms are not.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise TableError("duplicate element label")

    def resolve(lab: str) -> int:
        if lab not in index:
            raise TableError(f"unknown element label {lab!r}")
        return index[lab]

    arities_f = {len(k) for k in f_entries}
    arities_g = {len(k) for k in g_entries}
    if len(arities_f) != 1:
        raise TableError(f"inconsistent f arities: {sorted(arities_f)}")
    if len(arities_g) != 1:
        raise TableError(f"inconsistent g arities: {sorted(arities_g)}")
    m, n = arities_f.pop(), arities_g.pop()

    f_table = {
        tuple(resolve(x) for x in k): frozenset(resolve(v) for v in vs)
        for k, vs in f_entries.items()
    }
    g_table = {
        tuple(resolve(x) for x in k): resolve(v) for k, v in g_entries.items()
    }
    neg = list(range(len(labels)))
    for src, dst in negation.items():
        neg[resolve(src)] = resolve(dst)
    return HyperringTable(name, m, n, labels, f_table, g_table,
                          zero=resolve(zero), one=resolve(one), negation=neg)
