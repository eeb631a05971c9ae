"""Finite rings of fractions: localization, saturation, extension, contraction.

Pairs (a, s) with s in the denominator set are identified when some u in S
multiplies the hyperdifference of the cross products into zero:

    (a, s) ~ (b, t)  iff  exists u in S with
    0 in g(u, f(g(a,t,1..), -g(b,s,1..), 0..), 1..)

The identification is a *reconstruction*: it is not taken on faith.  The
constructor exhaustively verifies that the relation is an equivalence, that
both induced operations are independent of representatives, and that the
resulting table satisfies every hyperring axiom; any failure raises
:class:`~krasner.errors.ReconstructionError` with a witness instead of
producing a silently wrong structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .core import HyperringTable
from .errors import PreconditionError, ReconstructionError
from .ideals import _cache, generate_hyperideal, mul_set


@dataclass(frozen=True)
class FractionStructure:
    base: HyperringTable
    denominators: frozenset[int]
    table: HyperringTable
    pair_class: dict[tuple[int, int], int]
    class_members: tuple[tuple[tuple[int, int], ...], ...]
    canonical_map: tuple[int, ...]
    zero_kernel: frozenset[int]

    def image_mul_set(self, S1) -> frozenset[int]:
        """Classes {s/t : s in S1, t in denominators}, as a set in the localized table."""
        out = frozenset(
            self.pair_class[(s, t)] for s in S1 for t in self.denominators
        )
        return mul_set(self.table, out)


def localize(A: HyperringTable, S) -> FractionStructure:
    S = mul_set(A, S)
    cache = _cache(A)
    key = ("localize", S)
    if key not in cache:
        cache[key] = _build_localization(A, S)
    return cache[key]


def _build_localization(A: HyperringTable, S: frozenset[int]) -> FractionStructure:
    dens = sorted(S)
    pairs = [(a, s) for a in A.elements for s in dens]
    pidx = {p: i for i, p in enumerate(pairs)}
    n_pairs = len(pairs)

    def related(p, q) -> bool:
        a, s = p
        b, t = q
        diff = A.f_with_zero_pad(A.mul2(a, t), A.negation[A.mul2(b, s)])
        return any(
            any(A.mul2(u, c) == A.zero for c in diff) for u in dens
        )

    rel = [[False] * n_pairs for _ in range(n_pairs)]
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            rel[i][j] = related(p, q)
    for i in range(n_pairs):
        if not rel[i][i]:
            raise ReconstructionError(f"fraction relation not reflexive at {pairs[i]}")
        for j in range(i + 1, n_pairs):
            if rel[i][j] != rel[j][i]:
                raise ReconstructionError(
                    f"fraction relation not symmetric at {pairs[i]}, {pairs[j]}"
                )

    # union-find over the relation, then confirm it matches class equality
    parent = list(range(n_pairs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n_pairs):
        for j in range(i + 1, n_pairs):
            if rel[i][j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    roots = sorted({find(i) for i in range(n_pairs)})
    root_to_cls = {r: c for c, r in enumerate(roots)}
    cls = [root_to_cls[find(i)] for i in range(n_pairs)]
    for i in range(n_pairs):
        for j in range(n_pairs):
            if rel[i][j] != (cls[i] == cls[j]):
                raise ReconstructionError(
                    f"fraction relation not transitive: {pairs[i]} ~ {pairs[j]} "
                    f"disagrees with the class partition"
                )

    n_cls = len(roots)
    members: list[list[tuple[int, int]]] = [[] for _ in range(n_cls)]
    for i, p in enumerate(pairs):
        members[cls[i]].append(p)
    reps = [m[0] for m in members]  # pairs are generated in sorted order
    pair_class = {p: cls[i] for i, p in enumerate(pairs)}

    labels = [f"{A.label(a)}/{A.label(s)}" for a, s in reps]
    s0 = dens[0]
    zero_cls = pair_class[(A.zero, s0)]
    one_cls = pair_class[(s0, s0)]

    def g_of_pairs(ps):
        num = A.g(*[a for a, _ in ps])
        den = A.nary_product([s for _, s in ps])
        return pair_class[(num, den)]

    def f_of_pairs(ps):
        den = A.nary_product([s for _, s in ps])
        nums = []
        for i, (a, _s) in enumerate(ps):
            others = [ps[j][1] for j in range(len(ps)) if j != i]
            nums.append(A.nary_product([a] + others))
        return frozenset(pair_class[(y, den)] for y in A.f(*nums))

    g_table: dict[tuple[int, ...], int] = {}
    for ck in combinations_with_replacement(range(n_cls), A.n):
        g_table[ck] = g_of_pairs([reps[c] for c in ck])
    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for ck in combinations_with_replacement(range(n_cls), A.m):
        f_table[ck] = f_of_pairs([reps[c] for c in ck])

    # well-definedness: every representative choice must reproduce the tables
    for pk in combinations_with_replacement(range(n_pairs), A.n):
        ck = tuple(sorted(cls[i] for i in pk))
        got = g_of_pairs([pairs[i] for i in pk])
        if got != g_table[ck]:
            raise ReconstructionError(
                f"product not well-defined on classes {ck}: representatives "
                f"{[pairs[i] for i in pk]} give a different class"
            )
    for pk in combinations_with_replacement(range(n_pairs), A.m):
        ck = tuple(sorted(cls[i] for i in pk))
        got = f_of_pairs([pairs[i] for i in pk])
        if got != f_table[ck]:
            raise ReconstructionError(
                f"hyperaddition not well-defined on classes {ck}"
            )

    negation = [0] * n_cls
    for c, (a, s) in enumerate(reps):
        negation[c] = pair_class[(A.negation[a], s)]
    for p in pairs:
        a, s = p
        if pair_class[(A.negation[a], s)] != negation[pair_class[p]]:
            raise ReconstructionError(f"negation not well-defined at {p}")

    set_label = "{" + ",".join(A.label_set(S)) + "}"
    table = HyperringTable(
        f"frac({A.name},{set_label})", A.m, A.n, labels, f_table, g_table,
        zero=zero_cls, one=one_cls, negation=negation,
    )
    report = table.check_axioms()
    if not report.ok:
        first = report.violations[0]
        raise ReconstructionError(
            f"localized structure fails {first.axiom} at {first.witness}"
        )

    zero_kernel = frozenset(
        x for x in A.elements if any(A.mul2(x, t) == A.zero for t in dens)
    )
    if A.one in S:
        canonical = tuple(pair_class[(a, A.one)] for a in A.elements)
    else:
        canonical = tuple(pair_class[(A.mul2(a, s0), s0)] for a in A.elements)

    return FractionStructure(
        base=A,
        denominators=S,
        table=table,
        pair_class=pair_class,
        class_members=tuple(tuple(m) for m in members),
        canonical_map=canonical,
        zero_kernel=zero_kernel,
    )


def extend(F: FractionStructure, Q) -> frozenset[int]:
    """Hyperideal of the localized structure generated by {q/s}."""
    seed = {F.pair_class[(q, s)] for q in Q for s in F.denominators}
    return generate_hyperideal(F.table, seed)


def contract(F: FractionStructure, J) -> frozenset[int]:
    """Pullback of a localized hyperideal along the canonical map."""
    J = frozenset(J)
    return frozenset(a for a in F.base.elements if F.canonical_map[a] in J)


def saturate(A: HyperringTable, S) -> frozenset[int]:
    """Elements whose canonical image is invertible in the localization.

    Requires the scalar identity in S (the canonical map must send a to a/1).
    The result always contains S and is itself a multiplicative set.
    """
    S = mul_set(A, S)
    if A.one not in S:
        raise PreconditionError("saturation requires the scalar identity in S")
    F = localize(A, S)
    T = F.table
    pad = (T.one,) * (T.n - 2)
    out = set()
    for x in A.elements:
        cx = F.canonical_map[x]
        if any(T.g(cx, c, *pad) == T.one for c in T.elements):
            out.add(x)
    result = mul_set(A, out)
    if not S <= result:
        raise ReconstructionError("saturation lost part of S")
    return result
