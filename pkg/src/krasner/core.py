"""Finite commutative Krasner (m,n)-hyperrings as explicit operation tables.

A structure is a finite carrier together with an m-ary hyperaddition ``f``
(set-valued) and an n-ary multiplication ``g`` (single-valued), a designated
absorbing ``zero``, a scalar identity ``one`` and a negation map.
Commutativity is structural: both tables are keyed by sorted index tuples,
so permuted arguments cannot disagree by construction.

Constructing a table only validates its *shape* (complete multiset keys,
nonempty hyperaddition values, ids in range, negation an involution fixing
zero).  Whether the data actually satisfies the hyperring axioms is decided
by :meth:`HyperringTable.check_axioms`, which scans every axiom exhaustively
and reports the first witness per violated axiom instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product as iproduct
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, TableError, UnknownElementError

Element = int


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violations: tuple[AxiomViolation, ...]

    def names(self) -> list[str]:
        return [v.axiom for v in self.violations]


def _key(args: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(args))


class HyperringTable:
    """Immutable table-backed commutative Krasner (m,n)-hyperring candidate."""

    def __init__(
        self,
        name: str,
        m: int,
        n: int,
        labels: Sequence[str],
        f_table: Mapping[tuple[int, ...], frozenset[int]],
        g_table: Mapping[tuple[int, ...], int],
        zero: int,
        one: int,
        negation: Sequence[int],
    ):
        if m < 2 or n < 2:
            raise TableError(f"arities must be at least 2, got m={m}, n={n}")
        size = len(labels)
        if size == 0:
            raise TableError("empty carrier")
        if len(set(labels)) != size:
            raise TableError("duplicate element label")
        self.name = name
        self.m = m
        self.n = n
        self.size = size
        self.labels = tuple(str(x) for x in labels)
        self.zero = zero
        self.one = one
        self.negation = tuple(negation)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

        members = range(size)
        for x in (zero, one):
            if not 0 <= x < size:
                raise TableError(f"zero/one id {x} out of range")
        if len(self.negation) != size or any(not 0 <= x < size for x in self.negation):
            raise TableError("negation map must cover the carrier")
        if any(self.negation[self.negation[x]] != x for x in members):
            raise TableError("negation must be an involution")
        if self.negation[zero] != zero:
            raise TableError("negation must fix zero")

        f_norm: dict[tuple[int, ...], frozenset[int]] = {}
        for raw_key, value in f_table.items():
            k = _key(raw_key)
            if len(k) != m:
                raise TableError(f"f key {raw_key} has arity {len(k)}, expected {m}")
            val = frozenset(value)
            if not val:
                raise TableError(f"empty hyperoperation value at f{raw_key}")
            if any(not 0 <= x < size for x in k) or any(not 0 <= x < size for x in val):
                raise TableError(f"f entry {raw_key} out of range")
            if k in f_norm and f_norm[k] != val:
                raise TableError(f"conflicting f entries for multiset {k}")
            f_norm[k] = val
        g_norm: dict[tuple[int, ...], int] = {}
        for raw_key, value in g_table.items():
            k = _key(raw_key)
            if len(k) != n:
                raise TableError(f"g key {raw_key} has arity {len(k)}, expected {n}")
            if any(not 0 <= x < size for x in k) or not 0 <= value < size:
                raise TableError(f"g entry {raw_key} out of range")
            if k in g_norm and g_norm[k] != value:
                raise TableError(f"conflicting g entries for multiset {k}")
            g_norm[k] = value

        for k in combinations_with_replacement(members, m):
            if k not in f_norm:
                raise TableError(f"missing f entry for multiset {k}")
        for k in combinations_with_replacement(members, n):
            if k not in g_norm:
                raise TableError(f"missing g entry for multiset {k}")
        self._f = f_norm
        self._g = g_norm

        one_pad = (one,) * (n - 2)
        self._mul2 = [
            [self._g[_key((x, y) + one_pad)] for y in members] for x in members
        ]

    # -- basic access -------------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.size)

    def label(self, x: int) -> str:
        return self.labels[x]

    def label_set(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(xs)]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElementError(
                f"unknown element {label!r} in structure {self.name!r}"
            ) from None

    def _check_args(self, args: tuple[int, ...], arity: int, op: str) -> None:
        if len(args) != arity:
            raise ArityError(f"{op} expects {arity} arguments, got {len(args)}")
        for x in args:
            if not 0 <= x < self.size:
                raise UnknownElementError(f"element id {x} outside carrier of {self.name!r}")

    # -- operations ---------------------------------------------------------

    def f(self, *args: int) -> frozenset[int]:
        self._check_args(args, self.m, "f")
        return self._f[_key(args)]

    def g(self, *args: int) -> int:
        self._check_args(args, self.n, "g")
        return self._g[_key(args)]

    def f_on_sets(self, *sets: Iterable[int]) -> frozenset[int]:
        return self._on_sets(sets, self.m, lambda t: self._f[_key(t)], True)

    def g_on_sets(self, *sets: Iterable[int]) -> frozenset[int]:
        return self._on_sets(sets, self.n, lambda t: self._g[_key(t)], False)

    def _on_sets(self, sets, arity, table, setvalued) -> frozenset[int]:
        if len(sets) != arity:
            raise ArityError(f"expected {arity} argument sets, got {len(sets)}")
        norm = []
        for s in sets:
            s = frozenset(s)
            if not s:
                raise ArityError("empty input set")
            for x in s:
                if not 0 <= x < self.size:
                    raise UnknownElementError(f"element id {x} outside carrier")
            norm.append(sorted(s))
        out: set[int] = set()
        for choice in iproduct(*norm):
            v = table(choice)
            if setvalued:
                out |= v
            else:
                out.add(v)
        return frozenset(out)

    def g_iterated(self, l: int, args: Sequence[int]) -> int:
        """Left-nested l-fold composition of g over l(n-1)+1 arguments."""
        if l < 1:
            raise ArityError("iteration depth must be positive")
        want = l * (self.n - 1) + 1
        if len(args) != want:
            raise ArityError(f"iterated g of depth {l} expects {want} arguments, got {len(args)}")
        acc = self.g(*args[: self.n])
        pos = self.n
        for _ in range(l - 1):
            acc = self.g(acc, *args[pos : pos + self.n - 1])
            pos += self.n - 1
        return acc

    def mul2(self, x: int, y: int) -> int:
        """Binary product g(x, y, 1, ..., 1)."""
        return self._mul2[x][y]

    def nary_product(self, xs: Sequence[int]) -> int:
        """Product of arbitrarily many factors, folded through mul2."""
        if not xs:
            raise ArityError("empty product")
        acc = xs[0]
        for x in xs[1:]:
            acc = self._mul2[acc][x]
        return acc

    def power(self, x: int, k: int) -> int:
        """k-th power: p1 = x, p(k+1) = g(pk, x, 1, ..., 1)."""
        if k < 1:
            raise ArityError("exponent must be positive")
        acc = x
        for _ in range(k - 1):
            acc = self._mul2[acc][x]
        return acc

    def neg(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise UnknownElementError(f"element id {x} outside carrier")
        return self.negation[x]

    def neg_set(self, xs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.negation[x] for x in xs)

    def f_with_zero_pad(self, x: int, y: int) -> frozenset[int]:
        """f(x, y, 0, ..., 0): the binary hypersum."""
        return self._f[_key((x, y) + (self.zero,) * (self.m - 2))]

    # -- axiom engine -------------------------------------------------------

    def check_axioms(self) -> AxiomReport:
        violations: list[AxiomViolation] = []
        lab = self.labels

        def witness(axiom: str, tup: tuple, detail: str) -> None:
            violations.append(AxiomViolation(axiom, tuple(lab[x] for x in tup), detail))

        members = range(self.size)
        m, n = self.m, self.n

        # (a) associativity of f: all splits of a (2m-1)-multiset agree
        for t in combinations_with_replacement(members, 2 * m - 1):
            seen = None
            for pos in {c for c in combinations(range(2 * m - 1), m)}:
                inner = tuple(t[i] for i in pos)
                outer = tuple(t[i] for i in range(2 * m - 1) if i not in pos)
                val = self.f_on_sets(self._f[_key(inner)], *[{x} for x in outer])
                if seen is None:
                    seen = val
                elif val != seen:
                    witness("f-associativity", t, "nested evaluations disagree across split positions")
                    break
            else:
                continue
            break

        # (b) reproducibility: b in f(a_1..a_{m-1}, x) solvable for every a, b
        for a in combinations_with_replacement(members, m - 1):
            covered: set[int] = set()
            for x in members:
                covered |= self._f[_key(a + (x,))]
            if len(covered) != self.size:
                missing = min(set(members) - covered)
                witness("reproducibility", a + (missing,), "element unreachable in this row")
                break

        # (c) the declared zero is the unique scalar neutral of f
        neutral = lambda e: all(self._f[_key((x,) + (e,) * (m - 1))] == frozenset([x]) for x in members)
        if not neutral(self.zero):
            bad = next(x for x in members if self._f[_key((x,) + (self.zero,) * (m - 1))] != frozenset([x]))
            witness("scalar-neutral", (bad,), "f(x, 0, ..., 0) differs from {x}")
        else:
            for e in members:
                if e != self.zero and neutral(e):
                    witness("scalar-neutral-unique", (e,), "second scalar neutral element")
                    break

        # (d) unique inverses matching the declared negation
        for x in members:
            inverses = [y for y in members if self.zero in self.f_with_zero_pad(x, y)]
            if inverses != [self.negation[x]]:
                witness("unique-inverse", (x,), f"inverse candidates {[lab[y] for y in inverses]}")
                break

        # (e) reversibility
        for t in combinations_with_replacement(members, m):
            ok = True
            for z in self._f[_key(t)]:
                for i in range(m):
                    rest = tuple(self.negation[t[j]] for j in range(m) if j != i)
                    if t[i] not in self._f[_key((z,) + rest)]:
                        witness("reversibility", t + (z,), f"slot {i} cannot be recovered")
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break

        # (f) associativity of g
        for t in combinations_with_replacement(members, 2 * n - 1):
            seen_g = None
            for pos in {c for c in combinations(range(2 * n - 1), n)}:
                inner = tuple(t[i] for i in pos)
                outer = tuple(t[i] for i in range(2 * n - 1) if i not in pos)
                val = self._g[_key((self._g[_key(inner)],) + outer)]
                if seen_g is None:
                    seen_g = val
                elif val != seen_g:
                    witness("g-associativity", t, "nested products disagree across split positions")
                    break
            else:
                continue
            break

        # (g) distributivity of g over f (commutativity makes one slot enough)
        done = False
        for a in combinations_with_replacement(members, n - 1):
            translate = [self._g[_key(a + (x,))] for x in members]
            for xs, fval in self._f.items():
                lhs = frozenset(translate[y] for y in fval)
                rhs = self._f[_key(tuple(translate[x] for x in xs))]
                if lhs != rhs:
                    witness("distributivity", a + xs, "g(a.., f(x..)) differs from f(g(a.., x)..)")
                    done = True
                    break
            if done:
                break

        # (h) zero absorbs under g
        for a in combinations_with_replacement(members, n - 1):
            if self._g[_key(a + (self.zero,))] != self.zero:
                witness("zero-absorption", a, "product with zero is nonzero")
                break

        # (i) the declared one is a scalar identity of g
        for x in members:
            if self._g[_key((x,) + (self.one,) * (n - 1))] != x:
                witness("one-identity", (x,), "g(x, 1, ..., 1) differs from x")
                break

        return AxiomReport(ok=not violations, violations=tuple(violations))

    # -- misc ---------------------------------------------------------------

    def signature(self) -> tuple:
        """Canonical content key; equal signatures mean equal tables."""
        return (
            self.m,
            self.n,
            self.size,
            self.zero,
            self.one,
            self.negation,
            tuple(sorted((k, tuple(sorted(v))) for k, v in self._f.items())),
            tuple(sorted(self._g.items())),
        )

    def same_tables(self, other: "HyperringTable") -> bool:
        return self.signature() == other.signature()

    def replace_f_entry(self, args: Sequence[int], value: Iterable[int]) -> "HyperringTable":
        """Copy with one hyperaddition entry overridden (used to forge violations)."""
        f_new = dict(self._f)
        f_new[_key(args)] = frozenset(value)
        return HyperringTable(
            self.name + "*", self.m, self.n, self.labels, f_new, self._g,
            self.zero, self.one, self.negation,
        )

    def __repr__(self) -> str:
        return f"HyperringTable({self.name!r}, m={self.m}, n={self.n}, size={self.size})"
