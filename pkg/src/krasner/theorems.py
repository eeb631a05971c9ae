"""Exhaustive verification of the structural laws on a finite corpus.

Every law is a universally quantified statement over structures, hyperideals
and multiplicative sets.  ``build_corpus`` materializes a deterministic
family of small structures; ``run_suite`` instantiates each law over every
hypothesis-satisfying binding and reports instance counts and
counterexamples.  Nothing is sampled: the corpus is small by design and the
laws are checked on all of it.

Two negative controls (N1, N2) deliberately drop one hypothesis each and
*must* find counterexamples; they guard against a suite that passes because
it tests nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .builders import chain, product, quotient_by_units
from .classify import cached_verdict
from .core import HyperringTable
from .errors import AxiomViolationError, CapExceededError, KrasnerError, PreconditionError
from .fractions import contract, extend, localize, saturate
from .ideals import (
    colon,
    enumerate_hyperideals,
    enumerate_mul_sets,
    fold_product_sets,
    intersect_ideals,
    is_hyperideal,
    product_ideal,
    set_product,
)
from .morphisms import Homomorphism, homomorphism, identity_homomorphism, preimage
from .radical import product_multisets, radical_members


@dataclass(frozen=True)
class CorpusConfig:
    moduli: tuple[int, ...] = (4, 6, 8, 9, 12)
    chain_sizes: tuple[int, ...] = (2, 3, 4, 5)
    arities: tuple[int, ...] = (2, 3)
    mul_set_cap: int = 4
    max_structure_size: int = 16
    ideal_tuple_size_cap: int = 12   # strongly-type scans only below this carrier size
    localization_size_cap: int = 12  # fraction-based laws only below this carrier size
    product_mul_set_cap: int = 2     # per-factor cap for product-law multiplicative sets


class CorpusEntry:
    def __init__(self, table: HyperringTable, cap: int):
        self.table = table
        self.cap = cap

    @property
    def name(self) -> str:
        return self.table.name

    @property
    def ideals(self) -> list[frozenset[int]]:
        return enumerate_hyperideals(self.table)

    def mul_sets(self, cap: int | None = None) -> list[frozenset[int]]:
        return enumerate_mul_sets(self.table, cap or self.cap)


@dataclass
class Corpus:
    entries: list[CorpusEntry]
    product_pairs: list[tuple[CorpusEntry, CorpusEntry, CorpusEntry]]
    triple_products: list[tuple[CorpusEntry, CorpusEntry]]  # (base, base^3)
    homs: list[tuple[Homomorphism, CorpusEntry, CorpusEntry]]
    config: CorpusConfig

    @property
    def structure_names(self) -> list[str]:
        return [e.name for e in self.entries]


@dataclass
class PropertyResult:
    name: str
    description: str
    instances: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    control: bool = False
    note: str | None = None

    @property
    def vacuous(self) -> bool:
        return self.instances == 0 and not self.control

    @property
    def passed(self) -> bool:
        if self.control:
            return len(self.counterexamples) > 0
        return not self.counterexamples

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"PROP {self.name} INSTANCES {self.instances} {verdict}"
        if self.vacuous:
            out += " VACUOUS"
        if self.counterexamples and not self.control:
            out += f" witness={self.counterexamples[0]}"
        return out


def _all_unit_subgroups(modulus: int) -> list[tuple[int, ...]]:
    from math import gcd
    units = [u for u in range(1, modulus) if gcd(u, modulus) == 1]
    subs = []
    for mask in range(1 << len(units)):
        sub = {units[i] for i in range(len(units)) if mask >> i & 1}
        if 1 not in sub:
            continue
        if all((a * b) % modulus in sub for a in sub for b in sub):
            subs.append(tuple(sorted(sub)))
    return sorted(subs, key=lambda s: (len(s), s))


def build_corpus(
    config: CorpusConfig = CorpusConfig(),
    extra_tables: tuple[HyperringTable, ...] = (),
    extra_homs: tuple[Homomorphism, ...] = (),
) -> Corpus:
    """Deterministic corpus: unit quotients, chains, and small products."""
    cap = config.mul_set_cap
    entries: list[CorpusEntry] = []

    def admit(table: HyperringTable) -> CorpusEntry:
        if table.size > config.max_structure_size:
            raise CapExceededError(
                f"{table.name}: carrier size {table.size} exceeds cap "
                f"{config.max_structure_size}"
            )
        report = table.check_axioms()
        if not report.ok:
            raise AxiomViolationError(
                f"corpus structure {table.name} fails axioms: {report.names()}"
            )
        entry = CorpusEntry(table, cap)
        entries.append(entry)
        return entry

    per_arity: dict[int, list[CorpusEntry]] = {}
    for n in config.arities:
        group: list[CorpusEntry] = []
        for modulus in config.moduli:
            for sub in _all_unit_subgroups(modulus):
                group.append(admit(quotient_by_units(modulus, sub, n)))
        for k in config.chain_sizes:
            group.append(admit(chain(k, n)))
        per_arity[n] = group

    product_pairs: list[tuple[CorpusEntry, CorpusEntry, CorpusEntry]] = []
    triple_products: list[tuple[CorpusEntry, CorpusEntry]] = []
    for n in config.arities:
        group = sorted(per_arity[n], key=lambda e: (e.table.size, e.name))
        smallest = group[:2]
        for i, a in enumerate(smallest):
            for b in smallest[i:]:
                prod_entry = admit(product(a.table, b.table))
                product_pairs.append((a, b, prod_entry))
        # the showcase pair: the units quotient of Z12 against the 2-chain
        zq = next((e for e in per_arity[n]
                   if e.name.startswith(f"quotient_zn(12,{{1,5,7,11}}")), None)
        ch2 = next((e for e in per_arity[n] if e.name == f"chain(2,n={n})"), None)
        if zq is not None and ch2 is not None:
            big = product(zq.table, ch2.table)
            if big.size <= config.max_structure_size:
                product_pairs.append((zq, ch2, CorpusEntry(big, cap)))
        # minimal triple product for the k-fold product law
        base = next((e for e in per_arity[n]
                     if e.name.startswith(f"quotient_zn(4,{{1,3}}")), None)
        if base is not None:
            triple = product(product(base.table, base.table), base.table)
            triple_products.append((base, CorpusEntry(triple, cap)))

    for table in extra_tables:
        admit(table)

    homs: list[tuple[Homomorphism, CorpusEntry, CorpusEntry]] = []
    for entry in entries:
        if entry.table.size <= 6:
            homs.append((identity_homomorphism(entry.table), entry, entry))
    for a, b, prod_entry in product_pairs:
        if a is b:
            size = a.table.size
            mapping = [ (p % size) * size + (p // size) for p in range(size * size) ]
            homs.append((homomorphism(prod_entry.table, prod_entry.table, mapping),
                         prod_entry, prod_entry))
        else:
            flipped = CorpusEntry(product(b.table, a.table), cap)
            sb = b.table.size
            sa = a.table.size
            mapping = [(p % sb) * sa + (p // sb) for p in range(sa * sb)]
            homs.append((homomorphism(prod_entry.table, flipped.table, mapping),
                         prod_entry, flipped))
    # diagonal embeddings for ordinary (singleton-hyperaddition) rings
    for n in config.arities:
        for entry in per_arity[n]:
            t = entry.table
            if t.size > 4 or t.size * t.size > config.max_structure_size:
                continue
            if all(len(t.f(*k)) == 1
                   for k in combinations_with_replacement(range(t.size), t.m)):
                square = CorpusEntry(product(t, t), cap)
                mapping = [x * t.size + x for x in range(t.size)]
                homs.append((homomorphism(t, square.table, mapping), entry, square))
    # canonical maps of unit-denominator localizations are embeddings
    for n in config.arities:
        for entry in per_arity[n][:2]:
            F = localize(entry.table, frozenset([entry.table.one]))
            homs.append((
                homomorphism(entry.table, F.table, F.canonical_map),
                entry, CorpusEntry(F.table, cap),
            ))
    for h in extra_homs:
        homs.append((h, CorpusEntry(h.source, cap), CorpusEntry(h.target, cap)))

    return Corpus(entries, product_pairs, triple_products, homs, config)


# --- binding helpers --------------------------------------------------------


def _fmt(table: HyperringTable, xs) -> str:
    return "{" + ",".join(table.label_set(xs)) + "}"


def _holds(table, predicate, Q, S, rad_mode) -> bool:
    """Predicate outcome with a violated disjointness precondition read as false."""
    if S is not None and Q & S:
        return False
    return cached_verdict(table, predicate, Q, S, rad_mode).holds


def _wsp(table, Q, S, rad_mode) -> bool:
    return _holds(table, "weaklySPrimary", Q, S, rad_mode)


# --- the laws ---------------------------------------------------------------


def _p1(corpus, rad_mode):
    res = PropertyResult("P1", "meet with an ideal that intersects S stays weakly S-primary")
    for entry in corpus.entries:
        t = entry.table
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S or not _wsp(t, Q, S, rad_mode):
                    continue
                for P in entry.ideals:
                    if not P & S:
                        continue
                    res.instances += 1
                    if not _wsp(t, Q & P, S, rad_mode):
                        res.counterexamples.append({
                            "structure": entry.name, "S": _fmt(t, S),
                            "Q": _fmt(t, Q), "P": _fmt(t, P),
                        })
    return [res]


def _p2(corpus, rad_mode):
    res_set = PropertyResult("P2a", "setwise product with S-meeting ideals stays weakly S-primary")
    res_gen = PropertyResult("P2b", "generated product ideal stays weakly S-primary")
    for entry in corpus.entries:
        t = entry.table
        n = t.n
        for S in entry.mul_sets():
            meeting = [i for i, P in enumerate(entry.ideals) if P & S]
            for Q in entry.ideals:
                if Q & S or not _wsp(t, Q, S, rad_mode):
                    continue
                for key in combinations_with_replacement(meeting, n - 1):
                    factors = [entry.ideals[i] for i in key]
                    prod_set = set_product(t, factors + [Q])
                    if prod_set & S:
                        res_set.skipped += 1
                        res_gen.skipped += 1
                        continue
                    binding = {
                        "structure": entry.name, "S": _fmt(t, S), "Q": _fmt(t, Q),
                        "factors": [_fmt(t, P) for P in factors],
                    }
                    if is_hyperideal(t, prod_set).ok:
                        res_set.instances += 1
                        if not _wsp(t, prod_set, S, rad_mode):
                            res_set.counterexamples.append(binding)
                    else:
                        res_set.skipped += 1
                    gen = product_ideal(t, factors + [Q])
                    if gen & S:
                        res_gen.skipped += 1
                        continue
                    res_gen.instances += 1
                    if not _wsp(t, gen, S, rad_mode):
                        res_gen.counterexamples.append(binding)
    return [res_set, res_gen]


def _p3(corpus, rad_mode):
    res = PropertyResult("P3", "n-fold meet of weakly S-primary ideals with equal radicals")
    for entry in corpus.entries:
        t = entry.table
        for S in entry.mul_sets():
            good = [i for i, Q in enumerate(entry.ideals)
                    if not Q & S and _wsp(t, Q, S, rad_mode)]
            for key in combinations_with_replacement(good, t.n):
                rads = {radical_members(t, entry.ideals[i], rad_mode) for i in key}
                if len(rads) != 1:
                    continue
                res.instances += 1
                meet = intersect_ideals([entry.ideals[i] for i in key])
                if not _wsp(t, meet, S, rad_mode):
                    res.counterexamples.append({
                        "structure": entry.name, "S": _fmt(t, S),
                        "ideals": [_fmt(t, entry.ideals[i]) for i in key],
                    })
    return [res]


def _shrink_condition(t, S, T) -> bool:
    # every member of T can be multiplied back into S by another member of T
    for s in T:
        if not any(t.nary_product([s] * (t.n - 1) + [x]) in S for x in T):
            return False
    return True


def _p4(corpus, rad_mode):
    res = PropertyResult("P4", "weakly T-primary descends to S when T folds back into S")
    for entry in corpus.entries:
        t = entry.table
        sets = entry.mul_sets()
        for S in sets:
            for T in sets:
                if not (S <= T and _shrink_condition(t, S, T)):
                    continue
                for Q in entry.ideals:
                    if Q & T or not _wsp(t, Q, T, rad_mode):
                        continue
                    res.instances += 1
                    if not _wsp(t, Q, S, rad_mode):
                        res.counterexamples.append({
                            "structure": entry.name, "S": _fmt(t, S),
                            "T": _fmt(t, T), "Q": _fmt(t, Q),
                        })
    return [res]


def _p5(corpus, rad_mode):
    res = PropertyResult("P5", "weakly primary colon (Q : s) forces Q weakly S-primary")
    for entry in corpus.entries:
        t = entry.table
        one_set = frozenset([t.one])
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S:
                    continue
                for s in sorted(S):
                    C = colon(t, Q, s)
                    if len(C) == t.size or not _wsp(t, C, one_set, rad_mode):
                        continue
                    res.instances += 1
                    if not _wsp(t, Q, S, rad_mode):
                        res.counterexamples.append({
                            "structure": entry.name, "S": _fmt(t, S),
                            "Q": _fmt(t, Q), "s": t.label(s),
                            "colon": _fmt(t, C),
                        })
                    break  # one satisfying s per (Q, S) is the hypothesis
    return [res]


def _p6(corpus, rad_mode):
    res = PropertyResult("P6", "radical of a weakly S-primary ideal is S-prime when {0} is S-primary")
    for entry in corpus.entries:
        t = entry.table
        zero_ideal = frozenset([t.zero])
        for S in entry.mul_sets():
            if not _holds(t, "sPrimary", zero_ideal, S, rad_mode):
                continue
            for Q in entry.ideals:
                if Q & S or not _wsp(t, Q, S, rad_mode):
                    continue
                res.instances += 1
                rad_q = radical_members(t, Q, rad_mode)
                binding = {
                    "structure": entry.name, "S": _fmt(t, S),
                    "Q": _fmt(t, Q), "rad": _fmt(t, rad_q),
                }
                if rad_q & S:
                    binding["failure"] = "radical meets S"
                    res.counterexamples.append(binding)
                elif not cached_verdict(t, "sPrime", rad_q, S, rad_mode).holds:
                    res.counterexamples.append(binding)
    return [res]


def _p7(corpus, rad_mode):
    res = PropertyResult("P7", "weakly S-primary and weakly S'-primary agree under saturation")
    for entry in corpus.entries:
        t = entry.table
        if t.size > corpus.config.localization_size_cap:
            continue
        for S in entry.mul_sets():
            if t.one not in S:
                continue
            S_sat = saturate(t, S)
            for Q in entry.ideals:
                if Q & S:
                    continue
                res.instances += 1
                binding = {
                    "structure": entry.name, "S": _fmt(t, S),
                    "saturation": _fmt(t, S_sat), "Q": _fmt(t, Q),
                }
                if Q & S_sat:
                    binding["failure"] = "saturation meets Q"
                    res.counterexamples.append(binding)
                    continue
                if _wsp(t, Q, S, rad_mode) != _wsp(t, Q, S_sat, rad_mode):
                    res.counterexamples.append(binding)
    return [res]


def _p8(corpus, rad_mode):
    res = PropertyResult("P8", "localization preserves weakly S-primary; contraction is (Q:s) with the kernel")
    for entry in corpus.entries:
        t = entry.table
        if t.size > corpus.config.localization_size_cap:
            continue
        sets = entry.mul_sets()
        for S1 in sets:
            if t.one not in S1:
                continue
            for S2 in sets:
                if not S1 <= S2:
                    continue
                for Q in entry.ideals:
                    if Q & S2 or not _wsp(t, Q, S1, rad_mode):
                        continue
                    res.instances += 1
                    binding = {
                        "structure": entry.name, "S1": _fmt(t, S1),
                        "S2": _fmt(t, S2), "Q": _fmt(t, Q),
                    }
                    try:
                        F = localize(t, S2)
                        image = F.image_mul_set(S1)
                    except KrasnerError as exc:
                        binding["failure"] = f"reconstruction: {exc}"
                        res.counterexamples.append(binding)
                        continue
                    ext = extend(F, Q)
                    if ext & image:
                        binding["failure"] = "extension meets the image multiplicative set"
                        res.counterexamples.append(binding)
                        continue
                    if not _wsp(F.table, ext, image, rad_mode):
                        binding["failure"] = "extension is not weakly image-primary"
                        res.counterexamples.append(binding)
                        continue
                    back = contract(F, ext)
                    if not any(back == colon(t, Q, s) | F.zero_kernel
                               for s in sorted(S1)):
                        binding["failure"] = "contraction differs from every (Q:s) with the kernel"
                        binding["contraction"] = _fmt(t, back)
                        res.counterexamples.append(binding)
    if res.counterexamples:
        res.note = (
            "reconstruction mismatch: failures here may indicate the fraction "
            "construction, not the law itself"
        )
    return [res]


def _p9(corpus, rad_mode):
    res = PropertyResult("P9", "preimage along a monomorphism is weakly S-primary")
    for hom, src, dst in corpus.homs:
        if not hom.injective:
            continue
        ts, td = src.table, dst.table
        for S in src.mul_sets():
            image = hom.image(S)
            if td.zero in image:
                continue
            for Q2 in dst.ideals:
                if Q2 & image or not _wsp(td, Q2, image, rad_mode):
                    continue
                res.instances += 1
                Q1 = preimage(hom, Q2)
                if Q1 & S or not _wsp(ts, Q1, S, rad_mode):
                    res.counterexamples.append({
                        "hom": f"{src.name} -> {dst.name}",
                        "S": _fmt(ts, S), "Q2": _fmt(td, Q2),
                        "preimage": _fmt(ts, Q1),
                    })
    return [res]


def _pair_ideal(ea, eb, Q1, Q2) -> frozenset[int]:
    sb = eb.table.size
    return frozenset(x * sb + y for x in Q1 for y in Q2)


def _p10(corpus, rad_mode):
    cap = corpus.config.product_mul_set_cap
    res = PropertyResult("P10", "product ideal laws: weak, componentwise, and plain forms agree")
    for ea, eb, ep in corpus.product_pairs:
        ta, tb, tp = ea.table, eb.table, ep.table
        za, zb = frozenset([ta.zero]), frozenset([tb.zero])
        for Q1 in ea.ideals:
            if Q1 == za:
                continue
            for Q2 in eb.ideals:
                if Q2 == zb:
                    continue
                Q = _pair_ideal(ea, eb, Q1, Q2)
                for S1 in ea.mul_sets(cap):
                    for S2 in eb.mul_sets(cap):
                        S = _pair_ideal(ea, eb, S1, S2)
                        res.instances += 1
                        weak = _wsp(tp, Q, S, rad_mode)
                        plain = _holds(tp, "sPrimary", Q, S, rad_mode)
                        split = (
                            (_holds(ta, "sPrimary", Q1, S1, rad_mode) and bool(S2 & Q2))
                            or (_holds(tb, "sPrimary", Q2, S2, rad_mode) and bool(S1 & Q1))
                        )
                        if not (weak == split == plain):
                            res.counterexamples.append({
                                "structure": ep.name,
                                "Q1": _fmt(ta, Q1), "Q2": _fmt(tb, Q2),
                                "S1": _fmt(ta, S1), "S2": _fmt(tb, S2),
                                "weak": weak, "split": split, "plain": plain,
                            })
    resk = PropertyResult("P10k", "k-fold product ideal law on triple products")
    for base, triple in corpus.triple_products:
        tb, tt = base.table, triple.table
        zb = frozenset([tb.zero])
        nonzero = [Q for Q in base.ideals if Q != zb]
        sets = base.mul_sets(1)
        sz = tb.size
        for Q1 in nonzero:
            for Q2 in nonzero:
                for Q3 in nonzero:
                    Q = frozenset(
                        (x * sz + y) * sz + z for x in Q1 for y in Q2 for z in Q3
                    )
                    for S1 in sets:
                        for S2 in sets:
                            for S3 in sets:
                                S = frozenset(
                                    (x * sz + y) * sz + z
                                    for x in S1 for y in S2 for z in S3
                                )
                                res_k_lhs = _wsp(tt, Q, S, rad_mode)
                                parts = [(Q1, S1, tb), (Q2, S2, tb), (Q3, S3, tb)]
                                rhs = any(
                                    _holds(tb, "sPrimary", parts[j][0], parts[j][1], rad_mode)
                                    and all(bool(parts[h][0] & parts[h][1])
                                            for h in range(3) if h != j)
                                    for j in range(3)
                                )
                                resk.instances += 1
                                if res_k_lhs != rhs:
                                    resk.counterexamples.append({
                                        "structure": triple.name,
                                        "ideals": [_fmt(tb, q) for q, _s, _t in parts],
                                        "sets": [_fmt(tb, s) for _q, s, _t in parts],
                                        "weak": res_k_lhs, "split": rhs,
                                    })
    return [res, resk]


def _strongly_entries(corpus):
    for entry in corpus.entries:
        if entry.table.size <= corpus.config.ideal_tuple_size_cap:
            yield entry


def _annihilation_failures(t, Q, rad_q, s, tup):
    """Slots of a zero-product tuple where the witness satisfies neither clause."""
    for i, x in enumerate(tup):
        if t.mul2(s, x) in Q:
            return None
        repl = list(tup)
        repl[i] = s
        if t.g(*repl) in rad_q:
            return None
    return tup


def _p11(corpus, rad_mode):
    res = PropertyResult("P11", "zero tuples outside both clauses annihilate the ideal slotwise")
    for entry in _strongly_entries(corpus):
        t = entry.table
        n = t.n
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S:
                    continue
                v = cached_verdict(t, "stronglyWeaklySPrimary", Q, S, rad_mode)
                if not v.holds:
                    continue
                s = t.index_of(v.witness)
                rad_q = radical_members(t, Q, rad_mode)
                zero_only = frozenset([t.zero])
                for tup, p in product_multisets(t):
                    if p != t.zero:
                        continue
                    if _annihilation_failures(t, Q, rad_q, s, tup) is None:
                        continue
                    res.instances += 1
                    for u in range(1, n + 1):
                        for kept in combinations_with_replacement(sorted(set(tup)), n - u):
                            if not _is_submultiset(kept, tup):
                                continue
                            prod = fold_product_sets(
                                t, [frozenset([x]) for x in kept] + [Q] * u
                            )
                            if prod != zero_only:
                                res.counterexamples.append({
                                    "structure": entry.name, "S": _fmt(t, S),
                                    "Q": _fmt(t, Q), "s": v.witness,
                                    "tuple": [t.label(x) for x in tup],
                                    "kept": [t.label(x) for x in kept],
                                    "product": _fmt(t, prod),
                                })
    return [res]


def _is_submultiset(sub, sup) -> bool:
    pool = list(sup)
    for x in sub:
        if x in pool:
            pool.remove(x)
        else:
            return False
    return True


def _p12(corpus, rad_mode):
    res = PropertyResult("P12", "strongly weakly S-primary with nonzero self-product is S-primary")
    for entry in _strongly_entries(corpus):
        t = entry.table
        zero_only = frozenset([t.zero])
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S:
                    continue
                if not cached_verdict(t, "stronglyWeaklySPrimary", Q, S, rad_mode).holds:
                    continue
                if fold_product_sets(t, [Q] * t.n) == zero_only:
                    continue
                res.instances += 1
                if not cached_verdict(t, "sPrimary", Q, S, rad_mode).holds:
                    res.counterexamples.append({
                        "structure": entry.name, "S": _fmt(t, S), "Q": _fmt(t, Q),
                    })
    return [res]


def _p13(corpus, rad_mode):
    res = PropertyResult("P13", "strongly weakly but not S-primary ideals share the radical of zero")
    for entry in _strongly_entries(corpus):
        t = entry.table
        zero_ideal = frozenset([t.zero])
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S:
                    continue
                if not cached_verdict(t, "stronglyWeaklySPrimary", Q, S, rad_mode).holds:
                    continue
                if cached_verdict(t, "sPrimary", Q, S, rad_mode).holds:
                    continue
                res.instances += 1
                if radical_members(t, Q, rad_mode) != radical_members(t, zero_ideal, rad_mode):
                    res.counterexamples.append({
                        "structure": entry.name, "S": _fmt(t, S), "Q": _fmt(t, Q),
                        "rad(Q)": _fmt(t, radical_members(t, Q, rad_mode)),
                        "rad(0)": _fmt(t, radical_members(t, zero_ideal, rad_mode)),
                    })
    return [res]


def _n1(corpus, rad_mode):
    res = PropertyResult(
        "N1", "control: dropping 'P meets S' must break the P1 law somewhere",
        control=True,
    )
    for entry in corpus.entries:
        t = entry.table
        for S in entry.mul_sets():
            for Q in entry.ideals:
                if Q & S or not _wsp(t, Q, S, rad_mode):
                    continue
                for P in entry.ideals:
                    if P & S:
                        continue
                    res.instances += 1
                    if not _wsp(t, Q & P, S, rad_mode):
                        res.counterexamples.append({
                            "structure": entry.name, "S": _fmt(t, S),
                            "Q": _fmt(t, Q), "P": _fmt(t, P),
                        })
                        return [res]
    return [res]


def _n2(corpus, rad_mode):
    res = PropertyResult(
        "N2", "control: dropping 'equal radicals' must break the P3 law somewhere",
        control=True,
    )
    for entry in corpus.entries:
        t = entry.table
        for S in entry.mul_sets():
            good = [i for i, Q in enumerate(entry.ideals)
                    if not Q & S and _wsp(t, Q, S, rad_mode)]
            for key in combinations_with_replacement(good, t.n):
                rads = {radical_members(t, entry.ideals[i], rad_mode) for i in key}
                if len(rads) == 1:
                    continue
                res.instances += 1
                meet = intersect_ideals([entry.ideals[i] for i in key])
                if not _wsp(t, meet, S, rad_mode):
                    res.counterexamples.append({
                        "structure": entry.name, "S": _fmt(t, S),
                        "ideals": [_fmt(t, entry.ideals[i]) for i in key],
                    })
                    return [res]
    return [res]


_REGISTRY = (
    ("P1", _p1), ("P2", _p2), ("P3", _p3), ("P4", _p4), ("P5", _p5),
    ("P6", _p6), ("P7", _p7), ("P8", _p8), ("P9", _p9), ("P10", _p10),
    ("P11", _p11), ("P12", _p12), ("P13", _p13), ("N1", _n1), ("N2", _n2),
)

PROPERTY_NAMES = tuple(name for name, _fn in _REGISTRY)


def run_suite(corpus: Corpus, selection=None, rad_mode: str = "primes") -> list[PropertyResult]:
    if selection:
        unknown = [s for s in selection
                   if not any(name == s or name.startswith(s) for name, _ in _REGISTRY)]
        if unknown:
            raise PreconditionError(f"unknown properties requested: {unknown}")
    results: list[PropertyResult] = []
    for name, fn in _REGISTRY:
        if selection and not any(name == s or name.startswith(s) for s in selection):
            continue
        results.extend(fn(corpus, rad_mode))
    return results
