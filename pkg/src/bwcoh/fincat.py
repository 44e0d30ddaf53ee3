"""Finite categories, functors, natural transformations, morphism sequences.

Objects and morphisms are dense integer ids; every table is total.  The
composition table is stored as ``table[f][g] = g∘f`` ("first f, then g"),
with ``-1`` marking non-composable pairs, so ``compose(c, f, g)`` returns the
juxtaposition ``gf``.  Composable sequences follow the pattern

    . <-s1- . <-s2- ... <-sn- .

i.e. ``target(s_{i+1}) == source(s_i)``; the composite ``s1...sn`` applies
``sn`` first.  A sequence of length 0 is an object, identified with its
identity morphism.  All enumeration orders are lexicographic in ids, which
makes downstream bases and matrices reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class NotComposable(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass
class Report:
    subject: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def require(self) -> None:
        if self.violations:
            raise ValueError(
                f"{self.subject}: " + "; ".join(self.violations[:10])
            )

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        return f"{self.subject}: {len(self.violations)} violation(s)\n" + \
            "\n".join("  " + v for v in self.violations)


@dataclass(frozen=True)
class FiniteCategory:
    n_objects: int
    mor_source: tuple[int, ...]
    mor_target: tuple[int, ...]
    identity: tuple[int, ...]            # object -> morphism id
    table: tuple[tuple[int, ...], ...]   # table[f][g] = g∘f, -1 if undefined
    object_names: tuple[str, ...] | None = None
    morphism_names: tuple[str, ...] | None = None

    @property
    def n_morphisms(self) -> int:
        return len(self.mor_source)

    def compose(self, f: int, g: int) -> int:
        """The composite gf (f applied first, then g)."""
        r = self.table[f][g]
        if r < 0:
            raise NotComposable(f"morphisms {f} then {g} do not compose")
        return r

    def composable(self, f: int, g: int) -> bool:
        return self.mor_target[f] == self.mor_source[g]

    def is_identity(self, f: int) -> bool:
        return self.identity[self.mor_source[f]] == f

    def is_invertible(self, f: int) -> bool:
        x, y = self.mor_source[f], self.mor_target[f]
        for g in range(self.n_morphisms):
            if self.mor_source[g] == y and self.mor_target[g] == x \
                    and self.table[f][g] == self.identity[x] \
                    and self.table[g][f] == self.identity[y]:
                return True
        return False

    def object_name(self, x: int) -> str:
        if self.object_names:
            return self.object_names[x]
        return f"o{x}"

    def morphism_name(self, f: int) -> str:
        if self.morphism_names:
            return self.morphism_names[f]
        return f"m{f}"

    def __repr__(self):
        return f"FiniteCategory({self.n_objects} objects, {self.n_morphisms} morphisms)"


def make_category(n_objects: int,
                  mor: list[tuple[int, int]],
                  identity: list[int],
                  compose_pairs: dict[tuple[int, int], int],
                  object_names=None, morphism_names=None) -> FiniteCategory:
    """Assemble a category from (source, target) pairs and a pair->composite map.

    ``compose_pairs[(f, g)] = g∘f`` must cover exactly the composable pairs.
    """
    n = len(mor)
    table = [[-1] * n for _ in range(n)]
    for (f, g), h in compose_pairs.items():
        table[f][g] = h
    return FiniteCategory(
        n_objects,
        tuple(s for s, _ in mor),
        tuple(t for _, t in mor),
        tuple(identity),
        tuple(tuple(row) for row in table),
        tuple(object_names) if object_names else None,
        tuple(morphism_names) if morphism_names else None,
    )


def compose(c: FiniteCategory, f: int, g: int) -> int:
    return c.compose(f, g)


def validate_category(c: FiniteCategory) -> Report:
    rep = Report("category")
    n = c.n_morphisms
    if len(c.mor_target) != n or len(c.identity) != c.n_objects:
        rep.violations.append("table sizes inconsistent")
        return rep
    for x in range(c.n_objects):
        e = c.identity[x]
        if not (0 <= e < n) or c.mor_source[e] != x or c.mor_target[e] != x:
            rep.violations.append(f"identity of object {x} is not an endomorphism")
    for f in range(n):
        row = c.table[f]
        if len(row) != n:
            rep.violations.append(f"table row {f} has wrong length")
            continue
        for g in range(n):
            h = row[g]
            comp = c.mor_target[f] == c.mor_source[g]
            if comp and h < 0:
                rep.violations.append(f"missing composite for ({f},{g})")
            elif not comp and h >= 0:
                rep.violations.append(f"composite defined for non-composable ({f},{g})")
            elif comp:
                if not (0 <= h < n):
                    rep.violations.append(f"composite of ({f},{g}) out of range")
                elif c.mor_source[h] != c.mor_source[f] or \
                        c.mor_target[h] != c.mor_target[g]:
                    rep.violations.append(
                        f"composite of ({f},{g}) has wrong endpoints")
    if rep.violations:
        return rep
    for f in range(n):
        ls = c.identity[c.mor_source[f]]
        lt = c.identity[c.mor_target[f]]
        if c.table[ls][f] != f:
            rep.violations.append(f"identity not right-neutral at morphism {f}")
        if c.table[f][lt] != f:
            rep.violations.append(f"identity not left-neutral at morphism {f}")
    for f in range(n):
        for g in range(n):
            if c.mor_target[f] != c.mor_source[g]:
                continue
            gf = c.table[f][g]
            for h in range(n):
                if c.mor_target[g] != c.mor_source[h]:
                    continue
                if c.table[gf][h] != c.table[f][c.table[g][h]]:
                    rep.violations.append(
                        f"associativity fails on ({f},{g},{h})")
    return rep


# ---------------------------------------------------------------------------
# functors and natural transformations

@dataclass(frozen=True)
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_mor(self, f: int) -> int:
        return self.mor_map[f]

    def validate(self) -> Report:
        rep = Report("functor")
        c, d = self.source, self.target
        if len(self.obj_map) != c.n_objects or len(self.mor_map) != c.n_morphisms:
            rep.violations.append("map sizes inconsistent")
            return rep
        for f in range(c.n_morphisms):
            ff = self.mor_map[f]
            if d.mor_source[ff] != self.obj_map[c.mor_source[f]] or \
               d.mor_target[ff] != self.obj_map[c.mor_target[f]]:
                rep.violations.append(f"morphism {f} endpoints not preserved")
        for x in range(c.n_objects):
            if self.mor_map[c.identity[x]] != d.identity[self.obj_map[x]]:
                rep.violations.append(f"identity of object {x} not preserved")
        for f in range(c.n_morphisms):
            for g in range(c.n_morphisms):
                if c.mor_target[f] == c.mor_source[g]:
                    if self.mor_map[c.table[f][g]] != \
                            d.table[self.mor_map[f]][self.mor_map[g]]:
                        rep.violations.append(
                            f"composition not preserved on ({f},{g})")
        return rep


def identity_functor(c: FiniteCategory) -> Functor:
    return Functor(c, c, tuple(range(c.n_objects)), tuple(range(c.n_morphisms)))


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g∘f (f applied first)."""
    if f.target != g.source:
        raise ShapeMismatch("functor composition categories do not chain")
    return Functor(f.source, g.target,
                   tuple(g.obj_map[x] for x in f.obj_map),
                   tuple(g.mor_map[m] for m in f.mor_map))


@dataclass(frozen=True)
class NaturalTransformation:
    source_functor: Functor
    target_functor: Functor
    components: tuple[int, ...]   # object of the domain -> morphism of codomain

    @property
    def domain(self) -> FiniteCategory:
        return self.source_functor.source

    @property
    def codomain(self) -> FiniteCategory:
        return self.source_functor.target

    def at(self, x: int) -> int:
        return self.components[x]

    def validate(self) -> Report:
        rep = Report("natural transformation")
        phi, psi = self.source_functor, self.target_functor
        if phi.source != psi.source or phi.target != psi.target:
            rep.violations.append("functors not parallel")
            return rep
        c, d = phi.source, phi.target
        if len(self.components) != c.n_objects:
            rep.violations.append("component count mismatch")
            return rep
        for x in range(c.n_objects):
            a = self.components[x]
            if d.mor_source[a] != phi.obj_map[x] or d.mor_target[a] != psi.obj_map[x]:
                rep.violations.append(f"component at object {x} has wrong endpoints")
        if rep.violations:
            return rep
        for f in range(c.n_morphisms):
            x, y = c.mor_source[f], c.mor_target[f]
            # psi(f) ∘ a_X == a_Y ∘ phi(f)
            left = d.table[self.components[x]][psi.mor_map[f]]
            right = d.table[phi.mor_map[f]][self.components[y]]
            if left != right:
                rep.violations.append(f"naturality square fails at morphism {f}")
        return rep


def identity_nat(f: Functor) -> NaturalTransformation:
    comps = tuple(f.target.identity[f.obj_map[x]] for x in range(f.source.n_objects))
    return NaturalTransformation(f, f, comps)


def vertical_compose(b: NaturalTransformation, a: NaturalTransformation
                     ) -> NaturalTransformation:
    """ba: the vertical composite (a first: a: φ⇒ψ, b: ψ⇒ξ)."""
    if a.target_functor != b.source_functor:
        raise ShapeMismatch("vertical composition functors do not chain")
    d = a.codomain
    comps = tuple(d.table[a.components[x]][b.components[x]]
                  for x in range(a.domain.n_objects))
    return NaturalTransformation(a.source_functor, b.target_functor, comps)


def horizontal_compose(b: NaturalTransformation, a: NaturalTransformation
                       ) -> NaturalTransformation:
    """b*a: ξφ ⇒ ζψ for a: φ⇒ψ (C→D) and b: ξ⇒ζ (D→E).

    Both defining formulas are computed and must agree (middle interchange).
    """
    if a.codomain != b.domain:
        raise ShapeMismatch("horizontal composition categories do not chain")
    phi, psi = a.source_functor, a.target_functor
    xi, zeta = b.source_functor, b.target_functor
    e = b.codomain
    comps = []
    for x in range(a.domain.n_objects):
        one = e.table[xi.mor_map[a.components[x]]][b.components[psi.obj_map[x]]]
        two = e.table[b.components[phi.obj_map[x]]][zeta.mor_map[a.components[x]]]
        if one != two:
            raise ShapeMismatch(
                f"horizontal composition formulas disagree at object {x}")
        comps.append(one)
    return NaturalTransformation(compose_functors(xi, phi),
                                 compose_functors(zeta, psi),
                                 tuple(comps))


# ---------------------------------------------------------------------------
# morphism sequences

@dataclass(frozen=True)
class MSeq:
    """A composable sequence s1..sn; n = 0 is an object.

    ``objects`` lists X_0..X_n left to right: X_0 = target(s1), X_i is the
    shared source of s_i / target of s_{i+1}, X_n = source(sn).  The composite
    of the empty sequence at X is the identity of X.
    """
    mors: tuple[int, ...]
    objects: tuple[int, ...]
    composite: int

    @property
    def length(self) -> int:
        return len(self.mors)

    def key(self):
        return self.mors if self.mors else ("obj", self.objects[0])


def enumerate_sequences(c: FiniteCategory, n: int) -> tuple[MSeq, ...]:
    """All composable sequences of length n, lexicographic in morphism ids."""
    if n < 0:
        raise ValueError("sequence length must be nonnegative")
    if n == 0:
        return tuple(
            MSeq((), (x,), c.identity[x]) for x in range(c.n_objects)
        )
    seqs: list[MSeq] = []
    by_target: dict[int, list[int]] = {x: [] for x in range(c.n_objects)}
    for m in range(c.n_morphisms):
        by_target[c.mor_target[m]].append(m)

    prev = [MSeq((m,), (c.mor_target[m], c.mor_source[m]), m)
            for m in range(c.n_morphisms)]
    for _ in range(n - 1):
        nxt = []
        for s in prev:
            tail_obj = s.objects[-1]
            for m in by_target[tail_obj]:
                nxt.append(MSeq(
                    s.mors + (m,),
                    s.objects + (c.mor_source[m],),
                    c.table[m][s.composite],
                ))
        prev = nxt
    return tuple(prev)


def sequence_index(basis: tuple[MSeq, ...]) -> dict:
    return {s.key(): i for i, s in enumerate(basis)}


# ---------------------------------------------------------------------------
# pi0, opposite, product

def pi0(c: FiniteCategory) -> tuple[tuple[int, ...], ...]:
    """Connected components of objects under the zig-zag closure."""
    parent = list(range(c.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in range(c.n_morphisms):
        a, b = find(c.mor_source[m]), find(c.mor_target[m])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(c.n_objects):
        groups.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


def opposite(c: FiniteCategory) -> FiniteCategory:
    n = c.n_morphisms
    table = [[-1] * n for _ in range(n)]
    for f in range(n):
        for g in range(n):
            # compose_op(f, g) is defined iff source(f) == target(g) in c,
            # and equals the c-composite f∘g.
            if c.mor_source[f] == c.mor_target[g]:
                table[f][g] = c.table[g][f]
    return FiniteCategory(
        c.n_objects, c.mor_target, c.mor_source, c.identity,
        tuple(tuple(row) for row in table),
        c.object_names, c.morphism_names,
    )


@dataclass(frozen=True)
class ProductCategory:
    left: FiniteCategory
    right: FiniteCategory
    category: FiniteCategory

    def obj_id(self, x: int, y: int) -> int:
        return x * self.right.n_objects + y

    def obj_pair(self, o: int) -> tuple[int, int]:
        return divmod(o, self.right.n_objects)

    def mor_id(self, f: int, g: int) -> int:
        return f * self.right.n_morphisms + g

    def mor_pair(self, m: int) -> tuple[int, int]:
        return divmod(m, self.right.n_morphisms)


def product(c: FiniteCategory, d: FiniteCategory) -> ProductCategory:
    nm = c.n_morphisms * d.n_morphisms
    src = []
    tgt = []
    for f in range(c.n_morphisms):
        for g in range(d.n_morphisms):
            src.append(c.mor_source[f] * d.n_objects + d.mor_source[g])
            tgt.append(c.mor_target[f] * d.n_objects + d.mor_target[g])
    ident = []
    for x in range(c.n_objects):
        for y in range(d.n_objects):
            ident.append(c.identity[x] * d.n_morphisms + d.identity[y])
    table = [[-1] * nm for _ in range(nm)]
    for f1 in range(c.n_morphisms):
        for g1 in range(d.n_morphisms):
            m1 = f1 * d.n_morphisms + g1
            for f2 in range(c.n_morphisms):
                if c.mor_target[f1] != c.mor_source[f2]:
                    continue
                cf = c.table[f1][f2]
                for g2 in range(d.n_morphisms):
                    if d.mor_target[g1] == d.mor_source[g2]:
                        table[m1][f2 * d.n_morphisms + g2] = \
                            cf * d.n_morphisms + d.table[g1][g2]
    cat = FiniteCategory(
        c.n_objects * d.n_objects, tuple(src), tuple(tgt), tuple(ident),
        tuple(tuple(row) for row in table),
    )
    return ProductCategory(c, d, cat)


# ---------------------------------------------------------------------------
# standard small categories

def terminal_category() -> FiniteCategory:
    return make_category(1, [(0, 0)], [0], {(0, 0): 0},
                         object_names=["pt"], morphism_names=["id_pt"])


def empty_category() -> FiniteCategory:
    return FiniteCategory(0, (), (), (), ())


def discrete_category(n: int) -> FiniteCategory:
    return make_category(
        n, [(x, x) for x in range(n)], list(range(n)),
        {(x, x): x for x in range(n)},
    )


def arrow_category() -> FiniteCategory:
    # objects x=0, y=1; morphisms id_x=0, id_y=1, f=2: x->y
    pairs = {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2}
    return make_category(2, [(0, 0), (1, 1), (0, 1)], [0, 1], pairs,
                         object_names=["x", "y"],
                         morphism_names=["id_x", "id_y", "f"])


def indiscrete_category(n: int) -> FiniteCategory:
    """Exactly one morphism between any ordered pair of objects."""
    mor = [(x, y) for x in range(n) for y in range(n)]
    mid = {(x, y): x * n + y for x in range(n) for y in range(n)}
    pairs = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                pairs[(mid[(x, y)], mid[(y, z)])] = mid[(x, z)]
    return make_category(n, mor, [mid[(x, x)] for x in range(n)], pairs)


def monoid_category(op: list[list[int]], unit: int,
                    names: list[str] | None = None) -> FiniteCategory:
    """One-object category from a monoid multiplication table.

    ``op[a][b]`` is the product "a then b" (i.e. b∘a as endomorphisms).
    """
    n = len(op)
    pairs = {(a, b): op[a][b] for a in range(n) for b in range(n)}
    return make_category(1, [(0, 0)] * n, [unit], pairs,
                         morphism_names=names)


def cyclic_group_category(k: int) -> FiniteCategory:
    op = [[(a + b) % k for b in range(k)] for a in range(k)]
    return monoid_category(op, 0, [f"g{a}" for a in range(k)])


def poset_category(n: int, leq: set[tuple[int, int]],
                   object_names=None) -> FiniteCategory:
    """Category of a partial order; ``leq`` must contain (x, x) and be
    transitively closed."""
    rel = sorted(leq)
    mid = {p: i for i, p in enumerate(rel)}
    pairs = {}
    for (x, y) in rel:
        for (y2, z) in rel:
            if y2 == y:
                pairs[(mid[(x, y)], mid[(y, z)])] = mid[(x, z)]
    names = None
    if object_names:
        names = [f"{object_names[x]}<={object_names[y]}" for (x, y) in rel]
    return make_category(n, rel, [mid[(x, x)] for x in range(n)], pairs,
                         object_names=object_names, morphism_names=names)


def pseudo_circle_category() -> FiniteCategory:
    """Objects a,b,c,d with nonidentity arrows a->c, a->d, b->c, b->d."""
    leq = {(x, x) for x in range(4)} | {(0, 2), (0, 3), (1, 2), (1, 3)}
    return poset_category(4, leq, object_names=["a", "b", "c", "d"])


def total_order_category(n: int) -> FiniteCategory:
    leq = {(x, y) for x in range(n) for y in range(n) if x <= y}
    return poset_category(n, leq)
