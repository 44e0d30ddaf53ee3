"""The cochain complex of a finite category with natural-system coefficients.

Degree n is the direct product of D(s1...sn) over all composable sequences of
length n, in the lexicographic basis order of ``enumerate_sequences``; the
degree-0 basis is indexed by objects via their identity morphisms.  The
differential is the three-term alternating sum: precompose the head morphism
into the coefficient action on the left, merge adjacent entries with
alternating signs, and postcompose the tail morphism with sign (-1)^(n+1).
Degenerate sequences (those containing identities) are genuine basis
elements; nothing is normalized away.

Index bookkeeping for the homotopies, fixed once here because the defining
sums leave the intermediate groups implicit:

* For a two-morphism with legs ``eps: xi => phi`` and ``gam: psi => zeta``
  bounding ``(alpha, t) => (beta, s)``, every summand
  ``c(phi s1, ..., phi s_i, eps_{X_i}, xi s_{i+1}, ..., xi s_n)`` has the same
  composite, namely ``eps_Y ∘ xi(s)`` (naturality of eps), so all summands
  live in the single group ``D(F(eps)(s))``.  The correction applied before
  the ``s``-component is the coefficient action along the pair
  ``(identity of xi(X), (gam∘alpha)_Y): F(eps)(s) -> F(beta)(s)``.
* For the stacked (vertical) double sum the summands live in
  ``D(F(eps∘eps')(s))`` and the correction pair is
  ``(identity of xi(X), (gam'∘gam∘alpha)_Y)``.
* For the side-by-side (horizontal) double sum the summands live in
  ``D(F(eps*eps')(s))``; the correction pair is
  ``(identity of (xi xi')(X), ((gam*gam')∘(alpha*alpha'))_Y)``, followed by
  the middle component family taken at ``F(beta')(s)`` and the outer one at
  ``s``.

Every constructor asserts its defining identity exactly (integer arithmetic,
zero tolerance) and reports the offending degree and basis coordinate on
failure; these identities are the load-bearing content and silent tolerance
would mask sign errors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

from .abgroup import (
    GroupHom, GroupInvariants, PresentedGroup, Subquotient, direct_product,
    hom_compose, is_iso, subquotient,
)
from .fincat import (
    MSeq, ShapeMismatch, enumerate_sequences, sequence_index,
    vertical_compose,
)
from .intmat import IntMatrix, LatticeSolver
from .natsys import (
    NatFTwoMorphism, NatSysMorphism, NaturalSystem, horizontal_compose_two,
    vertical_compose_two,
)


class DegreeOutOfRange(ValueError):
    pass


class HomotopyIdentityError(AssertionError):
    """A defining chain-level identity failed; carries the coordinate."""


class DegreeTruncation(UserWarning):
    """Results certified only up to the computed maximum degree."""


class ScaleWarning(UserWarning):
    """A degree's basis has grown past the comfortable desk-scale bound."""


SEQUENCE_WARN_LIMIT = 10 ** 5


# ---------------------------------------------------------------------------
# products of presented groups with block bookkeeping

@dataclass(frozen=True)
class ProductGroup:
    factors: tuple[PresentedGroup, ...]

    @cached_property
    def gen_offsets(self) -> tuple[int, ...]:
        offs = [0]
        for f in self.factors:
            offs.append(offs[-1] + f.generators)
        return tuple(offs)

    @cached_property
    def rel_offsets(self) -> tuple[int, ...]:
        offs = [0]
        for f in self.factors:
            offs.append(offs[-1] + f.relations.cols)
        return tuple(offs)

    @property
    def total_gens(self) -> int:
        return self.gen_offsets[-1]

    @property
    def total_rels(self) -> int:
        return self.rel_offsets[-1]

    @cached_property
    def group(self) -> PresentedGroup:
        return direct_product(list(self.factors))


class BlockHom:
    """Block-sparse homomorphism between products of presented groups.

    ``blocks[(ti, si)] = (M, Q)`` where M maps generators of source factor si
    to generators of target factor ti and Q is the matching witness on
    relations.  Absent blocks are zero.
    """

    def __init__(self, src: ProductGroup, dst: ProductGroup,
                 blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]]):
        self.src = src
        self.dst = dst
        self.blocks = blocks

    @staticmethod
    def zero(src: ProductGroup, dst: ProductGroup) -> "BlockHom":
        return BlockHom(src, dst, {})

    @staticmethod
    def identity(pg: ProductGroup) -> "BlockHom":
        blocks = {}
        for i, f in enumerate(pg.factors):
            blocks[(i, i)] = (IntMatrix.identity(f.generators),
                              IntMatrix.identity(f.relations.cols))
        return BlockHom(pg, pg, blocks)

    def add(self, other: "BlockHom") -> "BlockHom":
        if self.src is not other.src and self.src != other.src:
            raise ShapeMismatch("block hom addition source mismatch")
        blocks = dict(self.blocks)
        for key, (m, q) in other.blocks.items():
            if key in blocks:
                m0, q0 = blocks[key]
                blocks[key] = (m0 + m, q0 + q)
            else:
                blocks[key] = (m, q)
        return BlockHom(self.src, self.dst, blocks)

    def neg(self) -> "BlockHom":
        return BlockHom(self.src, self.dst,
                        {k: (-m, -q) for k, (m, q) in self.blocks.items()})

    def sub(self, other: "BlockHom") -> "BlockHom":
        return self.add(other.neg())

    def compose(self, first: "BlockHom") -> "BlockHom":
        """self ∘ first."""
        if first.dst.factors != self.src.factors:
            raise ShapeMismatch("block hom composition middle mismatch")
        by_row: dict[int, list[tuple[int, tuple[IntMatrix, IntMatrix]]]] = {}
        for (m, s), mq in first.blocks.items():
            by_row.setdefault(m, []).append((s, mq))
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for (t, m), (m2mat, q2) in self.blocks.items():
            for (s, (m1mat, q1)) in by_row.get(m, ()):
                mm = m2mat @ m1mat
                qq = q2 @ q1
                if (t, s) in blocks:
                    m0, q0 = blocks[(t, s)]
                    blocks[(t, s)] = (m0 + mm, q0 + qq)
                else:
                    blocks[(t, s)] = (mm, qq)
        return BlockHom(first.src, self.dst, blocks)

    def first_nonzero_coordinate(self) -> tuple[int, int] | None:
        """(target block, source block) of the first block not zero mod relations."""
        for (t, s) in sorted(self.blocks):
            m, _ = self.blocks[(t, s)]
            if m.is_zero():
                continue
            if not self.dst.factors[t].solver.contains_matrix(m):
                return (t, s)
        return None

    def is_zero_mod(self) -> bool:
        return self.first_nonzero_coordinate() is None

    def equal_mod(self, other: "BlockHom") -> bool:
        return self.sub(other).is_zero_mod()

    def to_matrix(self) -> IntMatrix:
        rows = self.dst.total_gens
        cols = self.src.total_gens
        out = [0] * (rows * cols)
        go_d = self.dst.gen_offsets
        go_s = self.src.gen_offsets
        for (t, s), (m, _) in self.blocks.items():
            rbase, cbase = go_d[t], go_s[s]
            for i in range(m.rows):
                obase = (rbase + i) * cols + cbase
                mbase = i * m.cols
                for j in range(m.cols):
                    x = m.entries[mbase + j]
                    if x:
                        out[obase + j] += x
        return IntMatrix(rows, cols, tuple(out))

    def to_witness(self) -> IntMatrix:
        rows = self.dst.total_rels
        cols = self.src.total_rels
        out = [0] * (rows * cols)
        ro_d = self.dst.rel_offsets
        ro_s = self.src.rel_offsets
        for (t, s), (_, q) in self.blocks.items():
            rbase, cbase = ro_d[t], ro_s[s]
            for i in range(q.rows):
                obase = (rbase + i) * cols + cbase
                qbase = i * q.cols
                for j in range(q.cols):
                    x = q.entries[qbase + j]
                    if x:
                        out[obase + j] += x
        return IntMatrix(rows, cols, tuple(out))

    def to_hom(self) -> GroupHom:
        return GroupHom(self.src.group, self.dst.group,
                        self.to_matrix(), self.to_witness())


def _acc_block(acc: dict, ti: int, si: int, hom: GroupHom, sign: int) -> None:
    m = hom.matrix if sign == 1 else hom.matrix.scale(sign)
    q = hom.witness if sign == 1 else hom.witness.scale(sign)
    if (ti, si) in acc:
        m0, q0 = acc[(ti, si)]
        acc[(ti, si)] = (m0 + m, q0 + q)
    else:
        acc[(ti, si)] = (m, q)


# ---------------------------------------------------------------------------
# the complex

class CochainComplex:
    """Groups and differentials in degrees 0..max_degree; immutable after build."""

    def __init__(self, system: NaturalSystem, max_degree: int,
                 bases: list[tuple[MSeq, ...]], groups: list[ProductGroup],
                 diffs: list[BlockHom]):
        self.system = system
        self.max_degree = max_degree
        self.bases = bases
        self.groups = groups
        self.diffs = diffs            # diffs[n]: degree n -> n+1, n < max_degree
        self.index = [sequence_index(b) for b in bases]
        self._cohom: dict[int, Subquotient] = {}

    def coordinate_name(self, n: int, i: int) -> str:
        seq = self.bases[n][i]
        c = self.system.base
        if seq.length == 0:
            return f"({c.object_name(seq.objects[0])})"
        return "(" + ",".join(c.morphism_name(m) for m in seq.mors) + ")"

    def cohomology_data(self, n: int) -> Subquotient:
        if not (0 <= n <= self.max_degree - 1):
            raise DegreeOutOfRange(
                f"degree {n} not computable with max degree {self.max_degree}")
        if n not in self._cohom:
            d_out = self.diffs[n].to_hom()
            if n == 0:
                from .abgroup import trivial_group
                d_in = GroupHom.zero(trivial_group, self.groups[0].group)
            else:
                d_in = self.diffs[n - 1].to_hom()
            self._cohom[n] = subquotient(d_in, d_out)
        return self._cohom[n]

    def cohomology(self, n: int) -> GroupInvariants:
        return self.cohomology_data(n).group.invariants


def build_complex(d: NaturalSystem, max_degree: int) -> CochainComplex:
    if max_degree < 1:
        raise DegreeOutOfRange("max degree must be at least 1")
    c = d.base
    bases = [enumerate_sequences(c, n) for n in range(max_degree + 1)]
    for n, b in enumerate(bases):
        if len(b) > SEQUENCE_WARN_LIMIT:
            warnings.warn(
                f"degree {n} has {len(b)} sequences; expect heavy computation",
                ScaleWarning, stacklevel=2)
    groups = [ProductGroup(tuple(d.value(s.composite) for s in basis))
              for basis in bases]
    indexes = [sequence_index(b) for b in bases]
    diffs: list[BlockHom] = []
    for n in range(max_degree):
        idx = indexes[n]
        small = bases[n]
        acc: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(bases[n + 1]):
            m = tau.length
            comp = tau.composite
            # head term: + D(1, s1) applied to the head-dropped coordinate
            s1 = tau.mors[0]
            if m == 1:
                si = idx[("obj", tau.objects[1])]
            else:
                si = idx[tau.mors[1:]]
            sub = small[si]
            hom = d.act_pair(sub.composite, comp,
                             c.identity[c.mor_source[sub.composite]], s1)
            _acc_block(acc, ti, si, hom, 1)
            # merge terms: signs alternate starting at -1
            ident = GroupHom.identity(d.value(comp))
            for i in range(1, m):
                merged = c.table[tau.mors[i]][tau.mors[i - 1]]
                key = tau.mors[:i - 1] + (merged,) + tau.mors[i + 1:]
                _acc_block(acc, ti, idx[key], ident, -1 if i % 2 else 1)
            # tail term: sign (-1)^m with D(s_m, 1)
            sm = tau.mors[-1]
            if m == 1:
                si = idx[("obj", tau.objects[0])]
            else:
                si = idx[tau.mors[:-1]]
            sub = small[si]
            hom = d.act_pair(sub.composite, comp, sm,
                             c.identity[c.mor_target[sub.composite]])
            _acc_block(acc, ti, si, hom, -1 if m % 2 else 1)
        diffs.append(BlockHom(groups[n], groups[n + 1], acc))

    cx = CochainComplex(d, max_degree, bases, groups, diffs)
    for n in range(max_degree - 1):
        bad = diffs[n + 1].compose(diffs[n]).first_nonzero_coordinate()
        if bad is not None:
            raise HomotopyIdentityError(
                f"d∘d != 0 from degree {n}: target {cx.coordinate_name(n + 2, bad[0])}, "
                f"source {cx.coordinate_name(n, bad[1])}")
    return cx


def cohomology(cx: CochainComplex, n: int) -> GroupInvariants:
    return cx.cohomology(n)


# ---------------------------------------------------------------------------
# graded maps

@dataclass
class CochainMap:
    source: CochainComplex
    target: CochainComplex
    maps: tuple[BlockHom, ...]   # one per degree 0..max_degree
    label: str = ""

    @property
    def max_degree(self) -> int:
        return min(self.source.max_degree, self.target.max_degree)

    def check_chain(self) -> None:
        for n in range(self.max_degree):
            lhs = self.target.diffs[n].compose(self.maps[n])
            rhs = self.maps[n + 1].compose(self.source.diffs[n])
            bad = lhs.sub(rhs).first_nonzero_coordinate()
            if bad is not None:
                raise HomotopyIdentityError(
                    f"chain map {self.label or '?'} fails dp=pd at degree {n}: "
                    f"target {self.target.coordinate_name(n + 1, bad[0])}, "
                    f"source {self.source.coordinate_name(n, bad[1])}")

    def compose(self, first: "CochainMap") -> "CochainMap":
        if first.target is not self.source:
            if first.target.groups[0].factors != self.source.groups[0].factors:
                raise ShapeMismatch("cochain maps do not chain")
        maps = tuple(self.maps[n].compose(first.maps[n])
                     for n in range(min(len(self.maps), len(first.maps))))
        return CochainMap(first.source, self.target, maps,
                          label=f"{self.label}∘{first.label}")

    def equal_mod(self, other: "CochainMap") -> bool:
        return all(a.equal_mod(b) for a, b in zip(self.maps, other.maps))

    def is_identity_mod(self) -> bool:
        return all(m.equal_mod(BlockHom.identity(g))
                   for m, g in zip(self.maps, self.source.groups))


def identity_cochain_map(cx: CochainComplex) -> CochainMap:
    return CochainMap(cx, cx, tuple(BlockHom.identity(g) for g in cx.groups),
                      label="id")


@dataclass
class Homotopy1:
    """Degree -1 family h with dh + hd = -p + q, checked at construction."""
    source: CochainComplex
    target: CochainComplex
    maps: dict[int, BlockHom]    # n -> (A^n -> B^{n-1}), n = 1..max_degree
    p: CochainMap
    q: CochainMap

    def check_boundary(self) -> None:
        N = min(self.source.max_degree, self.target.max_degree)
        for n in range(N):
            terms = self.maps[n + 1].compose(self.source.diffs[n])
            if n >= 1:
                terms = terms.add(self.target.diffs[n - 1].compose(self.maps[n]))
            rhs = self.q.maps[n].sub(self.p.maps[n])
            bad = terms.sub(rhs).first_nonzero_coordinate()
            if bad is not None:
                raise HomotopyIdentityError(
                    f"dh+hd = -p+q fails at degree {n}: "
                    f"target {self.target.coordinate_name(n, bad[0])}, "
                    f"source {self.source.coordinate_name(n, bad[1])}")

    def sub(self, other: "Homotopy1", p: CochainMap, q: CochainMap
            ) -> "Homotopy1":
        """Coordinatewise difference; the caller states the new boundary maps.

        When self.q == other.q this is a homotopy from self.p to other.p.
        """
        maps = {n: self.maps[n].sub(other.maps[n]) for n in self.maps}
        return Homotopy1(self.source, self.target, maps, p, q)


@dataclass
class Homotopy2:
    """Degree -2 family r with dr - rd equal to a signed sum of homotopies."""
    source: CochainComplex
    target: CochainComplex
    maps: dict[int, BlockHom]    # n -> (A^n -> B^{n-2}), n = 2..max_degree


# ---------------------------------------------------------------------------
# induced chain maps

def induced_map_nat(m: NatSysMorphism, cx_src: CochainComplex,
                    cx_dst: CochainComplex) -> CochainMap:
    """Chain map of an ordinary morphism (phi, t): coordinates pulled back
    along phi and pushed through t, with no correction factor."""
    alpha = m.alpha
    if alpha.source_functor != alpha.target_functor:
        raise ShapeMismatch("ordinary induced map needs an identity anchor")
    dom = alpha.domain
    for x in range(dom.n_objects):
        if alpha.components[x] != alpha.codomain.identity[alpha.source_functor.obj_map[x]]:
            raise ShapeMismatch("ordinary induced map needs an identity anchor")
    phi = alpha.source_functor
    maps = []
    for n in range(min(cx_src.max_degree, cx_dst.max_degree) + 1):
        idx = cx_src.index[n]
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(cx_dst.bases[n]):
            if n == 0:
                si = idx[("obj", phi.obj_map[tau.objects[0]])]
            else:
                si = idx[tuple(phi.mor_map[s] for s in tau.mors)]
            hom = m.component(tau.composite)
            _acc_block(blocks, ti, si, hom, 1)
        maps.append(BlockHom(cx_src.groups[n], cx_dst.groups[n], blocks))
    cmap = CochainMap(cx_src, cx_dst, tuple(maps), label="F*(phi,t)")
    cmap.check_chain()
    return cmap


def induced_map_2(m: NatSysMorphism, cx_src: CochainComplex,
                  cx_dst: CochainComplex) -> CochainMap:
    """Chain map of a pair morphism (alpha, t): the pulled-back coordinate is
    corrected along (1_{phi X}, alpha_Y) before applying t."""
    alpha = m.alpha
    phi = alpha.source_functor
    cc = m.source_system.base   # codomain of alpha
    d = m.source_system
    maps = []
    for n in range(min(cx_src.max_degree, cx_dst.max_degree) + 1):
        idx = cx_src.index[n]
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(cx_dst.bases[n]):
            x, y = tau.objects[-1], tau.objects[0]
            if n == 0:
                si = idx[("obj", phi.obj_map[tau.objects[0]])]
            else:
                si = idx[tuple(phi.mor_map[s] for s in tau.mors)]
            phi_sigma = phi.mor_map[tau.composite]
            fa_sigma = cc.table[phi_sigma][alpha.components[y]]
            corr = d.act_pair(phi_sigma, fa_sigma,
                              cc.identity[cc.mor_source[phi_sigma]],
                              alpha.components[y])
            hom = hom_compose(m.component(tau.composite), corr)
            _acc_block(blocks, ti, si, hom, 1)
        maps.append(BlockHom(cx_src.groups[n], cx_dst.groups[n], blocks))
    cmap = CochainMap(cx_src, cx_dst, tuple(maps), label="F*(alpha,t)")
    cmap.check_chain()
    return cmap


# ---------------------------------------------------------------------------
# homotopies

def homotopy_h(tm: NatFTwoMorphism, cx_src: CochainComplex,
               cx_dst: CochainComplex, check: bool = True) -> Homotopy1:
    """The degree -1 family attached to a two-morphism (eps, gam)."""
    rep = tm.validate()
    if not rep.ok:
        from .natsys import TwoMorphismInvalid
        raise TwoMorphismInvalid(str(rep))
    alpha, beta = tm.src.alpha, tm.dst.alpha
    eps, gam = tm.eps, tm.gam
    phi = alpha.source_functor
    xi = beta.source_functor
    gam_alpha = vertical_compose(gam, alpha)
    d = tm.src.source_system
    cc = d.base
    s_nat = tm.dst.nat
    N = min(cx_src.max_degree, cx_dst.max_degree)
    maps: dict[int, BlockHom] = {}
    for n in range(N):     # target degree; sources have degree n+1
        idx = cx_src.index[n + 1]
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(cx_dst.bases[n]):
            x, y = tau.objects[-1], tau.objects[0]
            sigma = tau.composite
            xi_sigma = xi.mor_map[sigma]
            feps_sigma = cc.table[xi_sigma][eps.components[y]]
            fbeta_sigma = cc.table[xi_sigma][beta.components[y]]
            corr = d.act_pair(feps_sigma, fbeta_sigma,
                              cc.identity[cc.mor_source[xi_sigma]],
                              gam_alpha.components[y])
            k_hom = hom_compose(s_nat.components[sigma], corr)
            for i in range(n + 1):
                inserted = tuple(phi.mor_map[m_] for m_ in tau.mors[:i]) \
                    + (eps.components[tau.objects[i]],) \
                    + tuple(xi.mor_map[m_] for m_ in tau.mors[i:])
                _acc_block(blocks, ti, idx[inserted], k_hom,
                           -1 if i % 2 else 1)
        maps[n + 1] = BlockHom(cx_src.groups[n + 1], cx_dst.groups[n], blocks)
    p = induced_map_2(tm.src, cx_src, cx_dst)
    q = induced_map_2(tm.dst, cx_src, cx_dst)
    h = Homotopy1(cx_src, cx_dst, maps, p, q)
    if check:
        h.check_boundary()
    return h


def _check_r_identity(r_maps: dict[int, BlockHom],
                      cx_src: CochainComplex, cx_dst: CochainComplex,
                      rhs_terms: list[tuple[int, dict[int, BlockHom]]],
                      label: str) -> None:
    """Verify d∘r - r∘d == signed sum of degree -1 families, degrees 1..N-1."""
    N = min(cx_src.max_degree, cx_dst.max_degree)
    for n in range(1, N):
        lhs = r_maps[n + 1].compose(cx_src.diffs[n]).neg()
        if n >= 2:
            lhs = lhs.add(cx_dst.diffs[n - 2].compose(r_maps[n]))
        rhs = BlockHom.zero(cx_src.groups[n], cx_dst.groups[n - 1])
        for sign, fam in rhs_terms:
            term = fam[n]
            rhs = rhs.add(term if sign == 1 else term.neg())
        bad = lhs.sub(rhs).first_nonzero_coordinate()
        if bad is not None:
            raise HomotopyIdentityError(
                f"{label} fails at degree {n}: "
                f"target {cx_dst.coordinate_name(n - 1, bad[0])}, "
                f"source {cx_src.coordinate_name(n, bad[1])}")


def homotopy_r_vertical(a: NatFTwoMorphism, b: NatFTwoMorphism,
                        cx_src: CochainComplex, cx_dst: CochainComplex
                        ) -> Homotopy2:
    """Degree -2 family for stacked two-morphisms a: (alpha,t) => (alpha',t')
    and b: (alpha',t') => (beta,s), with
    dr - rd = -h_a - h_b + h_{b∘a} checked exactly."""
    for tm in (a, b):
        rep = tm.validate()
        if not rep.ok:
            from .natsys import TwoMorphismInvalid
            raise TwoMorphismInvalid("ladder invalid: " + str(rep))
    if a.dst.alpha != b.src.alpha or not a.dst.nat.equal_mod(b.src.nat):
        raise ShapeMismatch("ladder middle morphisms disagree")
    alpha = a.src.alpha
    beta = b.dst.alpha
    eps, gam = a.eps, a.gam          # eps: phi' => phi, gam: psi => psi'
    eps2, gam2 = b.eps, b.gam        # eps': xi => phi', gam': psi' => zeta
    phi = alpha.source_functor
    phi2 = eps.source_functor        # phi'
    xi = beta.source_functor
    corr_nat = vertical_compose(gam2, vertical_compose(gam, alpha))
    d = a.src.source_system
    cc = d.base
    s_nat = b.dst.nat
    N = min(cx_src.max_degree, cx_dst.max_degree)
    maps: dict[int, BlockHom] = {}
    for n in range(N - 1):   # target degree; sources have degree n+2
        idx = cx_src.index[n + 2]
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(cx_dst.bases[n]):
            y = tau.objects[0]
            sigma = tau.composite
            xi_sigma = xi.mor_map[sigma]
            eps_total_y = cc.table[eps2.components[y]][eps.components[y]]
            fsrc = cc.table[xi_sigma][eps_total_y]
            fdst = cc.table[xi_sigma][beta.components[y]]
            corr = d.act_pair(fsrc, fdst,
                              cc.identity[cc.mor_source[xi_sigma]],
                              corr_nat.components[y])
            k_hom = hom_compose(s_nat.components[sigma], corr)
            for i in range(n + 1):
                head = tuple(phi.mor_map[m_] for m_ in tau.mors[:i])
                for j in range(i, n + 1):
                    inserted = head \
                        + (eps.components[tau.objects[i]],) \
                        + tuple(phi2.mor_map[m_] for m_ in tau.mors[i:j]) \
                        + (eps2.components[tau.objects[j]],) \
                        + tuple(xi.mor_map[m_] for m_ in tau.mors[j:])
                    _acc_block(blocks, ti, idx[inserted], k_hom,
                               -1 if (i + j) % 2 else 1)
        maps[n + 2] = BlockHom(cx_src.groups[n + 2], cx_dst.groups[n], blocks)
    h_a = homotopy_h(a, cx_src, cx_dst)
    h_b = homotopy_h(b, cx_src, cx_dst)
    h_ab = homotopy_h(vertical_compose_two(b, a), cx_src, cx_dst)
    _check_r_identity(maps, cx_src, cx_dst,
                      [(-1, h_a.maps), (-1, h_b.maps), (1, h_ab.maps)],
                      "dr-rd = -h -h' +h''")
    return Homotopy2(cx_src, cx_dst, maps)


def homotopy_r_horizontal(a: NatFTwoMorphism, b: NatFTwoMorphism,
                          cx_a: CochainComplex, cx_mid: CochainComplex,
                          cx_b: CochainComplex) -> Homotopy2:
    """Degree -2 family for side-by-side two-morphisms a on (C,D) -> (D',E)
    and b on (D',E) -> (E',G), with
    dr' - r'd = -h_b∘F*(alpha,t) - F*(beta',s')∘h_a + h_{b*a} checked exactly."""
    for tm in (a, b):
        rep = tm.validate()
        if not rep.ok:
            from .natsys import TwoMorphismInvalid
            raise TwoMorphismInvalid(str(rep))
    alpha = a.src.alpha
    beta = a.dst.alpha
    eps, gam = a.eps, a.gam
    alpha2 = b.src.alpha
    beta2 = b.dst.alpha
    eps2, gam2 = b.eps, b.gam
    phi, xi = alpha.source_functor, beta.source_functor
    phi2, xi2 = alpha2.source_functor, beta2.source_functor
    from .fincat import compose_functors, horizontal_compose
    phi_phi2 = compose_functors(phi, phi2)
    phi_xi2 = compose_functors(phi, xi2)
    xi_xi2 = compose_functors(xi, xi2)
    corr_nat = vertical_compose(horizontal_compose(gam, gam2),
                                horizontal_compose(alpha, alpha2))
    beta_total = horizontal_compose(beta, beta2)
    d = a.src.source_system
    cc = d.base
    dd = b.src.source_system.base
    s_nat = a.dst.nat        # over D'
    s2_nat = b.dst.nat       # over E'
    N = min(cx_a.max_degree, cx_b.max_degree)
    maps: dict[int, BlockHom] = {}
    for n in range(N - 1):
        idx = cx_a.index[n + 2]
        blocks: dict[tuple[int, int], tuple[IntMatrix, IntMatrix]] = {}
        for ti, tau in enumerate(cx_b.bases[n]):
            y = tau.objects[0]
            sigma = tau.composite
            # middle component is taken at F(beta')(sigma)
            fb2_sigma = dd.table[xi2.mor_map[sigma]][beta2.components[y]]
            xixi2_sigma = xi_xi2.mor_map[sigma]
            eps_total_y = cc.table[eps.components[xi2.obj_map[y]]][
                phi.mor_map[eps2.components[y]]]
            fsrc = cc.table[xixi2_sigma][eps_total_y]
            fdst = cc.table[xixi2_sigma][beta_total.components[y]]
            corr = d.act_pair(fsrc, fdst,
                              cc.identity[cc.mor_source[xixi2_sigma]],
                              corr_nat.components[y])
            k_hom = hom_compose(s2_nat.components[sigma],
                                hom_compose(s_nat.components[fb2_sigma], corr))
            for i in range(n + 1):
                head = tuple(phi_phi2.mor_map[m_] for m_ in tau.mors[:i])
                for j in range(i, n + 1):
                    inserted = head \
                        + (phi.mor_map[eps2.components[tau.objects[i]]],) \
                        + tuple(phi_xi2.mor_map[m_] for m_ in tau.mors[i:j]) \
                        + (eps.components[xi2.obj_map[tau.objects[j]]],) \
                        + tuple(xi_xi2.mor_map[m_] for m_ in tau.mors[j:])
                    _acc_block(blocks, ti, idx[inserted], k_hom,
                               -1 if (i + j) % 2 else 1)
        maps[n + 2] = BlockHom(cx_a.groups[n + 2], cx_b.groups[n], blocks)

    h_a = homotopy_h(a, cx_a, cx_mid)
    h_b = homotopy_h(b, cx_mid, cx_b)
    p_a = induced_map_2(a.src, cx_a, cx_mid)
    p_b2 = induced_map_2(b.dst, cx_mid, cx_b)
    h_ab = homotopy_h(horizontal_compose_two(b, a), cx_a, cx_b)
    term1 = {n: h_b.maps[n].compose(p_a.maps[n]) for n in h_b.maps}
    term2 = {n: p_b2.maps[n - 1].compose(h_a.maps[n]) for n in h_a.maps}
    _check_r_identity(maps, cx_a, cx_b,
                      [(-1, term1), (-1, term2), (1, h_ab.maps)],
                      "dr'-r'd = -h'p -p'h +h''")
    return Homotopy2(cx_a, cx_b, maps)


# ---------------------------------------------------------------------------
# maps on cohomology and relative homotopy classes

def cohomology_map(cmap: CochainMap, n: int) -> GroupHom:
    """The induced homomorphism H^n(source) -> H^n(target)."""
    sq_a = cmap.source.cohomology_data(n)
    sq_b = cmap.target.cohomology_data(n)
    mapped = cmap.maps[n].to_matrix() @ sq_a.basis
    w = sq_b.express(mapped)
    return GroupHom.create(sq_a.group, sq_b.group, w)


def induces_identity(cmap: CochainMap, n: int) -> bool:
    """For an endomorphism of a complex: does it induce the identity on H^n?"""
    h = cohomology_map(cmap, n)
    return h.equal_mod(GroupHom.identity(h.source))


def is_cohomology_iso(cmap: CochainMap, n: int) -> bool:
    return is_iso(cohomology_map(cmap, n))


def homotopy_class_equal(h1: Homotopy1, h2: Homotopy1) -> bool:
    """Decide relative homotopy: does some degree -2 family r satisfy
    dr - rd = -h1 + h2?

    Solved as one integer linear system over the computed degrees; equality
    is certified only up to the complexes' maximum degree (a
    ``DegreeTruncation`` warning records this).
    """
    if not (h1.p.equal_mod(h2.p) and h1.q.equal_mod(h2.q)):
        raise ShapeMismatch("homotopies do not share boundary chain maps")
    cx_a, cx_b = h1.source, h1.target
    N = min(cx_a.max_degree, cx_b.max_degree)
    warnings.warn(f"relative homotopy certified up to degree {N}",
                  DegreeTruncation, stacklevel=2)

    ga = [g.total_gens for g in cx_a.groups]
    gb = [g.total_gens for g in cx_b.groups]
    ra = [g.group.relations.cols for g in cx_a.groups]
    rb = [g.group.relations.cols for g in cx_b.groups]
    # variables: r_n (n=2..N), Q_n (n=2..N), Y_n (n=1..N-1)
    offsets = {}
    nvars = 0
    for n in range(2, N + 1):
        offsets[("r", n)] = nvars
        nvars += gb[n - 2] * ga[n]
        offsets[("q", n)] = nvars
        nvars += rb[n - 2] * ra[n]
    for n in range(1, N):
        offsets[("y", n)] = nvars
        nvars += rb[n - 1] * ga[n]

    rows: list[list[int]] = []
    rhs: list[int] = []

    def var_r(n, i, j):
        return offsets[("r", n)] + i * ga[n] + j

    def var_q(n, i, j):
        return offsets[("q", n)] + i * ra[n] + j

    def var_y(n, i, j):
        return offsets[("y", n)] + i * ga[n] + j

    delta = {n: h2.maps[n].sub(h1.maps[n]).to_matrix()
             for n in range(1, N + 1)}
    d_a = [bh.to_matrix() for bh in cx_a.diffs]
    d_b = [bh.to_matrix() for bh in cx_b.diffs]
    rels_a = [g.group.relations for g in cx_a.groups]
    rels_b = [g.group.relations for g in cx_b.groups]

    # boundary equations at degree n: [n>=2] d_B r_n - r_{n+1} d_A - R_B Y_n = delta_n
    for n in range(1, N):
        for i in range(gb[n - 1]):
            for j in range(ga[n]):
                row = [0] * nvars
                if n >= 2:
                    for k in range(gb[n - 2]):
                        cda = d_b[n - 2].at(i, k)
                        if cda:
                            row[var_r(n, k, j)] += cda
                for k in range(ga[n + 1]):
                    cda = d_a[n].at(k, j)
                    if cda:
                        row[var_r(n + 1, i, k)] -= cda
                for k in range(rb[n - 1]):
                    cy = rels_b[n - 1].at(i, k)
                    if cy:
                        row[var_y(n, k, j)] -= cy
                rows.append(row)
                rhs.append(delta[n].at(i, j))
    # well-definedness: r_n R_A - R_B Q_n = 0
    for n in range(2, N + 1):
        for i in range(gb[n - 2]):
            for j in range(ra[n]):
                row = [0] * nvars
                for k in range(ga[n]):
                    cra = rels_a[n].at(k, j)
                    if cra:
                        row[var_r(n, i, k)] += cra
                for k in range(rb[n - 2]):
                    crb = rels_b[n - 2].at(i, k)
                    if crb:
                        row[var_q(n, k, j)] -= crb
                rows.append(row)
                rhs.append(0)

    if not rows or nvars == 0:
        return all(x == 0 for x in rhs)
    mat = IntMatrix.from_rows(rows)
    return LatticeSolver(mat).solve(rhs) is not None
