"""Natural systems of finitely presented abelian groups and their morphisms.

A natural system on C is a functor from the realized factorization category
of C to abelian groups: one ``PresentedGroup`` per morphism of C and one
``GroupHom`` per factorization pair, functorial on the nose.  The generic
carrier is ``AbFunctor`` (a group-valued functor on any finite category);
``NaturalSystem`` pins one to a factorization category.

Morphisms of pairs (C, D) -> (D', E) carry a natural transformation
``alpha: phi => psi`` between functors D' -> C as their anchor and a
component family ``t: D∘F(alpha) => E`` over the factorization category of
D'.  Keeping the anchor explicit turns the 2-categorical bookkeeping of
whiskering, composition and two-morphism validation into checkable shape
conditions instead of silent conventions.

Locality: for an adjoint localization with unit alpha, a system is local when
its action along ``(1_X, f)`` is invertible for every f inverted by the left
adjoint, and the canonical comparison ``D => D∘F(alpha)`` (components
``D(1_X, alpha_Y)``) is the executable counterpart.  The library's
constructors produce systems for which both tests agree; they are computed
independently and reported side by side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import (
    GroupHom, PresentedGroup, hom_compose, is_iso,
)
from .fincat import (
    FiniteCategory, Functor, NaturalTransformation, Report, ShapeMismatch,
    horizontal_compose, identity_functor, identity_nat,
)
from .factorization import (
    FactorizationCategory, build_factorization, factor_nat,
    factor_two_morphism, projection_to_pair, two_morphism_target,
    op_pair_product,
)


class BifunctorInvalid(ValueError):
    pass


class TwoMorphismInvalid(ValueError):
    pass


# ---------------------------------------------------------------------------
# group-valued functors on a finite category

@dataclass(frozen=True)
class AbFunctor:
    category: FiniteCategory
    values: tuple[PresentedGroup, ...]   # per object
    homs: tuple[GroupHom, ...]           # per morphism

    def value(self, x: int) -> PresentedGroup:
        return self.values[x]

    def hom(self, m: int) -> GroupHom:
        return self.homs[m]

    def validate(self) -> Report:
        rep = Report("group-valued functor")
        c = self.category
        if len(self.values) != c.n_objects or len(self.homs) != c.n_morphisms:
            rep.violations.append("table sizes inconsistent")
            return rep
        for m in range(c.n_morphisms):
            h = self.homs[m]
            if h.source != self.values[c.mor_source[m]] or \
               h.target != self.values[c.mor_target[m]]:
                rep.violations.append(f"hom at morphism {m} has wrong groups")
        if rep.violations:
            return rep
        for x in range(c.n_objects):
            e = c.identity[x]
            if not self.homs[e].equal_mod(GroupHom.identity(self.values[x])):
                rep.violations.append(f"identity morphism {e} not sent to identity")
        for f in range(c.n_morphisms):
            for g in range(c.n_morphisms):
                if c.mor_target[f] != c.mor_source[g]:
                    continue
                gf = c.table[f][g]
                if not hom_compose(self.homs[g], self.homs[f]).equal_mod(self.homs[gf]):
                    rep.violations.append(
                        f"functoriality fails on composable pair ({f},{g})")
        return rep

    def pullback(self, functor: Functor) -> "AbFunctor":
        """Precompose along a functor into this functor's category."""
        if functor.target != self.category:
            raise ShapeMismatch("pullback functor does not land in the category")
        return AbFunctor(
            functor.source,
            tuple(self.values[functor.obj_map[x]]
                  for x in range(functor.source.n_objects)),
            tuple(self.homs[functor.mor_map[m]]
                  for m in range(functor.source.n_morphisms)),
        )

    def equal_mod(self, other: "AbFunctor") -> bool:
        if self.category != other.category or self.values != other.values:
            return False
        return all(a.equal_mod(b) for a, b in zip(self.homs, other.homs))


@dataclass(frozen=True)
class AbNat:
    """Natural transformation between group-valued functors on one category."""
    source: AbFunctor
    target: AbFunctor
    components: tuple[GroupHom, ...]   # per object

    def at(self, x: int) -> GroupHom:
        return self.components[x]

    def validate(self) -> Report:
        rep = Report("transformation of group-valued functors")
        if self.source.category != self.target.category:
            rep.violations.append("functors live on different categories")
            return rep
        c = self.source.category
        if len(self.components) != c.n_objects:
            rep.violations.append("component count mismatch")
            return rep
        for x in range(c.n_objects):
            t = self.components[x]
            if t.source != self.source.values[x] or \
               t.target != self.target.values[x]:
                rep.violations.append(f"component at {x} has wrong groups")
        if rep.violations:
            return rep
        for m in range(c.n_morphisms):
            x, y = c.mor_source[m], c.mor_target[m]
            lhs = hom_compose(self.components[y], self.source.homs[m])
            rhs = hom_compose(self.target.homs[m], self.components[x])
            if not lhs.equal_mod(rhs):
                rep.violations.append(f"naturality fails at morphism {m}")
        return rep

    @staticmethod
    def identity(f: AbFunctor) -> "AbNat":
        return AbNat(f, f, tuple(GroupHom.identity(v) for v in f.values))

    def compose(self, first: "AbNat") -> "AbNat":
        """self ∘ first, componentwise."""
        if first.target.values != self.source.values:
            raise ShapeMismatch("component groups do not chain")
        return AbNat(first.source, self.target, tuple(
            hom_compose(a, b) for a, b in zip(self.components, first.components)
        ))

    def pullback(self, functor: Functor) -> "AbNat":
        return AbNat(
            self.source.pullback(functor),
            self.target.pullback(functor),
            tuple(self.components[functor.obj_map[x]]
                  for x in range(functor.source.n_objects)),
        )

    def is_natural_iso(self) -> bool:
        return all(is_iso(t) for t in self.components)

    def equal_mod(self, other: "AbNat") -> bool:
        return all(a.equal_mod(b)
                   for a, b in zip(self.components, other.components))


# ---------------------------------------------------------------------------
# natural systems

@dataclass(frozen=True)
class NaturalSystem:
    fc: FactorizationCategory
    functor: AbFunctor   # on fc.category

    @property
    def base(self) -> FiniteCategory:
        return self.fc.base

    def value(self, f: int) -> PresentedGroup:
        """The group attached to the base morphism f."""
        return self.functor.values[f]

    def act(self, pair_id: int) -> GroupHom:
        return self.functor.homs[pair_id]

    def act_pair(self, src: int, dst: int, h: int, k: int) -> GroupHom:
        return self.functor.homs[self.fc.pair_id(src, dst, h, k)]


def validate_natural_system(d: NaturalSystem) -> Report:
    rep = Report("natural system")
    fcat = d.fc.category
    if d.functor.category != fcat:
        rep.violations.append("functor not defined on the factorization category")
        return rep
    c = d.base

    def pair_name(i: int) -> str:
        p = d.fc.pairs[i]
        return (f"({c.morphism_name(p.h)},{c.morphism_name(p.k)}): "
                f"{c.morphism_name(p.src)} -> {c.morphism_name(p.dst)}")

    if len(d.functor.values) != fcat.n_objects or \
            len(d.functor.homs) != fcat.n_morphisms:
        rep.violations.append("value or action table has the wrong size")
        return rep
    for i in range(fcat.n_morphisms):
        h = d.functor.homs[i]
        if h.source != d.functor.values[fcat.mor_source[i]] or \
                h.target != d.functor.values[fcat.mor_target[i]]:
            rep.violations.append(
                f"action at {pair_name(i)} connects the wrong groups")
    if rep.violations:
        return rep
    for f in range(c.n_morphisms):
        i = d.fc.identity_pair_id(f)
        if not d.functor.homs[i].equal_mod(
                GroupHom.identity(d.functor.values[f])):
            rep.violations.append(
                f"identity pair of {c.morphism_name(f)} does not act as "
                f"the identity")
    for i in range(fcat.n_morphisms):
        for j in range(fcat.n_morphisms):
            if fcat.mor_target[i] != fcat.mor_source[j]:
                continue
            composite = fcat.table[i][j]
            if not hom_compose(d.functor.homs[j], d.functor.homs[i]).equal_mod(
                    d.functor.homs[composite]):
                rep.violations.append(
                    f"functoriality fails composing {pair_name(i)} "
                    f"then {pair_name(j)}")
    if rep.violations:
        return rep
    # the two generator factorizations of each pair must agree
    for i, p in enumerate(d.fc.pairs):
        fh = c.table[p.h][p.src]
        left = hom_compose(
            d.act_pair(fh, p.dst, c.identity[c.mor_source[fh]], p.k),
            d.act_pair(p.src, fh, p.h, c.identity[c.mor_target[p.src]]),
        )
        kf = c.table[p.src][p.k]
        right = hom_compose(
            d.act_pair(kf, p.dst, p.h, c.identity[c.mor_target[kf]]),
            d.act_pair(p.src, kf, c.identity[c.mor_source[p.src]], p.k),
        )
        act = d.act(i)
        if not left.equal_mod(act) or not right.equal_mod(act):
            rep.violations.append(
                f"one-sided factorizations disagree at {pair_name(i)}")
    return rep


def constant_system(c: FiniteCategory, g: PresentedGroup) -> NaturalSystem:
    fc = build_factorization(c)
    values = (g,) * c.n_morphisms
    ident = GroupHom.identity(g)
    homs = (ident,) * len(fc.pairs)
    return NaturalSystem(fc, AbFunctor(fc.category, values, homs))


def from_bifunctor(c: FiniteCategory, bif: AbFunctor) -> NaturalSystem:
    """Natural system induced by a functor on C^op x C via the projection."""
    prod = op_pair_product(c)
    if bif.category != prod.category:
        raise BifunctorInvalid("bifunctor not defined on C^op x C")
    rep = bif.validate()
    if not rep.ok:
        raise BifunctorInvalid(str(rep))
    fc = build_factorization(c)
    proj = projection_to_pair(c, fc, prod)
    return NaturalSystem(fc, bif.pullback(proj))


def pullback_along_nat(d: NaturalSystem,
                       alpha: NaturalTransformation) -> NaturalSystem:
    """The composite system D∘F(alpha) on the domain of alpha's functors.

    alpha: phi => psi with phi, psi: A -> C where C is the base of d; the
    special case alpha = identity of phi gives the pullback along phi.
    """
    if alpha.codomain != d.base:
        raise ShapeMismatch("transformation does not land in the system's base")
    fc_dom = build_factorization(alpha.domain)
    realized = factor_nat(alpha, fc_dom, d.fc)
    return NaturalSystem(fc_dom, d.functor.pullback(realized))


def pullback_along_functor(d: NaturalSystem, phi: Functor) -> NaturalSystem:
    return pullback_along_nat(d, identity_nat(phi))


# ---------------------------------------------------------------------------
# morphisms of pairs (C, D) -> (D', E)

@dataclass(frozen=True)
class NatSysMorphism:
    """A pair morphism (alpha, t): (C, D) -> (D', E).

    ``alpha: phi => psi`` between functors D' -> C; ``t`` is a natural family
    D∘F(alpha) => E over the factorization category of D'.
    """
    alpha: NaturalTransformation
    source_system: NaturalSystem
    target_system: NaturalSystem
    nat: AbNat

    def validate(self) -> Report:
        rep = Report("pair morphism")
        if self.alpha.codomain != self.source_system.base:
            rep.violations.append("anchor does not land in the source base")
        if self.alpha.domain != self.target_system.base:
            rep.violations.append("anchor does not start at the target base")
        if rep.violations:
            return rep
        pulled = pullback_along_nat(self.source_system, self.alpha)
        if self.nat.source.values != pulled.functor.values or \
           not self.nat.source.equal_mod(pulled.functor):
            rep.violations.append("component family source is not D∘F(alpha)")
        if self.nat.target.values != self.target_system.functor.values or \
           not self.nat.target.equal_mod(self.target_system.functor):
            rep.violations.append("component family target is not E")
        sub = self.nat.validate()
        rep.violations.extend(sub.violations)
        return rep

    def component(self, sigma: int) -> GroupHom:
        """t at the target-base morphism sigma."""
        return self.nat.components[sigma]


def identity_morphism(d: NaturalSystem) -> NatSysMorphism:
    alpha = identity_nat(identity_functor(d.base))
    return NatSysMorphism(alpha, d, d, AbNat.identity(d.functor))


def morphism_from_functor(phi: Functor, d: NaturalSystem,
                          target: NaturalSystem, nat: AbNat) -> NatSysMorphism:
    """The embedded ordinary morphism (phi, t), anchored at the identity of phi."""
    return NatSysMorphism(identity_nat(phi), d, target, nat)


def whisker(t: NatSysMorphism, beta: NaturalTransformation) -> NatSysMorphism:
    """t * 1_{F(beta)}: components reindexed along F(beta).

    For t: D∘F(alpha) => E over D' and beta between functors E' -> D', the
    result is a family D∘F(alpha*beta) => E∘F(beta) over E'.
    """
    if beta.codomain != t.target_system.base:
        raise ShapeMismatch("whiskering transformation does not chain")
    fc_new = build_factorization(beta.domain)
    realized = factor_nat(beta, fc_new, t.target_system.fc)
    alpha_beta = horizontal_compose(t.alpha, beta)
    return NatSysMorphism(
        alpha_beta,
        t.source_system,
        NaturalSystem(fc_new, t.target_system.functor.pullback(realized)),
        t.nat.pullback(realized),
    )


def compose_natsys_morphisms(s: NatSysMorphism, t: NatSysMorphism
                             ) -> NatSysMorphism:
    """The pair-morphism composite (beta, s)(alpha, t) = (alpha*beta, s∘(t*1_{F(beta)}))."""
    if t.target_system.base != s.source_system.base or \
       t.target_system.functor.values != s.source_system.functor.values:
        raise ShapeMismatch("pair morphisms do not chain")
    whiskered = whisker(t, s.alpha)
    return NatSysMorphism(
        whiskered.alpha,
        t.source_system,
        s.target_system,
        s.nat.compose(whiskered.nat),
    )


def act_by_two_morphism(d: NaturalSystem,
                        alpha: NaturalTransformation,
                        eps: NaturalTransformation,
                        gam: NaturalTransformation) -> NatSysMorphism:
    """1_D * F(eps, gam): D∘F(alpha) => D∘F(beta) for (eps, gam): alpha => beta.

    The component at a morphism sigma: X -> Y of the anchor domain is the
    action of D along the pair (eps_X, gam_Y).
    """
    beta = two_morphism_target(alpha, eps, gam)
    fc_dom = build_factorization(alpha.domain)
    ft = factor_two_morphism(alpha, beta, eps, gam, fc_dom, d.fc)
    src = pullback_along_nat(d, alpha)
    dst = pullback_along_nat(d, beta)
    comps = tuple(d.act(ft.components[sigma])
                  for sigma in range(alpha.domain.n_morphisms))
    return NatSysMorphism(beta, d, dst, AbNat(src.functor, dst.functor, comps))


@dataclass(frozen=True)
class NatFTwoMorphism:
    """A two-morphism (eps, gam): (alpha, t) => (beta, s) between pair morphisms.

    eps: xi => phi and gam: psi => zeta with gam∘alpha∘eps == beta, and the
    coherence t == s∘(1_D * F(eps, gam)).
    """
    src: NatSysMorphism   # (alpha, t)
    dst: NatSysMorphism   # (beta, s)
    eps: NaturalTransformation
    gam: NaturalTransformation

    def validate(self) -> Report:
        rep = Report("pair two-morphism")
        if self.src.source_system is not self.dst.source_system and \
           self.src.source_system != self.dst.source_system:
            rep.violations.append("two-morphism endpoints have different sources")
        if self.src.target_system.functor.values != \
           self.dst.target_system.functor.values:
            rep.violations.append("two-morphism endpoints have different targets")
        if rep.violations:
            return rep
        alpha, beta = self.src.alpha, self.dst.alpha
        if two_morphism_target(alpha, self.eps, self.gam) != beta:
            rep.violations.append("gam∘alpha∘eps differs from beta")
            return rep
        action = act_by_two_morphism(self.src.source_system, alpha,
                                     self.eps, self.gam)
        lhs = self.src.nat
        rhs = self.dst.nat.compose(action.nat)
        if not lhs.equal_mod(rhs):
            rep.violations.append("coherence t == s∘(1_D*F(eps,gam)) fails")
        return rep

    def require(self) -> "NatFTwoMorphism":
        rep = self.validate()
        if not rep.ok:
            raise TwoMorphismInvalid(str(rep))
        return self


def identity_two_morphism(t: NatSysMorphism) -> NatFTwoMorphism:
    eps = identity_nat(t.alpha.source_functor)
    gam = identity_nat(t.alpha.target_functor)
    return NatFTwoMorphism(t, t, eps, gam)


def vertical_compose_two(b: NatFTwoMorphism, a: NatFTwoMorphism
                         ) -> NatFTwoMorphism:
    """(eps', gam')(eps, gam) = (eps∘eps', gam'∘gam), from a then b."""
    if a.dst is not b.src and a.dst.alpha != b.src.alpha:
        raise ShapeMismatch("two-morphisms do not stack")
    from .fincat import vertical_compose as vc
    return NatFTwoMorphism(a.src, b.dst, vc(a.eps, b.eps), vc(b.gam, a.gam))


def horizontal_compose_two(b: NatFTwoMorphism, a: NatFTwoMorphism
                           ) -> NatFTwoMorphism:
    """(eps', gam')*(eps, gam) = (eps*eps', gam*gam') on composed pair morphisms."""
    return NatFTwoMorphism(
        compose_natsys_morphisms(b.src, a.src),
        compose_natsys_morphisms(b.dst, a.dst),
        horizontal_compose(a.eps, b.eps),
        horizontal_compose(a.gam, b.gam),
    )


def fullness_witness(m: NatSysMorphism
                     ) -> tuple[NatSysMorphism, NatFTwoMorphism]:
    """An ordinary morphism two-morphic to (alpha, t).

    Returns ((1_phi, t∘(1_D*F(1_phi, alpha))), two-morphism (1_phi, alpha))
    connecting it to (alpha, t); witnesses that every pair morphism is
    equivalent to an embedded ordinary one.
    """
    phi = m.alpha.source_functor
    one_phi = identity_nat(phi)
    corr = act_by_two_morphism(m.source_system, one_phi, one_phi, m.alpha)
    ordinary = NatSysMorphism(one_phi, m.source_system, m.target_system,
                              m.nat.compose(corr.nat))
    two = NatFTwoMorphism(ordinary, m, one_phi, m.alpha)
    return ordinary, two


# ---------------------------------------------------------------------------
# locality predicates

def _inverted(cat: FiniteCategory, phi: Functor) -> list[int]:
    return [f for f in range(cat.n_morphisms)
            if phi.target.is_invertible(phi.mor_map[f])]


def is_local(d: NaturalSystem, loc) -> bool:
    """Every action D(1_X, f) with phi(f) invertible is an isomorphism."""
    c = d.base
    for f in _inverted(c, loc.phi):
        x = c.mor_source[f]
        e = c.identity[x]
        if not is_iso(d.act_pair(e, f, e, f)):
            return False
    return True


def is_colocal(d: NaturalSystem, coloc) -> bool:
    """Every action D(f, 1_Y) with phi(f) invertible is an isomorphism."""
    c = d.base
    for f in _inverted(c, coloc.phi):
        y = c.mor_target[f]
        e = c.identity[y]
        if not is_iso(d.act_pair(e, f, f, e)):
            return False
    return True


def canonical_local_map(d: NaturalSystem, loc) -> NatSysMorphism:
    """1_D * F(1_{1_C}, alpha): D => D∘F(alpha) for the unit alpha."""
    one = identity_nat(identity_functor(d.base))
    return act_by_two_morphism(d, one, one, loc.unit)


def canonical_colocal_map(d: NaturalSystem, coloc) -> NatSysMorphism:
    """1_D * F(alpha, 1_{1_C}): D => D∘F(alpha) for the counit alpha."""
    one = identity_nat(identity_functor(d.base))
    return act_by_two_morphism(d, one, coloc.counit, one)
