"""
The bialgebra of a finite category.

The coproduct of a morphism f sums h ⊗ g over all factorizations f = g∘h,
identity factorizations included; the counit is 1 on identities.
"""
import itertools
from collections import Counter
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from hopfflow.core.exceptions import CategoryError


class FiniteCategory(BaseModel):
    """Objects, morphisms with source/target, identities and the table (g, h) -> g∘h."""
    model_config = ConfigDict(frozen=True)

    objects: List[str]
    morphisms: Dict[str, Tuple[str, str]]
    identities: Dict[str, str]
    composition: Dict[Tuple[str, str], str]

    @classmethod
    def create(cls, objects: List[str], morphisms: Dict[str, Tuple[str, str]],
               identities: Dict[str, str], composition: Dict[Tuple[str, str], str]) -> "FiniteCategory":
        """Verify sources, targets, identity and associativity laws."""
        for name, (source, target) in morphisms.items():
            if source not in objects or target not in objects:
                raise CategoryError(f"Morphism {name} has an unknown endpoint")
        for obj in objects:
            ident = identities.get(obj)
            if ident is None or tuple(morphisms.get(ident, ())) != (obj, obj):
                raise CategoryError(f"Object {obj} lacks an identity morphism")
        for g, h in itertools.product(morphisms, repeat=2):
            composable = morphisms[h][1] == morphisms[g][0]
            if composable != ((g, h) in composition):
                raise CategoryError(f"Composition of {g} after {h} is {'missing' if composable else 'not allowed'}")
            if composable:
                gh = composition[(g, h)]
                if tuple(morphisms.get(gh, ())) != (morphisms[h][0], morphisms[g][1]):
                    raise CategoryError(f"{g}∘{h} = {gh} has the wrong endpoints")
        for f, (source, target) in morphisms.items():
            if composition[(f, identities[source])] != f or composition[(identities[target], f)] != f:
                raise CategoryError(f"Identity laws fail for {f}")
        for g, h, k in itertools.product(morphisms, repeat=3):
            if (g, h) in composition and (h, k) in composition:
                if composition[(composition[(g, h)], k)] != composition[(g, composition[(h, k)])]:
                    raise CategoryError(f"Associativity fails for {g}, {h}, {k}")
        return cls(objects=list(objects), morphisms=dict(morphisms), identities=dict(identities),
                   composition=dict(composition))

    @classmethod
    def from_poset(cls, elements: List[str], relations: List[Tuple[str, str]]) -> "FiniteCategory":
        """The category of a finite poset given by generating relations a <= b."""
        below = {a: {a} for a in elements}
        changed = True
        pairs = set(relations)
        while changed:
            changed = False
            for a, b in list(pairs):
                for c, d in list(pairs):
                    if b == c and (a, d) not in pairs:
                        pairs.add((a, d))
                        changed = True
        for a, b in pairs:
            below[b].add(a)
        morphisms = {}
        for b in elements:
            for a in sorted(below[b]):
                morphisms[f"{a}->{b}"] = (a, b)
        identities = {a: f"{a}->{a}" for a in elements}
        composition = {}
        for g, (gs, gt) in morphisms.items():
            for h, (hs, ht) in morphisms.items():
                if ht == gs:
                    composition[(g, h)] = f"{hs}->{gt}"
        return cls.create(elements, morphisms, identities, composition)


def category_coproduct(category: FiniteCategory, f: str) -> Counter:
    """Multiset of pairs (h, g) with g∘h = f."""
    return Counter(
        (h, g) for (g, h), composite in category.composition.items() if composite == f
    )


def category_counit(category: FiniteCategory, f: str) -> int:
    return 1 if f in category.identities.values() else 0


def category_coassociativity(category: FiniteCategory, f: str) -> Tuple[Counter, Counter]:
    """((Δ⊗id)Δf, (id⊗Δ)Δf) as multisets of triples."""
    left: Counter = Counter()
    right: Counter = Counter()
    for (h, g), count in category_coproduct(category, f).items():
        for (h1, h2), inner in category_coproduct(category, h).items():
            left[(h1, h2, g)] += count * inner
        for (g1, g2), inner in category_coproduct(category, g).items():
            right[(h, g1, g2)] += count * inner
    return left, right


def category_counit_sides(category: FiniteCategory, f: str) -> Tuple[Counter, Counter]:
    """((ε⊗id)Δf, (id⊗ε)Δf); both are the single morphism f."""
    left: Counter = Counter()
    right: Counter = Counter()
    for (h, g), count in category_coproduct(category, f).items():
        left[g] += category_counit(category, h) * count
        right[h] += category_counit(category, g) * count
    return +left, +right
