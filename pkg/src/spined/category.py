"""Spined categories, spinal functors into ``Nat`` and generic law checkers.

A spined category is a category together with a spine ``n -> spine(n)`` and a
*proxy pushout*: a distinguished cocone over every span ``G <- spine(n) -> H``.
Concrete instances live in :mod:`spined.graph` and :mod:`spined.hypergraph`;
the posetal instance :class:`NatCategory` lives here because every S-functor
lands in it.

Morphisms of every instance carry ``source`` and ``target`` attributes and
compare equal pointwise on their underlying data.  ``compose(g, f)`` is
``g o f``: apply ``f`` first.
"""
from __future__ import annotations

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Sequence, TypeVar

from .errors import MediatingNotFound, PreconditionViolation, UniquenessViolation

Obj = TypeVar("Obj")
Mor = TypeVar("Mor")

# (g, h, g2, h2): g: spine(n) -> G, h: spine(n) -> H, g2: G -> G2, h2: H -> H2
Diagram = tuple[Any, Any, Any, Any]


@dataclass(frozen=True)
class ProxyPushout(Generic[Obj, Mor]):
    apex: Obj
    leg_g: Mor
    leg_h: Mor


class SpinedCategory(ABC, Generic[Obj, Mor]):
    """A category with a spine and proxy pushouts.

    Subclasses must be immutable after construction; every method is a pure
    function of its arguments.
    """

    name = "abstract"

    @abstractmethod
    def identity(self, obj: Obj) -> Mor: ...

    @abstractmethod
    def compose(self, g: Mor, f: Mor) -> Mor:
        """Return ``g o f``; raises PreconditionViolation if not composable."""

    @abstractmethod
    def is_valid_morphism(self, source: Obj, target: Obj, data: Any) -> bool: ...

    @abstractmethod
    def spine(self, n: int) -> Obj: ...

    @abstractmethod
    def spine_index(self, obj: Obj) -> int:
        """Some ``n`` for which a morphism ``obj -> spine(n)`` exists."""

    @abstractmethod
    def proxy_pushout(self, g: Mor, h: Mor) -> ProxyPushout[Obj, Mor]: ...

    @abstractmethod
    def mediating(self, g: Mor, h: Mor, g2: Mor, h2: Mor) -> Mor:
        """The comparison arrow ``P(g, h) -> P(g2 o g, h2 o h)``."""

    @abstractmethod
    def hom(self, source: Obj, target: Obj, limit: int | None = None) -> list[Mor]:
        """All morphisms ``source -> target`` in a deterministic order."""

    def exists_morphism(self, source: Obj, target: Obj) -> bool:
        return bool(self.hom(source, target, limit=1))

    def morphism_data(self, m: Mor) -> Any:
        return m


@dataclass(frozen=True)
class Le:
    """The unique arrow ``source <= target`` of the poset of naturals."""

    source: int
    target: int

    def __post_init__(self):
        if not 0 <= self.source <= self.target:
            raise PreconditionViolation(f"no arrow {self.source} -> {self.target} in Nat")


def nat_proxy_pushout(n: int, a: int, b: int) -> int:
    """Apex of the proxy pushout of ``a >= n <= b`` in Nat: the supremum."""
    if n < 0 or n > a or n > b:
        raise PreconditionViolation(f"need 0 <= {n} <= {a} and {n} <= {b}")
    return max(a, b)


class NatCategory(SpinedCategory[int, Le]):
    """``(N, <=)`` with spine ``n -> n`` and suprema as proxy pushouts."""

    name = "nat"

    def identity(self, obj: int) -> Le:
        return Le(obj, obj)

    def compose(self, g: Le, f: Le) -> Le:
        if f.target != g.source:
            raise PreconditionViolation(f"cannot compose {g} after {f}")
        return Le(f.source, g.target)

    def is_valid_morphism(self, source: int, target: int, data: Any = None) -> bool:
        return 0 <= source <= target

    def spine(self, n: int) -> int:
        return n

    def spine_index(self, obj: int) -> int:
        return obj

    def proxy_pushout(self, g: Le, h: Le) -> ProxyPushout[int, Le]:
        if g.source != h.source:
            raise PreconditionViolation("legs of a span must share their source")
        apex = nat_proxy_pushout(g.source, g.target, h.target)
        return ProxyPushout(apex, Le(g.target, apex), Le(h.target, apex))

    def mediating(self, g: Le, h: Le, g2: Le, h2: Le) -> Le:
        return Le(max(g.target, h.target), max(g2.target, h2.target))

    def hom(self, source: int, target: int, limit: int | None = None) -> list[Le]:
        if source <= target and limit != 0:
            return [Le(source, target)]
        return []


@dataclass(frozen=True)
class SFunctor:
    """A Nat-valued map on objects.

    The action on arrows is implicit: ``X -> Y`` goes to ``value(X) <= value(Y)``.
    """

    name: str
    value: Callable[[Any], int]

    def __call__(self, obj: Any) -> int:
        return self.value(obj)


@dataclass
class LawReport:
    law: str
    population_size: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    enumeration_bound: int = 0
    entries: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: Any, detail: str) -> None:
        self.failures.append({"case": case, "detail": detail})

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "population_size": self.population_size,
            "failures": self.failures,
            "enumeration_bound": self.enumeration_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=_describe)


def _describe(x: Any) -> Any:
    describe = getattr(x, "describe", None)
    if describe is not None:
        return describe()
    return repr(x)


def check_category_laws(
    instance: SpinedCategory, population: Sequence[Any], limit: int = 64
) -> LawReport:
    """Identity neutrality and associativity on morphisms among ``population``.

    Hom-sets are enumerated up to ``limit`` arrows each.
    """
    report = LawReport("category", len(population), enumeration_bound=limit)
    homs = {}
    for i, x in enumerate(population):
        for j, y in enumerate(population):
            homs[i, j] = instance.hom(x, y, limit=limit)
    for (i, j), arrows in homs.items():
        for f in arrows:
            if instance.compose(instance.identity(population[j]), f) != f:
                report.fail(_describe(f), "left identity")
            if instance.compose(f, instance.identity(population[i])) != f:
                report.fail(_describe(f), "right identity")
            for k in range(len(population)):
                for g in homs[j, k]:
                    gf = instance.compose(g, f)
                    for m in range(len(population)):
                        for h in homs[k, m]:
                            if instance.compose(h, gf) != instance.compose(instance.compose(h, g), f):
                                report.fail([_describe(f), _describe(g), _describe(h)], "associativity")
    return report


def check_sc1(
    instance: SpinedCategory, population: Iterable[Any], bound: int | None = None
) -> LawReport:
    """Every object maps into some spine object; witnesses are built and validated."""
    report = LawReport("sc1", enumeration_bound=bound or 0)
    for obj in population:
        report.population_size += 1
        n = instance.spine_index(obj)
        entry = {"case": _describe(obj), "witness": n, "validated": False}
        report.entries.append(entry)
        if bound is not None and n > bound:
            report.fail(_describe(obj), f"witness {n} exceeds bound {bound}")
            continue
        target = instance.spine(n)
        found = instance.hom(obj, target, limit=1)
        if not found:
            report.fail(_describe(obj), f"no morphism into spine({n})")
            continue
        if not instance.is_valid_morphism(obj, target, instance.morphism_data(found[0])):
            report.fail(_describe(obj), f"witness into spine({n}) does not validate")
            continue
        entry["validated"] = True
    return report


def check_sc2(
    instance: SpinedCategory,
    diagrams: Iterable[Diagram],
    enumeration_bound: int = 100_000,
    strict: bool = False,
) -> LawReport:
    """Existence, commutation and uniqueness of the SC2 comparison arrow.

    Uniqueness is decided by enumerating up to ``enumeration_bound`` arrows
    between the two apexes and counting those that make both triangles
    commute.  With ``strict`` the first failure is raised instead of recorded.
    """
    report = LawReport("sc2", enumeration_bound=enumeration_bound)
    for diagram in diagrams:
        report.population_size += 1
        g, h, g2, h2 = diagram
        case = [_describe(m) for m in diagram]
        try:
            _check_one_sc2(instance, g, h, g2, h2, enumeration_bound)
        except (MediatingNotFound, UniquenessViolation) as exc:
            if strict:
                raise
            report.fail(case, f"{type(exc).__name__}: {exc}")
    return report


def _check_one_sc2(instance, g, h, g2, h2, bound):
    inner = instance.proxy_pushout(g, h)
    outer = instance.proxy_pushout(instance.compose(g2, g), instance.compose(h2, h))
    try:
        m = instance.mediating(g, h, g2, h2)
    except Exception as exc:
        raise MediatingNotFound(str(exc)) from exc
    if m.source != inner.apex or m.target != outer.apex:
        raise MediatingNotFound("mediating arrow has the wrong endpoints")
    if not instance.is_valid_morphism(m.source, m.target, instance.morphism_data(m)):
        raise MediatingNotFound("mediating arrow is not a valid morphism")

    def commutes(candidate):
        return (
            instance.compose(candidate, inner.leg_g) == instance.compose(outer.leg_g, g2)
            and instance.compose(candidate, inner.leg_h) == instance.compose(outer.leg_h, h2)
        )

    if not commutes(m):
        raise MediatingNotFound("mediating arrow does not make the square commute")
    matches = [c for c in instance.hom(inner.apex, outer.apex, limit=bound) if commutes(c)]
    if len(matches) > 1:
        raise UniquenessViolation(f"{len(matches)} commuting arrows between the apexes")
    if matches != [m]:
        raise UniquenessViolation("enumeration disagrees with the constructed arrow")


def check_sfunctor_laws(
    instance: SpinedCategory,
    f: SFunctor,
    population: Sequence[Any] = (),
    diagrams: Iterable[tuple[Any, Any]] = (),
    spine_bound: int = 6,
    morphisms: Iterable[Any] = (),
) -> LawReport:
    """SF1 up to ``spine_bound``, SF2 on each span, monotonicity along arrows.

    Monotonicity is checked on every ordered pair of ``population`` joined by
    a discovered morphism, and on the endpoints of each explicit morphism.
    """
    report = LawReport(f"sfunctor:{f.name}", enumeration_bound=spine_bound)
    for n in range(spine_bound + 1):
        got = f(instance.spine(n))
        if got != n:
            report.fail({"spine": n}, f"SF1: value {got} != {n}")
    for g, h in diagrams:
        report.population_size += 1
        apex = instance.proxy_pushout(g, h).apex
        left, right, top = f(g.target), f(h.target), f(apex)
        if top != max(left, right):
            report.fail(
                [_describe(g), _describe(h)], f"SF2: value(apex) {top} != max({left}, {right})"
            )
    values = [f(x) for x in population]
    report.population_size += len(values)
    for i, x in enumerate(population):
        for j, y in enumerate(population):
            if i != j and values[i] > values[j] and instance.exists_morphism(x, y):
                report.fail([_describe(x), _describe(y)], f"monotone: {values[i]} > {values[j]}")
    for m in morphisms:
        report.population_size += 1
        a, b = f(m.source), f(m.target)
        if a > b:
            report.fail(_describe(m), f"monotone: {a} > {b}")
    return report
