"""Ground-state paths, Demazure crystals by lowering closure, their explicit
tensor-product models and graded characters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .crystal import (
    DEFAULT_CAP,
    LOWER,
    CapExceeded,
    ColumnCrystal,
    Crystal,
    TruncatedPath,
    b_of,
    crystal_closure,
    epsilon_vector,
    fundamental,
    induced_graph,
    is_perfect,
    kr_crystal,
    node_key,
)
from .energy import homogeneous_energy, inhomogeneous_energy
from .qpoly import QPoly
from .symfunc import (
    Partition,
    SchurExpansion,
    build_T_mu,
    charge,
    kostka_foulkes,
    partitions,
)
from .weyl import is_increasing_chain, rectangular_letter, word_wk, word_wmu


def ground_sequence(lam: Sequence[int], crystals: Sequence[Crystal]):
    """Iterate ``b(lam)`` and ``lam -> eps(b(lam))`` through ``crystals``
    (position 1 first).  Returns ``(elements, weights)`` with
    ``weights[j] = lambda_j``."""
    lams = [tuple(lam)]
    elems = []
    for B in crystals:
        b = b_of(B, lams[-1])
        elems.append(b)
        lams.append(epsilon_vector(b, B.n))
    return elems, lams


@dataclass(frozen=True)
class DemazureSetup:
    """Path realisation of ``B(l Lambda_shift)`` by ``B = B^{k,l}``.

    Step ``(j, a)`` applies the a-th letter from the right of
    ``R^{(k)}_{-k(j-1)}`` (shifted by ``shift``); for k = 1 this is the
    scheme ``i^{(j)}_a = a - j``.  A custom ``scheme(j, a)`` may be given.
    """

    n: int
    l: int = 1
    k: int = 1
    shift: int = 0
    scheme: Callable[[int, int], int] | None = None

    @property
    def crystal(self) -> Crystal:
        return kr_crystal(self.n, self.k, self.l)

    @property
    def d(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def lam(self) -> tuple[int, ...]:
        return fundamental(self.n, self.shift, self.l)

    def letter(self, j: int, a: int) -> int:
        if self.scheme is not None:
            return self.scheme(j, a) % self.n
        return (rectangular_letter(self.n, self.k, j, a) + self.shift) % self.n

    def word(self, K: int) -> tuple[int, ...]:
        return word_wk(self.n, K, self.letter, self.d)

    def split(self, K: int) -> tuple[int, int]:
        """``K = (j-1) d + a`` with ``1 <= a <= d``."""
        if K < 1:
            raise ValueError("K must be positive")
        j, a = divmod(K - 1, self.d)
        return j + 1, a + 1

    def default_truncation(self, K: int) -> int:
        return -(-K // self.d) + 1

    def ground_elements(self, count: int):
        return ground_sequence(self.lam, [self.crystal] * count)

    def ground_state(self, J: int) -> TruncatedPath:
        elems, lams = self.ground_elements(J)
        return TruncatedPath(lams[J], tuple(reversed(elems)))

    def next_ground(self, J: int):
        """``gb_{J+1}``, the frozen element just inside the head."""
        return self.ground_elements(J + 1)[0][J]

    def rotated(self, s: int) -> "DemazureSetup":
        if self.scheme is not None:
            raise ValueError("cannot rotate a custom scheme")
        return DemazureSetup(self.n, self.l, self.k, (self.shift + s) % self.n)

    def describe(self) -> dict:
        return {"n": self.n, "l": self.l, "k": self.k, "lambda": list(self.lam), "d": self.d}


@dataclass(frozen=True)
class InhomogeneousSetup:
    """``B(Lambda_{|mu|})`` realised by ``B^{mu_1,1} (x) ... (x) B^{mu_m,1}``
    (``b_1`` next to the head, ``b_m`` rightmost)."""

    n: int
    mu: tuple[int, ...]

    def __post_init__(self):
        mu = Partition(self.mu)
        object.__setattr__(self, "mu", tuple(mu))
        if any(not 1 <= p <= self.n - 1 for p in mu):
            raise ValueError(f"parts of {mu} must lie in 1..{self.n - 1}")

    @property
    def crystals(self) -> tuple[Crystal, ...]:
        return tuple(ColumnCrystal(self.n, p) for p in self.mu)

    @property
    def lam(self) -> tuple[int, ...]:
        return fundamental(self.n, sum(self.mu), 1)

    def word(self) -> tuple[int, ...]:
        return word_wmu(self.mu, self.n)

    def ground_state(self, J: int | None = None) -> TruncatedPath:
        if J not in (None, len(self.mu)):
            raise ValueError("inhomogeneous paths have a fixed length")
        elems, lams = ground_sequence(self.lam, list(reversed(self.crystals)))
        return TruncatedPath(lams[-1], tuple(reversed(elems)))

    def describe(self) -> dict:
        return {"n": self.n, "mu": list(self.mu), "lambda": list(self.lam)}


@dataclass
class CrystalSubset:
    """A finite set of truncated paths; ``degree`` (when known) counts the
    0-arrows from the ground state, i.e. the power of ``q = e^{-delta}``."""

    paths: frozenset
    n: int
    degree: dict | None = None

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, p) -> bool:
        return p in self.paths

    def __iter__(self):
        return iter(sorted(self.paths, key=node_key))

    def graph(self):
        return induced_graph(self.paths, self.n)


def build_Bja(setup: DemazureSetup, j: int, a: int) -> frozenset:
    """``B^{(j)}_a``: close ``{gb_j}`` under ``f_{i(j,1)}, ..., f_{i(j,a)}`` inside B."""
    current = {setup.ground_elements(j)[0][j - 1]}
    for step in range(1, a + 1):
        g = crystal_closure(current, [(setup.letter(j, step), LOWER)])
        current = set(g.nodes)
    return frozenset(current)


@dataclass
class ConditionReport:
    perfect: bool
    full_filtration: bool
    pairing_bound: bool
    increasing_chain: bool
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.perfect and self.full_filtration and self.pairing_bound and self.increasing_chain

    def to_json(self) -> dict:
        return {
            "I_perfect_necessary": self.perfect,
            "II_full_filtration": self.full_filtration,
            "III_pairing_bound": self.pairing_bound,
            "IV_increasing_chain": self.increasing_chain,
            "details": self.details,
        }


def check_conditions(setup: DemazureSetup, depth: int = 3) -> ConditionReport:
    """Conditions (I)-(IV) for ``j <= depth``.  (I) is checked only through
    its computable consequences (``perfectness_witnesses``)."""
    B = setup.crystal
    n, d = setup.n, setup.d
    full = set(B.elements())
    _, lams = setup.ground_elements(depth)
    II = True
    III = True
    details: dict = {"II_failures": [], "III_failures": []}
    for j in range(1, depth + 1):
        prev = build_Bja(setup, j, 0)
        for a in range(1, d + 1):
            i = setup.letter(j, a)
            bound = lams[j][i]
            if any(bound > b.epsilon(i) for b in prev):
                III = False
                details["III_failures"].append([j, a])
            prev = build_Bja(setup, j, a)
        if set(prev) != full:
            II = False
            details["II_failures"].append(j)
    words = [setup.word(K) for K in range(depth * d + 1)]
    return ConditionReport(is_perfect(B, setup.l), II, III, is_increasing_chain(words, n), details)


def demazure_paths(setup, word: Sequence[int], J: int | None = None, cap: int = DEFAULT_CAP) -> CrystalSubset:
    """``B_w(lambda)`` by the recursion ``B_{r_i w} = U_n f_i^n B_w``, reading
    the word right to left from the ground-state path.  Raises
    ``TruncationError`` if a lowering would leave the truncated region."""
    if J is None and isinstance(setup, DemazureSetup):
        J = setup.default_truncation(max(len(word), 1))
    ground = setup.ground_state(J)
    degree = {ground: 0}
    for i in reversed(tuple(word)):
        frontier = list(degree)
        while frontier:
            nxt = []
            for x in frontier:
                y = x.f(i)
                if y is None or y in degree:
                    continue
                if len(degree) >= cap:
                    raise CapExceeded(f"Demazure closure exceeded {cap} nodes")
                degree[y] = degree[x] + (1 if i % setup.n == 0 else 0)
                nxt.append(y)
            frontier = nxt
    return CrystalSubset(frozenset(degree), setup.n, degree)


def demazure_model(setup: DemazureSetup, K: int, J: int | None = None) -> CrystalSubset:
    """``u_{lambda_j} (x) B^{(j)}_a (x) B^{(x)(j-1)}`` with frozen padding up to J."""
    if K == 0:
        J = 1 if J is None else J
        return CrystalSubset(frozenset([setup.ground_state(J)]), setup.n)
    j, a = setup.split(K)
    J = setup.default_truncation(K) if J is None else J
    if J < j:
        raise ValueError(f"truncation J={J} shorter than j={j}")
    ground = setup.ground_state(J)
    frozen = ground.body[: J - j]
    full = setup.crystal.elements()
    partial = sorted(build_Bja(setup, j, a))
    paths = frozenset(
        ground.__class__(ground.head, frozen + (x,) + tail)
        for x in partial
        for tail in itertools.product(full, repeat=j - 1)
    )
    return CrystalSubset(paths, setup.n)


def inhomogeneous_model(setup: InhomogeneousSetup) -> CrystalSubset:
    ground = setup.ground_state()
    bodies = itertools.product(*(B.elements() for B in setup.crystals))
    return CrystalSubset(frozenset(TruncatedPath(ground.head, tuple(b)) for b in bodies), setup.n)


@dataclass
class IsoReport:
    K: int
    set_equal: bool
    edges_equal: bool
    size: int
    missing: list[str]
    extra: list[str]

    @property
    def equal(self) -> bool:
        return self.set_equal and self.edges_equal

    def to_json(self) -> dict:
        return {
            "K": self.K,
            "equal": self.equal,
            "set_equal": self.set_equal,
            "edges_equal": self.edges_equal,
            "size": self.size,
            "diff": {"missing_from_closure": self.missing, "extra_in_closure": self.extra},
        }


def verify_iso(setup: DemazureSetup, K: int, J: int | None = None, cap: int = DEFAULT_CAP) -> IsoReport:
    """Compare the closure along ``w^{(K)}`` with the explicit product model,
    as sets and as edge-coloured graphs."""
    J = setup.default_truncation(max(K, 1)) if J is None else J
    closure = demazure_paths(setup, setup.word(K), J, cap)
    model = demazure_model(setup, K, J)
    missing = sorted(map(str, model.paths - closure.paths))
    extra = sorted(map(str, closure.paths - model.paths))
    g1, g2 = closure.graph(), model.graph()
    return IsoReport(K, not missing and not extra, set(g1.edges) == set(g2.edges), len(closure), missing[:20], extra[:20])


def classical_partition(p: TruncatedPath) -> Partition:
    content = p.content()
    if any(a < b for a, b in zip(content, content[1:])):
        raise ValueError(f"classical highest weight {content} of {p} is not dominant")
    return Partition(content)


def demazure_character(model: CrystalSubset, grading: Callable[[TruncatedPath], int]) -> SchurExpansion:
    """``sum over classical-highest p of q^{grading(p)} s_{content(p)}``.

    The model must be stable under ``e_i`` for ``i != 0``; this is asserted.
    """
    n = model.n
    terms: dict[Partition, QPoly] = {}
    for p in model:
        highest = True
        for i in range(1, n):
            up = p.e(i)
            if up is not None:
                highest = False
                if up not in model.paths:
                    raise ValueError(f"model not closed under e_{i}: {p}")
        if highest:
            lam = classical_partition(p)
            terms[lam] = terms.get(lam, QPoly()) + QPoly.monomial(grading(p))
    return SchurExpansion(terms)


def character_setup(n: int, l: int, L: int, k: int = 1) -> DemazureSetup:
    """Setup whose ``w^{(Ld)}`` Demazure crystal is ``u_{l Lambda_0} (x) B^{(x)L}``:
    the base scheme rotated by ``kL``."""
    return DemazureSetup(n, l, k).rotated(k * L)


def homogeneous_grading(setup: DemazureSetup, J: int) -> Callable[[TruncatedPath], int]:
    ground = setup.ground_state(J)
    nxt = setup.next_ground(J)
    B = setup.crystal
    return lambda p: homogeneous_energy(p, ground, nxt, B)


def homogeneous_character(n: int, l: int, L: int, k: int = 1, source: str = "model") -> SchurExpansion:
    """``e^{-l Lambda_0} ch V_{w^{(Ld)}}(l Lambda_{kL})`` graded by the energy ``D``.

    ``source='closure'`` builds the crystal by lowering closure and grades by
    the number of 0-arrows instead, which does not use the energy function.
    """
    setup = character_setup(n, l, L, k)
    if L == 0:
        return SchurExpansion({Partition(): QPoly.one()})
    if source == "closure":
        sub = demazure_paths(setup, setup.word(L * setup.d), J=L)
        return demazure_character(sub, sub.degree.__getitem__)
    sub = demazure_model(setup, L * setup.d, J=L)
    head = next(iter(sub.paths)).head
    if head != fundamental(n, 0, l):
        raise AssertionError(f"head {head} is not l Lambda_0")
    return demazure_character(sub, homogeneous_grading(setup, L))


def E0(n: int, l: int, L: int) -> int:
    """``l a (L - n(a+1)/2)`` with ``a = floor(L/n)``."""
    a = L // n
    return l * (a * L - n * a * (a + 1) // 2)


@dataclass
class CharacterReport:
    kind: str
    setup: dict
    lhs: SchurExpansion
    rhs: SchurExpansion
    checks: dict = field(default_factory=dict)
    conditions: dict | None = None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs and all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "setup": self.setup,
            "condition_report": self.conditions,
            "lhs_expansion": self.lhs.to_json(),
            "rhs_expansion": self.rhs.to_json(),
            "checks": self.checks,
            "equal": self.equal,
            "diff": self.lhs.diff(self.rhs),
        }


def verify_kostka(n: int, l: int, L: int) -> CharacterReport:
    """``q^{E_0} Kbar_lam(q) = K_{lam,(l^L)}(q)`` for every ``lam |- lL``, ``l(lam) <= n``."""
    setup = character_setup(n, l, L)
    lhs = homogeneous_character(n, l, L).shift(E0(n, l, L))
    rect = Partition((l,) * L)
    rhs = SchurExpansion({lam: kostka_foulkes(lam, rect) for lam in partitions(l * L, max_length=n)})
    return CharacterReport(
        "kostka",
        {**setup.describe(), "L": L, "E0": E0(n, l, L)},
        lhs,
        rhs,
        conditions=check_conditions(DemazureSetup(n, l), depth=min(L, 3)).to_json(),
    )


def inhomogeneous_character(n: int, mu: Sequence[int]) -> tuple[SchurExpansion, CrystalSubset]:
    """The Demazure character of ``V_{w_mu}(Lambda_{|mu|})`` by lowering
    closure, graded by the number of 0-arrows."""
    setup = InhomogeneousSetup(n, tuple(mu))
    sub = demazure_paths(setup, setup.word())
    return demazure_character(sub, sub.degree.__getitem__), sub


def verify_inhom(n: int, mu: Sequence[int]) -> CharacterReport:
    """``ch = q^{c(T_mu)} sum_lam K_{lam' mu}(q^{-1}) s_lam``.

    Besides the character identity this checks that the closure equals the
    tensor model, and that ``sum_p q^{E(p)}`` over classical-highest paths of
    shape ``lam`` equals ``K_{lam' mu}(q^{-1})``.
    """
    setup = InhomogeneousSetup(n, tuple(mu))
    lhs, sub = inhomogeneous_character(n, mu)
    model = inhomogeneous_model(setup)
    c = charge(build_T_mu(setup.mu, n))
    size = sum(setup.mu)
    rhs = SchurExpansion(
        {lam: kostka_foulkes(lam.conjugate(), setup.mu).invert().shift(c) for lam in partitions(size, max_length=n)}
    )
    crystals = setup.crystals
    energies = demazure_character(model, lambda p: inhomogeneous_energy(p.body, crystals))
    ny = SchurExpansion(
        {lam: kostka_foulkes(lam.conjugate(), setup.mu).invert() for lam in partitions(size, max_length=n)}
    )
    return CharacterReport(
        "inhom",
        {**setup.describe(), "word": list(setup.word()), "charge_T_mu": c},
        lhs,
        rhs,
        checks={"closure_equals_model": sub.paths == model.paths, "energy_sum_matches_kostka": energies == ny},
    )
