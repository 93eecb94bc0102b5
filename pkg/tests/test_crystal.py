import itertools
from dataclasses import dataclass

import pytest

from pathcrystal.crystal import (
    LOWER,
    RAISE,
    ClWeight,
    ColElem,
    ColumnCrystal,
    RowCrystal,
    RowElem,
    Tensor,
    TruncatedPath,
    TruncationError,
    CapExceeded,
    b_of,
    classical_highest,
    crystal_closure,
    eps_phi,
    epsilon_vector,
    fundamental,
    is_perfect,
    perfectness_witnesses,
    rotate_labels,
    tensor_apply,
    weight,
)

ROW_CASES = [(n, l) for n in (2, 3, 4) for l in (1, 2, 3)]
COL_CASES = [(n, k) for n in (2, 3, 4, 5) for k in range(1, n)]


@dataclass(frozen=True)
class Pair:
    """Two-factor tensor folded with Kashiwara's rule, used as an oracle."""

    left: object
    right: object

    def epsilon(self, i):
        return self.left.epsilon(i) + max(0, self.right.epsilon(i) - self.left.phi(i))

    def phi(self, i):
        return self.right.phi(i) + max(0, self.left.phi(i) - self.right.epsilon(i))

    def e(self, i):
        if self.left.phi(i) >= self.right.epsilon(i):
            x = self.left.e(i)
            return None if x is None else Pair(x, self.right)
        x = self.right.e(i)
        return None if x is None else Pair(self.left, x)

    def f(self, i):
        if self.left.phi(i) > self.right.epsilon(i):
            x = self.left.f(i)
            return None if x is None else Pair(x, self.right)
        x = self.right.f(i)
        return None if x is None else Pair(self.left, x)


def flatten(x):
    if isinstance(x, Pair):
        return flatten(x.left) + flatten(x.right)
    return (x,)


def all_crystals():
    return [RowCrystal(n, l) for n, l in ROW_CASES] + [ColumnCrystal(n, k) for n, k in COL_CASES]


def test_row_operators_examples():
    assert RowElem((1, 1, 0)).f(1) == RowElem((0, 2, 0))
    assert RowElem((0, 0, 2)).f(0) == RowElem((1, 0, 1))
    assert RowElem((0, 0, 2)).f(1) is None


def test_n2_chain():
    # 00 <-> 01 <-> 11 with f_1 to the right and f_0 to the left
    b00, b01, b11 = RowElem((2, 0)), RowElem((1, 1)), RowElem((0, 2))
    assert b00.f(1) == b01 and b01.f(1) == b11
    assert b11.f(0) == b01 and b01.f(0) == b00
    assert eps_phi(1, b01) == (1, 1)


def test_column_operators_examples():
    assert ColElem((1, 3), 4).f(1) == ColElem((2, 3), 4)
    assert ColElem((2, 4), 4).f(0) == ColElem((1, 2), 4)
    assert ColElem((2, 3), 4).f(2) is None


@pytest.mark.parametrize("B", all_crystals(), ids=str)
def test_inverse_property_and_pairing(B):
    n = B.n
    for b in B.elements():
        w = weight(b)
        for i in range(n):
            y = b.f(i)
            if y is not None:
                assert y.e(i) == b
                assert weight(y).content == tuple(
                    c - (1 if a == (i - 1) % n else 0) + (1 if a == i % n else 0)
                    for a, c in enumerate(w.content)
                )
            x = b.e(i)
            if x is not None:
                assert x.f(i) == b
            assert b.phi(i) - b.epsilon(i) == w.pairing(i)
            # eps / phi are the maximal string lengths
            k, y = 0, b
            while (y := y.e(i)) is not None:
                k += 1
            assert k == b.epsilon(i)
            k, y = 0, b
            while (y := y.f(i)) is not None:
                k += 1
            assert k == b.phi(i)


def test_element_counts():
    assert len(RowCrystal(3, 2).elements()) == 6
    assert len(RowCrystal(4, 3).elements()) == 20
    assert len(ColumnCrystal(5, 2).elements()) == 10


@pytest.mark.parametrize("n,k", [(n, k) for n, k in COL_CASES if k >= 2])
def test_columns_embed_into_single_boxes(n, k):
    """Classical operators on {a_1 < ... < a_k} agree with a_1 (x) ... (x) a_k."""
    def embed(c):
        return Tensor(tuple(ColElem((a,), n) for a in c.s))

    for c in ColumnCrystal(n, k).elements():
        for i in range(1, n):
            for direction in (LOWER, RAISE):
                got = tensor_apply(i, direction, c)
                want = tensor_apply(i, direction, embed(c))
                assert (got is None and want is None) or embed(got) == want


@pytest.mark.parametrize("B", all_crystals(), ids=str)
def test_rotation_intertwines(B):
    n = B.n
    for s in range(n):
        for b in B.elements():
            assert rotate_labels(s, b) in B
            for i in range(n):
                a = b.f(i)
                c = rotate_labels(s, b).f(i + s)
                assert (a is None and c is None) or rotate_labels(s, a) == c


def test_rotation_examples():
    assert rotate_labels(1, RowElem((2, 0, 0))) == RowElem((0, 2, 0))
    assert rotate_labels(1, (0, 2, 1, 0), 3) == (1, 0, 2, 1)
    assert rotate_labels(1, ColElem((2, 4), 4)) == ColElem((1, 3), 4)


def _singles(n):
    return RowCrystal(n, 1).elements()


@pytest.mark.parametrize("n", [2, 3])
def test_signature_rule_associativity(n):
    for b1, b2, b3 in itertools.product(_singles(n), repeat=3):
        flat = Tensor((b1, b2, b3))
        for nested in (Pair(Pair(b1, b2), b3), Pair(b1, Pair(b2, b3))):
            for i in range(n):
                assert (flat.epsilon(i), flat.phi(i)) == (nested.epsilon(i), nested.phi(i))
                for op in ("e", "f"):
                    a = getattr(flat, op)(i)
                    c = getattr(nested, op)(i)
                    assert (a is None and c is None) or a.factors == flatten(c)


def test_signature_rule_associativity_mixed():
    n = 3
    Bs = [RowCrystal(3, 2), ColumnCrystal(3, 2), RowCrystal(3, 1)]
    for b1, b2, b3 in itertools.product(*(B.elements() for B in Bs)):
        flat = Tensor((b1, b2, b3))
        nested = Pair(Pair(b1, b2), b3)
        for i in range(n):
            for op in ("e", "f"):
                a = getattr(flat, op)(i)
                c = getattr(nested, op)(i)
                assert (a is None and c is None) or a.factors == flatten(c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tensor_inverse_property(n):
    Bs = [RowCrystal(n, 1), RowCrystal(n, 2), ColumnCrystal(n, n - 1)]
    for length in (2, 3):
        for combo in itertools.product(Bs, repeat=length):
            if length == 3 and n == 4 and combo.count(Bs[1]) > 1:
                continue
            for factors in itertools.product(*(B.elements() for B in combo)):
                t = Tensor(factors)
                w = weight(t)
                for i in range(n):
                    y = t.f(i)
                    if y is not None:
                        assert y.e(i) == t
                    x = t.e(i)
                    if x is not None:
                        assert x.f(i) == t
                    assert t.phi(i) - t.epsilon(i) == w.pairing(i)


def test_tensor_examples():
    a, b = RowElem((1, 0)), RowElem((0, 1))
    t = Tensor((a, a)).f(1)
    assert t == Tensor((b, a))
    assert t.f(1) == Tensor((b, b))


def test_path_head_is_frozen():
    n, l = 3, 2
    p = TruncatedPath(fundamental(n, 0, l), (RowElem((l, 0, 0)),))
    q = p.f(1)
    assert q.head == p.head and q.body == (RowElem((1, 1, 0)),)
    # the head is highest weight: eps_i = 0, phi_i = <lambda, h_i>
    u = TruncatedPath(fundamental(n, 0, l), ())
    assert eps_phi(0, u) == (0, l)
    assert [u.epsilon(i) for i in range(n)] == [0, 0, 0]
    assert [u.phi(i) for i in range(n)] == [l, 0, 0]
    assert u.e(0) is None
    with pytest.raises(TruncationError):
        u.f(0)


def test_path_weight_additivity():
    p = TruncatedPath(fundamental(2, 0, 1), (RowElem((1, 0)), RowElem((0, 1))))
    w = p.weight()
    assert w.content == (1, 1) and w.level == 1
    assert w.pairing(0) == 1 and w.pairing(1) == 0
    assert TruncatedPath(fundamental(3, 1, 2), ()).weight() == ClWeight((2, 0, 0), 2)


def test_weight_pairings_sum_to_level():
    for B in all_crystals():
        for b in B.elements():
            assert sum(weight(b).pairings()) == 0


def test_closure_examples():
    g = crystal_closure([RowElem((0, 0, 2))], [(0, LOWER)])
    assert set(g.nodes) == {RowElem((0, 0, 2)), RowElem((1, 0, 1)), RowElem((2, 0, 0))}
    assert crystal_closure([RowElem((0, 0, 2))], []).nodes == [RowElem((0, 0, 2))]
    g = crystal_closure([RowElem((0, 0, 2))], [(0, LOWER), (1, LOWER)])
    assert set(g.nodes) == set(RowCrystal(3, 2).elements())
    assert all(lbl in (0, 1) for _, lbl, _ in g.edges)
    with pytest.raises(CapExceeded):
        crystal_closure([RowElem((0, 0, 2))], [(0, LOWER), (1, LOWER)], cap=4)


def test_closure_is_deterministic():
    a = crystal_closure([RowElem((0, 0, 3))], [(0, LOWER), (1, LOWER), (2, RAISE)])
    b = crystal_closure([RowElem((0, 0, 3))], [(2, RAISE), (1, LOWER), (0, LOWER)])
    assert a.nodes == b.nodes and a.edges == b.edges
    assert a.to_dot() == b.to_dot()


@pytest.mark.parametrize("n,l", ROW_CASES)
def test_rows_are_perfect(n, l):
    assert perfectness_witnesses(RowCrystal(n, l)) == {
        "level_bound": True, "eps_bijective": True, "phi_bijective": True}


@pytest.mark.parametrize("n,k", COL_CASES)
def test_columns_are_perfect_of_level_one(n, k):
    assert is_perfect(ColumnCrystal(n, k), 1)


def test_not_perfect_at_wrong_level():
    assert not is_perfect(RowCrystal(3, 2), 1)


@pytest.mark.parametrize("n,l", ROW_CASES)
def test_ground_state_elements(n, l):
    B = RowCrystal(n, l)
    lam = fundamental(n, 0, l)
    for j in range(1, 2 * n + 1):
        b = b_of(B, lam)
        r = (-j) % n
        assert b.x == tuple(l if c == r else 0 for c in range(n))
        lam = epsilon_vector(b, n)
        assert lam == fundamental(n, -j, l)


def test_classical_highest_in_tensor_square():
    a, b = RowElem((1, 0)), RowElem((0, 1))
    nodes = [Tensor(f) for f in itertools.product([a, b], repeat=2)]
    assert set(classical_highest(nodes, 2)) == {Tensor((a, a)), Tensor((a, b))}


def test_parse_and_encodings():
    B = RowCrystal(3, 2)
    assert B.parse("0,1,1") == RowElem((0, 1, 1))
    assert str(ColElem((1, 3), 4)) == "{1<3}"
    assert ColumnCrystal(4, 2).parse("{1<3}") == ColElem((1, 3), 4)
    with pytest.raises(ValueError):
        B.parse("1,1,1")
    p = TruncatedPath(fundamental(2, 0, 1), (RowElem((1, 0)), RowElem((0, 1))))
    assert str(p) == "u[1,0] | 1,0 | 0,1"
