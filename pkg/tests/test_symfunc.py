import itertools
from math import comb, prod

import pytest

from pathcrystal.qpoly import QPoly, q
from pathcrystal.symfunc import (
    Partition,
    SchurExpansion,
    Tableau,
    build_T_mu,
    charge,
    conjugate,
    enumerate_ssyt,
    kostka_foulkes,
    kostka_number,
    milne,
    partitions,
    schur_dim,
    word_charge,
)


def brute_ssyt(shape, content):
    """Every arrangement of the multiset, kept if semistandard."""
    letters = [v + 1 for v, c in enumerate(content) for _ in range(c)]
    found = set()
    for perm in set(itertools.permutations(letters)):
        rows, pos = [], 0
        for r in shape:
            rows.append(perm[pos:pos + r])
            pos += r
        try:
            found.add(Tableau(tuple(rows)))
        except ValueError:
            pass
    return found


def n_of(mu):
    return sum(i * m for i, m in enumerate(mu))


def qint(m):
    return QPoly({e: 1 for e in range(m)})


def fake_degree(lam):
    """K_{lam,1^N}(q) = q^{n(lam')} [N]! / prod_hooks [h]."""
    lam = Partition(lam)
    conj = lam.conjugate()
    num = QPoly.one()
    for i in range(1, lam.size + 1):
        num = num * qint(i)
    hooks = [row - j + conj[j] - i - 1 for i, row in enumerate(lam) for j in range(row)]
    # exact division by each [h], one at a time
    for h in hooks:
        num = _divide(num, qint(h))
    return num.shift(n_of(conj))


def _divide(num, den):
    quotient = {}
    rem = dict(num.coeffs)
    dmax = den.max_degree()
    while rem:
        top = max(rem)
        if top < dmax:
            raise AssertionError("not divisible")
        c = rem[top]
        quotient[top - dmax] = c
        for e, dc in den.items():
            key = top - dmax + e
            rem[key] = rem.get(key, 0) - c * dc
            if rem[key] == 0:
                del rem[key]
    return QPoly(quotient)


@pytest.mark.parametrize(
    "lam, expected",
    [((3, 2, 1), (3, 2, 1)), ((2, 2, 1, 1), (4, 2)), ((3,), (1, 1, 1))],
)
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == Partition(expected)


def test_conjugate_involution():
    for size in range(11):
        for lam in partitions(size):
            assert lam.conjugate().conjugate() == lam


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition.parse("3,2,1") == (3, 2, 1)
    assert Partition((2, 1)).size == 3 and Partition((2, 1)).length == 2


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_enumerate_ssyt_examples():
    assert enumerate_ssyt((2, 1), (2, 1)) == [Tableau(((1, 1), (2,)))]
    assert len(enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert enumerate_ssyt((1, 1), (2,)) == []
    with pytest.raises(ValueError):
        enumerate_ssyt((2, 1), (1, 1))


@pytest.mark.parametrize("size", range(1, 6))
def test_enumerate_ssyt_against_brute_force(size):
    for lam in partitions(size):
        for mu in itertools.product(range(size + 1), repeat=3):
            if sum(mu) != size:
                continue
            got = enumerate_ssyt(lam, mu)
            assert set(got) == brute_ssyt(lam, mu)
            words = [tuple(x for r in t.rows for x in r) for t in got]
            assert words == sorted(words)


def test_kostka_numbers():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((3,), (1, 1, 1)) == 1
    for lam in partitions(5):
        assert kostka_number(lam, lam) == 1


def test_charge_examples():
    assert charge(Tableau(((1, 1), (2,)))) == 0
    assert charge(Tableau(((1, 1, 2),))) == 1
    assert charge(build_T_mu((3, 2, 1), 4)) == 2


def test_charge_rejects_non_dominant_content():
    with pytest.raises(ValueError):
        word_charge((1, 2, 2))
    with pytest.raises(ValueError):
        charge(Tableau(((1, 3),)))


def test_kostka_foulkes_examples():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == q + q * q
    assert kostka_foulkes((3,), (1, 1, 1)) == QPoly.monomial(3)
    assert kostka_foulkes((4, 2), (3, 2, 1)) == q + q * q


@pytest.mark.parametrize("size", range(1, 7))
def test_kostka_foulkes_standard_content_is_fake_degree(size):
    for lam in partitions(size):
        assert kostka_foulkes(lam, (1,) * size) == fake_degree(lam)


@pytest.mark.parametrize("size", range(1, 7))
def test_kostka_foulkes_single_row(size):
    for mu in partitions(size):
        assert kostka_foulkes((size,), mu) == QPoly.monomial(n_of(mu))


@pytest.mark.parametrize("size", range(1, 7))
def test_kostka_foulkes_invariants(size):
    parts = list(partitions(size))
    for lam in parts:
        assert kostka_foulkes(lam, lam) == QPoly.one()
        for mu in parts:
            k = kostka_foulkes(lam, mu)
            assert k.evaluate(1) == kostka_number(lam, mu)
            if not lam.dominates(mu):
                assert k.is_zero()
            else:
                # monic of degree n(mu) - n(lam)
                assert k.max_degree() == n_of(mu) - n_of(lam)
                assert k[k.max_degree()] == 1


def test_build_T_mu():
    assert build_T_mu((3, 2, 1), 4).rows == ((1, 1, 1, 2), (2, 3))
    assert build_T_mu((2, 1), 3).rows == ((1, 1, 2),)
    assert build_T_mu((1,), 2).rows == ((1,),)
    assert build_T_mu((3, 2, 1), 4).shape == (4, 2)


def test_milne_examples():
    assert milne((1, 1, 1), 2) == SchurExpansion({(2, 1): q + q * q, (3,): q * q * q})
    assert milne((2,), 5) == SchurExpansion({(2,): QPoly.one()})
    m3 = milne((1, 1, 1), 3)
    assert m3[(1, 1, 1)] == QPoly.one() and len(m3) == 3


@pytest.mark.parametrize("size", range(1, 6))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_milne_at_one_counts_words(size, n):
    # sum_lam K_{lam mu}(1) dim_n(lam) = h_mu(1^n) = number of tuples of multisets
    for mu in partitions(size):
        total = sum(p.evaluate(1) * schur_dim(lam, n) for lam, p in milne(mu, n).terms.items())
        assert total == prod(comb(n + m - 1, m) for m in mu)


def test_schur_dim_examples():
    assert schur_dim((2, 1), 2) == 2
    assert schur_dim((3,), 2) == 4
    for n in range(1, 6):
        assert schur_dim((1,) * n, n) == 1
    with pytest.raises(ValueError):
        schur_dim((1, 1, 1), 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_dim_counts_tableaux(n):
    for size in range(1, 6):
        for lam in partitions(size, max_length=n):
            count = sum(
                kostka_number(lam, c)
                for c in itertools.product(range(size + 1), repeat=n)
                if sum(c) == size
            )
            assert schur_dim(lam, n) == count


def test_schur_expansion_json_round_trip():
    e = milne((2, 1, 1), 3)
    assert SchurExpansion.from_json(e.to_json()) == e
    t = build_T_mu((3, 2, 1), 4)
    assert Tableau.from_json(t.to_json()) == t
