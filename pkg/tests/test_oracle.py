import json
import random
from fractions import Fraction
from math import comb

import pytest

from brauerdm.errors import IdentityViolation, ParityError, SizeMismatch
from brauerdm.oracle import (AlgebraElement, BrauerDiagram, action_matrix, all_diagrams, cell_gram, compose,
                             cup_cap, dim_identity_report, dim_simple, half_diagrams, identity, random_diagram,
                             specht, transposition, verify_dim_identity)
from brauerdm.oracle.cell import report_json
from brauerdm.oracle.diagrams import perfect_matchings
from brauerdm.oracle.linalg import bareiss_rank, rational_reconstruct
from brauerdm.young import Partition, dim_delta, double_factorial, enumerate_lambda_n

P = Partition.parse


def el(delta, d):
    return AlgebraElement.basis(delta, d)


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def test_compose_examples():
    u = cup_cap(2, 1)
    assert compose(u, u) == (1, u)
    d = random_diagram(4, 4, random.Random(1))
    assert compose(identity(4), d) == (0, d)
    s = transposition(2, 1)
    assert compose(s, s) == (0, identity(2))
    with pytest.raises(SizeMismatch):
        compose(identity(2), identity(3))


def test_diagram_validation_and_flip():
    with pytest.raises(ValueError):
        BrauerDiagram.make(2, 2, [(1, 2), (1, 3)])
    d = BrauerDiagram.make(2, 0, [(1, 2)])
    assert d.flip() == BrauerDiagram.make(0, 2, [(1, 2)])
    assert str(cup_cap(2, 1)) == "{1-2 1'-2'}"


def test_associativity():
    rng = random.Random(20240601)
    for _ in range(500):
        n = rng.randint(1, 6)
        a, b, c = (random_diagram(n, n, rng) for _ in range(3))
        l1, ab = compose(a, b)
        l2, ab_c = compose(ab, c)
        l3, bc = compose(b, c)
        l4, a_bc = compose(a, bc)
        assert ab_c == a_bc and l1 + l2 == l3 + l4


@pytest.mark.parametrize("n, l, count", [(2, 0, 1), (4, 2, 6), (6, 0, 15)])
def test_half_diagram_examples(n, l, count):
    assert len(half_diagrams(n, l)) == count


def test_half_diagram_counts():
    for n in range(9):
        for l in range(n % 2, n + 1, 2):
            assert len(half_diagrams(n, l)) == comb(n, l) * double_factorial(n - l - 1)
    with pytest.raises(ParityError):
        half_diagrams(3, 2)


def test_brauer_dimension():
    for n in range(5):
        assert len(all_diagrams(n, n)) == double_factorial(2 * n - 1)
    for n in range(5, 9):
        assert sum(1 for _ in perfect_matchings(range(2 * n))) == double_factorial(2 * n - 1)
        assert sum(dim_delta(n, lam) ** 2 for lam in enumerate_lambda_n(n)) == double_factorial(2 * n - 1)


@pytest.mark.parametrize("delta", [0, 1, -2, 3])
def test_generator_relations(delta):
    for n in range(2, 6):
        one = el(delta, identity(n))
        for i in range(1, n):
            u, s = el(delta, cup_cap(n, i)), el(delta, transposition(n, i))
            assert u * u == u.scale(delta)
            assert s * s == one
            assert s * u == u and u * s == u
            if i + 1 < n:
                v = el(delta, cup_cap(n, i + 1))
                assert u * v * u == u
                assert v * u * v == v


def test_algebra_element_arithmetic():
    a = el(2, cup_cap(2, 1))
    b = el(2, identity(2))
    assert (a + b) - b == a
    assert (a - a).terms == {}
    with pytest.raises(ValueError):
        a + el(3, identity(2))


def test_specht_examples():
    assert specht(P("1")).dim == 1
    assert specht(P("1.1")).dim == 1
    data = specht(P("2.1"))
    assert data.dim == 2 and bareiss_rank(data.gram()) == 2


def test_specht_sign_representation():
    data = specht(P("1.1"))
    assert data.act((2, 1), 0) == [-1]
    assert specht(P("2")).act((2, 1), 0) == [1]


def test_cell_gram_examples():
    for delta in (-3, 0, 2, 5):
        assert cell_gram(delta, 2, P("-")).entries == [[delta]]
    assert cell_gram(0, 2, P("2")).entries == [[1]]
    for lam in ("3.1", "2.2", "2.1.1"):
        assert cell_gram(0, 4, P(lam)).entries == specht(P(lam)).gram()
    with pytest.raises(ParityError):
        cell_gram(0, 3, P("2"))


def test_dim_simple_examples():
    assert dim_simple(0, 2, P("-")) == 0
    assert dim_simple(0, 2, P("1.1")) == 1
    for lam in enumerate_lambda_n(4):
        assert dim_simple(99, 4, lam) == dim_delta(4, lam)


def test_gram_symmetric_and_semisimple():
    for n in range(6):
        for lam in enumerate_lambda_n(n):
            g = cell_gram(99, n, lam)
            assert g.is_symmetric()
            assert g.rank == g.size == dim_delta(n, lam)
            assert cell_gram(0, n, lam).is_symmetric()


def test_action_is_a_representation():
    rng = random.Random(7)
    for delta in (0, 2):
        for n, lam in ((3, P("1")), (4, P("2")), (4, P("1.1")), (4, P("-")), (5, P("2.1"))):
            for _ in range(15):
                d1, d2 = random_diagram(n, n, rng), random_diagram(n, n, rng)
                loops, d12 = compose(d1, d2)
                lhs = matmul(action_matrix(delta, n, lam, d1), action_matrix(delta, n, lam, d2))
                rhs = [[delta ** loops * x for x in row] for row in action_matrix(delta, n, lam, d12)]
                assert lhs == rhs


def test_form_is_contravariant():
    rng = random.Random(11)
    for delta in (0, 1, -2):
        for n, lam in ((3, P("1")), (4, P("2")), (4, P("-")), (4, P("1.1")), (5, P("2.1"))):
            g = cell_gram(delta, n, lam).entries
            for _ in range(10):
                d = random_diagram(n, n, rng)
                a = action_matrix(delta, n, lam, d)
                a_star = action_matrix(delta, n, lam, d.flip())
                assert matmul(transpose(a), g) == matmul(g, a_star)


def test_verify_dim_identity_examples():
    rep = verify_dim_identity(0, 4)
    cols = {c["label"]: c for c in rep["columns"]}
    assert cols["-"]["expected"] == 3 and cols["-"]["actual"] == 3
    assert cols["2"]["expected"] == 6 and cols["2"]["actual"] == 6
    assert verify_dim_identity(99, 4)["pass"]
    data = json.loads(report_json(rep))
    assert set(data) == {"delta", "n", "convention", "simple_dims", "columns", "pass"}


def test_verify_dim_identity_sweep():
    for delta in (-1, 0, 1, 2, 3):
        for n in range(7):
            assert verify_dim_identity(delta, n, "module")["pass"]


def test_primed_labels_fail_without_conjugation():
    assert not dim_identity_report(2, 4, "primed")["pass"]
    with pytest.raises(IdentityViolation):
        verify_dim_identity(-1, 5, "primed")


def test_rational_reconstruct():
    p = 2 ** 61 - 1
    for num, den in ((3, 7), (-5, 12), (0, 1), (123456, 789)):
        assert rational_reconstruct(num * pow(den, -1, p) % p, p) == Fraction(num, den)


def test_bareiss_rank():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == 3
    assert bareiss_rank([]) == 0


def test_hom_dim_small():
    pytest.importorskip("flint")
    from brauerdm.oracle import hom_dim
    assert hom_dim(0, 2, P("2"), P("-")) == 1
    assert hom_dim(0, 4, P("2"), P("2")) == 1
    assert hom_dim(99, 4, P("2"), P("-")) == 0
