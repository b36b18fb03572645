import pytest
from hypothesis import given
from hypothesis import strategies as st

from lagrange import ParseError, Permutation, compose, format_cycles, identity, inverse, parse_cycles


def apply_then(p, q):
    # oracle: pointwise "p then q"
    return tuple(q[p[x]] for x in range(len(p)))


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 8))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


class TestParse:
    def test_identity(self):
        assert parse_cycles("()", 4) == identity(4)

    def test_three_cycle(self):
        assert list(parse_cycles("(1,2,3)", 3)) == [1, 2, 0]

    def test_two_transpositions(self):
        assert list(parse_cycles("(1,2)(3,4)", 4)) == [1, 0, 3, 2]

    def test_whitespace_insensitive(self):
        assert parse_cycles(" ( 1 , 2 ) ( 3,4 ) ", 4) == parse_cycles("(1,2)(3,4)", 4)

    @pytest.mark.parametrize("text, token", [
        ("(1,2,1)", "1"),
        ("(1,5)", "5"),
        ("(1,2", "("),
        ("1,2)", "1"),
        ("(1,x)", "x"),
        ("(1,2)(2,3)", "2"),
    ])
    def test_errors_name_token(self, text, token):
        with pytest.raises(ParseError) as exc:
            parse_cycles(text, 4)
        assert repr(token) in str(exc.value) or token in str(exc.value)

    def test_bad_degree(self):
        with pytest.raises((ParseError, ValueError)):
            parse_cycles("()", 0)


class TestArithmetic:
    def test_compose_example(self):
        p = parse_cycles("(1,2,3)", 3)
        q = parse_cycles("(1,2)", 3)
        assert compose(p, q) == parse_cycles("(2,3)", 3)

    def test_inverse_examples(self):
        assert inverse(identity(3)) == identity(3)
        assert inverse(parse_cycles("(1,2,3)", 3)) == parse_cycles("(1,3,2)", 3)
        t = parse_cycles("(1,2)", 3)
        assert inverse(t) == t

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity(3), identity(4))

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    @given(perm_triples())
    def test_compose_matches_pointwise_oracle(self, t):
        p, q, _ = t
        assert tuple(compose(p, q)) == apply_then(p, q)

    @given(perm_triples())
    def test_associative(self, t):
        p, q, r = t
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(perm_triples())
    def test_inverse_and_identity_laws(self, t):
        p = t[0]
        e = identity(len(p))
        assert compose(p, inverse(p)) == e
        assert compose(inverse(p), p) == e
        assert compose(p, e) == p == compose(e, p)
        assert sorted(p) == list(range(len(p)))


class TestFormat:
    def test_canonical(self):
        p = parse_cycles("(4,3)(2,5,1)", 5)
        assert format_cycles(p) == "(1,2,5)(3,4)"

    def test_identity(self):
        assert format_cycles(identity(3)) == "()"

    def test_zero_based(self):
        assert format_cycles(parse_cycles("(1,2)", 2), one_based=False) == "(0,1)"

    @given(st.integers(1, 9).flatmap(perms))
    def test_round_trip(self, p):
        assert parse_cycles(format_cycles(p), len(p)) == p
