from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from codeshare.codes import (
    CodeError,
    LinearCode,
    code_from_parity,
    code_make,
    dual_code,
    minimal_supports,
    parity_check,
    reed_solomon,
)
from codeshare.galois import field_make
from codeshare.matfield import MatrixF, rank


def _circuit(H: MatrixF, S) -> bool:
    """S is a circuit of the column matroid of H: dependent, every proper subset independent."""
    cols = [j - 1 for j in S]
    if rank(H.select_columns(cols)) != len(cols) - 1:
        return False
    return all(rank(H.select_columns([c for c in cols if c != d])) == len(cols) - 1 for d in cols)


def _brute_codewords(C):
    F = C.field
    return {
        x for x in product(range(F.size), repeat=C.n)
        if all(v == 0 for v in parity_check(C).apply(x))
    }


@st.composite
def codes(draw, fields=(field_make(2), field_make(3), field_make(2, 2)), max_n=5):
    F = draw(st.sampled_from(fields))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    rows = draw(st.lists(st.lists(st.integers(0, F.size - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    M = MatrixF.from_rows(F, rows, cols=n)
    if rank(M) < k:
        # fall back to [I | 0] of the same shape
        M = MatrixF.from_rows(F, [[int(i == j) for j in range(n)] for i in range(k)], cols=n)
    return LinearCode(M)


def test_repetition_code(rep3):
    assert (rep3.n, rep3.k) == (3, 1)


def test_from_parity_even_weight(even32):
    assert (even32.n, even32.k) == (3, 2)
    assert set(even32.codewords()) == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_from_parity_empty_matrix(F2):
    C = code_from_parity(MatrixF.from_rows(F2, [], cols=1), 1)
    assert (C.n, C.k) == (1, 1)


def test_rank_deficient_generator_rejected(F2):
    with pytest.raises(CodeError):
        code_make(MatrixF.from_rows(F2, [[1, 1], [1, 1]]))
    with pytest.raises(CodeError):
        code_from_parity(MatrixF.from_rows(F2, [[1, 1]]), n=3)
    with pytest.raises(CodeError):
        code_from_parity(MatrixF.identity(F2, 2))


def test_parity_check_examples(even32, full1, rep2):
    assert parity_check(even32).entries == ((1, 1, 1),)
    assert parity_check(full1).rows == 0 and parity_check(full1).cols == 1
    assert parity_check(rep2).entries == ((1, 1),)


def test_dual_examples(even32, rep3, F2, full1):
    assert dual_code(even32).same_code(rep3)
    self_dual = code_make(MatrixF.from_rows(F2, [[1, 0, 1, 0], [0, 1, 0, 1]]))
    assert dual_code(self_dual).same_code(self_dual)
    assert dual_code(dual_code(even32)).same_code(even32)
    with pytest.raises(CodeError):
        dual_code(full1)


def test_minimal_supports_examples(even32, rep3, F2):
    assert minimal_supports(even32) == [(1, 2), (1, 3), (2, 3)]
    assert minimal_supports(rep3) == [(1, 2, 3)]
    C = code_make(MatrixF.from_rows(F2, [[1, 0, 1, 0], [0, 1, 0, 1]]))
    assert minimal_supports(C) == [(1, 3), (2, 4)]


def test_reed_solomon_gf4(F4):
    C = reed_solomon(3, 2, F4, [1, 2, 3])
    assert C.generator.entries == ((1, 1, 1), (1, 2, 3))
    assert minimal_supports(C) == [(1, 2), (1, 3), (2, 3)]


def test_reed_solomon_gf5(F5):
    C = reed_solomon(4, 2, F5, [1, 2, 3, 4])
    assert minimal_supports(C) == list(combinations(range(1, 5), 3))


def test_reed_solomon_errors(F4, F5):
    with pytest.raises(CodeError):
        reed_solomon(4, 2, F4)
    with pytest.raises(CodeError):
        reed_solomon(3, 2, F5, [1, 1, 2])
    with pytest.raises(CodeError):
        reed_solomon(3, 2, F5, [0, 1, 2])


@pytest.mark.parametrize("field", [field_make(7), field_make(2, 3)], ids=["GF7", "GF8"])
def test_reed_solomon_is_mds(field):
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert minimal_supports(reed_solomon(n, k, field)) == list(combinations(range(1, n + 1), n - k + 1))


@settings(max_examples=60, deadline=None)
@given(codes())
def test_minimal_supports_are_circuits_of_parity_check(C):
    sups = minimal_supports(C)
    H = parity_check(C)
    for S in sups:
        assert _circuit(H, S)
    # conversely every circuit of H is a minimal support
    if C.k < C.n:
        for size in range(1, C.n + 1):
            for S in combinations(range(1, C.n + 1), size):
                if _circuit(H, S):
                    assert S in sups
    else:
        assert sups == [(i,) for i in range(1, C.n + 1)]


@settings(max_examples=60, deadline=None)
@given(codes())
def test_minimal_supports_antichain_and_cover(C):
    sups = [set(s) for s in minimal_supports(C)]
    for a in sups:
        for b in sups:
            assert a == b or not a <= b
    for w in C.codewords():
        supp = {j + 1 for j, x in enumerate(w) if x}
        if supp:
            assert any(s <= supp for s in sups)


@settings(max_examples=60, deadline=None)
@given(codes())
def test_dual_dimension_and_orthogonality(C):
    if C.k == C.n:
        return
    D = dual_code(C)
    assert D.k == C.n - C.k
    for g in C.generator.entries:
        for h in D.generator.entries:
            assert C.field.dot(g, h) == 0
    assert dual_code(D).same_code(C)


@settings(max_examples=40, deadline=None)
@given(codes(max_n=4))
def test_codewords_are_parity_kernel(C):
    assert set(C.codewords()) == _brute_codewords(C)


@settings(max_examples=60, deadline=None)
@given(codes(), st.data())
def test_column_scaling_preserves_minimal_supports(C, data):
    if C.k == C.n:
        return
    H = parity_check(C)
    F = C.field
    for j in range(H.cols):
        H = H.scale_column(j, data.draw(st.integers(1, F.size - 1)))
    assert minimal_supports(code_from_parity(H)) == minimal_supports(C)


def test_code_json_roundtrip(even32):
    assert LinearCode.from_json(even32.to_json()) == even32
    with pytest.raises(CodeError):
        LinearCode.from_json({"n": 3})
    bad = even32.to_json() | {"k": 1}
    with pytest.raises(CodeError):
        LinearCode.from_json(bad)


def test_embedded_code_keeps_supports(even32):
    from codeshare.galois import field_embed

    big = even32.embed(field_embed(even32.field, field_make(2, 4)))
    assert big.field.size == 16
    assert minimal_supports(big) == minimal_supports(even32)
