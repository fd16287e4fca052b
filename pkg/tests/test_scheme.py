import pytest
from hypothesis import given, settings, strategies as st

from codeshare.access import threshold
from codeshare.construction import (
    VectorSpaceConstruction,
    code_construction,
    threshold_construction,
    trivial_construction,
)
from codeshare.galois import FieldError, field_make
from codeshare.scheme import (
    InconsistentSharesError,
    SchemeError,
    ShareBundle,
    SplitMix64,
    UnqualifiedSetError,
    construction_digest,
    deal,
    perfectness_audit,
    reconstruct,
    shares_from_dealer,
)

F4 = field_make(2, 2)
PHI = VectorSpaceConstruction(F4, 2, ((1, 3), (1, 2), (1, 1)))


def test_splitmix_reference_values():
    g = SplitMix64(0)
    assert g.next() == 0xE220A8397B1DCDAF
    assert g.next() == 0x6E789E6AA1B965F4
    with pytest.raises(SchemeError):
        SplitMix64(-1)


def test_shares_examples():
    assert shares_from_dealer(PHI, (2, 1)) == {1: 1, 2: 0, 3: 3}
    assert shares_from_dealer(PHI, (0, 0)) == {1: 0, 2: 0, 3: 0}
    one = trivial_construction(F4)
    for s in range(4):
        assert deal(one, s, seed=99).shares == {1: s}


def test_deal_keeps_secret_first():
    b = deal(PHI, 2, seed=7, keep_dealer=True)
    assert b.dealer_vector[0] == 2
    assert b.shares == shares_from_dealer(PHI, b.dealer_vector)
    assert deal(PHI, 2, seed=7).dealer_vector is None


def test_deal_rejects_foreign_secret():
    with pytest.raises(FieldError):
        deal(PHI, field_make(2)(1), seed=1)
    with pytest.raises(FieldError):
        deal(PHI, 4, seed=1)


def test_deal_is_deterministic():
    assert deal(PHI, 3, seed=11) == deal(PHI, 3, seed=11)


def test_reconstruct_examples():
    shares = {1: 1, 2: 0, 3: 3}
    assert reconstruct(PHI, (1, 2), shares) == 2
    assert reconstruct(PHI, (1, 2, 3), shares) == 2
    with pytest.raises(UnqualifiedSetError):
        reconstruct(PHI, (2,), shares)


def test_reconstruct_errors():
    with pytest.raises(SchemeError):
        reconstruct(PHI, (1, 2), {1: 1})
    with pytest.raises(InconsistentSharesError):
        reconstruct(PHI, (1, 2, 3), {1: 1, 2: 0, 3: 0})


def test_audit_examples():
    assert perfectness_audit(PHI, (2,)).verdict == "PERFECT"
    assert perfectness_audit(PHI, ()).verdict == "PERFECT"
    assert perfectness_audit(PHI, (1, 2)).verdict == "DETERMINED"
    report = perfectness_audit(PHI, (2,))
    assert all(counts == {0: 1, 1: 1, 2: 1, 3: 1} for counts in report.buckets.values())


def test_audit_small_tables():
    F3 = field_make(3)
    split = VectorSpaceConstruction(F3, 2, ((1, 0), (0, 1)))
    assert perfectness_audit(split, (2,)).verdict == "PERFECT"
    assert perfectness_audit(split, (1,)).verdict == "DETERMINED"
    half = VectorSpaceConstruction(field_make(2), 2, ((1, 1), (1, 0)))
    assert perfectness_audit(half, (1,)).verdict == "PERFECT"
    assert perfectness_audit(half, (2,)).verdict == "DETERMINED"


def test_audit_bound():
    big = threshold_construction(6, 6, field_make(7))
    with pytest.raises(SchemeError):
        perfectness_audit(big, (1,))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(0, 3))
def test_roundtrip_every_qualified_set(seed, secret):
    bundle = deal(PHI, secret, seed)
    for A in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]:
        assert reconstruct(PHI, A, bundle.shares) == secret


def test_perfectness_of_code_construction(even32, rep3):
    for C, gamma in [(even32, threshold(2, 3)), (rep3, threshold(3, 3))]:
        phi = code_construction(C)
        for mask in range(1 << phi.n):
            A = tuple(j + 1 for j in range(phi.n) if mask >> j & 1)
            expected = "DETERMINED" if gamma.is_qualified(A) else "PERFECT"
            assert perfectness_audit(phi, A).verdict == expected


def test_digest_and_bundle_json():
    d = construction_digest(PHI)
    assert len(d) == 64 and d == construction_digest(VectorSpaceConstruction.from_json(PHI.to_json()))
    assert d != construction_digest(VectorSpaceConstruction(F4, 2, ((1, 3), (1, 2), (1, 0))))
    b = deal(PHI, 1, seed=5)
    obj = b.to_json()
    assert set(obj) == {"construction_digest", "shares"}
    assert set(obj["shares"]) == {"1", "2", "3"}
    assert ShareBundle.from_json(obj) == b
    with pytest.raises(SchemeError):
        ShareBundle.from_json({"shares": {}})
