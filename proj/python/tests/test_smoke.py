import json
from fractions import Fraction

import pytest

import qkhintchine as qk


def test_su2_dims():
    rows = qk.dims("djq:A1:1/2", 3)
    assert [(r["length"], r["n"], r["d"], r["chi_sup"]) for r in rows] == [
        (0, 1, Fraction(1), 1),
        (1, 2, Fraction(5, 2), 2),
        (2, 3, Fraction(21, 4), 3),
        (3, 4, Fraction(85, 8), 4),
    ]


def test_root_data():
    assert qk.positive_root_count("G2") == 6
    assert qk.weyl_dimension("A2", [1, 1]) == 8
    assert qk.quantum_dimension("A1", [2], Fraction(1, 2)) == Fraction(21, 4)
    spec = qk.q_spectrum("A1", [1], "1/2")
    assert spec == [(Fraction(2), 1), (Fraction(1, 2), 1)]


def test_chebyshev_and_fusion():
    assert qk.chebyshev_f(2, 3) == 8
    assert qk.chebyshev_f(2, Fraction(7, 2)) == Fraction(45, 4)
    assert qk.chebyshev_g(3, 4) == 7
    assert qk.tensor_decompose("SU2", 2, 3) == {1: 1, 3: 1, 5: 1}
    assert qk.tensor_decompose("SO3", 1, 1) == {0: 1, 1: 1, 2: 1}


def test_kp_reports():
    report = qk.kp("oplus:3:3.5", p=4)
    assert report["verdict"] == "converged"
    assert float(report["tail_bound"]) < 1e-10
    assert report["model"] == "oplus:3:7/2"
    assert qk.kp("oplus:3:3", p=4)["verdict"] == "divergent"


def test_kp_matches_brute_force():
    # sum_k (k+1)/[k+1]_q at q = 1/2
    oracle = 0.0
    for k in range(300):
        d = sum(0.5 ** (k - 2 * j) for j in range(k + 1))
        oracle += (k + 1) / d
    report = qk.kp("djq:A1:1/2", p=2, tol="1e-20")
    assert abs(float(report["partial_sum"]) - oracle) < 1e-8


def test_exact_identities():
    lhs, rhs, equal = qk.lemma_base_check([2, Fraction(1, 2)])
    assert lhs == rhs == Fraction(4, 5) and equal
    assert qk.modular_duality_check([2, Fraction(1, 2)])
    for seed in range(20):
        diag = qk.random_trace_symmetric_spectrum(seed, 1 + seed % 8)
        assert sum(diag) == sum(1 / x for x in diag)
        assert qk.lemma_base_check(diag)[2]


def test_corollary_exponents():
    assert qk.corollary_exponents(4, 3) == (2, 3, Fraction(8, 3))


def test_run_matches_cli_schema():
    text, code = qk.run("dims", "djq:A1:1/2", fmt="csv", max_length=3)
    assert code == 0
    assert "length,label,n,d,chi_sup\n" in text
    doc, code = qk.run("verify", "aut:5:5")
    assert code == 0 and json.loads(doc)["passed"]


def test_errors_carry_codes():
    with pytest.raises(qk.QkError) as info:
        qk.canonical_spec("djq:E9:1/2")
    assert info.value.code == "E_INVALID_ROOT_SYSTEM"
    with pytest.raises(qk.QkError) as info:
        qk.is_kac("aut:5:3")
    assert info.value.code == "E_INVALID_MODEL"
    assert qk.is_kac("aut:4:3")
    assert not qk.is_kac("aut:5:5")
