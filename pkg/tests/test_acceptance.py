"""Acceptance suite: one test (and one printed line) per criterion.

Every check is exact; each criterion also carries a wall-clock budget that
the sweep must come in under.
"""

import time

from slkcheck.blocks import (
    count_simples,
    enumerate_compositions,
    partitions,
    weight_space_dim,
)
from slkcheck.cli import main
from slkcheck.daha import TensorContext, casimir_compatibility, verify_daha
from slkcheck.geometry import Conventions
from slkcheck.k0rep import (
    verify_quotient_intertwines,
    verify_serre_and_commute,
    verify_sl2_block_relation,
)
from slkcheck.kverify import (
    find_conventions,
    verify_commute,
    verify_ef_relation,
    verify_serre_graded,
    verify_twist,
)

EXPECTED_CONVENTIONS = Conventions(shift_sign=1, dilation=-2, orientation=1,
                                   e_sign=(1, 0, 0), f_sign=(0, 1, 1))


def _line(num: int, ok: bool, label: str, elapsed: float, checks: int) -> None:
    print("criterion %d: %s - %s (%d checks, %.1fs)" %
          (num, "PASS" if ok else "FAIL", label, checks, elapsed))


def test_criterion_1_block_counts_match_weight_dims():
    t0 = time.time()
    checks = 0
    spot = None
    for n in range(1, 7):
        for k in (2, 3):
            for lam in partitions(n):
                for a in enumerate_compositions(n, k):
                    assert count_simples(lam, a) == weight_space_dim(lam, k, a), \
                        (lam, k, a)
                    checks += 1
    spot = [count_simples((2, 1), a) for a in enumerate_compositions(3, 2)]
    assert spot == [1, 2, 2, 1]
    elapsed = time.time() - t0
    assert elapsed < 10
    _line(1, True, "orbit counts equal weight dimensions, n <= 6", elapsed,
          checks)


def test_criterion_2_operator_relations():
    t0 = time.time()
    checks = 0
    for n in range(1, 6):
        for k in (2, 3):
            for a in enumerate_compositions(n, k):
                for i in range(1, k):
                    rep = verify_sl2_block_relation(k, n, a, i)
                    assert rep["status"] == "pass", rep
                    checks += 1
            rep = verify_serre_and_commute(k, n)
            assert rep["status"] == "pass", rep
            checks += rep["checks"]
    elapsed = time.time() - t0
    assert elapsed < 30
    _line(2, True, "tuple-model operator identities, n <= 5", elapsed, checks)


def test_criterion_3_quotient_intertwines():
    t0 = time.time()
    checks = 0
    for n in range(1, 6):
        for k in (2, 3):
            for lam in partitions(n):
                rep = verify_quotient_intertwines(lam, k, n)
                assert rep["status"] == "pass", rep
                checks += 1
    elapsed = time.time() - t0
    assert elapsed < 30
    _line(3, True, "quotient to orbit classes intertwines E/F, n <= 5",
          elapsed, checks)


def test_criterion_4_hecke_relations():
    t0 = time.time()
    checks = 0
    epsilons = set()
    for n in (2, 3):
        for m in (0, 1, 2):
            for d in (2, 3):
                ctx = TensorContext(n, m, d)
                rep = verify_daha(ctx)
                assert rep["status"] == "pass", rep
                if rep["epsilon"] is not None:
                    epsilons.add(rep["epsilon"])
                assert casimir_compatibility(ctx)["status"] == "pass"
                checks += 2
    assert epsilons == {1}
    elapsed = time.time() - t0
    assert elapsed < 60
    _line(4, True, "tensor-space Hecke relations, one global sign", elapsed,
          checks)


def test_criterion_5_kernel_commutators_under_one_convention():
    t0 = time.time()
    conv, _ = find_conventions()
    assert conv == EXPECTED_CONVENTIONS
    checks = 0
    for n in range(1, 5):
        for k in (2, 3):
            for a in enumerate_compositions(n, k):
                for i in range(1, k):
                    for variant in ("CK0", "P0"):
                        rep = verify_ef_relation(a, i, variant, conv)
                        assert rep["status"] == "pass", rep
                        checks += 1
                        for j in range(1, k):
                            if j != i:
                                rep = verify_commute(a, i, j, variant, conv)
                                assert rep["status"] == "pass", rep
                                checks += 1
    elapsed = time.time() - t0
    assert elapsed < 600
    _line(5, True, "localized kernel commutators, both flavors, n <= 4",
          elapsed, checks)


def test_criterion_6_graded_cubic_relation():
    t0 = time.time()
    conv, _ = find_conventions()
    checks = 0
    for n in (1, 2, 3):
        for a in enumerate_compositions(n, 3):
            for i, j in ((1, 2), (2, 1)):
                rep = verify_serre_graded(a, i, j, "CK0", conv, check_q1=True)
                assert rep["status"] == "pass", rep
                checks += 1
    elapsed = time.time() - t0
    assert elapsed < 300
    _line(6, True, "graded cubic relation with q+1/q, and its q->1 shadow",
          elapsed, checks)


def test_criterion_7_twist_carries_ck_to_p():
    t0 = time.time()
    conv, _ = find_conventions()
    checks = 0
    for n in range(1, 5):
        for k in (2, 3):
            for a in enumerate_compositions(n, k):
                for i in range(1, k):
                    rep = verify_twist(a, i, conv)
                    assert rep["status"] == "pass", rep
                    checks += 1
    elapsed = time.time() - t0
    assert elapsed < 120
    _line(7, True, "det-twist conjugation maps CK flavors to P flavors",
          elapsed, checks)


def test_criterion_8_negative_controls():
    t0 = time.time()
    # Fault injection must break the tuple-model, tensor-space, and kernel
    # relations, with the same failures on every run.
    assert main(["relations", "--n", "3", "--perturb", "--out",
                 "/dev/null"]) == 1
    assert main(["daha", "--n", "2", "--m", "0", "--d", "2", "--perturb",
                 "--out", "/dev/null"]) == 1
    assert main(["kernels", "--n", "2", "--k", "2", "--perturb", "--out",
                 "/dev/null"]) == 1
    conv = EXPECTED_CONVENTIONS
    first = [verify_ef_relation((0, 2), 1, "CK0", conv, perturb=True)["status"],
             verify_sl2_block_relation(2, 2, (2, 0), 1,
                                       perturb=True)["status"],
             verify_daha(TensorContext(2, 0, 2), perturb=True)["status"]]
    second = [verify_ef_relation((0, 2), 1, "CK0", conv, perturb=True)["status"],
              verify_sl2_block_relation(2, 2, (2, 0), 1,
                                        perturb=True)["status"],
              verify_daha(TensorContext(2, 0, 2), perturb=True)["status"]]
    assert first == ["fail", "fail", "fail"]
    assert first == second
    elapsed = time.time() - t0
    _line(8, True, "perturbed runs fail deterministically", elapsed, 6)
