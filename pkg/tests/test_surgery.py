import pytest

from binomdet.combinatorics import (Partition, TriangularSequence, enumerate_triangular_sequences,
                                    partitions_in_box)
from binomdet.determinant import build_matrix_closed_form, coefficient, determinant
from binomdet.errors import BinomdetError
from binomdet.lattice import LatticePath, PointConfiguration, end_points, start_points
from binomdet.oracle import SignedTuple, enumerate_tuples, negative_tuples
from binomdet.surgery import (W12, W23, InversionCase, SwapKind, balanced_total, balanced_triples, classify,
                              diagonal_swap, horizontal_swap, is_balanced, p2_pairs, swap_negative,
                              verify_injection)

LAM, MU = Partition((3, 3, 3)), Partition((2, 2, 1))


def test_p2_pairs():
    assert p2_pairs((1, 0), (0, 0), 0) == 1
    assert p2_pairs((2, 2), (0, 0), 2) == 0  # A_1 = (4, 4) cannot reach B_1 = (2, 2)
    with pytest.raises(BinomdetError):
        p2_pairs((1, 0), (0, 0), 1)
    for lam in partitions_in_box((6, 6)):
        for mu in partitions_in_box((6, 6)):
            per_i = [p2_pairs(lam, mu, i) for i in range(lam[1] + 1)]
            dets = [determinant(build_matrix_closed_form(lam, mu, TriangularSequence(2, ((i,),))))
                    for i in range(lam[1] + 1)]
            assert per_i == dets
            assert sum(per_i) == coefficient(lam, mu).total


def test_horizontal_swap_worked_example(worked_config):
    (t,) = enumerate_tuples(worked_config(0, 2, 0), W12)
    case, res = swap_negative(t, (0, 2, 0))
    assert case is InversionCase.CASE1_12
    assert res.kind is SwapKind.HORIZONTAL and res.translation == 1
    assert res.ijk == (0, 1, 1)
    assert [p.start for p in res.paths] == start_points(LAM, TriangularSequence.from_ijk(0, 1, 1))
    assert [p.end for p in res.paths] == end_points(MU)
    assert SignedTuple((0, 1, 2), res.paths).is_vertex_disjoint()
    assert res.paths[2] == t.paths[2]


def test_horizontal_swap_is_invertible(worked_config):
    (t,) = enumerate_tuples(worked_config(0, 2, 0), W12)
    to_b1, to_b2, _ = t.paths
    res = horizontal_swap(to_b2, to_b1, (0, 2, 0))
    new1, new2 = res.paths
    # undo: cut new1 at the old A_2 and slide its head back onto A_2* = new2.start
    cut = to_b1.start
    head = new1.prefix_to(cut).translated(-res.translation, 0)
    assert head.then(new2) == to_b2
    assert new1.suffix_from(cut) == to_b1


def test_horizontal_swap_rejects_wrong_layout():
    with pytest.raises(BinomdetError):
        horizontal_swap(LatticePath((0, 5), "SS"), LatticePath((-1, 3), ""), (0, 0, 0))


def test_diagonal_swap_worked_example(worked_config):
    for t in enumerate_tuples(worked_config(2, 0, 2), W23):
        case, res = swap_negative(t, (2, 0, 2))
        assert case.value.startswith("case2")
        assert res.kind is SwapKind.DIAGONAL and res.translation == 1
        assert res.ijk == (1, 0, 2)
        assert [p.start for p in res.paths] == start_points(LAM, TriangularSequence.from_ijk(1, 0, 2))
        assert SignedTuple((0, 1, 2), res.paths).is_vertex_disjoint()


def test_diagonal_swap_direct():
    # lines through the two starts coincide; the swap relabels the paths
    res = diagonal_swap(LatticePath((0, 3), "EES"), LatticePath((1, 4), "EEE"), (2, 0, 2))
    assert res.paths == (LatticePath((1, 4), "EEE"), LatticePath((0, 3), "EES"))


def test_swap_bounds_over_sweep():
    """Case 1 and subcase 2.1-2.3 inequalities on every negative triple, parts <= 4."""
    seen = set()
    for lam in partitions_in_box((4, 4, 4)):
        for mu in partitions_in_box(lam):
            for s in enumerate_triangular_sequences(lam):
                i, j, k = s.ijk
                cfg = PointConfiguration.from_partitions(lam, mu, s)
                a1, a2, a3 = cfg.starts
                for t in negative_tuples(cfg):
                    case, res = swap_negative(t, s.ijk)
                    l = res.translation
                    seen.add(case)
                    assert case is classify(cfg.starts)
                    if case is InversionCase.CASE1_12:
                        assert j - l >= k + 1 + i >= k + 1 - i > 0
                        assert k + l < lam[1]
                    elif case is InversionCase.CASE2_NW:
                        assert l <= 2 * i - k - j - 1 and i - l >= k - i + j + 1 > 0
                    elif case is InversionCase.CASE2_SE:
                        assert l <= (lam[2] - lam[1]) + 2 * i - k - j - 1
                        assert i - l >= (lam[1] - lam[2]) + k - i + j + 1 > 0
                    else:
                        assert l <= max(a3.x - a2.x, a3.y - a2.y) and i - l > 0
    assert seen == set(InversionCase)


def test_verify_injection_worked_example():
    rep = verify_injection(LAM, MU, 2)
    assert rep.ok and rep.negatives == 4 and rep.positives == 16 and rep.images == 4
    assert rep.positives - rep.negatives == 12
    assert verify_injection(LAM, MU, 0).negatives == 0
    for f in range(1):
        assert verify_injection((0, 0, 0), (0, 0, 0), f).negatives == 0


def test_verify_injection_reports_problems(monkeypatch):
    import binomdet.surgery as surgery

    real = surgery.horizontal_swap

    def broken(pi1, pi2, ijk):
        res = real(pi1, pi2, ijk)
        return surgery.SwapResult(res.paths, (ijk[0], ijk[1], ijk[2]), res.translation, res.kind)

    monkeypatch.setattr(surgery, "horizontal_swap", broken)
    rep = surgery.verify_injection(LAM, MU, 2)
    assert not rep.ok and any("starts at" in v for v in rep.violations)


def test_balanced_worked_example():
    assert balanced_total(LAM, MU) == coefficient(LAM, MU).total == 54
    assert balanced_total(LAM, MU, reading="literal") == 57
    assert balanced_total((1, 0, 0), (0, 0, 0)) == coefficient((1, 0, 0), (0, 0, 0)).total
    assert balanced_triples(LAM, MU, TriangularSequence.from_ijk(2, 0, 2)) == 0
    with pytest.raises(BinomdetError):
        is_balanced(LAM, (0, 0, 0), enumerate_tuples(
            PointConfiguration.from_partitions(LAM, MU, TriangularSequence.from_ijk(0, 0, 0)), (0, 1, 2))[0].paths,
            reading="other")
