import random

import numpy as np
import pytest

from binomdet.batch import MAX_TOP, SequenceBatch, pascal_table
from binomdet.combinatorics import Partition, partitions_in_box
from binomdet.determinant import build_matrix_closed_form, build_matrix_path_counts
from binomdet.errors import BinomdetError
from binomdet.lattice import PointConfiguration, binomial


def test_pascal_table():
    t = pascal_table(12)
    assert all(t[n, k] == binomial(n, k) for n in range(13) for k in range(13))


@pytest.mark.parametrize("bound", [(3,), (4, 2), (4, 3, 3), (3, 3, 2, 2)])
def test_batch_matches_scalar_builders(bound):
    rng = random.Random(len(bound))
    box = partitions_in_box(bound)
    for lam in box:
        b = SequenceBatch(lam)
        for mu in rng.sample(box, min(4, len(box))):
            cf, pc = b.closed_form(mu), b.path_counts(mu)
            for n, s in enumerate(b.seqs):
                assert cf[n].tolist() == [list(r) for r in build_matrix_closed_form(lam, mu, s).entries]
                cfg = PointConfiguration.from_partitions(lam, mu, s)
                assert pc[n].tolist() == [list(r) for r in build_matrix_path_counts(cfg).entries]


def test_batch_refuses_overflow():
    with pytest.raises(BinomdetError):
        SequenceBatch(Partition((MAX_TOP + 1, 0)))
