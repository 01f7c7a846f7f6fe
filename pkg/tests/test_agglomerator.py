import numpy as np
import pytest
from scipy.cluster.hierarchy import linkage as scipy_linkage

from owalinkbase.exceptions import InputError
from owalinkbase.geometry import CondensedDistanceMatrix, PointSet, euclidean_distances
from owalinkbase.owa import OwaLinkageSpec
from owalinkbase.sequences import CoefficientSequence
from owalink.agglomerator import cluster, cut, detect_inversions, heights, monotonicity_certificate
from owalink.compare import compare_strategies
from owalink.conditions import check_suf
from owalink.dendrogram import Dendrogram, MergeRecord
from owalink.exceptions import CoordinatesRequired, InvalidClusterCount, InvariantBreach, TooFewObjects
from owalink.linkage import LinkageMethod

CLASSICAL = ["single", "complete", "average", "weighted", "centroid", "median", "ward"]
MONOTONE = ["single", "complete", "average", "weighted", "ward"]


def merged_pairs(dendrogram):
    return [(m.left_id, m.right_id) for m in dendrogram.merges]


def datasets(rng, count, max_n=40, max_dimension=5):
    """Seeded Gaussian point clouds of random size and dimension."""
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        points = PointSet(rng.normal(size=(n, int(rng.integers(1, max_dimension + 1)))))
        yield euclidean_distances(points), points


@pytest.mark.parametrize("strategy", ["recompute", "incremental"])
def test_mean_of_two_smallest_inverts(inverting_matrix, strategy):
    dendrogram = cluster(inverting_matrix, LinkageMethod.parse("owa:lo:1,1;zero", strategy))
    assert merged_pairs(dendrogram) == [(0, 1), (2, 3), (4, 5)]
    assert heights(dendrogram) == pytest.approx([0.4, 0.7, 0.6])
    report = detect_inversions(dendrogram)
    assert report.steps == [3]
    assert report.inversions[0].prev_height == pytest.approx(0.7)
    assert list(cut(dendrogram, 2)) == [0, 0, 1, 1]


def test_single_linkage_tie_break(inverting_matrix):
    dendrogram = cluster(inverting_matrix, LinkageMethod.parse("single"))
    assert merged_pairs(dendrogram) == [(0, 1), (2, 4), (3, 5)]
    assert heights(dendrogram) == pytest.approx([0.4, 0.6, 0.6])
    assert not detect_inversions(dendrogram)


def test_new_cluster_ids(inverting_matrix):
    dendrogram = cluster(inverting_matrix, LinkageMethod.parse("average"))
    dendrogram.validate()
    assert [m.new_size for m in dendrogram.merges][-1] == 4
    matrix = dendrogram.linkage_matrix()
    assert matrix.shape == (3, 4)
    assert set(matrix[:, :2].ravel()) <= set(range(6))


def test_two_objects():
    dendrogram = cluster(CondensedDistanceMatrix(2, [1.5]), LinkageMethod.parse("complete"))
    assert merged_pairs(dendrogram) == [(0, 1)]
    assert heights(dendrogram) == [1.5]


def test_too_few_objects():
    with pytest.raises(TooFewObjects):
        cluster(CondensedDistanceMatrix(1, []), LinkageMethod.parse("single"))


def test_points_must_match(inverting_matrix):
    points = PointSet.from_rows([[0.0], [1.0]])
    with pytest.raises(InputError):
        cluster(inverting_matrix, LinkageMethod.parse("single"), points)


def test_centroid_needs_points(inverting_matrix):
    with pytest.raises(CoordinatesRequired):
        cluster(inverting_matrix, LinkageMethod.parse("centroid"))


@pytest.mark.parametrize("strategy", ["recompute", "incremental"])
def test_centroid_inversion(triangle_points, strategy):
    dm = euclidean_distances(triangle_points)
    dendrogram = cluster(dm, LinkageMethod.parse("centroid", strategy), triangle_points)
    assert heights(dendrogram) == pytest.approx([2.0, 1.8])
    assert detect_inversions(dendrogram).steps == [2]


def test_inversions_respect_epsilon():
    merges = (MergeRecord(1, 0, 1, 1.0, 2), MergeRecord(2, 2, 3, 0.5, 3))
    dendrogram = Dendrogram(3, merges, "custom")
    assert detect_inversions(dendrogram, 0.6).steps == []
    assert detect_inversions(dendrogram, 0.1).steps == [2]
    for epsilon in (-1.0, float("inf"), float("nan")):
        with pytest.raises(ValueError):
            detect_inversions(dendrogram, epsilon)


@pytest.mark.parametrize("method", MONOTONE + ["owa:hi:1;repeat", "owa:hi:1,1;zero"])
def test_monotone_methods_have_no_inversions(random_points, method):
    points = random_points(15)
    dendrogram = cluster(euclidean_distances(points), LinkageMethod.parse(method), points)
    assert not detect_inversions(dendrogram)


def test_reducible_methods_never_invert(rng):
    methods = [LinkageMethod.parse(kind) for kind in MONOTONE]
    for dm, points in datasets(rng, 200, max_n=30):
        for method in methods:
            assert not detect_inversions(cluster(dm, method, points), 1e-12), str(method)


@pytest.mark.parametrize("kind", CLASSICAL)
def test_classical_heights_match_scipy(rng, kind):
    for dm, points in datasets(rng, 20):
        expected = np.sort(scipy_linkage(points.coordinates, method=kind)[:, 2])
        observed = np.sort(heights(cluster(dm, LinkageMethod.parse(kind), points)))
        assert np.allclose(observed, expected, rtol=0, atol=1e-9)


@pytest.mark.parametrize("method", CLASSICAL + ["owa:lo:1,1;zero", "owa:hi:1,0.5;repeat", "owa:lo:1;repeat"])
def test_strategies_agree(random_points, method):
    points = random_points(12, 3)
    comparison = compare_strategies(euclidean_distances(points), LinkageMethod.parse(method), points)
    assert comparison.agree, comparison.to_dict()


@pytest.mark.parametrize("owa_method, classical", [("owa:hi:1;zero", "complete"), ("owa:lo:1;zero", "single")])
def test_extreme_owa_matches_classical(random_points, owa_method, classical):
    dm = euclidean_distances(random_points(10))
    a = cluster(dm, LinkageMethod.parse(owa_method))
    b = cluster(dm, LinkageMethod.parse(classical))
    assert merged_pairs(a) == merged_pairs(b)
    assert heights(a) == pytest.approx(heights(b))


def test_mean_owa_matches_average(random_points):
    dm = euclidean_distances(random_points(10))
    a = cluster(dm, LinkageMethod.parse("owa:hi:1;repeat"))
    b = cluster(dm, LinkageMethod.parse("average"))
    assert merged_pairs(a) == merged_pairs(b)
    assert heights(a) == pytest.approx(heights(b))


def test_certificate_on_inverting_run(inverting_matrix):
    certificate = monotonicity_certificate(inverting_matrix, LinkageMethod.parse("owa:lo:1,1;zero"))
    assert certificate.consistent
    assert certificate.violated_steps == [2]
    assert not certificate.monotone
    assert certificate.steps[1].nearest == pytest.approx(0.6)
    assert certificate.steps[-1].nearest is None


@pytest.mark.parametrize("method", ["centroid", "median", "owa:lo:1,1;zero", "owa:hi:1,0.2,0.5;zero", "single"])
def test_certificate_matches_inversions(random_points, method):
    points = random_points(14)
    certificate = monotonicity_certificate(euclidean_distances(points), LinkageMethod.parse(method), points=points)
    assert certificate.consistent
    assert [step + 1 for step in certificate.violated_steps] == certificate.inversions.steps


def test_cut_bounds(inverting_matrix):
    dendrogram = cluster(inverting_matrix, LinkageMethod.parse("single"))
    assert list(cut(dendrogram, 4)) == [0, 1, 2, 3]
    assert list(cut(dendrogram, 1)) == [0, 0, 0, 0]
    for k in (0, 5):
        with pytest.raises(InvalidClusterCount):
            cut(dendrogram, k)


def test_partitions_are_nested(random_points):
    dendrogram = cluster(euclidean_distances(random_points(9)), LinkageMethod.parse("ward"))
    partitions = list(dendrogram.partitions())
    assert len(partitions) == 9
    for finer, coarser in zip(partitions, partitions[1:]):
        assert len(set(coarser)) == len(set(finer)) - 1
        for label in set(finer):
            assert len(set(coarser[finer == label])) == 1


def test_validate_rejects_broken_history():
    merges = (MergeRecord(1, 0, 1, 1.0, 2), MergeRecord(2, 0, 2, 2.0, 3))
    with pytest.raises(InvariantBreach):
        Dendrogram(3, merges, "single").validate()


def test_record_updates(inverting_matrix):
    dendrogram = cluster(inverting_matrix, LinkageMethod.parse("owa:lo:1,1;zero"), record_updates=True)
    assert dendrogram.updates[0] == pytest.approx({2: 0.75, 3: 0.75})
    assert dendrogram.updates[-1] == {}
    assert cluster(inverting_matrix, LinkageMethod.parse("single")).updates is None


def test_to_dict(inverting_matrix):
    out = cluster(inverting_matrix, LinkageMethod.parse("owa:lo:1,1;zero")).to_dict()
    assert out["n"] == 4
    assert out["method"] == "owa:lo:1,1;zero"
    assert np.allclose([row[2] for row in out["merges"]], [0.4, 0.7, 0.6])


def test_incremental_owa_never_reevaluates_blocks(mocker, random_points):
    dm = euclidean_distances(random_points(8))
    spy = mocker.spy(LinkageMethod, "evaluate")
    cluster(dm, LinkageMethod.parse("owa:hi:1,0.5;zero"))
    assert spy.call_count == 0
    cluster(dm, LinkageMethod.parse("owa:hi:1,0.5;zero", "recompute"))
    assert spy.call_count > 0


def test_lance_williams_matches_definitions(rng):
    kinds = ("single", "complete", "average", "weighted")
    for dm, _ in datasets(rng, 100):
        for kind in kinds:
            recomputed = cluster(dm, LinkageMethod.parse(kind, "recompute"))
            updated = cluster(dm, LinkageMethod.parse(kind))
            assert merged_pairs(recomputed) == merged_pairs(updated)
            assert np.allclose(heights(recomputed), heights(updated), rtol=0, atol=1e-9)


def test_owa_reduces_to_classical(rng):
    pairs = [("owa:hi:1,0;zero", "complete"), ("owa:lo:1,0;zero", "single"), ("owa:hi:1;repeat", "average")]
    for dm, _ in datasets(rng, 100):
        for owa_method, classical in pairs:
            a = cluster(dm, LinkageMethod.parse(owa_method))
            b = cluster(dm, LinkageMethod.parse(classical))
            assert np.allclose(heights(a), heights(b), rtol=0, atol=1e-12)


def test_sorted_merge_matches_recompute(rng):
    methods = [LinkageMethod.parse(text) for text in ("owa:lo:1,1;zero", "owa:hi:1,0.5,0.375,0.375,0.28125;zero")]
    for dm, _ in datasets(rng, 100):
        for method in methods:
            comparison = compare_strategies(dm, method)
            assert comparison.agree
            assert comparison.max_height_diff <= 1e-12


def random_sequence(rng):
    """Nonincreasing from ``c2`` with support at most 6; every other draw is a truncated geometric sequence."""
    length = int(rng.integers(2, 7))
    if rng.random() < 0.5:
        return CoefficientSequence.geometric(float(rng.uniform(0.05, 1)), length)
    tail = np.sort(rng.uniform(0.01, 1, size=length - 1))[::-1]
    return CoefficientSequence((1.0,) + tuple(float(x) for x in tail))


def test_sufficient_sequences_never_invert(rng):
    sequences = []
    for _ in range(2000):
        c = random_sequence(rng)
        if check_suf(c).holds:
            sequences.append(c)
        if len(sequences) == 50:
            break
    assert len(sequences) == 50
    for c in sequences:
        method = LinkageMethod.from_spec(OwaLinkageSpec(c))
        for dm, _ in datasets(rng, 50, max_n=15):
            assert not detect_inversions(cluster(dm, method), 1e-12), str(c)
