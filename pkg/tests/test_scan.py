import json
import os

import pytest

from distspec import (
    ScanReport,
    build_complete,
    build_cone_of_cliques,
    build_pendant_clique,
    family_cross_check,
    moment_audit,
    partitions,
    scan_order,
)
from distspec.graphs import Graph6Error
from distspec.scan import family_members_of_order, write_report

from conftest import random_connected_graph

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


class TestPartitions:
    def test_counts(self):
        # partition numbers p(0..8) = 1,1,2,3,5,7,11,15,22
        for total, want in enumerate([1, 1, 2, 3, 5, 7, 11, 15, 22]):
            assert sum(1 for _ in partitions(total)) == want

    def test_descending_and_sum(self):
        for parts in partitions(7):
            assert sum(parts) == 7
            assert list(parts) == sorted(parts, reverse=True)


class TestScanOrder:
    @pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_builtin_census(self, n, count):
        rep = scan_order(n)
        assert rep.count == count
        assert rep.violations == []
        assert rep.below_equal_count == rep.family_below_count
        assert sum(len(v) for v in rep.buckets.values()) == count

    def test_below_equal_matches_family_enumeration(self):
        # sanity: number of below/equal graphs equals the number of distinct
        # family members of that order
        for n in range(2, 7):
            rep = scan_order(n)
            assert rep.below_equal_count == len(family_members_of_order(n))

    def test_file_based_scan_matches_builtin(self):
        rep_file = scan_order(graph6_path=os.path.join(DATA, "connected_n5.g6"))
        rep_builtin = scan_order(5)
        assert rep_file.order == 5
        assert rep_file.buckets == rep_builtin.buckets
        assert rep_file.violations == []

    def test_parallel_scan_identical(self):
        rep1 = scan_order(6, jobs=1)
        rep2 = scan_order(6, jobs=2)
        j1, j2 = rep1.to_json(), rep2.to_json()
        j1.pop("seconds"), j2.pop("seconds")
        assert j1 == j2
        assert rep1.to_csv() == rep2.to_csv()

    def test_file_order_mismatch(self):
        with pytest.raises(Graph6Error):
            scan_order(4, graph6_path=os.path.join(DATA, "connected_n5.g6"))

    def test_missing_order_and_file(self):
        with pytest.raises(ValueError):
            scan_order()

    def test_write_report(self, tmp_path):
        rep = scan_order(4)
        jpath, cpath = write_report(rep, str(tmp_path))
        with open(jpath) as fh:
            data = json.load(fh)
        assert data["order"] == 4 and data["graph_count"] == 6
        assert "desk scale" in data["banner"]
        with open(cpath) as fh:
            lines = fh.read().strip().splitlines()
        assert lines[0] == "n,poly,size,members,lambda2_float,exact"
        assert len(lines) == 1 + data["bucket_count"]

    def test_report_json_shape(self):
        rep = scan_order(3)
        data = rep.to_json()
        assert {b["size"] for b in data["buckets"]} == {1}
        assert all("," in b["poly"] for b in data["buckets"])
        assert isinstance(rep, ScanReport) and rep.ok


class TestCrossCheck:
    def test_small(self):
        res = family_cross_check(10, random_draws=50)
        assert res["ok"], res["violations"]
        assert res["polynomials_checked"] > 50

    def test_member_enumeration_order_6(self):
        descs = {d.describe() for d in family_members_of_order(6)}
        assert "K_n(6)" in descs
        assert "Kst(4,2)" in descs and "Kst(3,3)" in descs
        # partitions of 5 with >= 2 parts: 6 of them
        assert sum(1 for d in descs if d.startswith("Cone")) == 6


class TestMomentAudit:
    def test_family_members(self):
        assert moment_audit(build_complete(6))
        assert moment_audit(build_pendant_clique(3, 2))
        assert moment_audit(build_cone_of_cliques((3, 2, 1)))

    def test_random_graphs(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 8))
            assert moment_audit(g)
