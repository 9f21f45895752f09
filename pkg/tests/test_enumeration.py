import itertools
import json
import random

import pytest

from jacpair.enumeration import (CASE_PAPER_IDS, CASES, PolygonConstraints, RegionTooLarge,
                                 audit_case, enumerate_polygons, lattice_free_rule,
                                 load_paper_polygons, satisfies, transpose_dedupe)
from jacpair.newton import LatticePolygon, convex_hull

H = LatticePolygon.hull_of
PAPER = load_paper_polygons()


def _chain_enumerate(c: PolygonConstraints) -> set:
    """Second enumerator: iterate candidate vertex sets, not supports.

    A polygon is reachable iff the largest admissible support inside it
    already spans it.
    """
    region = c.region()
    base = set()
    for p in c.required:
        base |= c.closure(p)
    if base & c.forbidden:
        return set()
    admissible = [p for p in region if p not in c.forbidden and not c.closure(p) & c.forbidden]
    out = set()
    for r in range(1, len(region) + 1):
        for verts in itertools.combinations(region, r):
            if set(convex_hull(verts)) != set(verts):
                continue
            poly = H(verts)
            S = set(base)
            for p in admissible:
                cl = c.closure(p)
                if all(poly.contains(q) for q in cl):
                    S |= cl
            if not S or H(S) != poly or not satisfies(poly, c):
                continue
            out.add(poly)
    if c.transpose_dedupe:
        out = set(transpose_dedupe(out))
    return out


def _random_constraints(rng: random.Random) -> PolygonConstraints:
    d = rng.choice([2, 3])
    region = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    pts = rng.sample(region, rng.randint(1, 4))
    k = rng.randint(0, len(pts))
    required, forbidden = pts[:k], pts[k:]
    extra = [(d + 1, 0)] if rng.random() < 0.3 else []
    return PolygonConstraints(d, frozenset(required), frozenset(forbidden),
                              extra_points=frozenset(extra),
                              x_saturated=rng.random() < 0.3,
                              transpose_dedupe=rng.random() < 0.3,
                              no_positive_slope_outer_edge=rng.random() < 0.3)


# --- constraints -----------------------------------------------------------------------


def test_constraint_validation():
    with pytest.raises(ValueError):
        PolygonConstraints(3, frozenset({(1, 0)}), frozenset({(1, 0)}))
    with pytest.raises(ValueError):
        PolygonConstraints(2, frozenset({(3, 0)}))
    with pytest.raises(ValueError):
        PolygonConstraints.from_json({"max_degree": 2, "bogus": 1})
    c = CASES["II"]
    assert PolygonConstraints.from_json(json.loads(json.dumps(c.to_json()))) == c


def test_region_too_large():
    with pytest.raises(RegionTooLarge):
        enumerate_polygons(PolygonConstraints(6))


def test_degree_one_segment():
    c = PolygonConstraints(1, frozenset({(1, 0), (0, 1)}), frozenset({(0, 0)}))
    assert enumerate_polygons(c) == [H([(1, 0), (0, 1)])]


# --- enumerator properties -----------------------------------------------------------------


@pytest.mark.parametrize("case", sorted(CASES))
def test_outputs_satisfy_constraints(case):
    c = CASES[case]
    polys = enumerate_polygons(c)
    assert polys
    assert all(satisfies(p, c) for p in polys)
    assert len(set(polys)) == len(polys)


def test_chain_oracle_agreement(rng):
    checked = 0
    while checked < 40:
        c = _random_constraints(rng)
        if len(c.region()) > 12:
            continue
        assert set(enumerate_polygons(c)) == _chain_enumerate(c), c.to_json()
        checked += 1


def test_order_independence(rng, monkeypatch):
    import jacpair.enumeration as en

    c = CASES["III"]
    expected = enumerate_polygons(c)
    original = en.PolygonConstraints.region
    for seed in range(3):
        shuffler = random.Random(seed)

        def shuffled(self):
            pts = original(self)
            shuffler.shuffle(pts)
            return pts

        monkeypatch.setattr(en.PolygonConstraints, "region", shuffled)
        assert enumerate_polygons(c) == expected
    monkeypatch.setattr(en.PolygonConstraints, "region", original)
    assert enumerate_polygons(c) == expected


def test_parallel_matches_serial():
    c = CASES["II"]
    assert enumerate_polygons(c, jobs=3) == enumerate_polygons(c)


def test_transpose_dedupe_examples():
    a, b = H([(1, 0), (0, 1), (2, 0)]), H([(1, 0), (0, 1), (0, 2)])
    assert len(transpose_dedupe([a, b])) == 1
    sym = H([(1, 0), (0, 1), (2, 2)])
    assert transpose_dedupe([sym]) == [sym]
    c = CASES["IV-x2y2"]
    full = PolygonConstraints(c.max_degree, c.required, c.forbidden, top_face=c.top_face)
    assert len(enumerate_polygons(c)) < len(enumerate_polygons(full))
    assert len(enumerate_polygons(c)) == len(transpose_dedupe(enumerate_polygons(full)))


# --- audits --------------------------------------------------------------------------------


def test_case_ii_enumeration():
    polys = set(enumerate_polygons(CASES["II"]))
    reference = {PAPER[f"D{k}"] for k in range(1, 6)}
    extra = H([(1, 0), (5, 0), (2, 3), (1, 3), (0, 1)])
    assert polys == reference | {extra}


def test_case_ii_audit():
    rep = audit_case("II", {k: PAPER[k] for k in CASE_PAPER_IDS["II"]})
    assert rep.passed
    assert list(rep.matched) == ["D1", "D2", "D3", "D4", "D5"]
    assert [(p.vertices, rule) for p, rule in rep.extras] == [
        (H([(1, 0), (5, 0), (2, 3), (1, 3), (0, 1)]).vertices, "lattice_point_free_outer_edges")]
    assert rep.survivors == ["D2", "D5"]
    js = rep.as_json()
    assert js["passed"] and js["missing"] == []


def test_case_iii_and_x4_survivors():
    rep = audit_case("III", {k: PAPER[k] for k in CASE_PAPER_IDS["III"]})
    assert rep.passed and rep.survivors == ["D12", "D13"]
    rep = audit_case("IV-x4", {k: PAPER[k] for k in CASE_PAPER_IDS["IV-x4"]})
    assert rep.passed and rep.survivors == ["D20", "D21", "D24"]


def test_matched_polygons_are_vertex_exact():
    for case, ids in CASE_PAPER_IDS.items():
        rep = audit_case(case, {k: PAPER[k] for k in ids})
        enumerated = set(rep.enumerated)
        for name, p in rep.matched.items():
            assert p == PAPER[name]
            assert p in enumerated or (CASES[case].transpose_dedupe
                                       and p.transpose() in enumerated)


def test_audit_flags_missing_and_undismissed():
    bogus = {"DX": H([(1, 0), (0, 1), (9, 9)])}
    rep = audit_case("II", bogus)
    assert rep.missing == ["DX"] and not rep.passed
    with pytest.raises(ValueError):
        audit_case("II", {"D1": [(1, 0), (0, 1)]})


def test_lattice_free_rule():
    assert lattice_free_rule(PAPER["D1"], CASES["II"].top_face) is True
    d5 = PAPER["D5"]
    assert lattice_free_rule(d5, CASES["II"].top_face) is False
    assert lattice_free_rule(H([(1, 0), (0, 1)])) is True
    assert lattice_free_rule(H([(0, 1), (1, 0), (3, 0)])) is True
    assert lattice_free_rule(H([(0, 2), (2, 0)])) is False


# --- data file --------------------------------------------------------------------------------


def test_load_paper_polygons_contents():
    assert set(PAPER) == {f"D{k}" for k in range(1, 51)} - {"D32", "D47"}
    assert PAPER["D5"] == H([(0, 1), (1, 0), (5, 0), (2, 3)])
    assert PAPER["D49"] == H([(1, 0), (5, 0), (2, 2)])


def test_load_paper_polygons_validation(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"D1": {"vertices": [[0, 0], [1, 1], [2, 2]]}}))
    with pytest.raises(ValueError):
        load_paper_polygons(bad)
    bad.write_text(json.dumps([1, 2]))
    with pytest.raises(ValueError):
        load_paper_polygons(bad)
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"A": {"vertices": [[1, 0], [0, 1]]}}))
    assert load_paper_polygons(good) == {"A": H([(1, 0), (0, 1)])}
