"""Smoke tests for the python bindings: a thin pass over every exposed
operation, with values pinned by the C++ suites."""

import pytest

import critmin as cm


def test_surface_arithmetic():
    assert cm.euler_char(3) == -4
    assert cm.genus_from_euler(-10) == 6
    assert cm.Surface(2).euler_char == -2
    profile = cm.RamificationProfile([3, 2, 3])
    assert profile.multiplicities == [3, 3, 2]
    assert cm.hurwitz_euler(0, 3, cm.RamificationProfile([3])) == -2


def test_phi_sphere_target_with_witness():
    r = cm.phi(cm.Surface(2), cm.Surface(0))
    assert r.is_finite and r.k == 3
    assert r.witness.degree == 5
    assert r.witness.profile.multiplicities == [5, 5, 5]


def test_phi_infinite_case():
    r = cm.phi(cm.Surface(1), cm.Surface(2))
    assert not r.is_finite
    assert r.infinite_case == 1


def test_phi_table_rows():
    rows = cm.phi_table(1, 3)
    assert [g for g, _ in rows] == [0, 1, 2, 3]
    assert not rows[0][1].is_finite
    assert [r.k for _, r in rows[1:]] == [0, 1, 1]


def test_closed_form_and_scan_agree():
    assert cm.closed_form_phi(-10, -4) == 2
    assert cm.minimal_k(-10, -4).k == 2
    assert cm.admits_degree(-10, -4, 2)
    assert not cm.admits_degree(-10, -4, 1)


def test_enumeration_and_feasibility():
    data = cm.enumerate_covering_data(-2, cm.Surface(1), 1, 5)
    assert [(d.data.degree, d.data.profile.multiplicities) for d in data] == [
        (3, [3]),
        (4, [3]),
        (5, [3]),
    ]
    assert all(
        d.realizability == cm.Realizability.patterson_guaranteed for d in data
    )
    assert cm.patterson_feasible(cm.Surface(1), 3, cm.RamificationProfile([3]))


def test_realize_verify_roundtrip(tmp_path):
    result = cm.realize(cm.Surface(1), 3, cm.RamificationProfile([3]))
    assert result.kind == cm.RealizeResult.Kind.certificate
    cert = result.certificate
    report = cm.verify_certificate(cert)
    assert report.valid
    assert report.computed_source_euler == -2

    text = cm.certificate_to_json(cert)
    again = cm.certificate_from_json(text)
    assert cm.verify_certificate(again).valid

    path = tmp_path / "cert.json"
    cm.write_certificate(str(path), cert)
    assert cm.verify_certificate(cm.read_certificate(str(path))).valid


def test_realize_infeasible():
    result = cm.realize(cm.Surface(1), 2, cm.RamificationProfile([3]))
    assert result.kind == cm.RealizeResult.Kind.infeasible
    assert result.reason == cm.InfeasibleReason.degree_too_small


def test_oracle_phi():
    assert cm.oracle_phi(cm.Surface(6), cm.Surface(3), 4, 6) == 2
    assert cm.oracle_phi(cm.Surface(1), cm.Surface(2), 4, 6) is None


def test_permutations_compose_left_to_right():
    p = cm.Permutation([1, 0, 2])
    q = cm.Permutation([0, 2, 1])
    assert (p * q).images == [2, 0, 1]
    assert cm.commutator(p, cm.Permutation([2, 1, 0])).single_cycle_order() == 3


def test_sphere_classification():
    s = cm.classify_sphere_pair(4, 3)
    assert s.status == cm.SpherePhi.Status.exact
    assert s.value == 2
    assert cm.classify_sphere_pair(5, 4).status == cm.SpherePhi.Status.exactly_infinite
    assert cm.classify_sphere_pair(9, 5).status == cm.SpherePhi.Status.at_least


def test_volume_ratio():
    assert cm.simplicial_volume(cm.Surface(2)) == 4
    r = cm.volume_ratio(cm.Surface(6), cm.Surface(3))
    assert (r.numerator, r.denominator) == (1, 2)
    assert cm.volume_ratio(cm.Surface(5), cm.Surface(3)).numerator == 0


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        cm.volume_ratio(cm.Surface(3), cm.Surface(1))
    with pytest.raises(ValueError):
        cm.classify_sphere_pair(2, 3)
    with pytest.raises(ValueError):
        cm.RamificationProfile([1])
