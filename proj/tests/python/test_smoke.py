"""Smoke tests for the Python bindings."""

import pytest

import tomogen


NILPOTENT3 = [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
IDEMPOTENT3 = [[0, 0, 0], [0, 1, 1], [0, 1, 2]]


def test_table_basics():
    t = tomogen.Table(NILPOTENT3)
    assert t.n == 3
    assert t.rows() == NILPOTENT3
    assert t.prod(1, 1) == 0
    assert t == tomogen.Table(NILPOTENT3)
    assert t != tomogen.Table(IDEMPOTENT3)


def test_verify_reports_violations():
    assert tomogen.verify(tomogen.Table(NILPOTENT3))["ok"]
    report = tomogen.verify(tomogen.Table([[0, 0, 0], [0, 2, 1], [0, 1, 2]]))
    assert not report["ok"]
    kinds = {kind for kind, _ in report["violations"]}
    assert "monotonicity" in kinds


def test_predicates_and_pairs():
    nil3 = tomogen.Table(NILPOTENT3)
    idem3 = tomogen.Table(IDEMPOTENT3)
    assert tomogen.is_commutative(nil3)
    assert tomogen.is_archimedean(nil3)
    assert not tomogen.is_archimedean(idem3)
    assert tomogen.idempotents(nil3) == [0, 2]
    assert tomogen.atom_char_idempotents(nil3) == (2, 2)
    assert tomogen.atom_char_idempotents(idem3) == (1, 1)


def test_quotient_and_partition_round_trip():
    t = tomogen.Table(NILPOTENT3)
    q = tomogen.rees_quotient(t, 1)
    assert q.rows() == [[0, 0], [0, 1]]
    p = tomogen.to_partition(t)
    assert tomogen.verify_partition(p)["ok"]
    assert tomogen.from_partition(p) == t


def test_ramify_and_materialise():
    two = tomogen.Table.two_element()
    ram = tomogen.ramify(two, (1, 1))
    assert not ram.obstructed
    assert tomogen.audit_ramification(two, ram)
    dag = tomogen.class_poset(ram)
    choices = tomogen.enumerate_choices(dag)
    assert choices == [[0]]
    assert tomogen.materialise(two, ram, choices[0]).rows() == NILPOTENT3

    obstructed = tomogen.ramify(two, (1, 0))
    assert obstructed.obstructed
    with pytest.raises(ValueError):
        tomogen.class_poset(obstructed)


def test_generate_matches_oracle():
    records = tomogen.generate(4)
    sizes = {}
    for rec in records:
        sizes.setdefault(rec["table"].n, set()).add(rec["table"])
    for n in range(1, 5):
        assert sizes[n] == set(tomogen.brute_force(n))
    assert tomogen.count(4)[4] == (8, 6, 2, 2)


def test_coextensions_of_the_two_element_table():
    two = tomogen.Table.two_element()
    tables = {rec["table"] for rec in tomogen.coextensions(two, "all")}
    assert tables == {tomogen.Table(NILPOTENT3), tomogen.Table(IDEMPOTENT3)}
    archimedean = {rec["table"] for rec in tomogen.coextensions(two, "archimedean")}
    assert archimedean == {tomogen.Table(NILPOTENT3)}


def test_text_formats():
    t = tomogen.Table(NILPOTENT3)
    doc = tomogen.format_table(t)
    assert tomogen.parse_table(doc) == t
    with pytest.raises(ValueError):
        tomogen.parse_table("tomonoid v1 n=3\n0 0 0\n0 2 1\n0 1 2\n")
    assert tomogen.render(t, "ascii") == "0 a 1\n0 0 a\n0 0 0\n"
    assert tomogen.render(t, "svg").startswith("<svg")
