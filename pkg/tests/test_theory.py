from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_cycles
from pointworld.errors import CyclicDependency, DuplicateId, JustifiedNonClaim, TheorySyntaxError, UnknownId
from pointworld.theory import (
    Justification,
    Kind,
    Statement,
    TheoryGraph,
    detect_cycles,
    foundation,
    parse_theory,
    render_tree,
    unjustified_claims,
)


def sample(name):
    return resources.files("pointworld").joinpath("data/theories", name).read_text()


def test_minimal():
    g = parse_theory("axiom AX1: points exist\nclaim C1: lines exist\njustify C1 <- AX1")
    assert len(g.statements) == 2 and len(g.justifications) == 1
    assert render_tree(g, "C1") == "C1 [Claim]: lines exist\n  AX1 [Axiom]: points exist\n"


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("axiom AX1: a\njustify AX1 <- AX1", JustifiedNonClaim, 2),
        ("axiom A: a\naxiom A: b", DuplicateId, 2),
        ("claim C: c\njustify C <- Z", UnknownId, 2),
        ("def D: d uses Q", UnknownId, 1),
        ("lemma L: x", TheorySyntaxError, 1),
        ("claim C: c\njustify C <-", TheorySyntaxError, 2),
    ],
)
def test_parse_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_theory(text)
    assert info.value.line == line


def test_triangle_area_theory():
    g = parse_theory(sample("triangle_area.thy"))
    assert len(g.statements) == 7 and len(g.justifications) == 3
    assert foundation(g, "C") == {"P3", "P2-1", "P2-2", "PP"}
    assert g.kind("P3") is Kind.GIVEN
    assert unjustified_claims(g) == []
    assert detect_cycles(g) == []
    tree = render_tree(g, "C").splitlines()
    assert tree[0].startswith("C [Claim]")
    assert "    PP [Axiom]: parallel postulate" in tree
    assert max(len(line) - len(line.lstrip()) for line in tree) == 4  # three levels below the root


def test_unjustified_premise():
    g = parse_theory("axiom A: a\nclaim Q: q\nclaim C: c\njustify C <- A,Q")
    assert unjustified_claims(g) == ["Q"]
    assert unjustified_claims(parse_theory("axiom A: a\ndef D: d")) == []


def test_collinearity_cycle():
    g = parse_theory(sample("circular.thy"))
    assert detect_cycles(g) == [("collinear", "straight_line")]
    with pytest.raises(CyclicDependency) as info:
        foundation(g, "A")
    assert info.value.cycle == ("collinear", "straight_line")
    with pytest.raises(CyclicDependency):
        render_tree(g, "A")


def test_three_ring():
    g = parse_theory("claim C1: a\nclaim C2: b\nclaim C3: c\njustify C1 <- C2\njustify C2 <- C3\njustify C3 <- C1")
    assert detect_cycles(g) == [("C1", "C2", "C3")]


def test_single_axiom():
    g = parse_theory("axiom AX: a")
    assert detect_cycles(g) == []
    assert foundation(g, "AX") == {"AX"}
    with pytest.raises(UnknownId):
        foundation(g, "nope")


def test_alternative_justifications_union():
    g = parse_theory(
        "axiom RHS: r\naxiom SSS: s\nclaim T: t\njustify T <- RHS\njustify T <- SSS"
    )
    assert foundation(g, "T") == {"RHS", "SSS"}


def test_shared_leaf_rendered_per_branch():
    g = parse_theory(
        "axiom PP: p\nclaim X: x\nclaim Y: y\nclaim C: c\n"
        "justify X <- PP\njustify Y <- PP\njustify C <- X,Y"
    )
    assert render_tree(g, "C") == (
        "C [Claim]: c\n  X [Claim]: x\n    PP [Axiom]: p\n  Y [Claim]: y\n    PP [Axiom]: p\n"
    )


NODES = ["a", "b", "c", "d", "e", "f"]


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 6))
    ids = NODES[:n]
    kinds = draw(st.lists(st.sampled_from([Kind.CLAIM, Kind.DEFINITION, Kind.AXIOM]), min_size=n, max_size=n))
    statements, justs = {}, []
    for sid, kind in zip(ids, kinds):
        deps = draw(st.lists(st.sampled_from(ids), max_size=3, unique=True))
        uses = tuple(deps) if kind is Kind.DEFINITION else ()
        statements[sid] = Statement(sid, sid, kind, uses)
        if kind is Kind.CLAIM and deps:
            justs.append(Justification(sid, tuple(deps)))
    return TheoryGraph(statements, tuple(justs))


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_cycles_match_brute_force(g):
    deps = {sid: set(g.depends_on(sid)) for sid in g.statements}
    assert set(detect_cycles(g)) == brute_cycles(g.statements, deps)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_foundation_has_no_claims(g):
    for sid in g.statements:
        try:
            found = foundation(g, sid)
        except CyclicDependency:
            continue
        assert all(g.kind(x) is not Kind.CLAIM for x in found)


@settings(max_examples=200, deadline=None)
@given(graphs(), st.sampled_from(NODES), st.sampled_from(NODES))
def test_adding_justification_keeps_cycles(g, target, premise):
    if target not in g.statements or premise not in g.statements or g.kind(target) is not Kind.CLAIM:
        return
    bigger = TheoryGraph(g.statements, g.justifications + (Justification(target, (premise,)),))
    assert set(detect_cycles(g)) <= set(detect_cycles(bigger))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_clean_graph_has_every_foundation(g):
    if detect_cycles(g) or unjustified_claims(g):
        return
    for sid in g.statements:
        foundation(g, sid)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_removing_unreferenced_statement_keeps_foundations(g):
    referenced = {d for sid in g.statements for d in g.depends_on(sid)}
    loose = [sid for sid in g.statements if sid not in referenced and not g.depends_on(sid)]
    if not loose:
        return
    drop = loose[0]
    smaller = TheoryGraph({k: v for k, v in g.statements.items() if k != drop}, g.justifications)
    for sid in smaller.statements:
        try:
            expected = foundation(g, sid)
        except CyclicDependency:
            continue
        assert foundation(smaller, sid) == expected
