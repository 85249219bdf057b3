"""Node-graph transpiler tests.

Round trips are checked by an instruction-level reader plus the emitted
symbol table as the witness bijection; topological soundness is re-checked
by an independent statement scan; cycle certificates are validated against
the input adjacency.
"""

import json
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import generate_dag
from sceneloom.nodegraph import (
    TEMPLATES,
    CycleDetected,
    DanglingLink,
    DuplicateNodeId,
    EmittedProgram,
    Link,
    Node,
    NodeGraph,
    UnknownInstruction,
    UseBeforeCreate,
    find_cycle,
    parse_graph,
    topological_order,
    transpile,
    ungraph,
)

CHAIN_DOC = json.dumps({
    "nodes": [
        {"id": "a", "type": "Noise", "params": {"scale": 2}},
        {"id": "b", "type": "Math", "params": {}},
        {"id": "c", "type": "Output", "params": {}},
    ],
    "links": [
        {"from": "a", "from_socket": "out", "to": "b", "to_socket": "in0"},
        {"from": "b", "from_socket": "out", "to": "c", "to_socket": "in0"},
    ],
    "outputs": ["c"],
})


def assert_valid_cycle(cycle, links):
    """The certificate must be a closed walk through real edges."""
    edges = {(link.from_node, link.to_node) for link in links}
    assert len(cycle) >= 1
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert (a, b) in edges


def scan_soundness(statements):
    """Independent check: no statement touches an uncreated variable."""
    created = set()
    for line in statements:
        m = re.match(r'^(\w+) = create\("', line)
        if m:
            assert m.group(1) not in created
            created.add(m.group(1))
            continue
        for var in re.findall(r"\b(node_\d+)\b", line):
            assert var in created, f"{var} used before create in {line!r}"


# ---------- parsing ----------


def test_parse_empty_documents():
    assert parse_graph("") == NodeGraph()
    assert parse_graph("   \n ") == NodeGraph()
    assert parse_graph("{}") == NodeGraph()


def test_parse_two_node_chain():
    graph = parse_graph(CHAIN_DOC)
    assert graph.node_ids() == ["a", "b", "c"]
    assert graph.nodes[0].type_name == "Noise"
    assert graph.nodes[0].parameters == {"scale": 2}
    assert graph.links == [
        Link("a", "out", "b", "in0"),
        Link("b", "out", "c", "in0"),
    ]
    assert graph.outputs == ["c"]


def test_parse_duplicate_node_id():
    doc = json.dumps({"nodes": [
        {"id": "x", "type": "Noise", "params": {}},
        {"id": "x", "type": "Math", "params": {}},
    ]})
    with pytest.raises(DuplicateNodeId) as err:
        parse_graph(doc)
    assert "'x'" in str(err.value)


def test_parse_dangling_link_and_output():
    doc = json.dumps({
        "nodes": [{"id": "a", "type": "Noise", "params": {}}],
        "links": [{"from": "a", "from_socket": "out", "to": "ghost", "to_socket": "in0"}],
    })
    with pytest.raises(DanglingLink) as err:
        parse_graph(doc)
    assert "ghost" in str(err.value)

    doc = json.dumps({
        "nodes": [{"id": "a", "type": "Noise", "params": {}}],
        "outputs": ["phantom"],
    })
    with pytest.raises(DanglingLink) as err:
        parse_graph(doc)
    assert "phantom" in str(err.value)


def test_parse_rejects_cycle_with_certificate():
    doc = json.dumps({
        "nodes": [{"id": n, "type": "Math", "params": {}} for n in "abc"],
        "links": [
            {"from": "a", "from_socket": "out", "to": "b", "to_socket": "in0"},
            {"from": "b", "from_socket": "out", "to": "c", "to_socket": "in0"},
            {"from": "c", "from_socket": "out", "to": "a", "to_socket": "in0"},
        ],
    })
    with pytest.raises(CycleDetected) as err:
        parse_graph(doc)
    links = [Link("a", "out", "b", "in0"), Link("b", "out", "c", "in0"),
             Link("c", "out", "a", "in0")]
    assert_valid_cycle(err.value.cycle, links)


def test_self_loop_is_a_cycle():
    graph = NodeGraph(
        nodes=[Node("solo", "Math", {})],
        links=[Link("solo", "out", "solo", "in0")],
    )
    assert find_cycle(graph) == ["solo"]
    with pytest.raises(CycleDetected):
        topological_order(graph)


@given(st.integers(min_value=0, max_value=400))
def test_parse_matches_generator_bookkeeping(seed):
    fixture = generate_dag(seed)
    graph = parse_graph(fixture.doc)
    assert {n.id: (n.type_name, n.parameters) for n in graph.nodes} == fixture.nodes
    got_links = [(l.from_node, l.from_socket, l.to_node, l.to_socket) for l in graph.links]
    assert got_links == fixture.links
    assert find_cycle(graph) is None


# ---------- emission ----------


def test_transpile_empty_graph():
    program = transpile(NodeGraph())
    assert program.statements == []
    assert program.symbol_table == {}
    assert program.render() == ""


def test_transpile_chain_exact_output():
    program = transpile(parse_graph(CHAIN_DOC))
    assert program.statements == [
        'node_00 = create("Noise")',
        'set(node_00, "scale", 2)',
        'node_01 = create("Math")',
        'node_02 = create("Output")',
        'connect(node_00, "out", node_01, "in0")',
        'connect(node_01, "out", node_02, "in0")',
    ]
    assert program.symbol_table == {"a": "node_00", "b": "node_01", "c": "node_02"}


def test_transpile_topological_tie_break_by_id():
    graph = parse_graph(json.dumps({
        "nodes": [
            {"id": "zz", "type": "Math", "params": {}},
            {"id": "aa", "type": "Math", "params": {}},
            {"id": "mm", "type": "Math", "params": {}},
        ],
    }))
    order = topological_order(graph)
    assert order == ["aa", "mm", "zz"]


def test_transpile_is_deterministic_and_link_order_canonical():
    base = json.loads(CHAIN_DOC)
    permuted = dict(base, links=list(reversed(base["links"])))
    first = transpile(parse_graph(json.dumps(base)))
    second = transpile(parse_graph(json.dumps(permuted)))
    assert first.render() == second.render()
    assert first.render() == transpile(parse_graph(CHAIN_DOC)).render()


def test_transpile_rejects_cycle():
    graph = NodeGraph(
        nodes=[Node("a", "Math", {}), Node("b", "Math", {})],
        links=[Link("a", "out", "b", "in0"), Link("b", "out", "a", "in0")],
    )
    with pytest.raises(CycleDetected) as err:
        transpile(graph)
    assert_valid_cycle(err.value.cycle, graph.links)


def test_blender_template_dialect():
    program = transpile(parse_graph(CHAIN_DOC), template="blender")
    assert program.statements[0] == 'node_00 = nodes.new("Noise")'
    assert program.statements[1] == 'node_00.inputs["scale"].default_value = 2'
    assert program.statements[-1] == (
        'links.new(node_01.outputs["out"], node_02.inputs["in0"])'
    )


def test_unknown_template_rejected():
    with pytest.raises(KeyError):
        transpile(NodeGraph(), template="fortran")


def test_parameters_set_in_sorted_order_right_after_create():
    graph = parse_graph(json.dumps({
        "nodes": [{"id": "n", "type": "Mix", "params": {"zeta": 1, "alpha": 0.5, "mid": "linear"}}],
    }))
    program = transpile(graph)
    assert program.statements == [
        'node_00 = create("Mix")',
        'set(node_00, "alpha", 0.5)',
        'set(node_00, "mid", "linear")',
        'set(node_00, "zeta", 1)',
    ]


# ---------- round trip ----------


def test_ungraph_fixpoint_on_chain():
    program = transpile(parse_graph(CHAIN_DOC))
    rebuilt = ungraph(program)
    again = transpile(rebuilt)
    assert again.render() == program.render()


def test_ungraph_use_before_create():
    with pytest.raises(UseBeforeCreate):
        ungraph('set(node_00, "x", 1)')
    with pytest.raises(UseBeforeCreate):
        ungraph('node_00 = create("A")\nconnect(node_00, "out", node_01, "in0")')


def test_ungraph_unknown_instruction():
    with pytest.raises(UnknownInstruction) as err:
        ungraph('node_00 = create("A")\nfrobnicate(node_00)')
    assert "line 2" in str(err.value)
    with pytest.raises(UnknownInstruction):
        ungraph('node_00 = nodes.new("A")')
    with pytest.raises(UnknownInstruction):
        ungraph('node_00 = create("A")\nset(node_00, "x", not-json)')


def test_ungraph_duplicate_create():
    with pytest.raises(DuplicateNodeId):
        ungraph('node_00 = create("A")\nnode_00 = create("B")')


def test_ungraph_skips_blank_lines():
    rebuilt = ungraph('node_00 = create("A")\n\nnode_01 = create("B")\n')
    assert rebuilt.node_ids() == ["node_00", "node_01"]


def assert_isomorphic(fixture, program, rebuilt):
    sym = program.symbol_table
    assert sorted(sym) == sorted(fixture.nodes)
    assert sorted(sym.values()) == sorted(rebuilt.node_ids())
    by_id = {node.id: node for node in rebuilt.nodes}
    for nid, (type_name, params) in fixture.nodes.items():
        twin = by_id[sym[nid]]
        assert twin.type_name == type_name
        assert twin.parameters == params
    expected_links = sorted(
        (sym[a], s_out, sym[b], s_in) for a, s_out, b, s_in in fixture.links
    )
    got_links = sorted(
        (l.from_node, l.from_socket, l.to_node, l.to_socket) for l in rebuilt.links
    )
    assert got_links == expected_links


@pytest.mark.parametrize("seed", range(20))
def test_round_trip_isomorphism_twenty_dags(seed):
    fixture = generate_dag(seed)
    graph = parse_graph(fixture.doc)
    program = transpile(graph)
    scan_soundness(program.statements)
    rebuilt = ungraph(program)
    assert_isomorphic(fixture, program, rebuilt)
    assert transpile(rebuilt).render() == program.render()


@given(st.integers(min_value=0, max_value=1000))
def test_round_trip_isomorphism_property(seed):
    fixture = generate_dag(seed)
    graph = parse_graph(fixture.doc)
    program = transpile(graph)
    rebuilt = ungraph(program)
    assert_isomorphic(fixture, program, rebuilt)
    assert transpile(rebuilt).render() == program.render()


@given(st.integers(min_value=0, max_value=1000))
def test_reversed_edge_makes_cycle(seed):
    fixture = generate_dag(seed)
    if not fixture.links:
        return
    data = json.loads(fixture.doc)
    a, _, b, _ = fixture.links[0]
    data["links"].append({"from": b, "from_socket": "out", "to": a, "to_socket": "in9"})
    with pytest.raises(CycleDetected) as err:
        parse_graph(json.dumps(data))
    links = [Link(x[0], x[1], x[2], x[3]) for x in fixture.links]
    links.append(Link(b, "out", a, "in9"))
    assert_valid_cycle(err.value.cycle, links)


def test_wide_graph_variable_padding():
    nodes = [{"id": f"q{i:03d}", "type": "Math", "params": {}} for i in range(120)]
    program = transpile(parse_graph(json.dumps({"nodes": nodes})))
    assert program.statements[0] == 'node_000 = create("Math")'
    assert program.statements[-1] == 'node_119 = create("Math")'
    rebuilt = ungraph(program)
    assert transpile(rebuilt).render() == program.render()
