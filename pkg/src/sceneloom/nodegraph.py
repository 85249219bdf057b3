"""Node-graph transpiler: serialized procedural node graphs to scene code.

Graphs arrive as a neutral JSON schema (nodes/links/outputs). Emission is
template-driven so the same walk can target either the plain instruction
dialect (machine-checkable, round-trippable) or a Blender-flavored one.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


class DuplicateNodeId(GraphError):
    pass


class DanglingLink(GraphError):
    pass


class CycleDetected(GraphError):
    def __init__(self, cycle: list[str]):
        super().__init__(f"cycle detected: {' -> '.join(cycle)} -> {cycle[0]}")
        self.cycle = cycle


class UnknownInstruction(GraphError):
    pass


class UseBeforeCreate(GraphError):
    pass


@dataclass(frozen=True)
class Node:
    id: str
    type_name: str
    parameters: dict

    def __post_init__(self):
        object.__setattr__(self, "parameters", dict(self.parameters))


@dataclass(frozen=True)
class Link:
    from_node: str
    from_socket: str
    to_node: str
    to_socket: str


@dataclass
class NodeGraph:
    nodes: list[Node] = field(default_factory=list)
    links: list[Link] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)

    def node_ids(self) -> list[str]:
        return [node.id for node in self.nodes]


@dataclass(frozen=True)
class EmitTemplate:
    create: str
    set_param: str
    connect: str


TEMPLATES = {
    "instruction": EmitTemplate(
        create='{var} = create("{type}")',
        set_param='set({var}, "{name}", {value})',
        connect='connect({from_var}, "{from_socket}", {to_var}, "{to_socket}")',
    ),
    "blender": EmitTemplate(
        create='{var} = nodes.new("{type}")',
        set_param='{var}.inputs["{name}"].default_value = {value}',
        connect='links.new({from_var}.outputs["{from_socket}"], {to_var}.inputs["{to_socket}"])',
    ),
}


@dataclass
class EmittedProgram:
    statements: list[str]
    symbol_table: dict[str, str]  # node id -> variable name

    def render(self) -> str:
        if not self.statements:
            return ""
        return "\n".join(self.statements) + "\n"


def _adjacency(graph: NodeGraph) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {node.id: [] for node in graph.nodes}
    for link in graph.links:
        adj[link.from_node].append(link.to_node)
    for targets in adj.values():
        targets.sort()
    return adj


def find_cycle(graph: NodeGraph) -> list[str] | None:
    """First cycle in deterministic DFS order, or None for acyclic graphs.

    The returned list is a certificate: consecutive ids are linked, and the
    last id links back to the first.
    """
    adj = _adjacency(graph)
    color: dict[str, int] = {}  # 1 = on stack, 2 = done
    for start in sorted(adj):
        if color.get(start):
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        path: list[str] = []
        while stack:
            node, next_child = stack.pop()
            if next_child == 0:
                color[node] = 1
                path.append(node)
            children = adj[node]
            advanced = False
            for idx in range(next_child, len(children)):
                child = children[idx]
                if color.get(child) == 1:
                    return path[path.index(child):]
                if color.get(child) is None:
                    stack.append((node, idx + 1))
                    stack.append((child, 0))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                path.pop()
    return None


def topological_order(graph: NodeGraph) -> list[str]:
    """Kahn's algorithm with ties broken by ascending node id."""
    indegree = {node.id: 0 for node in graph.nodes}
    adj = _adjacency(graph)
    for link in graph.links:
        indegree[link.to_node] += 1
    ready = [nid for nid, deg in indegree.items() if deg == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        nid = heapq.heappop(ready)
        order.append(nid)
        for child in adj[nid]:
            indegree[child] -= 1
            if indegree[child] == 0:
                heapq.heappush(ready, child)
    if len(order) != len(graph.nodes):
        cycle = find_cycle(graph)
        assert cycle is not None
        raise CycleDetected(cycle)
    return order


def parse_graph(doc: str) -> NodeGraph:
    """Validate a JSON graph document into a NodeGraph.

    A blank document and a document with missing arrays both mean the empty
    graph.
    """
    if not doc.strip():
        return NodeGraph()
    data = json.loads(doc)
    nodes: list[Node] = []
    seen: set[str] = set()
    for entry in data.get("nodes", []):
        nid = str(entry["id"])
        if nid in seen:
            raise DuplicateNodeId(f"duplicate node id {nid!r}")
        seen.add(nid)
        nodes.append(Node(id=nid, type_name=entry["type"], parameters=entry.get("params", {})))
    links: list[Link] = []
    for entry in data.get("links", []):
        link = Link(
            from_node=str(entry["from"]),
            from_socket=entry["from_socket"],
            to_node=str(entry["to"]),
            to_socket=entry["to_socket"],
        )
        for endpoint in (link.from_node, link.to_node):
            if endpoint not in seen:
                raise DanglingLink(f"link references unknown node {endpoint!r}")
        links.append(link)
    outputs = [str(nid) for nid in data.get("outputs", [])]
    for nid in outputs:
        if nid not in seen:
            raise DanglingLink(f"output references unknown node {nid!r}")
    graph = NodeGraph(nodes=nodes, links=links, outputs=outputs)
    cycle = find_cycle(graph)
    if cycle is not None:
        raise CycleDetected(cycle)
    return graph


def _render_value(value) -> str:
    return json.dumps(value, sort_keys=True, ensure_ascii=True)


def transpile(graph: NodeGraph, template: str | EmitTemplate = "instruction") -> EmittedProgram:
    """Emit the graph as an imperative program.

    Creation follows the deterministic topological order; each node's
    parameters are set immediately after its create statement; links come
    last, sorted by the creation positions of their endpoints. Variable
    names are zero-padded so lexicographic order equals creation order,
    which makes transpile(ungraph(p)) reproduce p byte for byte.
    """
    if isinstance(template, str):
        template = TEMPLATES[template]
    order = topological_order(graph)
    width = max(2, len(str(max(len(order) - 1, 0))))
    symbols = {nid: f"node_{pos:0{width}d}" for pos, nid in enumerate(order)}
    position = {nid: pos for pos, nid in enumerate(order)}
    by_id = {node.id: node for node in graph.nodes}
    statements: list[str] = []
    for nid in order:
        node = by_id[nid]
        statements.append(template.create.format(var=symbols[nid], type=node.type_name))
        for name in sorted(node.parameters):
            statements.append(template.set_param.format(
                var=symbols[nid], name=name, value=_render_value(node.parameters[name])
            ))
    link_key = lambda l: (position[l.from_node], l.from_socket, position[l.to_node], l.to_socket)
    for link in sorted(graph.links, key=link_key):
        statements.append(template.connect.format(
            from_var=symbols[link.from_node], from_socket=link.from_socket,
            to_var=symbols[link.to_node], to_socket=link.to_socket,
        ))
    return EmittedProgram(statements=statements, symbol_table=symbols)


_CREATE_RE = re.compile(r'^(\w+) = create\("([^"]*)"\)$')
_SET_RE = re.compile(r'^set\((\w+), "([^"]*)", (.+)\)$')
_CONNECT_RE = re.compile(r'^connect\((\w+), "([^"]*)", (\w+), "([^"]*)"\)$')


def ungraph(program: EmittedProgram | str) -> NodeGraph:
    """Rebuild a NodeGraph from an instruction-dialect program.

    Node ids in the result are the program's variable names; the emitting
    side's symbol table is the witness bijection back to the source graph.
    """
    text = program if isinstance(program, str) else program.render()
    nodes: dict[str, Node] = {}
    params: dict[str, dict] = {}
    links: list[Link] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        m = _CREATE_RE.match(line)
        if m:
            var, type_name = m.groups()
            if var in nodes:
                raise DuplicateNodeId(f"line {lineno}: variable {var!r} created twice")
            params[var] = {}
            nodes[var] = Node(id=var, type_name=type_name, parameters=params[var])
            continue
        m = _SET_RE.match(line)
        if m:
            var, name, value_text = m.groups()
            if var not in nodes:
                raise UseBeforeCreate(f"line {lineno}: set on uncreated variable {var!r}")
            try:
                value = json.loads(value_text)
            except json.JSONDecodeError as err:
                raise UnknownInstruction(f"line {lineno}: bad literal {value_text!r}") from err
            params[var][name] = value
            continue
        m = _CONNECT_RE.match(line)
        if m:
            from_var, from_socket, to_var, to_socket = m.groups()
            for var in (from_var, to_var):
                if var not in nodes:
                    raise UseBeforeCreate(f"line {lineno}: connect on uncreated variable {var!r}")
            links.append(Link(from_var, from_socket, to_var, to_socket))
            continue
        raise UnknownInstruction(f"line {lineno}: unrecognized statement {line!r}")
    rebuilt = [Node(id=node.id, type_name=node.type_name, parameters=params[node.id])
               for node in nodes.values()]
    return NodeGraph(nodes=rebuilt, links=links, outputs=[])
