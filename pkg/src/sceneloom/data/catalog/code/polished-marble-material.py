"""Polished Marble Material generator (Materials)."""

PARAMS = {
    "size": 2.987,
    "detail": 4,
    "roughness": 0.718,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble Material"
    for key, value in params.items():
        node[key] = value
    return node
