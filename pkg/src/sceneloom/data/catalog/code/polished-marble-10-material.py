"""Polished Marble 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.947,
    "detail": 4,
    "roughness": 0.566,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
