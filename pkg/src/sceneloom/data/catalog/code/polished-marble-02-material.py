"""Polished Marble 02 Material generator (Materials)."""

PARAMS = {
    "size": 3.816,
    "detail": 4,
    "roughness": 0.203,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
