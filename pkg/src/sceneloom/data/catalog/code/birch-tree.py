"""Birch Tree generator (Trees)."""

PARAMS = {
    "size": 3.015,
    "detail": 2,
    "roughness": 0.715,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Birch Tree"
    for key, value in params.items():
        node[key] = value
    return node
