"""Spruce Tree generator (Trees)."""

PARAMS = {
    "size": 3.452,
    "detail": 2,
    "roughness": 0.974,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Spruce Tree"
    for key, value in params.items():
        node[key] = value
    return node
