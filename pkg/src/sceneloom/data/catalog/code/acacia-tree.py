"""Acacia Tree generator (Trees)."""

PARAMS = {
    "size": 0.643,
    "detail": 1,
    "roughness": 0.487,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Acacia Tree"
    for key, value in params.items():
        node[key] = value
    return node
