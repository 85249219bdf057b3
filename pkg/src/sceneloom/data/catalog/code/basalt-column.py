"""Basalt Column generator (Rocks)."""

PARAMS = {
    "size": 2.379,
    "detail": 1,
    "roughness": 0.167,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Basalt Column"
    for key, value in params.items():
        node[key] = value
    return node
