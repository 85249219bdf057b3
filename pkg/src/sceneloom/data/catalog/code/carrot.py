"""Carrot generator (Foods)."""

PARAMS = {
    "size": 0.484,
    "detail": 1,
    "roughness": 0.371,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carrot"
    for key, value in params.items():
        node[key] = value
    return node
