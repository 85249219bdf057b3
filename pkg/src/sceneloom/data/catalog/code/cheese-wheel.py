"""Cheese Wheel generator (Foods)."""

PARAMS = {
    "size": 1.662,
    "detail": 2,
    "roughness": 0.905,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cheese Wheel"
    for key, value in params.items():
        node[key] = value
    return node
