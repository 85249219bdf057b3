"""Sourdough Loaf generator (Foods)."""

PARAMS = {
    "size": 1.378,
    "detail": 3,
    "roughness": 0.218,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sourdough Loaf"
    for key, value in params.items():
        node[key] = value
    return node
