"""Mushroom Cap generator (Foods)."""

PARAMS = {
    "size": 2.319,
    "detail": 4,
    "roughness": 0.357,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mushroom Cap"
    for key, value in params.items():
        node[key] = value
    return node
