"""Watermelon generator (Foods)."""

PARAMS = {
    "size": 3.492,
    "detail": 2,
    "roughness": 0.32,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Watermelon"
    for key, value in params.items():
        node[key] = value
    return node
