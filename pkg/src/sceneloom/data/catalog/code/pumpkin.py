"""Pumpkin generator (Foods)."""

PARAMS = {
    "size": 0.71,
    "detail": 5,
    "roughness": 0.044,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pumpkin"
    for key, value in params.items():
        node[key] = value
    return node
