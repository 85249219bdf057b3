"""Apple generator (Foods)."""

PARAMS = {
    "size": 3.874,
    "detail": 2,
    "roughness": 0.389,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Apple"
    for key, value in params.items():
        node[key] = value
    return node
