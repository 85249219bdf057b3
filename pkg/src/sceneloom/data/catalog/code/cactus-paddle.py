"""Cactus Paddle generator (Plants)."""

PARAMS = {
    "size": 1.59,
    "detail": 5,
    "roughness": 0.21,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cactus Paddle"
    for key, value in params.items():
        node[key] = value
    return node
