"""Lavender Spray generator (Plants)."""

PARAMS = {
    "size": 2.177,
    "detail": 2,
    "roughness": 0.697,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lavender Spray"
    for key, value in params.items():
        node[key] = value
    return node
