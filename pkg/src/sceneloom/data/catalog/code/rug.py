"""Rug generator (Indoors)."""

PARAMS = {
    "size": 3.841,
    "detail": 5,
    "roughness": 0.071,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rug"
    for key, value in params.items():
        node[key] = value
    return node
