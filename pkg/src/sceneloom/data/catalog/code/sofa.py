"""Sofa generator (Indoors)."""

PARAMS = {
    "size": 0.888,
    "detail": 3,
    "roughness": 0.247,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sofa"
    for key, value in params.items():
        node[key] = value
    return node
