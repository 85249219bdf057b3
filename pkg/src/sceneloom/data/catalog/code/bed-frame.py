"""Bed Frame generator (Indoors)."""

PARAMS = {
    "size": 0.275,
    "detail": 2,
    "roughness": 0.783,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bed Frame"
    for key, value in params.items():
        node[key] = value
    return node
