"""Plate generator (Indoors)."""

PARAMS = {
    "size": 1.821,
    "detail": 3,
    "roughness": 0.505,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Plate"
    for key, value in params.items():
        node[key] = value
    return node
