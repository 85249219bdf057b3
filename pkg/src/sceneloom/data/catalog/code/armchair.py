"""Armchair generator (Indoors)."""

PARAMS = {
    "size": 3.226,
    "detail": 5,
    "roughness": 0.322,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Armchair"
    for key, value in params.items():
        node[key] = value
    return node
