"""Stool generator (Indoors)."""

PARAMS = {
    "size": 3.628,
    "detail": 3,
    "roughness": 0.762,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Stool"
    for key, value in params.items():
        node[key] = value
    return node
