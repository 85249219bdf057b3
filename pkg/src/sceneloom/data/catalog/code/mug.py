"""Mug generator (Indoors)."""

PARAMS = {
    "size": 0.608,
    "detail": 1,
    "roughness": 0.577,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mug"
    for key, value in params.items():
        node[key] = value
    return node
