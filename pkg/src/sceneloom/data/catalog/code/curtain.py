"""Curtain generator (Indoors)."""

PARAMS = {
    "size": 3.481,
    "detail": 2,
    "roughness": 0.622,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Curtain"
    for key, value in params.items():
        node[key] = value
    return node
