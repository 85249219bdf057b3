"""Desk generator (Indoors)."""

PARAMS = {
    "size": 2.892,
    "detail": 3,
    "roughness": 0.261,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desk"
    for key, value in params.items():
        node[key] = value
    return node
