"""Glacier Sheet generator (Terrain)."""

PARAMS = {
    "size": 0.94,
    "detail": 2,
    "roughness": 0.361,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Sheet"
    for key, value in params.items():
        node[key] = value
    return node
