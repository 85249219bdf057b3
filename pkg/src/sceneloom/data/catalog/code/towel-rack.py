"""Towel Rack generator (Indoors)."""

PARAMS = {
    "size": 2.813,
    "detail": 3,
    "roughness": 0.191,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Towel Rack"
    for key, value in params.items():
        node[key] = value
    return node
