"""Radiator generator (Indoors)."""

PARAMS = {
    "size": 2.849,
    "detail": 3,
    "roughness": 0.792,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Radiator"
    for key, value in params.items():
        node[key] = value
    return node
