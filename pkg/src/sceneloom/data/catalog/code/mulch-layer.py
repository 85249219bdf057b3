"""Mulch Layer generator (Scattering)."""

PARAMS = {
    "size": 0.753,
    "detail": 5,
    "roughness": 0.584,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mulch Layer"
    for key, value in params.items():
        node[key] = value
    return node
