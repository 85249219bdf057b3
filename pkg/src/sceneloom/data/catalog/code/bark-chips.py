"""Bark Chips generator (Scattering)."""

PARAMS = {
    "size": 3.015,
    "detail": 5,
    "roughness": 0.482,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bark Chips"
    for key, value in params.items():
        node[key] = value
    return node
