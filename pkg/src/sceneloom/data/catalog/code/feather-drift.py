"""Feather Drift generator (Scattering)."""

PARAMS = {
    "size": 1.845,
    "detail": 3,
    "roughness": 0.253,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Feather Drift"
    for key, value in params.items():
        node[key] = value
    return node
