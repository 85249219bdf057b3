"""Snail Shell Field generator (Scattering)."""

PARAMS = {
    "size": 2.872,
    "detail": 4,
    "roughness": 0.24,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Snail Shell Field"
    for key, value in params.items():
        node[key] = value
    return node
