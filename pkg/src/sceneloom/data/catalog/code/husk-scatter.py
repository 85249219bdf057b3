"""Husk Scatter generator (Scattering)."""

PARAMS = {
    "size": 3.785,
    "detail": 5,
    "roughness": 0.385,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Husk Scatter"
    for key, value in params.items():
        node[key] = value
    return node
