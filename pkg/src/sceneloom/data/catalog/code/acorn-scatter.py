"""Acorn Scatter generator (Scattering)."""

PARAMS = {
    "size": 3.364,
    "detail": 5,
    "roughness": 0.184,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Acorn Scatter"
    for key, value in params.items():
        node[key] = value
    return node
