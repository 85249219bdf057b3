"""Gravel Scatter generator (Scattering)."""

PARAMS = {
    "size": 1.714,
    "detail": 2,
    "roughness": 0.014,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Gravel Scatter"
    for key, value in params.items():
        node[key] = value
    return node
