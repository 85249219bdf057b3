"""Cone Drop generator (Scattering)."""

PARAMS = {
    "size": 3.841,
    "detail": 1,
    "roughness": 0.086,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cone Drop"
    for key, value in params.items():
        node[key] = value
    return node
