"""Ash Dusting generator (Scattering)."""

PARAMS = {
    "size": 2.659,
    "detail": 5,
    "roughness": 0.303,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Ash Dusting"
    for key, value in params.items():
        node[key] = value
    return node
