"""Thorn Spread generator (Scattering)."""

PARAMS = {
    "size": 2.528,
    "detail": 5,
    "roughness": 0.57,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Thorn Spread"
    for key, value in params.items():
        node[key] = value
    return node
