"""Coral Bits generator (Scattering)."""

PARAMS = {
    "size": 2.249,
    "detail": 1,
    "roughness": 0.806,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Coral Bits"
    for key, value in params.items():
        node[key] = value
    return node
