"""Pollen Haze generator (Scattering)."""

PARAMS = {
    "size": 2.612,
    "detail": 2,
    "roughness": 0.661,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pollen Haze"
    for key, value in params.items():
        node[key] = value
    return node
