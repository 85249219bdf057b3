"""Driftwood Pieces generator (Scattering)."""

PARAMS = {
    "size": 1.147,
    "detail": 1,
    "roughness": 0.871,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Driftwood Pieces"
    for key, value in params.items():
        node[key] = value
    return node
