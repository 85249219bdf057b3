"""Frost Specks generator (Scattering)."""

PARAMS = {
    "size": 1.363,
    "detail": 1,
    "roughness": 0.569,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frost Specks"
    for key, value in params.items():
        node[key] = value
    return node
