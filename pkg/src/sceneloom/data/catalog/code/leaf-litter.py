"""Leaf Litter generator (Scattering)."""

PARAMS = {
    "size": 3.203,
    "detail": 1,
    "roughness": 0.205,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Leaf Litter"
    for key, value in params.items():
        node[key] = value
    return node
