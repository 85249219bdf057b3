"""Bone Fragments generator (Scattering)."""

PARAMS = {
    "size": 1.452,
    "detail": 2,
    "roughness": 0.935,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bone Fragments"
    for key, value in params.items():
        node[key] = value
    return node
