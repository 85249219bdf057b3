"""Petal Fall generator (Scattering)."""

PARAMS = {
    "size": 2.177,
    "detail": 3,
    "roughness": 0.651,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Petal Fall"
    for key, value in params.items():
        node[key] = value
    return node
