"""Granite Boulder generator (Rocks)."""

PARAMS = {
    "size": 2.208,
    "detail": 5,
    "roughness": 0.938,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Granite Boulder"
    for key, value in params.items():
        node[key] = value
    return node
