"""Hail Burst generator (Weather)."""

PARAMS = {
    "size": 0.389,
    "detail": 4,
    "roughness": 0.409,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hail Burst"
    for key, value in params.items():
        node[key] = value
    return node
