"""Dust Devil generator (Weather)."""

PARAMS = {
    "size": 2.361,
    "detail": 1,
    "roughness": 0.712,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Dust Devil"
    for key, value in params.items():
        node[key] = value
    return node
