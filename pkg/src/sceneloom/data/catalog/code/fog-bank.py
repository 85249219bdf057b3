"""Fog Bank generator (Weather)."""

PARAMS = {
    "size": 0.734,
    "detail": 4,
    "roughness": 0.075,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Fog Bank"
    for key, value in params.items():
        node[key] = value
    return node
