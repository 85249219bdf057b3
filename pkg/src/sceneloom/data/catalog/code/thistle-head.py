"""Thistle Head generator (Plants)."""

PARAMS = {
    "size": 0.9,
    "detail": 5,
    "roughness": 0.217,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Thistle Head"
    for key, value in params.items():
        node[key] = value
    return node
