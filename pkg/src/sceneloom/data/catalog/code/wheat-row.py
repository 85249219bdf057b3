"""Wheat Row generator (Plants)."""

PARAMS = {
    "size": 2.352,
    "detail": 3,
    "roughness": 0.591,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wheat Row"
    for key, value in params.items():
        node[key] = value
    return node
