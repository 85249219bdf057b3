"""Clover Carpet generator (Plants)."""

PARAMS = {
    "size": 0.263,
    "detail": 2,
    "roughness": 0.786,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Clover Carpet"
    for key, value in params.items():
        node[key] = value
    return node
