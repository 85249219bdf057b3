"""Corn Stalk generator (Plants)."""

PARAMS = {
    "size": 2.012,
    "detail": 4,
    "roughness": 0.14,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Corn Stalk"
    for key, value in params.items():
        node[key] = value
    return node
