"""Willow Tree generator (Trees)."""

PARAMS = {
    "size": 2.329,
    "detail": 5,
    "roughness": 0.131,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Willow Tree"
    for key, value in params.items():
        node[key] = value
    return node
