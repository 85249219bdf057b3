"""Bamboo Culm generator (Plants)."""

PARAMS = {
    "size": 2.188,
    "detail": 5,
    "roughness": 0.354,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bamboo Culm"
    for key, value in params.items():
        node[key] = value
    return node
