"""Sunflower Head generator (Plants)."""

PARAMS = {
    "size": 1.757,
    "detail": 1,
    "roughness": 0.42,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sunflower Head"
    for key, value in params.items():
        node[key] = value
    return node
