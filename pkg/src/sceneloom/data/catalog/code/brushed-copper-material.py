"""Brushed Copper Material generator (Materials)."""

PARAMS = {
    "size": 3.5,
    "detail": 5,
    "roughness": 0.136,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper Material"
    for key, value in params.items():
        node[key] = value
    return node
