"""Brushed Copper 04 Material generator (Materials)."""

PARAMS = {
    "size": 1.032,
    "detail": 3,
    "roughness": 0.284,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
