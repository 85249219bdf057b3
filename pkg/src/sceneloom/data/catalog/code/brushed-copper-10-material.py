"""Brushed Copper 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.071,
    "detail": 3,
    "roughness": 0.836,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
