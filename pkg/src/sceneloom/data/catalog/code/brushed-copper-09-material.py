"""Brushed Copper 09 Material generator (Materials)."""

PARAMS = {
    "size": 2.188,
    "detail": 3,
    "roughness": 0.785,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
