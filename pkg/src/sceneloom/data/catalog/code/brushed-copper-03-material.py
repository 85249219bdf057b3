"""Brushed Copper 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.033,
    "detail": 1,
    "roughness": 0.114,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
