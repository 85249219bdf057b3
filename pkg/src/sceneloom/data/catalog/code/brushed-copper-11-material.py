"""Brushed Copper 11 Material generator (Materials)."""

PARAMS = {
    "size": 1.155,
    "detail": 3,
    "roughness": 0.363,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
