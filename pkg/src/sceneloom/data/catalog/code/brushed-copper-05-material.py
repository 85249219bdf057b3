"""Brushed Copper 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.471,
    "detail": 3,
    "roughness": 0.64,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
