"""Brushed Copper 07 Material generator (Materials)."""

PARAMS = {
    "size": 3.229,
    "detail": 5,
    "roughness": 0.817,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
