"""Brushed Copper 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.76,
    "detail": 3,
    "roughness": 0.954,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
