"""Brushed Copper 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.237,
    "detail": 4,
    "roughness": 0.281,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
