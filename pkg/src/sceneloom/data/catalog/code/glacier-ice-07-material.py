"""Glacier Ice 07 Material generator (Materials)."""

PARAMS = {
    "size": 1.219,
    "detail": 2,
    "roughness": 0.587,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
