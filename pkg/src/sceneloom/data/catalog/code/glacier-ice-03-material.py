"""Glacier Ice 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.211,
    "detail": 4,
    "roughness": 0.401,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
