"""Glacier Ice 09 Material generator (Materials)."""

PARAMS = {
    "size": 1.18,
    "detail": 5,
    "roughness": 0.648,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
