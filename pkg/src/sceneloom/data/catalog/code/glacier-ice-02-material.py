"""Glacier Ice 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.713,
    "detail": 3,
    "roughness": 0.021,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
