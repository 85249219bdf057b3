"""Glacier Ice 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.767,
    "detail": 2,
    "roughness": 0.912,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
