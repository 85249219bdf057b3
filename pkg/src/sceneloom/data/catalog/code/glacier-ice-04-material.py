"""Glacier Ice 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.697,
    "detail": 4,
    "roughness": 0.993,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
