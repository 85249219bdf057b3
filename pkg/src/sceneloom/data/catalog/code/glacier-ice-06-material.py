"""Glacier Ice 06 Material generator (Materials)."""

PARAMS = {
    "size": 2.795,
    "detail": 2,
    "roughness": 0.553,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
