"""Glacier Ice 08 Material generator (Materials)."""

PARAMS = {
    "size": 3.944,
    "detail": 1,
    "roughness": 0.615,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
