"""Glacier Ice 10 Material generator (Materials)."""

PARAMS = {
    "size": 3.346,
    "detail": 1,
    "roughness": 0.934,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
