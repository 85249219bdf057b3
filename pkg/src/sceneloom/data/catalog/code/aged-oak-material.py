"""Aged Oak Material generator (Materials)."""

PARAMS = {
    "size": 3.618,
    "detail": 5,
    "roughness": 0.923,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak Material"
    for key, value in params.items():
        node[key] = value
    return node
