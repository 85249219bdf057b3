"""Aged Oak 11 Material generator (Materials)."""

PARAMS = {
    "size": 2.393,
    "detail": 2,
    "roughness": 0.755,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
