"""Aged Oak 05 Material generator (Materials)."""

PARAMS = {
    "size": 0.273,
    "detail": 2,
    "roughness": 0.26,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
