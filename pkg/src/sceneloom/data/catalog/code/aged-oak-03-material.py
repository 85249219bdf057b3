"""Aged Oak 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.317,
    "detail": 4,
    "roughness": 0.754,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
