"""Aged Oak 07 Material generator (Materials)."""

PARAMS = {
    "size": 0.25,
    "detail": 2,
    "roughness": 0.081,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
