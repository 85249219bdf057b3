"""Aged Oak 08 Material generator (Materials)."""

PARAMS = {
    "size": 0.896,
    "detail": 1,
    "roughness": 0.024,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
