"""Aged Oak 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.432,
    "detail": 5,
    "roughness": 0.739,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
