"""Aged Oak 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.372,
    "detail": 4,
    "roughness": 0.459,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
