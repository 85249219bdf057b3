"""Aged Oak 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.101,
    "detail": 3,
    "roughness": 0.684,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
