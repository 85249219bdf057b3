"""Aged Oak 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.968,
    "detail": 4,
    "roughness": 0.703,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
