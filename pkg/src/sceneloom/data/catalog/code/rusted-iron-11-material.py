"""Rusted Iron 11 Material generator (Materials)."""

PARAMS = {
    "size": 3.345,
    "detail": 3,
    "roughness": 0.306,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
