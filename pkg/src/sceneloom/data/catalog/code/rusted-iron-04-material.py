"""Rusted Iron 04 Material generator (Materials)."""

PARAMS = {
    "size": 2.697,
    "detail": 4,
    "roughness": 0.602,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
