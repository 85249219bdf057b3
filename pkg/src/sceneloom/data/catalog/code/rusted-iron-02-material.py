"""Rusted Iron 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.106,
    "detail": 4,
    "roughness": 0.12,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
