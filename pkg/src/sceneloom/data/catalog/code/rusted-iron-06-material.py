"""Rusted Iron 06 Material generator (Materials)."""

PARAMS = {
    "size": 2.83,
    "detail": 5,
    "roughness": 0.84,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
