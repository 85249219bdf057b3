"""Rusted Iron 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.099,
    "detail": 3,
    "roughness": 0.79,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
