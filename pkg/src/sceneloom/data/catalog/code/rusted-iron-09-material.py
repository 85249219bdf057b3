"""Rusted Iron 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.752,
    "detail": 1,
    "roughness": 0.554,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
