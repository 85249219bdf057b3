"""Rusted Iron 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.681,
    "detail": 1,
    "roughness": 0.126,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
