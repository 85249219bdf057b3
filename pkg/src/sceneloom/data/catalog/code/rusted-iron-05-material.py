"""Rusted Iron 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.996,
    "detail": 2,
    "roughness": 0.952,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
