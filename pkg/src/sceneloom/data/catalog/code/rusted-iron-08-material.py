"""Rusted Iron 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.979,
    "detail": 2,
    "roughness": 0.709,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
