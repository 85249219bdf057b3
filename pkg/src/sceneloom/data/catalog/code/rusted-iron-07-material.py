"""Rusted Iron 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.919,
    "detail": 4,
    "roughness": 0.354,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
