"""Rusted Iron Material generator (Materials)."""

PARAMS = {
    "size": 0.642,
    "detail": 4,
    "roughness": 0.53,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rusted Iron Material"
    for key, value in params.items():
        node[key] = value
    return node
