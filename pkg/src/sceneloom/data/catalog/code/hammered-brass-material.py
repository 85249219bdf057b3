"""Hammered Brass Material generator (Materials)."""

PARAMS = {
    "size": 2.51,
    "detail": 5,
    "roughness": 0.78,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass Material"
    for key, value in params.items():
        node[key] = value
    return node
