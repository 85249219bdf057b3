"""Hammered Brass 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.783,
    "detail": 4,
    "roughness": 0.72,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
