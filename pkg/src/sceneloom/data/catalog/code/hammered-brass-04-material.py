"""Hammered Brass 04 Material generator (Materials)."""

PARAMS = {
    "size": 1.362,
    "detail": 2,
    "roughness": 0.173,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
