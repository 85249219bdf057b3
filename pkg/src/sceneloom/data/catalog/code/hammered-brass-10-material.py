"""Hammered Brass 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.591,
    "detail": 4,
    "roughness": 0.439,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
