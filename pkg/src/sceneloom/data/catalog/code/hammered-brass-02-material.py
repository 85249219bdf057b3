"""Hammered Brass 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.38,
    "detail": 2,
    "roughness": 0.473,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
