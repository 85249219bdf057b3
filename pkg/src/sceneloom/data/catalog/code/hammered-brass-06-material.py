"""Hammered Brass 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.46,
    "detail": 1,
    "roughness": 0.423,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
