"""Hammered Brass 07 Material generator (Materials)."""

PARAMS = {
    "size": 1.129,
    "detail": 2,
    "roughness": 0.522,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
