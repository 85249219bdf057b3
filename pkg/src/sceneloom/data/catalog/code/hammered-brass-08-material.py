"""Hammered Brass 08 Material generator (Materials)."""

PARAMS = {
    "size": 3.485,
    "detail": 5,
    "roughness": 0.089,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
