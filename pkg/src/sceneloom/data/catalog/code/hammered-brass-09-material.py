"""Hammered Brass 09 Material generator (Materials)."""

PARAMS = {
    "size": 2.058,
    "detail": 5,
    "roughness": 0.023,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
