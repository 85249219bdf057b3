"""Hammered Brass 03 Material generator (Materials)."""

PARAMS = {
    "size": 1.868,
    "detail": 4,
    "roughness": 0.748,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Hammered Brass 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
