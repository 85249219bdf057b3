"""Woven Linen 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.63,
    "detail": 4,
    "roughness": 0.366,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
