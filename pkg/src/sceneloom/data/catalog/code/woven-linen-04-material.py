"""Woven Linen 04 Material generator (Materials)."""

PARAMS = {
    "size": 1.601,
    "detail": 3,
    "roughness": 0.959,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
