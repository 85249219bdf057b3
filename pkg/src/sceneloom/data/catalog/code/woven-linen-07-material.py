"""Woven Linen 07 Material generator (Materials)."""

PARAMS = {
    "size": 1.072,
    "detail": 2,
    "roughness": 0.373,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
