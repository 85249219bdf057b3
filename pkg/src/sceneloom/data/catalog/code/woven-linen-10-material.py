"""Woven Linen 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.05,
    "detail": 3,
    "roughness": 0.045,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
