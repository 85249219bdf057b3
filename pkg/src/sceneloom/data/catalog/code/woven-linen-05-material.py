"""Woven Linen 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.471,
    "detail": 5,
    "roughness": 0.154,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
