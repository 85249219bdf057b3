"""Woven Linen 08 Material generator (Materials)."""

PARAMS = {
    "size": 1.479,
    "detail": 2,
    "roughness": 0.358,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
