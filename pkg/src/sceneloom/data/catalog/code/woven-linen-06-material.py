"""Woven Linen 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.171,
    "detail": 1,
    "roughness": 0.182,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
