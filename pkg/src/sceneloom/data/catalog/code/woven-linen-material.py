"""Woven Linen Material generator (Materials)."""

PARAMS = {
    "size": 1.253,
    "detail": 5,
    "roughness": 0.204,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen Material"
    for key, value in params.items():
        node[key] = value
    return node
