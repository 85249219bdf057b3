"""Woven Linen 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.427,
    "detail": 5,
    "roughness": 0.483,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
