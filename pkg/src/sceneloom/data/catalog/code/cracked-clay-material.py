"""Cracked Clay Material generator (Materials)."""

PARAMS = {
    "size": 0.31,
    "detail": 1,
    "roughness": 0.347,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay Material"
    for key, value in params.items():
        node[key] = value
    return node
