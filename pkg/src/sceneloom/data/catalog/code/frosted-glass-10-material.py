"""Frosted Glass 10 Material generator (Materials)."""

PARAMS = {
    "size": 0.333,
    "detail": 3,
    "roughness": 0.161,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
