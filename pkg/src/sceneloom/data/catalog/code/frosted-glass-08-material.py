"""Frosted Glass 08 Material generator (Materials)."""

PARAMS = {
    "size": 1.387,
    "detail": 2,
    "roughness": 0.126,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
