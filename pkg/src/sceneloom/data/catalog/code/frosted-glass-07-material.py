"""Frosted Glass 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.403,
    "detail": 1,
    "roughness": 0.306,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
