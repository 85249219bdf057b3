"""Frosted Glass 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.897,
    "detail": 4,
    "roughness": 0.842,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
