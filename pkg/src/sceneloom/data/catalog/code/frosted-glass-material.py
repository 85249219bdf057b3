"""Frosted Glass Material generator (Materials)."""

PARAMS = {
    "size": 3.021,
    "detail": 4,
    "roughness": 0.494,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass Material"
    for key, value in params.items():
        node[key] = value
    return node
