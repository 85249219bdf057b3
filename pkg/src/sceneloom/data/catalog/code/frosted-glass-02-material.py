"""Frosted Glass 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.122,
    "detail": 2,
    "roughness": 0.547,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
