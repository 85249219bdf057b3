"""Frosted Glass 03 Material generator (Materials)."""

PARAMS = {
    "size": 1.818,
    "detail": 1,
    "roughness": 0.925,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
