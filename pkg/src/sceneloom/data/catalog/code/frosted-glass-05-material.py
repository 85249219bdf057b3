"""Frosted Glass 05 Material generator (Materials)."""

PARAMS = {
    "size": 1.742,
    "detail": 3,
    "roughness": 0.438,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
