"""Frosted Glass 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.359,
    "detail": 5,
    "roughness": 0.868,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
