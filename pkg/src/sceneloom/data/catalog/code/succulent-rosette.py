"""Succulent Rosette generator (Plants)."""

PARAMS = {
    "size": 3.03,
    "detail": 5,
    "roughness": 0.676,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Succulent Rosette"
    for key, value in params.items():
        node[key] = value
    return node
