"""Rough Granite Material generator (Materials)."""

PARAMS = {
    "size": 2.462,
    "detail": 5,
    "roughness": 0.21,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite Material"
    for key, value in params.items():
        node[key] = value
    return node
