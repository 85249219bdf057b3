"""Rough Granite 11 Material generator (Materials)."""

PARAMS = {
    "size": 2.039,
    "detail": 3,
    "roughness": 0.938,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
