"""Rough Granite 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.968,
    "detail": 3,
    "roughness": 0.647,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
