"""Rough Granite 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.129,
    "detail": 4,
    "roughness": 0.428,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
