"""Rough Granite 02 Material generator (Materials)."""

PARAMS = {
    "size": 2.547,
    "detail": 3,
    "roughness": 0.231,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
