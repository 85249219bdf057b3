"""Rough Granite 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.51,
    "detail": 5,
    "roughness": 0.065,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
