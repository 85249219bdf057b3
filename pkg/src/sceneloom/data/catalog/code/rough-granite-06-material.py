"""Rough Granite 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.845,
    "detail": 3,
    "roughness": 0.667,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
