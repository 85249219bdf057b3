"""Rough Granite 04 Material generator (Materials)."""

PARAMS = {
    "size": 2.856,
    "detail": 4,
    "roughness": 0.486,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
