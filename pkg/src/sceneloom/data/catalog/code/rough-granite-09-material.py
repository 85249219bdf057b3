"""Rough Granite 09 Material generator (Materials)."""

PARAMS = {
    "size": 0.898,
    "detail": 2,
    "roughness": 0.981,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
