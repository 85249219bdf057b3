"""Rough Granite 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.882,
    "detail": 4,
    "roughness": 0.125,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
