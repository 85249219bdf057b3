"""Bookshelf generator (Indoors)."""

PARAMS = {
    "size": 0.598,
    "detail": 5,
    "roughness": 0.858,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bookshelf"
    for key, value in params.items():
        node[key] = value
    return node
