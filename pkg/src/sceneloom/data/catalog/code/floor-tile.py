"""Floor Tile generator (Indoors)."""

PARAMS = {
    "size": 1.981,
    "detail": 3,
    "roughness": 0.691,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Floor Tile"
    for key, value in params.items():
        node[key] = value
    return node
