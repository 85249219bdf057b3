"""Wardrobe generator (Indoors)."""

PARAMS = {
    "size": 3.865,
    "detail": 3,
    "roughness": 0.144,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wardrobe"
    for key, value in params.items():
        node[key] = value
    return node
