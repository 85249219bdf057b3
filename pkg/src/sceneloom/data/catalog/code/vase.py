"""Vase generator (Indoors)."""

PARAMS = {
    "size": 3.685,
    "detail": 3,
    "roughness": 0.815,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Vase"
    for key, value in params.items():
        node[key] = value
    return node
