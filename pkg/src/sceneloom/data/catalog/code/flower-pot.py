"""Flower Pot generator (Outdoors)."""

PARAMS = {
    "size": 2.798,
    "detail": 1,
    "roughness": 0.35,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Flower Pot"
    for key, value in params.items():
        node[key] = value
    return node
