"""Fruit Bowl generator (Indoors)."""

PARAMS = {
    "size": 3.406,
    "detail": 1,
    "roughness": 0.227,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Fruit Bowl"
    for key, value in params.items():
        node[key] = value
    return node
