"""Pineapple generator (Foods)."""

PARAMS = {
    "size": 2.866,
    "detail": 2,
    "roughness": 0.761,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pineapple"
    for key, value in params.items():
        node[key] = value
    return node
