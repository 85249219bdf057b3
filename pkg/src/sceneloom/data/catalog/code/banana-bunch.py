"""Banana Bunch generator (Foods)."""

PARAMS = {
    "size": 1.269,
    "detail": 2,
    "roughness": 0.748,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Banana Bunch"
    for key, value in params.items():
        node[key] = value
    return node
