"""Baobab Tree generator (Trees)."""

PARAMS = {
    "size": 1.225,
    "detail": 4,
    "roughness": 0.414,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Baobab Tree"
    for key, value in params.items():
        node[key] = value
    return node
