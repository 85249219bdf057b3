"""Maple Tree generator (Trees)."""

PARAMS = {
    "size": 0.631,
    "detail": 3,
    "roughness": 0.029,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Maple Tree"
    for key, value in params.items():
        node[key] = value
    return node
